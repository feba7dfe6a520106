// deformlab: deformation-coefficient computations, mean-value estimation and
// mass verification campaigns, with one structured JSON record per invocation.
//
// Exit codes: 0 success, 2 parse error, 3 domain error, 4 campaign violation.

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "deformlab/errors.hpp"
#include "deformlab/json_io.hpp"
#include "deformlab/parallel.hpp"

namespace {

using namespace deformlab;

constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;
constexpr int kExitViolation = 4;

struct ParseFailure {
    std::string message;
};

// Seed given as decimal or 0x-prefixed hex.
std::uint64_t parse_seed(const std::string& text) {
    const bool hex = text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X');
    const char* first = text.c_str() + (hex ? 2 : 0);
    const char* last = text.c_str() + text.size();
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(first, last, value, hex ? 16 : 10);
    if (ec != std::errc{} || ptr != last)
        throw ParseFailure{"invalid seed: '" + text + "'"};
    return value;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("DEFORMLAB_SEED")) return parse_seed(env);
    return 0;
}

std::vector<double> parse_entries(const std::string& text, std::size_t expected) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const char* begin = token.c_str();
        char* end = nullptr;
        errno = 0;
        const double v = std::strtod(begin, &end);
        if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
            throw ParseFailure{"invalid matrix entry: '" + token + "'"};
        out.push_back(v);
    }
    if (out.size() != expected) {
        throw ParseFailure{"expected " + std::to_string(expected) + " entries, got " +
                           std::to_string(out.size()) + " in '" + text + "'"};
    }
    return out;
}

ordered_json k2_record(const Matrix2& m, bool with_polar) {
    ordered_json result;
    const SingularPair sp = singular_pair(m);
    result["k"] = printable(k2(m));
    result["singular_pair"] = to_json(sp);
    if (with_polar) result["polar"] = to_json(to_polar(m));
    return result;
}

ordered_json k3_record(const Matrix3& m, bool with_squared) {
    ordered_json result;
    result["k"] = printable(k3(m));
    if (with_squared) result["k_squared"] = printable(k3_squared(m));
    result["eigenvalues"] = to_json(eig3(char_poly3(gram_invariants(m))));
    result["gram"] = to_json(gram_invariants(m));
    result["column_bound"] = printable(column_bound3(m));
    return result;
}

void emit(const std::string& command, ordered_json inputs, ordered_json result,
          ordered_json provenance) {
    ordered_json record;
    record["command"] = command;
    record["inputs"] = std::move(inputs);
    record["result"] = std::move(result);
    record["provenance"] = std::move(provenance);
    record["schema_version"] = "1";
    std::cout << record.dump(2) << "\n";
}

std::vector<std::vector<double>> read_matrix_file(const std::string& path,
                                                  std::size_t entries) {
    std::ifstream in(path);
    if (!in) throw ParseFailure{"cannot open file: '" + path + "'"};
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        rows.push_back(parse_entries(line, entries));
    }
    if (rows.empty()) throw ParseFailure{"no matrices in file: '" + path + "'"};
    return rows;
}

int run(int argc, char** argv) {
    CLI::App app{
        "deformlab: extreme-singular-value ratios of 2x2/3x3 operators,\n"
        "their mean values, and seeded verification campaigns.\n"
        "Output: one JSON record on stdout; diagnostics on stderr.\n"
        "Seeds accept decimal or 0x-hex; DEFORMLAB_SEED sets the default."};
    app.require_subcommand(1);
    app.fallthrough();  // let the global --threads appear after a subcommand
    int threads = 0;
    app.add_option("--threads", threads,
                   "worker threads for campaigns (0 = library default); results are "
                   "identical for every value");

    std::string matrix_arg, file_arg, seed_arg;
    bool polar = false, squared = false, use_mc = false;
    std::uint64_t n = 1'000'000;
    double tol = 1e-10;
    double prop_tol = 1e-9;
    std::string method = "exact", ensemble = "gaussian";
    int dim = 2;

    auto* k2_cmd = app.add_subcommand("k2", "deformation coefficient of a 2x2 matrix");
    k2_cmd->add_option("--matrix", matrix_arg, "entries a,b,c,d (row-major)");
    k2_cmd->add_option("--file", file_arg, "CSV file, one 4-entry matrix per line");
    k2_cmd->add_flag("--polar", polar, "include the polar form (r, rho, alpha, beta)");

    auto* k3_cmd = app.add_subcommand("k3", "deformation coefficient of a 3x3 matrix");
    k3_cmd->add_option("--matrix", matrix_arg, "9 row-major comma-separated entries");
    k3_cmd->add_option("--file", file_arg, "CSV file, one 9-entry matrix per line");
    k3_cmd->add_flag("--squared", squared,
                     "also report the squared-ratio variant x1/x3 (k itself is the "
                     "axis-length ratio sqrt(x1/x3))");

    auto* mean2_cmd = app.add_subcommand("mean2", "mean deformation coefficient, dim 2");
    mean2_cmd->add_option("--method", method, "exact | quadrature | mc")
        ->check(CLI::IsMember({"exact", "quadrature", "mc"}));
    mean2_cmd->add_option("--n", n, "Monte Carlo sample count");
    mean2_cmd->add_option("--seed", seed_arg, "stream seed (decimal or 0x-hex)");
    mean2_cmd->add_option("--ensemble", ensemble, "gaussian | ball (mc only)")
        ->check(CLI::IsMember({"gaussian", "ball"}));
    mean2_cmd->add_option("--tol", tol, "quadrature absolute tolerance");

    auto* mean3_cmd = app.add_subcommand(
        "mean3",
        "Monte Carlo mean deformation coefficient, dim 3. The mean is taken over "
        "the isotropic Gaussian-entry ensemble; no canonical 3D measure exists, so "
        "the assumption is echoed in the output.");
    mean3_cmd->add_option("--n", n, "sample count");
    mean3_cmd->add_option("--seed", seed_arg, "stream seed (decimal or 0x-hex)");

    auto* bounds_cmd =
        app.add_subcommand("bounds", "ordered-simplex column-ratio bound integral");
    bounds_cmd->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2, 3}));
    bounds_cmd->add_flag("--mc", use_mc, "estimate by Monte Carlo instead of quadrature");
    bounds_cmd->add_option("--n", n, "Monte Carlo sample count");
    bounds_cmd->add_option("--seed", seed_arg, "stream seed");

    auto* verify_cmd = app.add_subcommand("verify", "mass verification campaigns");
    verify_cmd->require_subcommand(1);
    auto* prop_cmd = verify_cmd->add_subcommand(
        "prop51", "seeded interlacing campaign: x1 <= u^2 <= w^2 <= x3");
    prop_cmd->add_option("--n", n, "random sample count");
    prop_cmd->add_option("--seed", seed_arg, "stream seed");
    prop_cmd->add_option("--tol", prop_tol, "scale-relative tolerance (x e1)");
    auto* oracle_cmd = verify_cmd->add_subcommand(
        "oracle", "closed forms vs iterative Jacobi oracles");
    oracle_cmd->add_option("--dim", dim, "2 or 3")->check(CLI::IsMember({2, 3}));
    oracle_cmd->add_option("--n", n, "random sample count");
    oracle_cmd->add_option("--seed", seed_arg, "stream seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitParse;
    }

    set_threads(threads);
    const std::uint64_t seed = seed_arg.empty() ? default_seed() : parse_seed(seed_arg);

    if (k2_cmd->parsed() || k3_cmd->parsed()) {
        const bool is2 = k2_cmd->parsed();
        const std::size_t entries = is2 ? 4 : 9;
        const std::string command = is2 ? "k2" : "k3";
        if (matrix_arg.empty() == file_arg.empty())
            throw ParseFailure{"exactly one of --matrix and --file is required"};
        ordered_json inputs, result;
        if (!matrix_arg.empty()) {
            const auto v = parse_entries(matrix_arg, entries);
            inputs["matrix"] = v;
            if (is2)
                result = k2_record({v[0], v[1], v[2], v[3]}, polar);
            else
                result = k3_record(Matrix3{{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7],
                                            v[8]}},
                                   squared);
        } else {
            inputs["file"] = file_arg;
            result = ordered_json::array();
            for (const auto& v : read_matrix_file(file_arg, entries)) {
                ordered_json rec;
                rec["matrix"] = v;
                if (is2)
                    rec["result"] = k2_record({v[0], v[1], v[2], v[3]}, polar);
                else
                    rec["result"] = k3_record(
                        Matrix3{{v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]}},
                        squared);
                result.push_back(std::move(rec));
            }
        }
        emit(command, std::move(inputs), std::move(result), ordered_json::object());
        return 0;
    }

    if (mean2_cmd->parsed()) {
        Estimate est;
        ordered_json provenance;
        if (method == "exact") {
            est = mean_k2_exact();
        } else if (method == "quadrature") {
            est = mean_k2_quadrature(tol);
            provenance["tol"] = printable(tol);
        } else {
            const Ensemble ens =
                ensemble == "ball" ? Ensemble::ball4() : Ensemble::gaussian(2);
            est = mean_monte_carlo({seed, ens}, Statistic::k2, n);
            provenance["seed"] = seed;
            provenance["n"] = n;
            provenance["ensemble"] = ensemble;
        }
        provenance["method"] = method;
        ordered_json inputs{{"method", method}};
        emit("mean2", std::move(inputs), to_json(est), std::move(provenance));
        return 0;
    }

    if (mean3_cmd->parsed()) {
        const Estimate est =
            mean_monte_carlo({seed, Ensemble::gaussian(3)}, Statistic::k3, n);
        ordered_json result = to_json(est);
        result["measure"] =
            "isotropic Gaussian-entry ensemble (assumption; no canonical 3D measure)";
        std::cerr << "note: mean3 averages over the isotropic Gaussian matrix ensemble\n";
        ordered_json provenance{{"seed", seed}, {"n", n}, {"method", "monte_carlo"}};
        emit("mean3", ordered_json::object(), std::move(result), std::move(provenance));
        return 0;
    }

    if (bounds_cmd->parsed()) {
        Estimate est;
        ordered_json provenance{{"dim", dim}};
        if (use_mc) {
            est = mean_monte_carlo({seed, Ensemble::ordered_simplex(dim)},
                                   Statistic::column_ratio, n);
            provenance["seed"] = seed;
            provenance["n"] = n;
        }
        else {
            est = bound_mean_quadrature(dim);
        }
        provenance["method"] = method_name(est.method);
        ordered_json inputs{{"dim", dim}, {"mc", use_mc}};
        emit("bounds", std::move(inputs), to_json(est), std::move(provenance));
        return 0;
    }

    if (prop_cmd->parsed() || oracle_cmd->parsed()) {
        CampaignReport report;
        std::string command;
        ordered_json inputs;
        if (prop_cmd->parsed()) {
            if (n < 1) throw ParseFailure{"--n must be at least 1"};
            report = interlacing_campaign(seed, n, prop_tol);
            command = "verify prop51";
            inputs = {{"n", n}, {"tol", printable(prop_tol)}};
        } else {
            if (n < 1) throw ParseFailure{"--n must be at least 1"};
            report = equivalence_campaign(seed, n, dim);
            command = "verify oracle";
            inputs = {{"dim", dim}, {"n", n}};
        }
        ordered_json provenance{{"seed", seed}, {"n", n}, {"tol", printable(report.tol)}};
        const bool violated = report.violations > 0;
        emit(command, std::move(inputs), to_json(report), std::move(provenance));
        return violated ? kExitViolation : 0;
    }

    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

#include "deformlab/json_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace deformlab {

double printable(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return std::strtod(buf, nullptr);
}

ordered_json to_json(const SingularPair& s) {
    return {{"p", printable(s.p)}, {"q", printable(s.q)}};
}

ordered_json to_json(const PolarForm& p) {
    return {{"r", printable(p.r)},
            {"rho", printable(p.rho)},
            {"alpha", printable(p.alpha)},
            {"beta", printable(p.beta)}};
}

ordered_json to_json(const GramInvariants& g) {
    return {{"u", printable(g.u)},   {"v", printable(g.v)},   {"w", printable(g.w)},
            {"s1", printable(g.s1)}, {"s2", printable(g.s2)}, {"s3", printable(g.s3)},
            {"vol", printable(g.vol)}};
}

ordered_json to_json(const EigenTriple& x) {
    return {{"x1", printable(x.x1)}, {"x2", printable(x.x2)}, {"x3", printable(x.x3)}};
}

ordered_json to_json(const Estimate& e) {
    ordered_json j;
    j["value"] = printable(e.value);
    if (e.method == Method::monte_carlo) {
        j["std_error"] = printable(e.std_error);
        j["skipped"] = e.skipped;
    }
    j["n"] = e.n;
    j["method"] = method_name(e.method);
    return j;
}

ordered_json to_json(const CampaignReport& r) {
    ordered_json j;
    j["n"] = r.n;
    j["violations"] = r.violations;
    j["worst_margin"] = printable(r.worst_margin);
    if (r.violations > 0) {
        ordered_json m = ordered_json::array();
        for (double v : r.worst_input) m.push_back(printable(v));
        j["worst_input"] = m;
    }
    j["seed"] = r.seed;
    j["tol"] = printable(r.tol);
    return j;
}

}  // namespace deformlab

// Benchmark: OpenMP campaign kernels against the serial reference path,
// with a result-equality check (block reduction makes them bit-identical).

#include <chrono>
#include <cstdio>

#include "deformlab/estimate.hpp"
#include "deformlab/parallel.hpp"
#include "deformlab/verify.hpp"

using namespace deformlab;

namespace {

double time_of(double& out, const auto& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    out = fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, std::uint64_t n, double serial_s, double parallel_s,
         bool identical) {
    std::printf("%-24s n=%-9llu serial %8.3fs (%7.2f M/s)  parallel %8.3fs (%7.2f M/s)  speedup %5.2fx  identical=%s\n",
                name, static_cast<unsigned long long>(n), serial_s, n / serial_s / 1e6,
                parallel_s, n / parallel_s / 1e6, serial_s / parallel_s,
                identical ? "yes" : "NO");
}

}  // namespace

int main() {
    std::printf("threads: %d\n", max_threads());
    const std::uint64_t n = 2'000'000;

    {
        double vs, vp;
        const SampleStream s{1, Ensemble::gaussian(2)};
        const double ts = time_of(vs, [&] { return mean_monte_carlo(s, Statistic::k2, n, false).value; });
        const double tp = time_of(vp, [&] { return mean_monte_carlo(s, Statistic::k2, n, true).value; });
        row("mc mean k2", n, ts, tp, vs == vp);
    }
    {
        double vs, vp;
        const SampleStream s{1, Ensemble::gaussian(3)};
        const double ts = time_of(vs, [&] { return mean_monte_carlo(s, Statistic::k3, n, false).value; });
        const double tp = time_of(vp, [&] { return mean_monte_carlo(s, Statistic::k3, n, true).value; });
        row("mc mean k3", n, ts, tp, vs == vp);
    }
    {
        double vs, vp;
        const double ts = time_of(vs, [&] { return interlacing_campaign(7, n, 1e-9, false).worst_margin; });
        const double tp = time_of(vp, [&] { return interlacing_campaign(7, n, 1e-9, true).worst_margin; });
        row("interlacing campaign", n, ts, tp, vs == vp);
    }
    {
        double vs, vp;
        const double ts = time_of(vs, [&] { return equivalence_campaign(3, n / 4, 3, false).worst_margin; });
        const double tp = time_of(vp, [&] { return equivalence_campaign(3, n / 4, 3, true).worst_margin; });
        row("oracle equivalence 3d", n / 4, ts, tp, vs == vp);
    }
    return 0;
}

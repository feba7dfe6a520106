#pragma once

#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deformlab {

/// Deterministic block map-reduce over the index range [0, n).
///
/// The range is split into fixed-size blocks. Each block is accumulated
/// serially by `block_fn(begin, end) -> Acc`, and the per-block results are
/// combined by pairwise (tree) reduction in block order. Because block
/// boundaries and the combine tree are fixed, the result is bit-identical
/// for any thread count; `parallel = false` is the serial reference path.
template <typename Acc, typename BlockFn, typename Combine>
Acc block_reduce(std::uint64_t n, std::uint64_t block_size, BlockFn block_fn,
                 Combine combine, bool parallel = true) {
    if (n == 0) return Acc{};
    const std::uint64_t nblocks = (n + block_size - 1) / block_size;
    std::vector<Acc> partial(nblocks);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t b = 0; b < static_cast<std::int64_t>(nblocks); ++b) {
            const std::uint64_t begin = static_cast<std::uint64_t>(b) * block_size;
            const std::uint64_t end = std::min(begin + block_size, n);
            partial[static_cast<std::uint64_t>(b)] = block_fn(begin, end);
        }
    } else
#endif
    {
        (void)parallel;
        for (std::uint64_t b = 0; b < nblocks; ++b) {
            const std::uint64_t begin = b * block_size;
            const std::uint64_t end = std::min(begin + block_size, n);
            partial[b] = block_fn(begin, end);
        }
    }
    // Pairwise tree combine, fixed order.
    std::vector<Acc> level = std::move(partial);
    while (level.size() > 1) {
        std::vector<Acc> next;
        next.reserve((level.size() + 1) / 2);
        for (std::size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(combine(level[i], level[i + 1]));
        if (level.size() % 2 == 1) next.push_back(level.back());
        level = std::move(next);
    }
    return level.front();
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace deformlab

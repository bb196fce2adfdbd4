#include "fillobs/search.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fillobs/error.hpp"

namespace fillobs {

namespace {

struct SearchSpace {
    std::vector<int> radix;          // generators per slot
    std::vector<std::uint64_t> stride; // stride[l] = prod radix[l+1..]
    std::vector<int> partial_deg;    // degree of the product through slot l
    std::uint64_t total = 0;
};

SearchSpace make_space(const GradedRing& r, const std::vector<int>& degrees) {
    SearchSpace s;
    const int k = static_cast<int>(degrees.size());
    s.radix.resize(k);
    s.stride.resize(k);
    s.partial_deg.resize(k);
    int deg = 0;
    for (int l = 0; l < k; ++l) {
        s.radix[l] = r.ngens(degrees[l]);
        deg += degrees[l];
        s.partial_deg[l] = deg;
    }
    s.total = 1;
    for (int l = k - 1; l >= 0; --l) {
        s.stride[l] = s.total;
        if (s.radix[l] != 0 && s.total > UINT64_MAX / 4 / s.radix[l])
            fail(ErrorKind::Precondition, "generator combination space too large");
        s.total *= static_cast<std::uint64_t>(s.radix[l]);
    }
    return s;
}

// Walk combinations in [lo, hi) in lexicographic order with prefix-product
// memoization; a zero partial product prunes its whole subtree.
std::optional<ComboHit> scan_range(const GradedRing& r, const std::vector<int>& degrees,
                                   const SearchSpace& s, std::uint64_t lo, std::uint64_t hi) {
    const int k = static_cast<int>(degrees.size());
    if (lo >= hi) return std::nullopt;
    std::vector<int> combo(k);
    {
        std::uint64_t f = lo;
        for (int l = 0; l < k; ++l) {
            combo[l] = static_cast<int>(f / s.stride[l]);
            f %= s.stride[l];
        }
    }
    std::vector<SparseElem> prefix(k);
    std::uint64_t flat = lo;
    int dirty = 0;
    while (flat < hi) {
        int zero_at = -1;
        for (int l = dirty; l < k; ++l) {
            if (l == 0)
                prefix[0] = {{combo[0], Int(1)}};
            else
                prefix[l] = r.sparse_mul_gen(s.partial_deg[l - 1], prefix[l - 1], degrees[l],
                                             combo[l]);
            if (r.sparse_is_zero(s.partial_deg[l], prefix[l])) {
                zero_at = l;
                break;
            }
        }
        if (zero_at < 0) return ComboHit{flat, combo, prefix[k - 1]};

        for (int m = zero_at + 1; m < k; ++m) combo[m] = 0;
        int l = zero_at;
        while (l >= 0 && ++combo[l] == s.radix[l]) {
            combo[l] = 0;
            --l;
        }
        if (l < 0) return std::nullopt;
        dirty = l;
        flat = 0;
        for (int m = 0; m < k; ++m) flat += static_cast<std::uint64_t>(combo[m]) * s.stride[m];
    }
    return std::nullopt;
}

} // namespace

std::uint64_t combo_space_size(const GradedRing& r, const std::vector<int>& degrees) {
    return make_space(r, degrees).total;
}

std::optional<ComboHit> find_nonzero_combo_serial(const GradedRing& r,
                                                  const std::vector<int>& degrees) {
    SearchSpace s = make_space(r, degrees);
    if (s.total == 0) return std::nullopt;
    return scan_range(r, degrees, s, 0, s.total);
}

std::optional<ComboHit> find_nonzero_combo_parallel(const GradedRing& r,
                                                    const std::vector<int>& degrees) {
#ifndef _OPENMP
    return find_nonzero_combo_serial(r, degrees);
#else
    SearchSpace s = make_space(r, degrees);
    if (s.total == 0) return std::nullopt;
    if (s.total < 4096 || omp_get_max_threads() == 1)
        return scan_range(r, degrees, s, 0, s.total);

    const std::uint64_t chunk =
        std::max<std::uint64_t>(1024, s.total / (16 * omp_get_max_threads()));
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};

#pragma omp parallel
    for (;;) {
        std::uint64_t lo = next.fetch_add(chunk);
        std::uint64_t bound = best.load(std::memory_order_relaxed);
        if (lo >= s.total || lo >= bound) break;
        std::uint64_t hi = std::min({s.total, lo + chunk, bound});
        auto hit = scan_range(r, degrees, s, lo, hi);
        if (hit) {
            std::uint64_t cur = best.load();
            while (hit->flat < cur && !best.compare_exchange_weak(cur, hit->flat)) {
            }
        }
    }

    std::uint64_t found = best.load();
    if (found == UINT64_MAX) return std::nullopt;
    // Rebuild the witness at the winning index; cheap and schedule-independent.
    return scan_range(r, degrees, s, found, found + 1);
#endif
}

std::optional<ComboHit> find_nonzero_combo(const GradedRing& r, const std::vector<int>& degrees) {
#ifdef _OPENMP
    SearchSpace s = make_space(r, degrees);
    if (s.total >= 65536 && omp_get_max_threads() > 1)
        return find_nonzero_combo_parallel(r, degrees);
#endif
    return find_nonzero_combo_serial(r, degrees);
}

} // namespace fillobs

#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "fillobs/graded_ring.hpp"

namespace fillobs {

// One generator choice per tuple slot whose product is nonzero. `flat` is
// the mixed-radix rank of the combination (slot 0 most significant), so
// numeric order equals lexicographic order on combinations.
struct ComboHit {
    std::uint64_t flat = 0;
    std::vector<int> combo;
    SparseElem product; // lives in degree sum(degrees)
};

std::uint64_t combo_space_size(const GradedRing& r, const std::vector<int>& degrees);

// First (lexicographically least) generator combination with nonzero
// product, or nothing when the cup map vanishes on all of them. The serial
// walker is the reference implementation; the parallel one must return the
// identical hit regardless of thread count or schedule.
std::optional<ComboHit> find_nonzero_combo_serial(const GradedRing& r,
                                                  const std::vector<int>& degrees);
std::optional<ComboHit> find_nonzero_combo_parallel(const GradedRing& r,
                                                    const std::vector<int>& degrees);
std::optional<ComboHit> find_nonzero_combo(const GradedRing& r, const std::vector<int>& degrees);

} // namespace fillobs

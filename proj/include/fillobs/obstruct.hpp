#pragma once
#include <optional>
#include <string>

#include "fillobs/graded_ring.hpp"
#include "fillobs/tuples.hpp"

namespace fillobs {

// Evidence that a cup-product map does not vanish: one generator per tuple
// slot whose product is a nonzero class.
struct Witness {
    DegreeTuple tuple;
    std::vector<int> factor_gens;
    RingClass product;
};

enum class VerdictStatus { Fires, Inconclusive };

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::optional<Witness> witness;
    std::string criterion;
    std::string searched;

    bool fires() const { return status == VerdictStatus::Fires; }
};

// Witness for the cup map H^{i1} (x) ... (x) H^{ik} -> H^{sum}, or nothing
// when it vanishes identically (always the case above the top degree). The
// returned witness is the lexicographically least one in generator order.
std::optional<Witness> find_cup_witness(const GradedRing& r, const DegreeTuple& t);

// Tuple families of the fillability criteria, all searched in (sum, tuple)
// lexicographic order with sums capped at the top degree.
TupleFamily filling_dimension_family(const GradedRing& r, int m, int h);
TupleFamily stein_family(int n, int top_degree);
TupleFamily milnor_family(int n, int top_degree);

// N = boundary of nothing homotopically small: fires when some admissible
// cup map is nonvanishing, ruling out fillings of homotopical dimension
// <= h (ring of a closed orientable (m-1)-manifold, m >= 4, 1 <= h <= m-3).
Verdict filling_dimension_check(const GradedRing& r, int m, int h);

// 1 + the largest h that fires; 0 when no obstruction is found.
int filling_dimension_bound(const GradedRing& r, int m);

// Stein fillability obstruction in dimension 2n-1 >= 5 (any coefficients).
Verdict stein_check(const GradedRing& r, int n);

// Milnor fillability obstruction over Q, n >= 2.
Verdict milnor_check(const GradedRing& r, int n);

// Holomorphic fillability obstruction over Q, n >= 3.
Verdict holo_check(const GradedRing& r, int n);

// Same engine as stein_check; a smoothable singularity has a Stein fillable
// boundary, so a firing verdict rules the smoothing out.
Verdict smoothability_check(const GradedRing& r, int n);

// ceil((h*+1)/2) for the largest firing h: lower bound on the complex
// dimension of the exceptional set of any resolution; 0 when none fires.
int exceptional_dimension_bound(const GradedRing& r, int n);

} // namespace fillobs

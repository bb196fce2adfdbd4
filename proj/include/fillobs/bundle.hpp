#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fillobs/graded_ring.hpp"
#include "fillobs/obstruct.hpp"
#include "fillobs/tuples.hpp"

namespace fillobs {

// Oriented circle bundle over a closed orientable base, described by the
// base cohomology ring and the Euler class.
struct CircleBundle {
    GradedRing base;
    RingClass euler; // degree 2

    static CircleBundle create(GradedRing base, RingClass euler);
};

// Additive pieces of the total-space cohomology in one degree: the cokernel
// of cup-with-e into H^i and the kernel of cup-with-e out of H^{i-1}. Over a
// field these determine dim H^i(N); over Z the extension between them is
// genuinely ambiguous and is never resolved here.
struct GysinLayer {
    int degree = 0;
    FpAbGroup coker_part;
    FpAbGroup ker_part;
};

struct BundleVerdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    int h = 0;
    std::optional<DegreeTuple> tuple;
    // generator choices whose products span the target degree on the base
    std::vector<std::vector<int>> surjectivity_combos;
    std::optional<FpAbGroup> euler_cokernel; // nontrivial when the verdict fires
    std::string searched;

    bool fires() const { return status == VerdictStatus::Fires; }
};

// Boundary of the cone obtained by contracting the zero section of an
// anti-ample line bundle over a projective base of complex dimension n-1;
// the Euler class of the circle bundle is the first Chern class.
struct LineBundleCone {
    CircleBundle bundle;
    int n = 0;

    static LineBundleCone create(CircleBundle bundle, int n);
};

// x -> x * e as a map H^{from_degree} -> H^{from_degree+2} on the base.
GroupMap euler_multiplication(const CircleBundle& b, int from_degree);

TupleFamily bundle_family(const GradedRing& base, int h);

// Fires when some admissible tuple has (i) surjective cup map on the base
// and (ii) non-surjective cup-with-e into the same degree; the total space
// then bounds nothing of homotopical dimension <= h.
BundleVerdict bundle_check(const CircleBundle& b, int h, const TupleFamily& family);

// ceil((h*+1)/2) over the firing h in {2..2n-3}; 0 when none fires.
int cone_exceptional_bound(const LineBundleCone& c);

// Stein-range bundle check at h = n: firing means the boundary is not Stein
// fillable, so the cone singularity is not smoothable.
BundleVerdict cone_smoothability_check(const LineBundleCone& c);

// Requires the base ring to be over the field already (mod-p ring structure
// is not derivable from the integral one).
std::vector<GysinLayer> gysin_cohomology(const CircleBundle& b, const Field& field);

std::vector<long> gysin_betti(const std::vector<GysinLayer>& layers);

} // namespace fillobs

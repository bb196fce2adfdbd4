#include "fillobs/bundle.hpp"

#include <algorithm>

#include "fillobs/error.hpp"

namespace fillobs {

CircleBundle CircleBundle::create(GradedRing base, RingClass euler) {
    if (base.top_degree() < 2)
        fail(ErrorKind::Precondition, "circle bundle base must have dimension >= 2");
    if (euler.degree != 2) fail(ErrorKind::Precondition, "Euler class must have degree 2");
    if (static_cast<int>(euler.elem.size()) != base.ngens(2))
        fail(ErrorKind::Dimension, "Euler class coordinate length mismatch");
    return {std::move(base), std::move(euler)};
}

LineBundleCone LineBundleCone::create(CircleBundle bundle, int n) {
    if (n < 3)
        fail(ErrorKind::Precondition,
             "cone criteria need complex dimension n >= 3 (base of complex dimension >= 2)");
    if (bundle.base.top_degree() != 2 * n - 2)
        fail(ErrorKind::Precondition,
             "cone over a base of complex dimension " + std::to_string(n - 1) +
                 " needs base top degree " + std::to_string(2 * n - 2) + ", got " +
                 std::to_string(bundle.base.top_degree()));
    return {std::move(bundle), n};
}

GroupMap euler_multiplication(const CircleBundle& b, int from_degree) {
    const GradedRing& r = b.base;
    if (from_degree < 0 || from_degree > r.top_degree() - 2)
        fail(ErrorKind::Precondition, "cup-with-e degree out of range");
    std::vector<GroupElem> images;
    images.reserve(r.ngens(from_degree));
    for (int i = 0; i < r.ngens(from_degree); ++i)
        images.push_back(r.multiply(r.generator_class(from_degree, i), b.euler).elem);
    return GroupMap::create(r.group(from_degree), r.group(from_degree + 2), std::move(images));
}

namespace {

// Out-of-range degrees behave as the trivial group.
GroupMap euler_map_clamped(const CircleBundle& b, int from_degree) {
    const GradedRing& r = b.base;
    const int d = r.top_degree();
    auto trivial = FpAbGroup::free_group(0, r.coeffs().group_modulus());
    if (from_degree < 0 || from_degree > d) {
        FpAbGroup target = (from_degree + 2 >= 0 && from_degree + 2 <= d)
                               ? r.group(from_degree + 2)
                               : trivial;
        return GroupMap::create(trivial, target, {});
    }
    if (from_degree + 2 > d) {
        std::vector<GroupElem> images(r.ngens(from_degree), GroupElem{});
        return GroupMap::create(r.group(from_degree), trivial, std::move(images));
    }
    return euler_multiplication(b, from_degree);
}

// All products of one generator per slot, assembled as a map from a free
// module onto their span; by multilinearity the cup map is surjective iff
// this map is.
GroupMap cup_span_map(const GradedRing& r, const DegreeTuple& t,
                      std::vector<std::vector<int>>* combos_out) {
    const int sum = t.sum();
    std::vector<int> radix;
    for (int i : t.indices) radix.push_back(r.ngens(i));

    std::vector<GroupElem> images;
    std::vector<int> combo(t.indices.size(), 0);
    bool done = std::any_of(radix.begin(), radix.end(), [](int x) { return x == 0; });
    while (!done) {
        RingClass acc = r.generator_class(t.indices[0], combo[0]);
        for (size_t l = 1; l < combo.size(); ++l)
            acc = r.multiply(acc, r.generator_class(t.indices[l], combo[l]));
        images.push_back(acc.elem);
        if (combos_out) combos_out->push_back(combo);
        int l = static_cast<int>(combo.size()) - 1;
        while (l >= 0 && ++combo[l] == radix[l]) combo[l--] = 0;
        if (l < 0) done = true;
    }
    auto source = FpAbGroup::free_group(static_cast<int>(images.size()),
                                        r.coeffs().group_modulus());
    return GroupMap::create(std::move(source), r.group(sum), std::move(images));
}

} // namespace

TupleFamily bundle_family(const GradedRing& base, int h) {
    return {base.top_degree() - h, h + 1, base.top_degree()};
}

BundleVerdict bundle_check(const CircleBundle& b, int h, const TupleFamily& family) {
    const GradedRing& base = b.base;
    const int m = base.top_degree() + 2; // dimension of a would-be filling of N
    if (h < 1 || h > m - 3)
        fail(ErrorKind::Precondition,
             "h must lie in 1.." + std::to_string(m - 3) + " (no admissible tuples otherwise)");
    TupleFamily expected = bundle_family(base, h);
    if (family.max_index != expected.max_index || family.min_sum != expected.min_sum ||
        family.max_sum > expected.max_sum)
        fail(ErrorKind::Precondition,
             "malformed family: the bundle criterion at h = " + std::to_string(h) +
                 " requires " + expected.to_string());

    BundleVerdict v;
    v.h = h;
    long examined = 0, skipped = 0;
    for (const DegreeTuple& t : enumerate_tuples(family)) {
        bool trivial = base.degree_trivial(t.sum());
        for (int i : t.indices) trivial = trivial || base.degree_trivial(i);
        if (trivial) {
            ++skipped;
            continue;
        }
        ++examined;
        std::vector<std::vector<int>> combos;
        GroupMap cup = cup_span_map(base, t, &combos);
        if (!surjective_over(base.coeffs(), cup)) continue;
        GroupMap mul_e = euler_map_clamped(b, t.sum() - 2);
        if (surjective_over(base.coeffs(), mul_e)) continue;
        v.status = VerdictStatus::Fires;
        v.tuple = t;
        v.surjectivity_combos = std::move(combos);
        v.euler_cokernel = cokernel(mul_e);
        break;
    }
    v.searched = family.to_string() + "; " + std::to_string(examined) + " tuples examined, " +
                 std::to_string(skipped) + " skipped (trivial degree)";
    return v;
}

int cone_exceptional_bound(const LineBundleCone& c) {
    const int n = c.n;
    // Families shrink as h grows; scan from the top.
    for (int h = 2 * n - 3; h >= 2; --h) {
        BundleVerdict v = bundle_check(c.bundle, h, bundle_family(c.bundle.base, h));
        if (v.fires()) return (h + 2) / 2;
    }
    return 0;
}

BundleVerdict cone_smoothability_check(const LineBundleCone& c) {
    const int h = c.n; // Stein range: indices <= n-2, sum >= n+1
    return bundle_check(c.bundle, h, bundle_family(c.bundle.base, h));
}

std::vector<GysinLayer> gysin_cohomology(const CircleBundle& b, const Field& field) {
    const Coefficients& coeffs = b.base.coeffs();
    bool matches = field.rational ? coeffs.kind == Coefficients::Kind::Rationals
                                  : (coeffs.kind == Coefficients::Kind::Mod &&
                                     coeffs.modulus == field.prime);
    if (!matches)
        fail(ErrorKind::Coefficient,
             "Gysin layers need the base ring over " + field.to_string() +
                 "; it is over " + coeffs.to_string() +
                 " (mod-p ring structure is not derivable from the integral ring)");

    std::vector<GysinLayer> layers;
    const int dn = b.base.top_degree() + 1; // dimension of the total space
    for (int i = 0; i <= dn; ++i) {
        GysinLayer layer;
        layer.degree = i;
        FpAbGroup cok = cokernel(euler_map_clamped(b, i - 2));
        // Over Q the cokernel lives in the category of Q-vector spaces, where
        // the integral divisibility torsion is invisible.
        layer.coker_part = field.rational
                               ? FpAbGroup::free_group(static_cast<int>(cok.free_rank()))
                               : std::move(cok);
        long kr = kernel_rank_over_field(euler_map_clamped(b, i - 1), field);
        layer.ker_part = FpAbGroup::free_group(static_cast<int>(kr), coeffs.group_modulus());
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<long> gysin_betti(const std::vector<GysinLayer>& layers) {
    std::vector<long> betti;
    betti.reserve(layers.size());
    for (const auto& l : layers) betti.push_back(l.coker_part.free_rank() + l.ker_part.free_rank());
    return betti;
}

} // namespace fillobs

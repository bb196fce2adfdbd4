#include "fillobs/obstruct.hpp"

#include "fillobs/error.hpp"
#include "fillobs/search.hpp"

namespace fillobs {

std::optional<Witness> find_cup_witness(const GradedRing& r, const DegreeTuple& t) {
    for (int i : t.indices) {
        if (i < 1) fail(ErrorKind::ParamRange, "tuple index 0 is not a cohomological degree");
        if (i > r.top_degree())
            fail(ErrorKind::ParamRange, "tuple index " + std::to_string(i) +
                                            " exceeds the top degree " +
                                            std::to_string(r.top_degree()));
    }
    if (t.sum() > r.top_degree()) return std::nullopt; // vanishes automatically

    auto hit = find_nonzero_combo(r, t.indices);
    if (!hit) return std::nullopt;
    return Witness{t, hit->combo, RingClass{t.sum(), r.densify(t.sum(), hit->product)}};
}

namespace {

Verdict run_family_check(const GradedRing& r, const TupleFamily& family,
                         const std::string& criterion) {
    Verdict v;
    v.criterion = criterion;
    long examined = 0, skipped = 0;
    for (const DegreeTuple& t : enumerate_tuples(family)) {
        bool trivial = false;
        for (int i : t.indices)
            if (r.degree_trivial(i)) {
                trivial = true;
                break;
            }
        if (trivial || r.degree_trivial(t.sum())) {
            ++skipped;
            continue;
        }
        ++examined;
        if (auto w = find_cup_witness(r, t)) {
            v.status = VerdictStatus::Fires;
            v.witness = std::move(w);
            break;
        }
    }
    v.searched = family.to_string() + "; " + std::to_string(examined) + " tuples examined, " +
                 std::to_string(skipped) + " skipped (trivial degree)";
    return v;
}

void require_closed_dim(const GradedRing& r, int dim, const std::string& what) {
    if (r.top_degree() != dim)
        fail(ErrorKind::Precondition, what + " needs a ring with top degree " +
                                          std::to_string(dim) + ", got " +
                                          std::to_string(r.top_degree()));
}

void require_rational(const GradedRing& r, const std::string& what) {
    if (r.coeffs().kind != Coefficients::Kind::Rationals)
        fail(ErrorKind::Coefficient,
             what + " is a rational-coefficient criterion; the ring is over " +
                 r.coeffs().to_string());
}

} // namespace

TupleFamily filling_dimension_family(const GradedRing& r, int m, int h) {
    return {m - 2 - h, h + 1, r.top_degree()};
}

TupleFamily stein_family(int n, int top_degree) { return {n - 2, n + 1, top_degree}; }

TupleFamily milnor_family(int n, int top_degree) { return {n - 1, n, top_degree}; }

Verdict filling_dimension_check(const GradedRing& r, int m, int h) {
    if (m < 4) fail(ErrorKind::Precondition, "filling dimension criterion needs m >= 4");
    require_closed_dim(r, m - 1, "filling dimension criterion");
    if (h < 1 || h > m - 3)
        fail(ErrorKind::Precondition, "h must lie in 1.." + std::to_string(m - 3) +
                                          " (no admissible tuples otherwise)");
    return run_family_check(r, filling_dimension_family(r, m, h), "filling-dimension");
}

int filling_dimension_bound(const GradedRing& r, int m) {
    if (m < 4) fail(ErrorKind::Precondition, "filling dimension criterion needs m >= 4");
    require_closed_dim(r, m - 1, "filling dimension criterion");
    // Families shrink as h grows, so the firing set is downward closed.
    for (int h = m - 3; h >= 1; --h)
        if (filling_dimension_check(r, m, h).fires()) return h + 1;
    return 0;
}

Verdict stein_check(const GradedRing& r, int n) {
    if (n < 3)
        fail(ErrorKind::Precondition,
             "Stein criterion needs n >= 3 (it says nothing about 3-manifolds)");
    require_closed_dim(r, 2 * n - 1, "Stein criterion");
    Verdict v = run_family_check(r, stein_family(n, r.top_degree()), "stein-fillability");
    return v;
}

Verdict milnor_check(const GradedRing& r, int n) {
    if (n < 2) fail(ErrorKind::Precondition, "Milnor criterion needs n >= 2");
    require_closed_dim(r, 2 * n - 1, "Milnor criterion");
    require_rational(r, "the Milnor criterion");
    return run_family_check(r, milnor_family(n, r.top_degree()), "milnor-fillability");
}

Verdict holo_check(const GradedRing& r, int n) {
    if (n < 3)
        fail(ErrorKind::Precondition,
             "holomorphic fillability criterion needs n >= 3 (it says nothing about "
             "3-manifolds)");
    require_closed_dim(r, 2 * n - 1, "holomorphic fillability criterion");
    require_rational(r, "the holomorphic fillability criterion");
    return run_family_check(r, stein_family(n, r.top_degree()), "holomorphic-fillability");
}

Verdict smoothability_check(const GradedRing& r, int n) {
    Verdict v = stein_check(r, n);
    v.criterion = "smoothability";
    return v;
}

int exceptional_dimension_bound(const GradedRing& r, int n) {
    require_closed_dim(r, 2 * n - 1, "exceptional set bound");
    const int m = 2 * n; // dimension of any resolution of the cone
    for (int h = m - 3; h >= 1; --h)
        if (filling_dimension_check(r, m, h).fires()) return (h + 2) / 2;
    return 0;
}

} // namespace fillobs

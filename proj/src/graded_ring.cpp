#include "fillobs/graded_ring.hpp"

#include <algorithm>
#include <tuple>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fillobs/error.hpp"

namespace fillobs {

Coefficients Coefficients::mod(Int m) {
    if (m < 2) fail(ErrorKind::ParamRange, "coefficient modulus must be >= 2");
    Coefficients c;
    c.kind = Kind::Mod;
    c.modulus = std::move(m);
    return c;
}

bool Coefficients::is_field() const {
    if (kind == Kind::Rationals) return true;
    if (kind == Kind::Mod) return is_prime(modulus);
    return false;
}

std::optional<Int> Coefficients::group_modulus() const {
    if (kind == Kind::Mod) return modulus;
    return std::nullopt;
}

std::string Coefficients::to_string() const {
    switch (kind) {
    case Kind::Integers: return "Z";
    case Kind::Rationals: return "Q";
    case Kind::Mod: return "Z/" + modulus.str();
    }
    return "?";
}

SparseElem sparse_normalized(SparseElem s, const std::optional<Int>& modulus) {
    std::sort(s.begin(), s.end(), [](const SparseTerm& a, const SparseTerm& b) { return a.gen < b.gen; });
    SparseElem out;
    out.reserve(s.size());
    for (auto& t : s) {
        if (!out.empty() && out.back().gen == t.gen)
            out.back().coef += t.coef;
        else
            out.push_back(std::move(t));
    }
    size_t w = 0;
    for (auto& t : out) {
        if (modulus) {
            t.coef %= *modulus;
            if (t.coef < 0) t.coef += *modulus;
        }
        if (t.coef != 0) out[w++] = std::move(t);
    }
    out.resize(w);
    return out;
}

void sparse_accumulate(SparseElem& acc, std::span<const SparseTerm> terms, const Int& scale) {
    if (scale == 0) return;
    for (const auto& t : terms) acc.push_back({t.gen, t.coef * scale});
}

void MultTable::append_entry(const SparseElem& terms) {
    if (complete()) fail(ErrorKind::Schema, "multiplication table already complete");
    for (const auto& t : terms) terms_.push_back(t);
    offsets_.push_back(static_cast<std::uint32_t>(terms_.size()));
}

std::span<const SparseTerm> MultTable::entry(int i, int j) const {
    std::int64_t slot = static_cast<std::int64_t>(i) * nj_ + j;
    std::uint32_t lo = offsets_[slot], hi = offsets_[slot + 1];
    return {terms_.data() + lo, terms_.data() + hi};
}

const FpAbGroup& GradedRing::group(int deg) const {
    if (deg < 0 || deg > top_degree_)
        fail(ErrorKind::Dimension, "degree " + std::to_string(deg) + " outside 0.." +
                                       std::to_string(top_degree_));
    return groups_[deg];
}

const std::vector<std::string>& GradedRing::gen_names(int deg) const {
    group(deg);
    return names_[deg];
}

std::string GradedRing::format_group(int deg) const {
    const FpAbGroup& g = group(deg);
    if (coeffs_.kind == Coefficients::Kind::Rationals) {
        long r = g.free_rank();
        if (r == 0) return "0";
        if (r == 1) return "Q";
        return "Q^" + std::to_string(r);
    }
    return g.to_string();
}

const MultTable& GradedRing::table(int p, int q) const {
    if (p < 0 || q < 0 || p + q > top_degree_)
        fail(ErrorKind::Dimension, "no multiplication table for degrees (" + std::to_string(p) +
                                       ", " + std::to_string(q) + ")");
    return tables_[static_cast<size_t>(p) * (top_degree_ + 1) + q];
}

std::span<const SparseTerm> GradedRing::gen_product(int p, int i, int q, int j) const {
    return table(p, q).entry(i, j);
}

RingClass GradedRing::zero_class(int degree) const {
    return {degree, GroupElem(static_cast<size_t>(ngens(degree)))};
}

RingClass GradedRing::unit_class() const {
    if (ngens(0) == 0) fail(ErrorKind::Precondition, "ring has no unit generator in degree 0");
    RingClass c = zero_class(0);
    c.elem[0] = 1;
    return c;
}

RingClass GradedRing::generator_class(int degree, int index) const {
    if (index < 0 || index >= ngens(degree))
        fail(ErrorKind::Dimension, "generator index out of range");
    RingClass c = zero_class(degree);
    c.elem[index] = 1;
    return c;
}

RingClass GradedRing::multiply(const RingClass& a, const RingClass& b) const {
    if (a.degree < 0 || a.degree > top_degree_ || b.degree < 0 || b.degree > top_degree_)
        fail(ErrorKind::Dimension, "class degree exceeds top degree");
    if (static_cast<int>(a.elem.size()) != ngens(a.degree) ||
        static_cast<int>(b.elem.size()) != ngens(b.degree))
        fail(ErrorKind::Dimension, "class coordinate length mismatch");
    if (a.degree + b.degree > top_degree_) return zero_class(top_degree_);

    RingClass out = zero_class(a.degree + b.degree);
    for (int i = 0; i < ngens(a.degree); ++i) {
        if (a.elem[i] == 0) continue;
        for (int j = 0; j < ngens(b.degree); ++j) {
            if (b.elem[j] == 0) continue;
            Int c = a.elem[i] * b.elem[j];
            for (const auto& t : gen_product(a.degree, i, b.degree, j)) out.elem[t.gen] += c * t.coef;
        }
    }
    if (auto m = coeffs_.group_modulus()) {
        for (auto& v : out.elem) {
            v %= *m;
            if (v < 0) v += *m;
        }
    }
    return out;
}

bool GradedRing::class_is_zero(const RingClass& c) const {
    const FpAbGroup& g = group(c.degree);
    if (coeffs_.kind == Coefficients::Kind::Rationals) return g.elem_is_torsion(c.elem);
    return g.elem_is_zero(c.elem);
}

bool GradedRing::sparse_is_zero(int degree, const SparseElem& s) const {
    SparseElem n = sparse_normalized(s, coeffs_.group_modulus());
    if (n.empty()) return true;
    const FpAbGroup& g = group(degree);
    // Free presentation: a surviving coefficient is nonzero over Z, Q and Z/m alike.
    if (g.relations().rows() == 0) return false;
    return class_is_zero({degree, densify(degree, n)});
}

GroupElem GradedRing::densify(int degree, const SparseElem& s) const {
    GroupElem e(static_cast<size_t>(ngens(degree)));
    for (const auto& t : s) e[t.gen] += t.coef;
    return e;
}

SparseElem GradedRing::sparsify(const GroupElem& e) const {
    SparseElem s;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) s.push_back({static_cast<int>(i), e[i]});
    return s;
}

SparseElem GradedRing::sparse_mul_gen(int p, const SparseElem& a, int q, int j) const {
    SparseElem acc;
    for (const auto& t : a) sparse_accumulate(acc, gen_product(p, t.gen, q, j), t.coef);
    return sparse_normalized(std::move(acc), coeffs_.group_modulus());
}

std::string GradedRing::format_class(const RingClass& c) const {
    const auto& names = gen_names(c.degree);
    std::string out;
    for (size_t i = 0; i < c.elem.size(); ++i) {
        const Int& v = c.elem[i];
        if (v == 0) continue;
        Int mag = abs(v);
        if (out.empty())
            out += v < 0 ? "-" : "";
        else
            out += v < 0 ? " - " : " + ";
        if (mag != 1) out += mag.str() + "*";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

RingBuilder::RingBuilder(int top_degree, Coefficients coeffs, std::string label) {
    if (top_degree < 0) fail(ErrorKind::ParamRange, "negative top degree");
    ring_.top_degree_ = top_degree;
    ring_.coeffs_ = std::move(coeffs);
    ring_.label_ = std::move(label);
    ring_.groups_.resize(top_degree + 1);
    ring_.names_.resize(top_degree + 1);
    ring_.tables_.resize(static_cast<size_t>(top_degree + 1) * (top_degree + 1));
    ring_.group_set_.resize(top_degree + 1, false);
}

void RingBuilder::set_group(int deg, FpAbGroup g, std::vector<std::string> names) {
    if (deg < 0 || deg > ring_.top_degree_) fail(ErrorKind::Schema, "degree outside 0..top");
    if (static_cast<int>(names.size()) != g.ngens())
        fail(ErrorKind::Schema, "generator name count mismatch in degree " + std::to_string(deg));
    ring_.groups_[deg] = std::move(g);
    ring_.names_[deg] = std::move(names);
    ring_.group_set_[deg] = true;
}

void RingBuilder::set_free_group(int deg, int rank, std::vector<std::string> names) {
    set_group(deg, FpAbGroup::free_group(rank, ring_.coeffs_.group_modulus()), std::move(names));
}

MultTable& RingBuilder::begin_table(int p, int q) {
    if (p < 0 || q < 0 || p + q > ring_.top_degree_)
        fail(ErrorKind::Schema, "table outside the degree triangle");
    if (!ring_.group_set_[p] || !ring_.group_set_[q] || !ring_.group_set_[p + q])
        fail(ErrorKind::Schema, "table requested before its degree groups were set");
    MultTable& t = ring_.tables_[static_cast<size_t>(p) * (ring_.top_degree_ + 1) + q];
    t = MultTable(ring_.groups_[p].ngens(), ring_.groups_[q].ngens());
    return t;
}

GradedRing RingBuilder::finish() {
    const int d = ring_.top_degree_;
    for (int k = 0; k <= d; ++k)
        if (!ring_.group_set_[k])
            fail(ErrorKind::Schema, "no group given for degree " + std::to_string(k));
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
            MultTable& t = ring_.tables_[static_cast<size_t>(p) * (d + 1) + q];
            if (t.ni() != ring_.groups_[p].ngens() || t.nj() != ring_.groups_[q].ngens() ||
                !t.complete()) {
                // tolerate implicitly-zero tables only when there is nothing to multiply
                if (ring_.groups_[p].ngens() == 0 || ring_.groups_[q].ngens() == 0) {
                    t = MultTable(ring_.groups_[p].ngens(), ring_.groups_[q].ngens());
                    while (!t.complete()) t.append_entry({});
                    continue;
                }
                fail(ErrorKind::Schema, "incomplete multiplication table for degrees (" +
                                            std::to_string(p) + ", " + std::to_string(q) + ")");
            }
        }
    return std::move(ring_);
}

namespace {

struct Violation {
    std::tuple<int, int, int, int, long, long, long> key;
    std::string text;
    bool operator<(const Violation& o) const { return key < o.key; }
};

void check_unit(const GradedRing& r, std::vector<Violation>& out) {
    const FpAbGroup& h0 = r.group(0);
    if (!(h0.free_rank() == 1 && h0.torsion().empty())) {
        out.push_back({{0, 0, 0, 0, 0, 0, 0},
                       "unit: H^0 is " + r.format_group(0) + ", expected the coefficient ring"});
        return;
    }
    if (r.ngens(0) == 0) return;
    for (int q = 0; q <= r.top_degree(); ++q) {
        for (int j = 0; j < r.ngens(q); ++j) {
            SparseElem left(r.gen_product(0, 0, q, j).begin(), r.gen_product(0, 0, q, j).end());
            left.push_back({j, -1});
            if (!r.sparse_is_zero(q, left))
                out.push_back({{1, 0, q, 0, 0, j, 0},
                               "unit: 1*x != x for generator " + std::to_string(j) +
                                   " of degree " + std::to_string(q)});
            SparseElem right(r.gen_product(q, j, 0, 0).begin(), r.gen_product(q, j, 0, 0).end());
            right.push_back({j, -1});
            if (!r.sparse_is_zero(q, right))
                out.push_back({{1, 1, q, 0, 0, j, 0},
                               "unit: x*1 != x for generator " + std::to_string(j) +
                                   " of degree " + std::to_string(q)});
        }
    }
}

// x y - (-1)^{pq} y x must vanish
bool comm_ok(const GradedRing& r, int p, int i, int q, int j) {
    SparseElem acc(r.gen_product(p, i, q, j).begin(), r.gen_product(p, i, q, j).end());
    Int sign = (static_cast<long long>(p) * q) % 2 == 0 ? -1 : 1;
    sparse_accumulate(acc, r.gen_product(q, j, p, i), sign);
    return r.sparse_is_zero(p + q, acc);
}

// (x y) z - x (y z) must vanish
bool assoc_ok(const GradedRing& r, int p, int i, int q, int j, int s, int l) {
    SparseElem acc;
    for (const auto& t : r.gen_product(p, i, q, j))
        sparse_accumulate(acc, r.gen_product(p + q, t.gen, s, l), t.coef);
    for (const auto& u : r.gen_product(q, j, s, l))
        sparse_accumulate(acc, r.gen_product(p, i, q + s, u.gen), -u.coef);
    return r.sparse_is_zero(p + q + s, acc);
}

struct PairBlock {
    int p, q;
};
struct TripleBlock {
    int p, q, s;
};

std::vector<PairBlock> comm_blocks(const GradedRing& r) {
    std::vector<PairBlock> v;
    for (int p = 0; p <= r.top_degree(); ++p)
        for (int q = p; p + q <= r.top_degree(); ++q)
            if (r.ngens(p) > 0 && r.ngens(q) > 0) v.push_back({p, q});
    return v;
}

std::vector<TripleBlock> assoc_blocks(const GradedRing& r) {
    std::vector<TripleBlock> v;
    for (int p = 0; p <= r.top_degree(); ++p)
        for (int q = 0; p + q <= r.top_degree(); ++q)
            for (int s = 0; p + q + s <= r.top_degree(); ++s)
                if (r.ngens(p) > 0 && r.ngens(q) > 0 && r.ngens(s) > 0) v.push_back({p, q, s});
    return v;
}

void scan_comm_block(const GradedRing& r, const PairBlock& b, std::vector<Violation>& out) {
    for (int i = 0; i < r.ngens(b.p); ++i) {
        int jstart = b.p == b.q ? i : 0;
        for (int j = jstart; j < r.ngens(b.q); ++j)
            if (!comm_ok(r, b.p, i, b.q, j))
                out.push_back({{2, b.p, b.q, 0, i, j, 0},
                               "graded commutativity fails at degrees (" + std::to_string(b.p) +
                                   "," + std::to_string(b.q) + "), generators (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")"});
    }
}

void scan_assoc_block(const GradedRing& r, const TripleBlock& b, std::vector<Violation>& out) {
    for (int i = 0; i < r.ngens(b.p); ++i)
        for (int j = 0; j < r.ngens(b.q); ++j)
            for (int l = 0; l < r.ngens(b.s); ++l)
                if (!assoc_ok(r, b.p, i, b.q, j, b.s, l))
                    out.push_back({{3, b.p, b.q, b.s, i, j, l},
                                   "associativity fails at degrees (" + std::to_string(b.p) + "," +
                                       std::to_string(b.q) + "," + std::to_string(b.s) +
                                       "), generators (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(l) + ")"});
}

std::vector<std::string> strip_keys(std::vector<Violation> v) {
    std::sort(v.begin(), v.end());
    std::vector<std::string> out;
    out.reserve(v.size());
    for (auto& x : v) out.push_back(std::move(x.text));
    return out;
}

} // namespace

std::vector<std::string> validate_serial(const GradedRing& r) {
    std::vector<Violation> v;
    check_unit(r, v);
    for (const auto& b : comm_blocks(r)) scan_comm_block(r, b, v);
    for (const auto& b : assoc_blocks(r)) scan_assoc_block(r, b, v);
    return strip_keys(std::move(v));
}

std::vector<std::string> validate_parallel(const GradedRing& r) {
#ifndef _OPENMP
    return validate_serial(r);
#else
    std::vector<Violation> v;
    check_unit(r, v);

    auto cb = comm_blocks(r);
    auto ab = assoc_blocks(r);
#pragma omp parallel
    {
        std::vector<Violation> local;
#pragma omp for schedule(dynamic) nowait
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(cb.size()); ++k)
            scan_comm_block(r, cb[k], local);
#pragma omp for schedule(dynamic)
        for (std::int64_t k = 0; k < static_cast<std::int64_t>(ab.size()); ++k)
            scan_assoc_block(r, ab[k], local);
#pragma omp critical
        v.insert(v.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
    }
    return strip_keys(std::move(v));
#endif
}

std::vector<std::string> validate(const GradedRing& r) {
#ifdef _OPENMP
    // Rough work estimate; small rings are cheaper serial.
    std::int64_t work = 0;
    for (const auto& b : assoc_blocks(r))
        work += static_cast<std::int64_t>(r.ngens(b.p)) * r.ngens(b.q) * r.ngens(b.s);
    if (work > 200000 && omp_get_max_threads() > 1) return validate_parallel(r);
#endif
    return validate_serial(r);
}

bool poincare_pairing_nondegenerate(const GradedRing& r) {
    if (r.coeffs().kind != Coefficients::Kind::Rationals)
        fail(ErrorKind::Precondition, "Poincare pairing check requires rational coefficients");
    const int d = r.top_degree();
    if (r.group(0).free_rank() != 1 || r.group(d).free_rank() != 1)
        fail(ErrorKind::Precondition, "H^0 and H^top must both have rank one");

    for (int i = 0; i * 2 <= d; ++i) {
        long fi = r.group(i).free_rank();
        long fj = r.group(d - i).free_rank();
        if (fi != fj) return false;
        if (fi == 0) continue;
        IntMatrix pairing(static_cast<int>(fi), static_cast<int>(fj));
        for (long a = 0; a < fi; ++a) {
            RingClass xa{i, r.group(i).free_lift(static_cast<int>(a))};
            for (long b = 0; b < fj; ++b) {
                RingClass yb{d - i, r.group(d - i).free_lift(static_cast<int>(b))};
                RingClass prod = r.multiply(xa, yb);
                std::vector<Int> top = r.group(d).free_projection(prod.elem);
                pairing.at(static_cast<int>(a), static_cast<int>(b)) = top[0];
            }
        }
        if (rank_over_field(pairing, Field::Q()) != fi) return false;
    }
    return true;
}

bool surjective_over(const Coefficients& coeffs, const GroupMap& f) {
    if (coeffs.kind == Coefficients::Kind::Rationals) return cokernel(f).free_rank() == 0;
    return map_is_surjective(f);
}

} // namespace fillobs

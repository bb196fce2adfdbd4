#pragma once
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fillobs/group.hpp"

namespace fillobs {

struct Coefficients {
    enum class Kind { Integers, Rationals, Mod };
    Kind kind = Kind::Integers;
    Int modulus = 0; // >= 2 when kind == Mod; any m, not only primes

    static Coefficients Z() { return {}; }
    static Coefficients Q() { return {Kind::Rationals, 0}; }
    static Coefficients mod(Int m);

    bool is_field() const;
    std::optional<Int> group_modulus() const;
    std::string to_string() const;
    bool operator==(const Coefficients&) const = default;
};

// Homogeneous class of a graded ring.
struct RingClass {
    int degree = 0;
    GroupElem elem;
};

struct SparseTerm {
    int gen;
    Int coef;
};
using SparseElem = std::vector<SparseTerm>;

// sort by generator, merge duplicates, drop zeros (mod m when given)
SparseElem sparse_normalized(SparseElem s, const std::optional<Int>& modulus);
void sparse_accumulate(SparseElem& acc, std::span<const SparseTerm> terms, const Int& scale);

// Products of generator pairs for one degree pair (p, q), stored CSR so
// that large exterior algebras stay compact (almost all entries have at
// most one term).
class MultTable {
public:
    MultTable() = default;
    MultTable(int ni, int nj) : ni_(ni), nj_(nj) {}

    // entries must arrive in row-major (i, j) order, terms sorted by gen
    void append_entry(const SparseElem& terms);
    bool complete() const { return static_cast<std::int64_t>(offsets_.size()) == slots() + 1; }

    std::span<const SparseTerm> entry(int i, int j) const;
    int ni() const { return ni_; }
    int nj() const { return nj_; }
    std::int64_t slots() const { return static_cast<std::int64_t>(ni_) * nj_; }

private:
    int ni_ = 0, nj_ = 0;
    std::vector<std::uint32_t> offsets_{0};
    std::vector<SparseTerm> terms_;
};

class RingBuilder;

// Graded-commutative ring presented degreewise up to an explicit top
// degree; products landing above it are zero by convention. Generator 0 of
// degree 0 is the distinguished unit.
class GradedRing {
public:
    int top_degree() const { return top_degree_; }
    const Coefficients& coeffs() const { return coeffs_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    const FpAbGroup& group(int deg) const;
    const std::vector<std::string>& gen_names(int deg) const;
    int ngens(int deg) const { return group(deg).ngens(); }
    bool degree_trivial(int deg) const { return group(deg).is_trivial(); }
    std::string format_group(int deg) const; // "Q^3", "Z^2 + Z/4", "0", ...

    const MultTable& table(int p, int q) const;
    std::span<const SparseTerm> gen_product(int p, int i, int q, int j) const;

    RingClass zero_class(int degree) const;
    RingClass unit_class() const;
    RingClass generator_class(int degree, int index) const;
    RingClass multiply(const RingClass& a, const RingClass& b) const;

    // Coefficient-aware: over Q a class is zero iff it is torsion in the
    // underlying presentation.
    bool class_is_zero(const RingClass& c) const;
    bool sparse_is_zero(int degree, const SparseElem& s) const;

    GroupElem densify(int degree, const SparseElem& s) const;
    SparseElem sparsify(const GroupElem& e) const;
    SparseElem sparse_mul_gen(int p, const SparseElem& a, int q, int j) const;

    std::string format_class(const RingClass& c) const;

private:
    friend class RingBuilder;
    int top_degree_ = 0;
    Coefficients coeffs_;
    std::string label_;
    std::vector<FpAbGroup> groups_;
    std::vector<std::vector<std::string>> names_;
    std::vector<MultTable> tables_; // index p * (D + 1) + q, valid iff p + q <= D
    std::vector<bool> group_set_;
};

class RingBuilder {
public:
    RingBuilder(int top_degree, Coefficients coeffs, std::string label);

    void set_group(int deg, FpAbGroup g, std::vector<std::string> names);
    void set_free_group(int deg, int rank, std::vector<std::string> names);
    // Table sized from the already-set degree groups; fill row-major.
    MultTable& begin_table(int p, int q);
    const GradedRing& peek() const { return ring_; }

    GradedRing finish();

private:
    GradedRing ring_;
};

// Axiom checker: empty means unit, graded commutativity, associativity and
// truncation all hold on every generator tuple. The serial walker is the
// reference; the parallel one must produce the identical list.
std::vector<std::string> validate(const GradedRing& r);
std::vector<std::string> validate_serial(const GradedRing& r);
std::vector<std::string> validate_parallel(const GradedRing& r);

// Over Q: every pairing H^i x H^(D-i) -> H^D has full rank.
bool poincare_pairing_nondegenerate(const GradedRing& r);

// Surjectivity in the module category the coefficients live in: over Q a
// map is onto iff its cokernel is finite.
bool surjective_over(const Coefficients& coeffs, const GroupMap& f);

} // namespace fillobs

#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fillobs/smith.hpp"

namespace fillobs {

// Element of a finitely presented group, as coordinates over the
// presentation generators. Equality means equality modulo the relation
// lattice, decided by FpAbGroup::elem_is_zero, never raw comparison.
using GroupElem = std::vector<Int>;

GroupElem elem_add(const GroupElem& a, const GroupElem& b);
GroupElem elem_sub(const GroupElem& a, const GroupElem& b);
GroupElem elem_scaled(const GroupElem& a, const Int& c);
bool elem_all_zero(const GroupElem& a);

// Coefficient field for linear-rank questions: Q, or Z/p with p prime.
struct Field {
    bool rational = true;
    Int prime = 0;

    static Field Q() { return Field{}; }
    static Field mod(Int p);
    std::string to_string() const;
};

// Finitely presented abelian group Z^ngens / rowspace(relations); with a
// modulus m it is the Z/m-module presented by the same relations, realized
// internally as the Z-group with m*identity rows appended. The canonical
// form (free rank, torsion chain, modulus) is the identity of the group;
// generators are presentation artifacts.
class FpAbGroup {
public:
    FpAbGroup(); // trivial group, 0 generators

    static FpAbGroup from_relations(int ngens, IntMatrix relations,
                                    std::optional<Int> modulus = std::nullopt);
    static FpAbGroup free_group(int rank, std::optional<Int> modulus = std::nullopt);

    int ngens() const { return ngens_; }
    const IntMatrix& relations() const { return relations_; }
    const std::optional<Int>& modulus() const { return modulus_; }

    // Canonical invariants. With a modulus m, free_rank counts the Z/m-free
    // summands and torsion lists the divisors strictly between 1 and m.
    long free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool same_canonical_form(const FpAbGroup& o) const;

    bool elem_is_zero(const GroupElem& e) const;
    // Zero after tensoring with Q, i.e. the class is torsion.
    bool elem_is_torsion(const GroupElem& e) const;
    // Coordinates of the image in the free quotient (length free_rank when
    // no modulus; for modulus groups, the m-free directions).
    std::vector<Int> free_projection(const GroupElem& e) const;
    // Integer lift of the k-th free-quotient basis vector.
    GroupElem free_lift(int k) const;

    // Presentation rows including the modulus rows, i.e. the lattice that
    // elem_is_zero tests against.
    IntMatrix effective_relations() const;

    std::string to_string() const;

private:
    void compute_cache();
    std::vector<Int> snf_coords(const GroupElem& e) const;

    int ngens_ = 0;
    IntMatrix relations_; // 0 x ngens when none
    std::optional<Int> modulus_;

    bool free_presentation_ = true; // no relation rows: skip the SNF machinery
    long free_rank_ = 0;
    std::vector<Int> torsion_;
    std::vector<Int> diag_;        // SNF diagonal of effective relations
    IntMatrix v_, vinv_;           // column transform of that SNF
    std::vector<int> free_dirs_;   // coordinate directions with no torsion constraint
};

// Homomorphism given on generators; construction validates that every
// relation of the source maps to zero in the target.
class GroupMap {
public:
    static GroupMap create(FpAbGroup source, FpAbGroup target, std::vector<GroupElem> gen_images);

    const FpAbGroup& source() const { return source_; }
    const FpAbGroup& target() const { return target_; }
    const std::vector<GroupElem>& gen_images() const { return gen_images_; }

    GroupElem apply(const GroupElem& e) const;
    IntMatrix matrix() const; // rows = generator images

private:
    GroupMap() = default;
    FpAbGroup source_, target_;
    std::vector<GroupElem> gen_images_;
};

FpAbGroup cokernel(const GroupMap& f);
bool map_is_surjective(const GroupMap& f);
long kernel_rank_over_field(const GroupMap& f, const Field& field);

// Rank of an integer matrix after tensoring with the field.
long rank_over_field(const IntMatrix& m, const Field& field);

} // namespace fillobs

#include "fillobs/group.hpp"

#include <algorithm>
#include <sstream>

#include "fillobs/error.hpp"

namespace fillobs {

GroupElem elem_add(const GroupElem& a, const GroupElem& b) {
    if (a.size() != b.size()) fail(ErrorKind::Dimension, "element length mismatch");
    GroupElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

GroupElem elem_sub(const GroupElem& a, const GroupElem& b) {
    if (a.size() != b.size()) fail(ErrorKind::Dimension, "element length mismatch");
    GroupElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

GroupElem elem_scaled(const GroupElem& a, const Int& c) {
    GroupElem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * c;
    return out;
}

bool elem_all_zero(const GroupElem& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& v) { return v == 0; });
}

Field Field::mod(Int p) {
    if (!is_prime(p)) fail(ErrorKind::Precondition, "field modulus " + p.str() + " is not prime");
    Field f;
    f.rational = false;
    f.prime = std::move(p);
    return f;
}

std::string Field::to_string() const { return rational ? "Q" : "Z/" + prime.str(); }

FpAbGroup::FpAbGroup() : relations_(0, 0) {}

FpAbGroup FpAbGroup::from_relations(int ngens, IntMatrix relations, std::optional<Int> modulus) {
    if (ngens < 0) fail(ErrorKind::Dimension, "negative generator count");
    if (relations.rows() == 0)
        relations = IntMatrix(0, ngens);
    if (relations.cols() != ngens)
        fail(ErrorKind::Dimension, "relation matrix has " + std::to_string(relations.cols()) +
                                       " columns for " + std::to_string(ngens) + " generators");
    if (modulus && *modulus < 2) fail(ErrorKind::ParamRange, "modulus must be >= 2");
    FpAbGroup g;
    g.ngens_ = ngens;
    g.relations_ = std::move(relations);
    g.modulus_ = std::move(modulus);
    g.compute_cache();
    return g;
}

FpAbGroup FpAbGroup::free_group(int rank, std::optional<Int> modulus) {
    return from_relations(rank, IntMatrix(0, rank), std::move(modulus));
}

IntMatrix FpAbGroup::effective_relations() const {
    if (!modulus_) return relations_;
    IntMatrix mod_rows(ngens_, ngens_);
    for (int i = 0; i < ngens_; ++i) mod_rows.at(i, i) = *modulus_;
    return relations_.vstacked(mod_rows);
}

void FpAbGroup::compute_cache() {
    free_rank_ = 0;
    torsion_.clear();
    diag_.clear();
    free_dirs_.clear();

    free_presentation_ = relations_.rows() == 0;
    if (free_presentation_) {
        // Z^n, or a free Z/m-module of rank n.
        free_rank_ = ngens_;
        return;
    }

    SmithForm snf = smith_normal_form(effective_relations());
    diag_ = snf.diag;
    v_ = std::move(snf.v);
    vinv_ = std::move(snf.vinv);

    for (int j = 0; j < ngens_; ++j) {
        Int d = j < static_cast<int>(diag_.size()) ? diag_[j] : Int(0);
        if (d == 0) {
            free_dirs_.push_back(j);
            ++free_rank_;
        } else if (modulus_ && d == *modulus_) {
            free_dirs_.push_back(j); // free as a Z/m-module summand
            ++free_rank_;
        } else if (d >= 2) {
            torsion_.push_back(d);
        }
    }
    std::sort(torsion_.begin(), torsion_.end());
}

bool FpAbGroup::same_canonical_form(const FpAbGroup& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_ && modulus_ == o.modulus_;
}

std::vector<Int> FpAbGroup::snf_coords(const GroupElem& e) const {
    if (static_cast<int>(e.size()) != ngens_)
        fail(ErrorKind::Dimension, "element has length " + std::to_string(e.size()) +
                                       ", group has " + std::to_string(ngens_) + " generators");
    return vec_times_matrix(e, v_);
}

bool FpAbGroup::elem_is_zero(const GroupElem& e) const {
    if (free_presentation_) {
        if (static_cast<int>(e.size()) != ngens_)
            fail(ErrorKind::Dimension, "element length mismatch");
        if (!modulus_) return elem_all_zero(e);
        return std::all_of(e.begin(), e.end(), [&](const Int& v) { return v % *modulus_ == 0; });
    }
    std::vector<Int> y = snf_coords(e);
    for (int j = 0; j < ngens_; ++j) {
        Int d = j < static_cast<int>(diag_.size()) ? diag_[j] : Int(0);
        if (d == 0) {
            if (y[j] != 0) return false;
        } else if (y[j] % d != 0) {
            return false;
        }
    }
    return true;
}

bool FpAbGroup::elem_is_torsion(const GroupElem& e) const {
    if (free_presentation_) {
        if (static_cast<int>(e.size()) != ngens_)
            fail(ErrorKind::Dimension, "element length mismatch");
        if (modulus_) return true; // everything is m-torsion
        return elem_all_zero(e);
    }
    if (modulus_) return true;
    std::vector<Int> y = snf_coords(e);
    for (int j : free_dirs_)
        if (y[j] != 0) return false;
    return true;
}

std::vector<Int> FpAbGroup::free_projection(const GroupElem& e) const {
    if (free_presentation_) {
        if (static_cast<int>(e.size()) != ngens_)
            fail(ErrorKind::Dimension, "element length mismatch");
        return e;
    }
    std::vector<Int> y = snf_coords(e);
    std::vector<Int> out;
    out.reserve(free_dirs_.size());
    for (int j : free_dirs_) out.push_back(y[j]);
    return out;
}

GroupElem FpAbGroup::free_lift(int k) const {
    if (k < 0 || k >= free_rank_) fail(ErrorKind::Dimension, "free summand index out of range");
    GroupElem e(ngens_);
    if (free_presentation_) {
        e[k] = 1;
        return e;
    }
    return vinv_.row(free_dirs_[k]);
}

std::string FpAbGroup::to_string() const {
    std::vector<std::string> parts;
    if (modulus_) {
        for (long i = 0; i < free_rank_; ++i) parts.push_back("Z/" + modulus_->str());
    } else if (free_rank_ == 1) {
        parts.push_back("Z");
    } else if (free_rank_ > 1) {
        parts.push_back("Z^" + std::to_string(free_rank_));
    }
    for (const Int& d : torsion_) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

GroupMap GroupMap::create(FpAbGroup source, FpAbGroup target, std::vector<GroupElem> gen_images) {
    if (static_cast<int>(gen_images.size()) != source.ngens())
        fail(ErrorKind::Dimension, "one generator image required per source generator");
    for (const auto& img : gen_images)
        if (static_cast<int>(img.size()) != target.ngens())
            fail(ErrorKind::Dimension, "generator image has wrong length for target group");

    // Well-definedness: every source relation must map to zero.
    auto image_of = [&](const std::vector<Int>& coeffs) {
        GroupElem acc(target.ngens());
        for (int i = 0; i < source.ngens(); ++i) {
            if (coeffs[i] == 0) continue;
            for (int j = 0; j < target.ngens(); ++j) acc[j] += coeffs[i] * gen_images[i][j];
        }
        return acc;
    };
    const IntMatrix& rels = source.relations();
    for (int r = 0; r < rels.rows(); ++r)
        if (!target.elem_is_zero(image_of(rels.row(r))))
            fail(ErrorKind::Precondition,
                 "map not well-defined: source relation " + std::to_string(r) +
                     " does not map to zero");
    if (source.modulus()) {
        for (int i = 0; i < source.ngens(); ++i)
            if (!target.elem_is_zero(elem_scaled(gen_images[i], *source.modulus())))
                fail(ErrorKind::Precondition,
                     "map not well-defined: modulus relation on generator " + std::to_string(i) +
                         " does not map to zero");
    }

    GroupMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    f.gen_images_ = std::move(gen_images);
    return f;
}

GroupElem GroupMap::apply(const GroupElem& e) const {
    if (static_cast<int>(e.size()) != source_.ngens())
        fail(ErrorKind::Dimension, "element length mismatch");
    GroupElem acc(target_.ngens());
    for (int i = 0; i < source_.ngens(); ++i) {
        if (e[i] == 0) continue;
        for (int j = 0; j < target_.ngens(); ++j) acc[j] += e[i] * gen_images_[i][j];
    }
    return acc;
}

IntMatrix GroupMap::matrix() const {
    IntMatrix m(source_.ngens(), target_.ngens());
    for (int i = 0; i < source_.ngens(); ++i)
        for (int j = 0; j < target_.ngens(); ++j) m.at(i, j) = gen_images_[i][j];
    return m;
}

FpAbGroup cokernel(const GroupMap& f) {
    return FpAbGroup::from_relations(f.target().ngens(),
                                     f.target().relations().vstacked(f.matrix()),
                                     f.target().modulus());
}

bool map_is_surjective(const GroupMap& f) { return cokernel(f).is_trivial(); }

long rank_over_field(const IntMatrix& m, const Field& field) {
    if (field.rational) {
        // Fraction-free elimination; only zero/nonzero structure matters.
        IntMatrix a = m;
        long rank = 0;
        int row = 0;
        for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
            int piv = -1;
            for (int i = row; i < a.rows(); ++i)
                if (a.at(i, col) != 0) { piv = i; break; }
            if (piv < 0) continue;
            a.swap_rows(row, piv);
            for (int i = row + 1; i < a.rows(); ++i) {
                if (a.at(i, col) == 0) continue;
                Int g = gcd(a.at(i, col), a.at(row, col));
                Int ci = a.at(i, col) / g, cr = a.at(row, col) / g;
                for (int j = col; j < a.cols(); ++j)
                    a.at(i, j) = a.at(i, j) * cr - a.at(row, j) * ci;
            }
            ++row;
            ++rank;
        }
        return rank;
    }
    const Int& p = field.prime;
    IntMatrix a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            Int v = m.at(i, j) % p;
            if (v < 0) v += p;
            a.at(i, j) = v;
        }
    long rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) { piv = i; break; }
        if (piv < 0) continue;
        a.swap_rows(row, piv);
        // Inverse of the pivot mod p via Fermat would be overkill; eliminate
        // by cross-multiplication, everything reduced mod p.
        for (int i = row + 1; i < a.rows(); ++i) {
            if (a.at(i, col) == 0) continue;
            Int ci = a.at(i, col), cr = a.at(row, col);
            for (int j = col; j < a.cols(); ++j) {
                Int v = (a.at(i, j) * cr - a.at(row, j) * ci) % p;
                if (v < 0) v += p;
                a.at(i, j) = v;
            }
        }
        ++row;
        ++rank;
    }
    return rank;
}

long kernel_rank_over_field(const GroupMap& f, const Field& field) {
    // After tensoring with the field, source and target are the quotients of
    // F^n by the rowspaces of the effective relations; the kernel dimension
    // follows from the usual rank bookkeeping.
    IntMatrix ws = f.source().effective_relations();
    IntMatrix wt = f.target().effective_relations();
    long dim_source = f.source().ngens() - rank_over_field(ws, field);
    long rank_map = rank_over_field(f.matrix().vstacked(wt), field) - rank_over_field(wt, field);
    return dim_source - rank_map;
}

} // namespace fillobs

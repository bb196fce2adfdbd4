#include "fillobs/constructors.hpp"

#include <algorithm>
#include <map>

#include "fillobs/error.hpp"

namespace fillobs {

namespace {

// --- exterior algebra helpers: basis subsets as bitmasks ---

void subsets_of_size(int n, int k, int start, unsigned mask, std::vector<unsigned>& out) {
    if (k == 0) {
        out.push_back(mask);
        return;
    }
    for (int i = start; i <= n - k; ++i)
        subsets_of_size(n, k - 1, i + 1, mask | (1u << i), out);
}

std::string subset_name(unsigned mask) {
    if (mask == 0) return "1";
    std::string s = "x";
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) s += std::to_string(b + 1);
    return s;
}

int shuffle_inversions(unsigned m1, unsigned m2) {
    int inv = 0;
    for (int b = 0; b < 32; ++b)
        if (m2 & (1u << b)) inv += __builtin_popcount(m1 >> (b + 1));
    return inv;
}

} // namespace

GradedRing exterior_algebra(int n) {
    if (n < 1) fail(ErrorKind::ParamRange, "exterior algebra needs n >= 1");
    if (n > 16) fail(ErrorKind::ParamRange, "exterior algebra supported up to n = 16");

    RingBuilder b(n, Coefficients::Z(), "torus(" + std::to_string(n) + ")");

    std::vector<std::vector<unsigned>> basis(n + 1); // degree -> masks in index-lex order
    std::vector<int> index_of(static_cast<size_t>(1) << n, -1);
    for (int k = 0; k <= n; ++k) {
        subsets_of_size(n, k, 0, 0, basis[k]);
        std::vector<std::string> names;
        for (size_t i = 0; i < basis[k].size(); ++i) {
            index_of[basis[k][i]] = static_cast<int>(i);
            names.push_back(subset_name(basis[k][i]));
        }
        b.set_free_group(k, static_cast<int>(basis[k].size()), std::move(names));
    }
    for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) {
            MultTable& t = b.begin_table(p, q);
            for (unsigned m1 : basis[p])
                for (unsigned m2 : basis[q]) {
                    if (m1 & m2) {
                        t.append_entry({});
                        continue;
                    }
                    Int sign = shuffle_inversions(m1, m2) % 2 == 0 ? 1 : -1;
                    t.append_entry({{index_of[m1 | m2], sign}});
                }
        }
    return b.finish();
}

GradedRing truncated_polynomial(int gen_degree, int n) {
    if (gen_degree < 2 || gen_degree % 2 != 0)
        fail(ErrorKind::ParamRange,
             "truncated polynomial generator degree must be even and >= 2");
    if (n < 2) fail(ErrorKind::ParamRange, "truncation exponent must be >= 2");

    const int d = gen_degree * (n - 1);
    RingBuilder b(d, Coefficients::Z(),
                  "truncpoly(" + std::to_string(gen_degree) + "," + std::to_string(n) + ")");
    for (int k = 0; k <= d; ++k) {
        if (k % gen_degree == 0) {
            int power = k / gen_degree;
            std::string name = power == 0 ? "1" : power == 1 ? "x" : "x" + std::to_string(power);
            b.set_free_group(k, 1, {name});
        } else {
            b.set_free_group(k, 0, {});
        }
    }
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
            MultTable& t = b.begin_table(p, q);
            if (p % gen_degree == 0 && q % gen_degree == 0) t.append_entry({{0, 1}});
        }
    return b.finish();
}

GradedRing sphere_ring(int d) {
    if (d < 1) fail(ErrorKind::ParamRange, "sphere dimension must be >= 1");
    RingBuilder b(d, Coefficients::Z(), "sphere(" + std::to_string(d) + ")");
    b.set_free_group(0, 1, {"1"});
    for (int k = 1; k < d; ++k) b.set_free_group(k, 0, {});
    b.set_free_group(d, 1, {"s"});
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
            MultTable& t = b.begin_table(p, q);
            if (p == 0 && q == 0) t.append_entry({{0, 1}});
            else if ((p == 0 && q == d) || (p == d && q == 0)) t.append_entry({{0, 1}});
        }
    return b.finish();
}

GradedRing point_ring() {
    RingBuilder b(0, Coefficients::Z(), "point");
    b.set_free_group(0, 1, {"1"});
    b.begin_table(0, 0).append_entry({{0, 1}});
    return b.finish();
}

GradedRing rp_mod2_ring(int d) {
    if (d < 1) fail(ErrorKind::ParamRange, "rp_mod2 dimension must be >= 1");
    RingBuilder b(d, Coefficients::mod(2), "rp_mod2(" + std::to_string(d) + ")");
    for (int k = 0; k <= d; ++k) {
        std::string name = k == 0 ? "1" : k == 1 ? "a" : "a" + std::to_string(k);
        b.set_free_group(k, 1, {name});
    }
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) b.begin_table(p, q).append_entry({{0, 1}});
    return b.finish();
}

GradedRing lens_ring(const Int& a, int n) {
    if (a < 2) fail(ErrorKind::ParamRange, "lens order must be >= 2");
    if (n < 2) fail(ErrorKind::ParamRange, "lens complex dimension must be >= 2");
    const int d = 2 * n - 1;
    RingBuilder b(d, Coefficients::Z(), "lens(" + a.str() + "," + std::to_string(n) + ")");
    b.set_free_group(0, 1, {"1"});
    for (int k = 1; k < d; ++k) {
        if (k % 2 == 0) {
            int i = k / 2;
            IntMatrix rel(1, 1);
            rel.at(0, 0) = a;
            std::string name = i == 1 ? "y" : "y" + std::to_string(i);
            b.set_group(k, FpAbGroup::from_relations(1, rel), {name});
        } else {
            b.set_free_group(k, 0, {});
        }
    }
    b.set_free_group(d, 1, {"t"});
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
            MultTable& t = b.begin_table(p, q);
            bool pn = p == 0 || (p % 2 == 0 && p < d) || p == d;
            bool qn = q == 0 || (q % 2 == 0 && q < d) || q == d;
            if (!pn || !qn) continue;
            if (b.peek().group(p).ngens() == 0 || b.peek().group(q).ngens() == 0) continue;
            // y^i * y^j = y^{i+j}; products with the top class exceed the top degree
            t.append_entry({{0, 1}});
        }
    return b.finish();
}

// --- tensor products ---

namespace {

// Generator names are words over (letter, digits) pieces; a tensor product
// relabels the letters of each factor onto a fresh range so that e.g.
// product(cp(2), cp(2)) exposes degree-2 generators "a" and "b".
std::vector<char> distinct_letters(const GradedRing& r) {
    std::vector<char> ls;
    for (int k = 0; k <= r.top_degree(); ++k)
        for (const auto& name : r.gen_names(k))
            for (char c : name)
                if (c >= 'a' && c <= 'z' && std::find(ls.begin(), ls.end(), c) == ls.end())
                    ls.push_back(c);
    return ls;
}

std::string relabel(const std::string& name, const std::map<char, char>& m) {
    std::string out;
    for (char c : name) {
        auto it = m.find(c);
        out += it == m.end() ? c : it->second;
    }
    return out;
}

bool globally_torsion_free(const GradedRing& r) {
    for (int k = 0; k <= r.top_degree(); ++k)
        if (!r.group(k).torsion().empty()) return false;
    return true;
}

struct Block {
    int p, q;    // factor degrees, p + q = ambient degree
    int offset;  // first global generator index of the block
    int n1, n2;  // factor generator counts
};

} // namespace

GradedRing tensor_product(const GradedRing& r1, const GradedRing& r2) {
    if (r1.coeffs() != r2.coeffs())
        fail(ErrorKind::Coefficient, "tensor factors must have the same coefficients");
    if (!r1.coeffs().is_field() && !globally_torsion_free(r1) && !globally_torsion_free(r2))
        fail(ErrorKind::TorsionKunneth,
             "both factors carry torsion over a non-field coefficient ring");

    const int d1 = r1.top_degree(), d2 = r2.top_degree(), d = d1 + d2;

    // fresh letters: factor 1 first, factor 2 continues after it
    std::map<char, char> m1, m2;
    {
        char next = 'a';
        for (char c : distinct_letters(r1)) {
            if (next > 'z') fail(ErrorKind::Precondition, "too many generator letter families");
            m1[c] = next++;
        }
        for (char c : distinct_letters(r2)) {
            if (next > 'z') fail(ErrorKind::Precondition, "too many generator letter families");
            m2[c] = next++;
        }
    }

    std::vector<std::vector<Block>> blocks(d + 1);
    for (int k = 0; k <= d; ++k) {
        int off = 0;
        for (int p = std::max(0, k - d2); p <= std::min(d1, k); ++p) {
            int q = k - p;
            int n1 = r1.ngens(p), n2 = r2.ngens(q);
            if (n1 == 0 || n2 == 0) continue;
            blocks[k].push_back({p, q, off, n1, n2});
            off += n1 * n2;
        }
    }
    auto locate = [&](int k, int g) -> std::tuple<const Block&, int, int> {
        for (const Block& bl : blocks[k])
            if (g < bl.offset + bl.n1 * bl.n2) {
                int rel = g - bl.offset;
                return {bl, rel / bl.n2, rel % bl.n2};
            }
        fail(ErrorKind::Dimension, "generator index out of range in tensor product");
    };
    auto block_offset = [&](int k, int p) -> int {
        for (const Block& bl : blocks[k])
            if (bl.p == p) return bl.offset;
        return -1;
    };

    RingBuilder b(d, r1.coeffs(),
                  "product(" + r1.label() + "," + r2.label() + ")");
    for (int k = 0; k <= d; ++k) {
        int total = 0;
        std::vector<std::vector<Int>> rel_rows;
        std::vector<std::string> names;
        for (const Block& bl : blocks[k]) total += bl.n1 * bl.n2;
        for (const Block& bl : blocks[k]) {
            const IntMatrix& rel1 = r1.group(bl.p).relations();
            const IntMatrix& rel2 = r2.group(bl.q).relations();
            for (int row = 0; row < rel1.rows(); ++row)
                for (int j2 = 0; j2 < bl.n2; ++j2) {
                    std::vector<Int> r(total);
                    for (int i1 = 0; i1 < bl.n1; ++i1) r[bl.offset + i1 * bl.n2 + j2] = rel1.at(row, i1);
                    rel_rows.push_back(std::move(r));
                }
            for (int i1 = 0; i1 < bl.n1; ++i1)
                for (int row = 0; row < rel2.rows(); ++row) {
                    std::vector<Int> r(total);
                    for (int j2 = 0; j2 < bl.n2; ++j2) r[bl.offset + i1 * bl.n2 + j2] = rel2.at(row, j2);
                    rel_rows.push_back(std::move(r));
                }
            const auto& names1 = r1.gen_names(bl.p);
            const auto& names2 = r2.gen_names(bl.q);
            for (int i1 = 0; i1 < bl.n1; ++i1)
                for (int j2 = 0; j2 < bl.n2; ++j2) {
                    std::string left = relabel(names1[i1], m1);
                    std::string right = relabel(names2[j2], m2);
                    if (left == "1") names.push_back(right);
                    else if (right == "1") names.push_back(left);
                    else names.push_back(left + right);
                }
        }
        IntMatrix rel = rel_rows.empty() ? IntMatrix(0, total)
                                         : IntMatrix::from_rows(std::move(rel_rows));
        b.set_group(k, FpAbGroup::from_relations(total, std::move(rel),
                                                 r1.coeffs().group_modulus()),
                    std::move(names));
    }

    for (int k = 0; k <= d; ++k)
        for (int kk = 0; k + kk <= d; ++kk) {
            MultTable& t = b.begin_table(k, kk);
            int nk = b.peek().ngens(k), nkk = b.peek().ngens(kk);
            for (int gi = 0; gi < nk; ++gi) {
                auto [bl1, i1, j1] = locate(k, gi);
                for (int gj = 0; gj < nkk; ++gj) {
                    auto [bl2, i2, j2] = locate(kk, gj);
                    if (bl1.p + bl2.p > d1 || bl1.q + bl2.q > d2) {
                        t.append_entry({});
                        continue;
                    }
                    auto s1 = r1.gen_product(bl1.p, i1, bl2.p, i2);
                    auto s2 = r2.gen_product(bl1.q, j1, bl2.q, j2);
                    if (s1.empty() || s2.empty()) {
                        t.append_entry({});
                        continue;
                    }
                    int off = block_offset(k + kk, bl1.p + bl2.p);
                    if (off < 0) {
                        t.append_entry({});
                        continue;
                    }
                    int n2out = r2.ngens(bl1.q + bl2.q);
                    // Koszul sign: (x (x) y)(x' (x) y') = (-1)^{|y||x'|} xx' (x) yy'
                    bool negate = (static_cast<long long>(bl1.q) * bl2.p) % 2 != 0;
                    SparseElem entry;
                    for (const auto& t1 : s1)
                        for (const auto& t2 : s2) {
                            Int c = t1.coef * t2.coef;
                            if (negate) c = -c;
                            entry.push_back({off + t1.gen * n2out + t2.gen, std::move(c)});
                        }
                    t.append_entry(sparse_normalized(std::move(entry),
                                                     r1.coeffs().group_modulus()));
                }
            }
        }
    return b.finish();
}

GradedRing rationalize(const GradedRing& r) {
    if (r.coeffs().kind != Coefficients::Kind::Integers)
        fail(ErrorKind::Coefficient, "rationalize expects a ring over Z");

    const int d = r.top_degree();
    bool all_free = true;
    for (int k = 0; k <= d; ++k)
        if (r.group(k).relations().rows() != 0) all_free = false;

    RingBuilder b(d, Coefficients::Q(), "rationalize(" + r.label() + ")");
    if (all_free) {
        // torsion-free everywhere: same generators, same tables
        for (int k = 0; k <= d; ++k)
            b.set_free_group(k, r.ngens(k), r.gen_names(k));
        for (int p = 0; p <= d; ++p)
            for (int q = 0; p + q <= d; ++q) {
                MultTable& t = b.begin_table(p, q);
                for (int i = 0; i < r.ngens(p); ++i)
                    for (int j = 0; j < r.ngens(q); ++j) {
                        auto s = r.gen_product(p, i, q, j);
                        t.append_entry(SparseElem(s.begin(), s.end()));
                    }
            }
        return b.finish();
    }

    std::vector<std::vector<GroupElem>> lifts(d + 1);
    for (int k = 0; k <= d; ++k) {
        const FpAbGroup& g = r.group(k);
        long f = g.free_rank();
        std::vector<std::string> names;
        for (long i = 0; i < f; ++i) {
            lifts[k].push_back(g.free_lift(static_cast<int>(i)));
            if (g.relations().rows() == 0)
                names.push_back(r.gen_names(k)[static_cast<size_t>(i)]);
            else
                names.push_back("e" + std::to_string(i + 1));
        }
        b.set_free_group(k, static_cast<int>(f), std::move(names));
    }
    for (int p = 0; p <= d; ++p)
        for (int q = 0; p + q <= d; ++q) {
            MultTable& t = b.begin_table(p, q);
            for (const GroupElem& li : lifts[p])
                for (const GroupElem& lj : lifts[q]) {
                    RingClass prod = r.multiply({p, li}, {q, lj});
                    std::vector<Int> proj = r.group(p + q).free_projection(prod.elem);
                    SparseElem entry;
                    for (size_t g = 0; g < proj.size(); ++g)
                        if (proj[g] != 0) entry.push_back({static_cast<int>(g), proj[g]});
                    t.append_entry(entry);
                }
        }
    return b.finish();
}

} // namespace fillobs

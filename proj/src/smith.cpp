#include "fillobs/smith.hpp"

namespace fillobs {

namespace {

// Smallest nonzero |entry| of the trailing submatrix, ties broken by
// lowest (row, col). Deterministic pivoting keeps every downstream
// report reproducible.
bool find_pivot(const IntMatrix& a, int t, int& pr, int& pc) {
    bool found = false;
    Int best = 0;
    for (int i = t; i < a.rows(); ++i)
        for (int j = t; j < a.cols(); ++j) {
            const Int& e = a.at(i, j);
            if (e == 0) continue;
            Int mag = abs(e);
            if (!found || mag < best) {
                found = true;
                best = mag;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool cross_cleared(const IntMatrix& a, int t) {
    for (int i = t + 1; i < a.rows(); ++i)
        if (a.at(i, t) != 0) return false;
    for (int j = t + 1; j < a.cols(); ++j)
        if (a.at(t, j) != 0) return false;
    return true;
}

} // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
    const int r = input.rows(), c = input.cols();
    const int n = std::min(r, c);

    SmithForm out;
    out.u = IntMatrix::identity(r);
    out.v = IntMatrix::identity(c);
    out.vinv = IntMatrix::identity(c);
    IntMatrix a = input;

    for (int t = 0; t < n; ++t) {
        for (;;) {
            int pr = t, pc = t;
            if (!find_pivot(a, t, pr, pc)) break;
            if (pr != t) {
                a.swap_rows(t, pr);
                out.u.swap_rows(t, pr);
            }
            if (pc != t) {
                a.swap_cols(t, pc);
                out.v.swap_cols(t, pc);
                out.vinv.swap_rows(t, pc);
            }
            // Clear the pivot cross by remainder reduction.
            for (int i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                a.addmul_row(i, t, -q);
                out.u.addmul_row(i, t, -q);
            }
            for (int j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                a.addmul_col(j, t, -q);
                out.v.addmul_col(j, t, -q);
                out.vinv.addmul_row(t, j, q);
            }
            if (!cross_cleared(a, t)) continue;
            // Divisor chain: the pivot must divide the rest of the block.
            bool fixup = false;
            for (int i = t + 1; i < r && !fixup; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.addmul_row(t, i, 1);
                        out.u.addmul_row(t, i, 1);
                        fixup = true;
                        break;
                    }
            if (!fixup) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            out.u.negate_row(t);
        }
    }

    out.diag.resize(n);
    for (int t = 0; t < n; ++t) out.diag[t] = a.at(t, t);
    return out;
}

} // namespace fillobs

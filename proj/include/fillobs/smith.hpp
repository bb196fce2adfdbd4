#pragma once
#include <vector>

#include "fillobs/int_matrix.hpp"

namespace fillobs {

// U * input * V = diag(diag), with U and V unimodular and
// diag[i] >= 0, diag[i] | diag[i+1] (zeros only as a tail).
// vinv is the exact inverse of V; it is what turns coordinate
// questions about the row lattice into divisibility questions.
struct SmithForm {
    std::vector<Int> diag; // length min(rows, cols)
    IntMatrix u, v, vinv;
};

SmithForm smith_normal_form(const IntMatrix& input);

} // namespace fillobs

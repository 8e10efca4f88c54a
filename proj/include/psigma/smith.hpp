#pragma once

#include "psigma/integer_matrix.hpp"

#include <vector>

namespace psigma {

/// Invariant factors d_1 | d_2 | ... | d_r of a matrix (all positive; r is the rank).
struct SNFResult {
    std::vector<Integer> invariant_factors;

    std::size_t rank() const { return invariant_factors.size(); }
    /// The invariant factors greater than one.
    std::vector<Integer> torsion() const;
};

/// Sparse Smith normal form. Unit pivots are eliminated in place with Markowitz-style
/// ordering; whatever survives is reduced densely with smallest-magnitude pivoting.
/// Machine-word arithmetic is attempted first and redone in arbitrary precision on overflow.
SNFResult smith_normal_form(const IntegerMatrix& m);

/// Dense Smith normal form with unimodular transforms: U * M * V = D.
struct SmithDecomposition {
    DenseMatrix U;
    DenseMatrix D;
    DenseMatrix V;
    std::vector<Integer> invariant_factors;
};

SmithDecomposition smith_decomposition(const IntegerMatrix& m);

/// Dense reduction of `a` in place to Smith form; optional transforms accumulate the
/// row (u) and column (v) operations. Returns the invariant factors.
std::vector<Integer> smith_dense(DenseMatrix& a, DenseMatrix* u = nullptr, DenseMatrix* v = nullptr);

} // namespace psigma

#pragma once

#include "holoop/types.hpp"

namespace holoop::matcore {

/// Result of a Hermitian eigendecomposition: M = V diag(w) V^dagger,
/// eigenvalues ascending, eigenvector columns phase-fixed so the first
/// component above threshold is real positive.
struct EigResult {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

double frobenius(const ComplexMatrix& m);

bool is_hermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_antihermitian(const ComplexMatrix& m, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& m, double tol = 1e-10);

/// Cyclic Jacobi on a complex Hermitian matrix.
/// Throws NotHermitian if the symmetry check fails, NoConvergence if the
/// sweep budget is exhausted.
EigResult eig_hermitian(const ComplexMatrix& m, double hermitian_tol = 1e-12);

/// Matrix exponential by scaling-and-squaring of a truncated series.
ComplexMatrix expm(const ComplexMatrix& m);

/// Exponential of an anti-Hermitian matrix via eigendecomposition of (-i)M.
/// Cross-check path for expm; result is exactly unitary up to rounding.
ComplexMatrix expm_antihermitian(const ComplexMatrix& m);

/// Principal logarithm of a unitary: returns anti-Hermitian G with
/// e^G = U and all eigenphases in (-pi, pi] (phase pi maps to +pi).
ComplexMatrix logm_unitary(const ComplexMatrix& u, double unitary_tol = 1e-10);

/// Nearest unitary in Frobenius norm (polar factor).
/// Throws Singular if any singular value falls below sv_floor.
ComplexMatrix unitarize(const ComplexMatrix& m, double sv_floor = 1e-8);

}  // namespace holoop::matcore

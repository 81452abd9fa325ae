#pragma once

#include <random>

#include "holoop/matcore.hpp"
#include "holoop/types.hpp"

namespace holoop::testing {

inline ComplexMatrix random_matrix(Index n, unsigned seed) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexMatrix m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

inline ComplexMatrix random_hermitian(Index n, unsigned seed) {
  ComplexMatrix m = random_matrix(n, seed);
  return (m + m.adjoint()) / 2.0;
}

inline ComplexMatrix random_antihermitian(Index n, unsigned seed) {
  ComplexMatrix m = random_matrix(n, seed);
  return (m - m.adjoint()) / 2.0;
}

inline ComplexMatrix random_unitary(Index n, unsigned seed) {
  return matcore::unitarize(random_matrix(n, seed));
}

/// Plain truncated power series with its own halving schedule; independent
/// of matcore::expm's term-count and normalization choices.
inline ComplexMatrix expm_series_oracle(const ComplexMatrix& m, int terms = 60) {
  int halvings = 0;
  ComplexMatrix a = m;
  while (a.norm() > 0.25 && halvings < 60) {
    a /= 2.0;
    ++halvings;
  }
  ComplexMatrix sum = ComplexMatrix::Identity(m.rows(), m.cols());
  ComplexMatrix term = ComplexMatrix::Identity(m.rows(), m.cols());
  for (int k = 1; k <= terms; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < halvings; ++k) sum = sum * sum;
  return sum;
}

inline ComplexMatrix pauli(char which) {
  ComplexMatrix m(2, 2);
  switch (which) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'z': m << 1, 0, 0, -1; break;
    default: m.setIdentity(); break;
  }
  return m;
}

}  // namespace holoop::testing

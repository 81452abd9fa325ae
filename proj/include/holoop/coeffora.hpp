#pragma once

#include <vector>

#include "holoop/gatelog.hpp"
#include "holoop/types.hpp"

namespace holoop::coeffora {

/// Power-series coefficients of the loop exponential's block pattern:
/// X^n = [[A^n - b_n w w^dag, c_n w], [-c_n^* w^dag, d_n]].
struct CoeffTriple {
  std::vector<Complex> b;
  std::vector<Complex> c;
  std::vector<Complex> d;
  double lambda = 0.0;
  double alpha = 0.0;
  double s = 0.0;
};

/// Generating-function values at a given t.
struct GenFuncs {
  Complex B;
  Complex C;
  Complex D;
};

/// Roots and constants of the C(t) second-order ODE, general s.
struct ClosedFormParams {
  Complex q1;
  Complex q2;
  Complex gamma1;
  Complex gamma2;
  double nu = 0.0;  // nu = sqrt((lambda-s)^2 + 4 alpha^2) / 2
};

ClosedFormParams closed_form_params(double lambda, double alpha, double s);

/// Runs the three coupled recursions up to index N inclusive.
CoeffTriple recursion_coeffs(double lambda, double alpha, double s, int N);

/// B, C, D at time t. For alpha = 0 the closed form for B is singular and
/// the defining integral is evaluated numerically instead.
GenFuncs gen_funcs(double lambda, double alpha, double s, double t);

/// e^{tX} for the minimal-variant loop of (gate, j, n), assembled from the
/// closed-form generating functions (s = -lambda).
ComplexMatrix exp_via_closed_form(const gatelog::GateSpec& gate, Index j, int n,
                                  double t);

/// Independent series route: scaled-and-squared truncated sum of
/// t^m X^m / m! using the recursion coefficients for the blocks.
ComplexMatrix exp_via_series(const gatelog::GateSpec& gate, Index j, int n,
                             double t, int n_terms = 40);

/// Returns the closed-form assembly; the series route exists for
/// cross-checking it.
ComplexMatrix exp_via_recursion(const gatelog::GateSpec& gate, Index j, int n,
                                double t, int n_terms = 40);

}  // namespace holoop::coeffora

#include "holoop/coeffora.hpp"

#include <cmath>
#include <functional>

#include "holoop/matcore.hpp"

namespace holoop::coeffora {

namespace {

const Complex kImag(0.0, 1.0);

double alpha_for(double lambda, int n) {
  const double a2 = (n * kPi) * (n * kPi) - lambda * lambda;
  if (a2 < -1e-9)
    throw WindingTooSmallError("(n*pi)^2 < lambda^2: loop cannot close");
  return std::sqrt(std::max(a2, 0.0));
}

Complex simpson(const std::function<Complex(double)>& f, double a, double b,
                int depth, Complex whole, Complex fa, Complex fm, Complex fb,
                double tol) {
  const double m = (a + b) / 2.0;
  const double lm = (a + m) / 2.0, rm = (m + b) / 2.0;
  const Complex flm = f(lm), frm = f(rm);
  const Complex left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const Complex right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, depth - 1, left, fa, flm, fm, tol / 2.0) +
         simpson(f, m, b, depth - 1, right, fm, frm, fb, tol / 2.0);
}

Complex integrate(const std::function<Complex(double)>& f, double a, double b,
                  double tol = 1e-10) {
  if (a == b) return Complex(0.0, 0.0);
  const Complex fa = f(a), fb = f(b), fm = f((a + b) / 2.0);
  const Complex whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, 24, whole, fa, fm, fb, tol);
}

}  // namespace

ClosedFormParams closed_form_params(double lambda, double alpha, double s) {
  ClosedFormParams p;
  const double mu = (lambda + s) / 2.0;
  p.nu = 0.5 * std::sqrt((lambda - s) * (lambda - s) + 4.0 * alpha * alpha);
  p.q1 = kImag * (mu + p.nu);
  p.q2 = kImag * (mu - p.nu);
  if (p.nu > 0.0) {
    p.gamma1 = 1.0 / (p.q1 - p.q2);
    p.gamma2 = -p.gamma1;
  }
  return p;
}

CoeffTriple recursion_coeffs(double lambda, double alpha, double s, int N) {
  if (N < 2) throw Error("recursion_coeffs: N must be >= 2");
  CoeffTriple tr;
  tr.lambda = lambda;
  tr.alpha = alpha;
  tr.s = s;
  tr.b.resize(static_cast<size_t>(N) + 1);
  tr.c.resize(static_cast<size_t>(N) + 1);
  tr.d.resize(static_cast<size_t>(N) + 1);
  tr.b[0] = 0.0;
  tr.c[0] = 0.0;
  tr.d[0] = 1.0;
  const Complex il = kImag * lambda;
  const Complex is = kImag * s;
  const double a2 = alpha * alpha;
  for (int n = 0; n < N; ++n) {
    const size_t i = static_cast<size_t>(n);
    tr.b[i + 1] = il * tr.b[i] + std::conj(tr.c[i]);
    tr.c[i + 1] = il * tr.c[i] + tr.d[i];
    tr.d[i + 1] = is * tr.d[i] - a2 * tr.c[i];
  }
  return tr;
}

GenFuncs gen_funcs(double lambda, double alpha, double s, double t) {
  const double mu = (lambda + s) / 2.0;
  const double nu = 0.5 * std::sqrt((lambda - s) * (lambda - s) + 4.0 * alpha * alpha);
  const Complex envelope = std::exp(kImag * (mu * t));

  GenFuncs g;
  Complex c_prime;
  if (nu > 1e-12) {
    const double cn = std::cos(nu * t);
    const double sn = std::sin(nu * t);
    g.C = envelope * (sn / nu);
    c_prime = envelope * (kImag * mu * (sn / nu) + cn);
  } else {
    g.C = envelope * t;
    c_prime = envelope * (1.0 + kImag * (mu * t));
  }
  g.D = c_prime - kImag * lambda * g.C;

  const bool simplified = std::abs(s + lambda) < 1e-12;
  if (simplified && alpha > 1e-9) {
    // nu^2 - lambda^2 = alpha^2 in the s = -lambda case.
    g.B = (std::exp(kImag * (lambda * t)) - std::cos(nu * t) -
           kImag * (lambda / nu) * std::sin(nu * t)) /
          (alpha * alpha);
  } else {
    // Removable singularity at alpha = 0 (and general s): fall back to the
    // defining integral.
    g.B = integrate(
        [&](double tau) {
          const double nv = nu;
          Complex c_tau = (nv > 1e-12)
                              ? std::exp(kImag * (mu * tau)) * (std::sin(nv * tau) / nv)
                              : std::exp(kImag * (mu * tau)) * tau;
          return std::exp(kImag * (lambda * (t - tau))) * std::conj(c_tau);
        },
        0.0, t);
  }
  return g;
}

namespace {

ComplexMatrix exp_tA(const gatelog::GateSpec& gate, double t) {
  ComplexVector ph(gate.dim());
  for (Index m = 0; m < gate.dim(); ++m)
    ph(m) = std::exp(kImag * (gate.Lambda(m) * t));
  return gate.Omega * ph.asDiagonal() * gate.Omega.adjoint();
}

}  // namespace

ComplexMatrix exp_via_closed_form(const gatelog::GateSpec& gate, Index j, int n,
                                  double t) {
  const Index k = gate.dim();
  const double lambda = gate.Lambda(j);
  const double alpha = alpha_for(lambda, n);
  const GenFuncs g = gen_funcs(lambda, alpha, -lambda, t);
  const ComplexVector w = alpha * gate.Omega.col(j);

  ComplexMatrix e = ComplexMatrix::Zero(k + 1, k + 1);
  e.topLeftCorner(k, k) = exp_tA(gate, t) - g.B * (w * w.adjoint());
  e.block(0, k, k, 1) = g.C * w;
  e.block(k, 0, 1, k) = -std::conj(g.C) * w.adjoint();
  e(k, k) = g.D;
  return e;
}

ComplexMatrix exp_via_series(const gatelog::GateSpec& gate, Index j, int n,
                             double t, int n_terms) {
  const Index k = gate.dim();
  const double lambda = gate.Lambda(j);
  const double alpha = alpha_for(lambda, n);
  const double s = -lambda;
  const ComplexVector w = alpha * gate.Omega.col(j);
  const ComplexMatrix wwdag = w * w.adjoint();

  ComplexMatrix x = ComplexMatrix::Zero(k + 1, k + 1);
  x.topLeftCorner(k, k) = gate.A;
  x.block(0, k, k, 1) = w;
  x.block(k, 0, 1, k) = -w.adjoint();
  x(k, k) = kImag * s;

  // Scale so the series argument stays small, then square back up.
  int squarings = 0;
  double arg_norm = std::abs(t) * x.norm();
  while (arg_norm > 0.8 && squarings < 40) {
    arg_norm /= 2.0;
    ++squarings;
  }
  const double ts = t / std::pow(2.0, squarings);

  const CoeffTriple tr = recursion_coeffs(lambda, alpha, s, n_terms);
  ComplexMatrix a_pow = ComplexMatrix::Identity(k, k);
  ComplexMatrix sum = ComplexMatrix::Zero(k + 1, k + 1);
  double factorial = 1.0;
  double tpow = 1.0;
  for (int m = 0; m <= n_terms; ++m) {
    if (m > 0) {
      factorial *= m;
      tpow *= ts;
      a_pow = (a_pow * gate.A).eval();
    }
    const size_t i = static_cast<size_t>(m);
    const double coef = tpow / factorial;
    sum.topLeftCorner(k, k) += coef * (a_pow - tr.b[i] * wwdag);
    sum.block(0, k, k, 1) += (coef * tr.c[i]) * w;
    sum.block(k, 0, 1, k) += (-coef * std::conj(tr.c[i])) * w.adjoint();
    sum(k, k) += coef * tr.d[i];
  }
  for (int q = 0; q < squarings; ++q) sum = sum * sum;
  return sum;
}

ComplexMatrix exp_via_recursion(const gatelog::GateSpec& gate, Index j, int n,
                                double t, int n_terms) {
  (void)n_terms;
  return exp_via_closed_form(gate, j, n, t);
}

}  // namespace holoop::coeffora

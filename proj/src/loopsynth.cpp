#include "holoop/loopsynth.hpp"

#include <cmath>

#include "holoop/matcore.hpp"

namespace holoop::loopsynth {

namespace {

const Complex kImag(0.0, 1.0);

constexpr double kAlphaCollapseTol = 1e-9;

// alpha_k^2 = (n_k pi)^2 - lambda_k^2 from the closure condition.
double alpha_for(double lambda, int n) {
  if (n < 1) throw WindingTooSmallError("winding must be >= 1");
  const double a2 = (n * kPi) * (n * kPi) - lambda * lambda;
  if (a2 < -1e-9)
    throw WindingTooSmallError("(n*pi)^2 < lambda^2: loop cannot close");
  return std::sqrt(std::max(a2, 0.0));
}

}  // namespace

ComplexMatrix LoopPlan::projector() const {
  ComplexMatrix p = ComplexMatrix::Zero(dim(), dim());
  p.topLeftCorner(k, k) = ComplexMatrix::Identity(k, k);
  return p;
}

bool LoopPlan::all_windings_one() const {
  for (int n : windings)
    if (n != 1) return false;
  return true;
}

LoopPlan plan_minimal(const gatelog::GateSpec& gate, Index j, int n,
                      AlphaPolicy policy) {
  const Index k = gate.dim();
  if (j < 0 || j >= k) throw Error("plan_minimal: eigenvector index out of range");

  LoopPlan plan;
  plan.variant = Variant::minimal;
  plan.gate = gate;
  plan.k = k;
  plan.eigvec_index = j;

  const double lambda = gate.Lambda(j);
  double alpha = alpha_for(lambda, n);
  if (alpha < kAlphaCollapseTol && policy == AlphaPolicy::bump_winding) {
    ++n;
    alpha = alpha_for(lambda, n);
  }
  if (alpha < kAlphaCollapseTol) {
    alpha = 0.0;
    plan.collapsed.push_back(0);
  }
  plan.windings = {n};
  plan.alphas = RealVector::Constant(1, alpha);
  plan.nus = RealVector::Constant(1, n * kPi);
  plan.s_param = -lambda;

  const ComplexVector w = alpha * gate.Omega.col(j);
  plan.X = ComplexMatrix::Zero(k + 1, k + 1);
  plan.X.topLeftCorner(k, k) = gate.A;
  plan.X.block(0, k, k, 1) = w;
  plan.X.block(k, 0, 1, k) = -w.adjoint();
  plan.X(k, k) = kImag * plan.s_param;
  return plan;
}

LoopPlan plan_doubled(const gatelog::GateSpec& gate, std::vector<int> windings,
                      AlphaPolicy policy) {
  const Index k = gate.dim();
  if (windings.empty()) windings.assign(static_cast<size_t>(k), 1);
  if (static_cast<Index>(windings.size()) != k)
    throw Error("plan_doubled: need one winding per eigenvector");

  LoopPlan plan;
  plan.variant = Variant::doubled;
  plan.gate = gate;
  plan.k = k;
  plan.alphas.resize(k);
  plan.nus.resize(k);
  for (Index m = 0; m < k; ++m) {
    const double lambda = gate.Lambda(m);
    int n = windings[static_cast<size_t>(m)];
    double alpha = alpha_for(lambda, n);
    if (alpha < kAlphaCollapseTol && policy == AlphaPolicy::bump_winding) {
      ++n;
      alpha = alpha_for(lambda, n);
    }
    if (alpha < kAlphaCollapseTol) {
      alpha = 0.0;
      plan.collapsed.push_back(m);
    }
    windings[static_cast<size_t>(m)] = n;
    plan.alphas(m) = alpha;
    plan.nus(m) = n * kPi;
  }
  plan.windings = std::move(windings);

  const ComplexMatrix omega_d = gate.Omega * plan.alphas.cast<Complex>().asDiagonal();
  plan.X = ComplexMatrix::Zero(2 * k, 2 * k);
  plan.X.topLeftCorner(k, k) = gate.A;
  plan.X.topRightCorner(k, k) = omega_d;
  plan.X.bottomLeftCorner(k, k) = -omega_d.adjoint();
  plan.X.bottomRightCorner(k, k) =
      (-kImag * gate.Lambda.cast<Complex>()).asDiagonal();
  return plan;
}

namespace {

ComplexMatrix exp_tA(const gatelog::GateSpec& gate, double t) {
  ComplexVector ph(gate.dim());
  for (Index m = 0; m < gate.dim(); ++m)
    ph(m) = std::exp(kImag * (gate.Lambda(m) * t));
  return gate.Omega * ph.asDiagonal() * gate.Omega.adjoint();
}

ComplexMatrix exp_minimal(const LoopPlan& plan, double t) {
  const Index k = plan.k;
  const double lambda = plan.gate.Lambda(plan.eigvec_index);
  const double alpha = plan.alphas(0);
  const double nu = plan.nus(0);

  const double cnu = std::cos(nu * t);
  const double snu = std::sin(nu * t);
  const Complex C(snu / nu, 0.0);
  const Complex D = cnu - kImag * (lambda / nu) * snu;

  ComplexMatrix e = ComplexMatrix::Zero(k + 1, k + 1);
  e.topLeftCorner(k, k) = exp_tA(plan.gate, t);
  if (alpha > 0.0) {
    const Complex B =
        (std::exp(kImag * (lambda * t)) - cnu - kImag * (lambda / nu) * snu) /
        (alpha * alpha);
    const ComplexVector w = alpha * plan.gate.Omega.col(plan.eigvec_index);
    e.topLeftCorner(k, k) -= B * (w * w.adjoint());
    e.block(0, k, k, 1) = C * w;
    e.block(k, 0, 1, k) = -std::conj(C) * w.adjoint();
  }
  e(k, k) = D;
  return e;
}

ComplexMatrix exp_doubled_general(const LoopPlan& plan, double t) {
  const Index k = plan.k;
  ComplexVector tl(k), tr(k), br(k);
  for (Index m = 0; m < k; ++m) {
    const double nu = plan.nus(m);
    const double lambda = plan.gate.Lambda(m);
    const double c = std::cos(nu * t);
    const double sc = std::sin(nu * t) / nu;
    tl(m) = c + kImag * (lambda * sc);
    tr(m) = plan.alphas(m) * sc;
    br(m) = c - kImag * (lambda * sc);
  }
  const ComplexMatrix& omega = plan.gate.Omega;
  ComplexMatrix e(2 * k, 2 * k);
  e.topLeftCorner(k, k) = omega * tl.asDiagonal() * omega.adjoint();
  e.topRightCorner(k, k) = omega * tr.asDiagonal();
  e.bottomLeftCorner(k, k) = -(omega * tr.asDiagonal()).adjoint();
  e.bottomRightCorner(k, k) = ComplexMatrix(br.asDiagonal());
  return e;
}

// All-windings-one special case: blocks built from A itself.
ComplexMatrix exp_doubled_pi(const LoopPlan& plan, double t) {
  const Index k = plan.k;
  const double c = std::cos(kPi * t);
  const double s = std::sin(kPi * t);
  const ComplexMatrix omega_d =
      plan.gate.Omega * plan.alphas.cast<Complex>().asDiagonal();
  ComplexMatrix e(2 * k, 2 * k);
  e.topLeftCorner(k, k) =
      c * ComplexMatrix::Identity(k, k) + (s / kPi) * plan.gate.A;
  e.topRightCorner(k, k) = (s / kPi) * omega_d;
  e.bottomLeftCorner(k, k) = -(s / kPi) * omega_d.adjoint();
  e.bottomRightCorner(k, k) =
      (c * ComplexVector::Ones(k) -
       kImag * (s / kPi) * plan.gate.Lambda.cast<Complex>())
          .asDiagonal();
  return e;
}

}  // namespace

ComplexMatrix exp_tX(const LoopPlan& plan, double t) {
  if (plan.variant == Variant::minimal) return exp_minimal(plan, t);
  if (plan.all_windings_one()) return exp_doubled_pi(plan, t);
  return exp_doubled_general(plan, t);
}

ComplexMatrix hamiltonian_at(const LoopPlan& plan, double t) {
  const ComplexMatrix f = exp_tX(plan, t).leftCols(plan.k);
  return f * f.adjoint();
}

double closure_residual(const LoopPlan& plan) {
  const ComplexMatrix e = exp_tX(plan, 1.0);
  const ComplexMatrix p0 = plan.projector();
  return (e * p0 * e.adjoint() - p0).norm();
}

}  // namespace holoop::loopsynth

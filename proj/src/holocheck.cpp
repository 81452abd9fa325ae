#include "holoop/holocheck.hpp"

#include <cmath>

#include "holoop/matcore.hpp"

namespace holoop::holocheck {

ComplexMatrix frame_at(const loopsynth::LoopPlan& plan, double t) {
  return loopsynth::exp_tX(plan, t).leftCols(plan.k);
}

ComplexMatrix connection_of(const loopsynth::LoopPlan& plan) {
  return plan.X.topLeftCorner(plan.k, plan.k);
}

ComplexMatrix phase_align(const ComplexMatrix& w, const ComplexMatrix& target) {
  const Complex tr = (target.adjoint() * w).trace();
  const double phi = std::atan2(tr.imag(), tr.real());
  return std::exp(Complex(0.0, -phi)) * w;
}

double phase_aligned_distance(const ComplexMatrix& w, const ComplexMatrix& target) {
  return (phase_align(w, target) - target).norm();
}

namespace {

ComplexMatrix raw_wilson_product(const std::function<ComplexMatrix(double)>& frame,
                                 Index n_steps) {
  if (n_steps < 16) throw Error("wilson_product: need at least 16 steps");
  const Index k = frame(0.0).cols();
  ComplexMatrix w = ComplexMatrix::Identity(k, k);
  ComplexMatrix prev = frame(0.0);
  for (Index m = 0; m < n_steps; ++m) {
    const ComplexMatrix next =
        frame(static_cast<double>(m + 1) / static_cast<double>(n_steps));
    // Later-t factors multiply on the left.
    w = (next.adjoint() * prev) * w;
    prev = next;
  }
  return w;
}

}  // namespace

ComplexMatrix wilson_product(const std::function<ComplexMatrix(double)>& frame,
                             Index n_steps) {
  return matcore::unitarize(raw_wilson_product(frame, n_steps));
}

HolonomyReport wilson_holonomy(const loopsynth::LoopPlan& plan, Index n_steps) {
  HolonomyReport rep;
  rep.closure_residual = loopsynth::closure_residual(plan);
  rep.connection = connection_of(plan);
  rep.wilson_steps = n_steps;
  const ComplexMatrix raw =
      raw_wilson_product([&](double t) { return frame_at(plan, t); }, n_steps);
  rep.wilson_holonomy = matcore::unitarize(raw);
  const ComplexMatrix target = matcore::expm((-rep.connection).eval());
  // The O(1/N) discretization error of the overlap product is a Hermitian
  // contraction that commutes with the holonomy, so the polar cleanup removes
  // it entirely (exactly, for eigenphases 0 and -pi). The convergence
  // diagnostic therefore measures the product itself, not its unitary part.
  rep.target_distance = phase_aligned_distance(raw, target);

  double iso = 0.0;
  for (int g = 0; g <= 10; ++g) {
    const double t = g / 10.0;
    matcore::EigResult eig =
        matcore::eig_hermitian(loopsynth::hamiltonian_at(plan, t), 1e-8);
    for (Index i = 0; i < eig.eigenvalues.size(); ++i) {
      const double v = eig.eigenvalues(i);
      iso = std::max(iso, std::min(std::abs(v), std::abs(v - 1.0)));
    }
  }
  rep.isospectral_residual = iso;
  return rep;
}

}  // namespace holoop::holocheck

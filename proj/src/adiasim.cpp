#include "holoop/adiasim.hpp"

#include <cmath>

#include "holoop/holocheck.hpp"
#include "holoop/matcore.hpp"

namespace holoop::adiasim {

namespace {

// One full integration of the matrix of column states. H(t) is exactly a
// rank-k projector F F^dag, so each exponential step is
// e^{-i dt H} = I + (e^{-i dt} - 1) F F^dag, applied in O(dim*k) per column.
ComplexMatrix propagate(const loopsynth::LoopPlan& plan, double T, Index steps,
                        ComplexMatrix psi) {
  const double dt = T / static_cast<double>(steps);
  const Complex step_factor = std::exp(Complex(0.0, -dt)) - 1.0;
  for (Index m = 0; m < steps; ++m) {
    const double t_mid = (static_cast<double>(m) + 0.5) * dt / T;
    const ComplexMatrix f = holocheck::frame_at(plan, t_mid);
    psi += step_factor * (f * (f.adjoint() * psi));
  }
  return psi;
}

}  // namespace

ComplexVector evolve(const loopsynth::LoopPlan& plan, double T, Index steps,
                     const ComplexVector& psi0) {
  if (T <= 0.0) throw Error("evolve: T must be positive");
  if (static_cast<double>(steps) < 100.0 * T)
    throw ResolutionTooLowError("evolve: steps must be >= 100*T");
  if (std::abs(psi0.norm() - 1.0) > 1e-9)
    throw Error("evolve: initial state not normalized");
  return propagate(plan, T, steps, psi0);
}

AdiabaticRun realized_gate(const loopsynth::LoopPlan& plan, double T, Index steps) {
  if (T <= 0.0) throw Error("realized_gate: T must be positive");
  if (static_cast<double>(steps) < 100.0 * T)
    throw ResolutionTooLowError("realized_gate: steps must be >= 100*T");

  const Index k = plan.k;
  ComplexMatrix psi = ComplexMatrix::Zero(plan.dim(), k);
  psi.topLeftCorner(k, k) = ComplexMatrix::Identity(k, k);
  psi = propagate(plan, T, steps, psi);

  AdiabaticRun run;
  run.T = T;
  run.steps = steps;
  run.leakage = 0.0;
  const ComplexMatrix projected = psi.topRows(k);
  for (Index j = 0; j < k; ++j)
    run.leakage = std::max(run.leakage, 1.0 - projected.col(j).squaredNorm());

  // The degenerate subspace sits at constant energy 1, so the dynamical
  // phase is the exactly known global factor e^{-iT}.
  const ComplexMatrix dephased = std::exp(Complex(0.0, T)) * projected;
  run.realized_gate = holocheck::phase_align(dephased, plan.gate.U);

  double fid = 0.0;
  const ComplexMatrix overlap = plan.gate.U.adjoint() * run.realized_gate;
  for (Index j = 0; j < k; ++j) fid += std::abs(overlap(j, j));
  run.fidelity = fid / static_cast<double>(k);
  return run;
}

}  // namespace holoop::adiasim

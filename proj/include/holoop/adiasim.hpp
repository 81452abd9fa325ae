#pragma once

#include "holoop/loopsynth.hpp"
#include "holoop/types.hpp"

namespace holoop::adiasim {

struct AdiabaticRun {
  double T = 0.0;
  Index steps = 0;
  double fidelity = 0.0;
  double leakage = 0.0;
  ComplexMatrix realized_gate;  // k x k, dynamical phase stripped, phase-aligned
};

/// Integrates i dpsi/dtau = H(tau/T) psi over [0, T] by midpoint
/// exponential stepping. Requires steps >= 100*T and a normalized state.
ComplexVector evolve(const loopsynth::LoopPlan& plan, double T, Index steps,
                     const ComplexVector& psi0);

/// Evolves the k degenerate basis states, strips the e^{-iT} dynamical
/// phase, phase-aligns against the target gate, and reports fidelity and
/// leakage.
AdiabaticRun realized_gate(const loopsynth::LoopPlan& plan, double T, Index steps);

}  // namespace holoop::adiasim

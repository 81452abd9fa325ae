#pragma once

#include <functional>

#include "holoop/loopsynth.hpp"
#include "holoop/types.hpp"

namespace holoop::holocheck {

struct HolonomyReport {
  double closure_residual = 0.0;
  ComplexMatrix connection;       // k x k anti-Hermitian, upper block of X
  Index wilson_steps = 0;
  ComplexMatrix wilson_holonomy;  // k x k unitary
  double target_distance = 0.0;   // min over global phase of ||W - e^{i phi} U||_F
  double isospectral_residual = 0.0;
};

/// Orthonormal frame of the degenerate subspace at time t:
/// the first k columns of e^{tX}.
ComplexMatrix frame_at(const loopsynth::LoopPlan& plan, double t);

/// Upper-left k x k block of X (the constant connection).
ComplexMatrix connection_of(const loopsynth::LoopPlan& plan);

/// Discrete Wilson line: ordered product of frame-overlap matrices over a
/// uniform N-step schedule. wilson_holonomy holds the unitarized product;
/// target_distance measures the product itself against e^{-connection}
/// (the unitary part converges faster than first order, the product O(1/N)).
HolonomyReport wilson_holonomy(const loopsynth::LoopPlan& plan, Index n_steps);

/// Frobenius distance between w and target modulo a global phase, aligned
/// by phi* = arg trace(target^dag w).
double phase_aligned_distance(const ComplexMatrix& w, const ComplexMatrix& target);

/// Phase-align w against target (multiplies by e^{-i phi*}).
ComplexMatrix phase_align(const ComplexMatrix& w, const ComplexMatrix& target);

/// Generic Wilson product over caller-supplied frames F(t) (dim x k).
ComplexMatrix wilson_product(const std::function<ComplexMatrix(double)>& frame,
                             Index n_steps);

}  // namespace holoop::holocheck

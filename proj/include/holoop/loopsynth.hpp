#pragma once

#include <vector>

#include "holoop/gatelog.hpp"
#include "holoop/types.hpp"

namespace holoop::loopsynth {

enum class Variant { minimal, doubled };

/// Policy for loop directions that collapse (alpha_k = 0, occurring at
/// lambda_k = -pi with winding 1).
enum class AlphaPolicy {
  keep_zero,     // keep the collapsed direction, flag it
  bump_winding,  // raise that component's winding by one instead
};

/// A closed adiabatic loop for a target gate: the anti-Hermitian loop
/// operator X with e^{X} block-diagonal, plus the parameters it was
/// built from.
struct LoopPlan {
  Variant variant = Variant::doubled;
  gatelog::GateSpec gate;
  Index k = 0;                   // degenerate-subspace dimension
  Index eigvec_index = 0;        // minimal variant only
  double s_param = 0.0;          // minimal variant only, s = -lambda_j
  std::vector<int> windings;     // n_k >= 1 (one entry for minimal)
  RealVector alphas;             // alpha_k >= 0
  RealVector nus;                // nu_k = n_k * pi
  std::vector<Index> collapsed;  // indices with alpha_k == 0
  ComplexMatrix X;               // (k+1)x(k+1) minimal, 2k x 2k doubled

  Index dim() const { return X.rows(); }
  ComplexMatrix projector() const;  // P0 onto the first k basis states
  bool all_windings_one() const;
};

LoopPlan plan_minimal(const gatelog::GateSpec& gate, Index j, int n,
                      AlphaPolicy policy = AlphaPolicy::keep_zero);

LoopPlan plan_doubled(const gatelog::GateSpec& gate, std::vector<int> windings,
                      AlphaPolicy policy = AlphaPolicy::keep_zero);

/// e^{tX} in closed form. Matches matcore::expm(t*X) within 1e-9 on [0,1].
ComplexMatrix exp_tX(const LoopPlan& plan, double t);

/// H(t) = e^{tX} P0 e^{-tX}; Hermitian projector of rank k for all t.
ComplexMatrix hamiltonian_at(const LoopPlan& plan, double t);

double closure_residual(const LoopPlan& plan);

}  // namespace holoop::loopsynth

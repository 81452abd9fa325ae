#pragma once

#include <vector>

#include "holoop/loopsynth.hpp"
#include "holoop/types.hpp"

namespace holoop::arrayembed {

/// Qubit register layout: the ancilla is the first (most significant)
/// tensor factor, main qubits 1..n_main follow left to right.
struct ArrayLayout {
  Index n_main = 1;

  Index total_qubits() const { return n_main + 1; }
  Index dim() const { return Index{1} << total_qubits(); }
  Index main_dim() const { return Index{1} << n_main; }
};

/// A gate loop embedded into the full array: the local loop operator on
/// {ancilla, target qubit(s)} and its exact extension by identity on the
/// spectator qubits.
struct LocalLoop {
  ArrayLayout layout;
  std::vector<Index> targets;   // main-qubit indices, 1-based
  loopsynth::LoopPlan plan;     // loop on the local factors
  ComplexMatrix x_local;        // 4x4 (one-qubit) or 8x8 (two-qubit)
  ComplexMatrix X_full;
  ComplexMatrix H0;

  /// e^{t X_full}, evaluated locally and extended by identity.
  ComplexMatrix exp_full(double t) const;
};

struct LocalActionReport {
  double holonomy_distance = 0.0;     // vs the tensor-embedded target gate
  double spectator_commutant = 0.0;   // max commutator norm with spectator sigma_z/x
  double ancilla_offdiag = 0.0;       // coupling block of e^{X_full}
  double closure_residual = 0.0;      // ||e^X H0 e^-X - H0||_F
  ComplexMatrix realized;             // phase-aligned holonomy on the main array
};

/// Place an operator on the listed tensor factors (0 = ancilla), identity
/// elsewhere. Exact by construction.
ComplexMatrix embed_op(const ComplexMatrix& op, const std::vector<Index>& factors,
                       Index total_qubits);

/// H0 = (1/2)(I + sigma_z) (x) I: rank-2^n projector onto the ancilla-0 sector.
ComplexMatrix h0_array(const ArrayLayout& layout);

/// 4x4 loop operator whose holonomy on the {ancilla, qubit} pair is u.
ComplexMatrix local_x_single(const ComplexMatrix& u, const std::vector<int>& windings,
                             loopsynth::AlphaPolicy policy = loopsynth::AlphaPolicy::keep_zero);

/// Pauli-operator assembly of the same 4x4 operator; agrees with the block
/// form to rounding.
ComplexMatrix pauli_form_single(const gatelog::GateSpec& gate, const RealVector& alphas);

LocalLoop embed_single(const ComplexMatrix& u, Index k, const ArrayLayout& layout,
                       const std::vector<int>& windings = {},
                       loopsynth::AlphaPolicy policy = loopsynth::AlphaPolicy::keep_zero);

LocalLoop embed_two(const ComplexMatrix& u4, Index k, Index l, const ArrayLayout& layout,
                    const std::vector<int>& windings = {},
                    loopsynth::AlphaPolicy policy = loopsynth::AlphaPolicy::keep_zero);

/// Wilson-line check of the embedded loop against the expected local gate,
/// plus spectator-invariance and ancilla-return residuals.
LocalActionReport verify_local_action(const LocalLoop& loop,
                                      const ComplexMatrix& expected_local,
                                      Index n_steps);

}  // namespace holoop::arrayembed

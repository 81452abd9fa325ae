#pragma once

#include <string>

#include "holoop/types.hpp"

namespace holoop::gatelog {

/// A target unitary together with its anti-Hermitian generator in the
/// holonomy convention e^{-A} = U, and the eigendata of A.
///
/// A v_j = i lambda_j v_j with lambda_j in [-pi, pi), lambdas ascending,
/// Omega columns in the same order.
struct GateSpec {
  std::string name;  // empty for raw matrices
  ComplexMatrix U;
  ComplexMatrix A;
  ComplexMatrix Omega;
  RealVector Lambda;

  Index dim() const { return U.rows(); }
};

/// Standard matrix for a named gate, or pass-through of a raw unitary.
/// Names: identity, pauli_x, pauli_y, pauli_z, hadamard, phase_s, t_gate,
/// cnot, cz, swap, qft2.
ComplexMatrix resolve_gate(const std::string& name);
ComplexMatrix resolve_gate(const ComplexMatrix& raw, double unitary_tol = 1e-8);

/// All gate names accepted by resolve_gate, in the CLI vocabulary order.
const std::vector<std::string>& named_gates();

GateSpec gate_generator(const ComplexMatrix& u, const std::string& name = "");

}  // namespace holoop::gatelog

#include "holoop/gatelog.hpp"

#include <cmath>
#include <vector>

#include "holoop/matcore.hpp"

namespace holoop::gatelog {

namespace {

const Complex kI(0.0, 1.0);

ComplexMatrix make2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

const std::vector<std::string>& named_gates() {
  static const std::vector<std::string> names = {
      "identity", "pauli_x", "pauli_y", "pauli_z", "hadamard", "phase_s",
      "t_gate",   "cnot",    "cz",      "swap",    "qft2"};
  return names;
}

ComplexMatrix resolve_gate(const std::string& name) {
  const double r = 1.0 / std::sqrt(2.0);
  if (name == "identity") return ComplexMatrix::Identity(2, 2);
  if (name == "pauli_x") return make2(0, 1, 1, 0);
  if (name == "pauli_y") return make2(0, -kI, kI, 0);
  if (name == "pauli_z") return make2(1, 0, 0, -1);
  if (name == "hadamard") return make2(r, r, r, -r);
  if (name == "phase_s") return make2(1, 0, 0, kI);
  if (name == "t_gate") return make2(1, 0, 0, std::exp(kI * (kPi / 4.0)));
  if (name == "cnot") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 1) = 1;
    m(2, 3) = 1;
    m(3, 2) = 1;
    return m;
  }
  if (name == "cz") {
    ComplexMatrix m = ComplexMatrix::Identity(4, 4);
    m(3, 3) = -1;
    return m;
  }
  if (name == "swap") {
    ComplexMatrix m = ComplexMatrix::Zero(4, 4);
    m(0, 0) = 1;
    m(1, 2) = 1;
    m(2, 1) = 1;
    m(3, 3) = 1;
    return m;
  }
  if (name == "qft2") {
    ComplexMatrix m(4, 4);
    for (Index j = 0; j < 4; ++j)
      for (Index k = 0; k < 4; ++k)
        m(j, k) = 0.5 * std::exp(kI * (kPi / 2.0 * static_cast<double>(j * k)));
    return m;
  }
  throw UnknownGateError("unknown gate name: " + name);
}

ComplexMatrix resolve_gate(const ComplexMatrix& raw, double unitary_tol) {
  if (!matcore::is_unitary(raw, unitary_tol))
    throw NotUnitaryError("resolve_gate: raw matrix not unitary within tolerance");
  return raw;
}

GateSpec gate_generator(const ComplexMatrix& u, const std::string& name) {
  GateSpec spec;
  spec.name = name;
  spec.U = u;
  // Principal branch gives U eigenphases in (-pi, pi]; with A = -log U the
  // generator eigenvalues i*lambda satisfy lambda in [-pi, pi).
  spec.A = -matcore::logm_unitary(u);
  const Complex minus_i(0.0, -1.0);
  matcore::EigResult eig = matcore::eig_hermitian((minus_i * spec.A).eval(), 1e-9);
  spec.Lambda = eig.eigenvalues;
  spec.Omega = eig.eigenvectors;
  return spec;
}

}  // namespace holoop::gatelog

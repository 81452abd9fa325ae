#include "holoop/arrayembed.hpp"

#include <algorithm>
#include <cmath>

#include "holoop/holocheck.hpp"
#include "holoop/matcore.hpp"

namespace holoop::arrayembed {

namespace {

// Bit of tensor factor f inside basis index idx (factor 0 is the most
// significant bit).
inline Index factor_bit(Index idx, Index f, Index total) {
  return (idx >> (total - 1 - f)) & Index{1};
}

}  // namespace

ComplexMatrix embed_op(const ComplexMatrix& op, const std::vector<Index>& factors,
                       Index total_qubits) {
  const Index m = static_cast<Index>(factors.size());
  if (op.rows() != (Index{1} << m) || op.cols() != op.rows())
    throw Error("embed_op: operator size does not match factor count");
  for (Index f : factors)
    if (f < 0 || f >= total_qubits)
      throw QubitOutOfRangeError("embed_op: factor index out of range");

  const Index dim = Index{1} << total_qubits;
  Index spectator_mask = dim - 1;
  for (Index f : factors) spectator_mask &= ~(Index{1} << (total_qubits - 1 - f));

  ComplexMatrix full = ComplexMatrix::Zero(dim, dim);
  for (Index row = 0; row < dim; ++row) {
    Index sub_row = 0;
    for (Index p = 0; p < m; ++p)
      sub_row = (sub_row << 1) | factor_bit(row, factors[static_cast<size_t>(p)], total_qubits);
    const Index spect = row & spectator_mask;
    for (Index sub_col = 0; sub_col < op.cols(); ++sub_col) {
      Index col = spect;
      for (Index p = 0; p < m; ++p) {
        const Index bit = (sub_col >> (m - 1 - p)) & Index{1};
        col |= bit << (total_qubits - 1 - factors[static_cast<size_t>(p)]);
      }
      full(row, col) = op(sub_row, sub_col);
    }
  }
  return full;
}

ComplexMatrix h0_array(const ArrayLayout& layout) {
  if (layout.n_main < 1) throw Error("h0_array: need at least one main qubit");
  ComplexMatrix h = ComplexMatrix::Zero(layout.dim(), layout.dim());
  h.topLeftCorner(layout.main_dim(), layout.main_dim()) =
      ComplexMatrix::Identity(layout.main_dim(), layout.main_dim());
  return h;
}

ComplexMatrix local_x_single(const ComplexMatrix& u, const std::vector<int>& windings,
                             loopsynth::AlphaPolicy policy) {
  const gatelog::GateSpec gate = gatelog::gate_generator(gatelog::resolve_gate(u));
  return loopsynth::plan_doubled(gate, windings, policy).X;
}

ComplexMatrix pauli_form_single(const gatelog::GateSpec& gate, const RealVector& alphas) {
  const Complex i(0.0, 1.0);
  ComplexMatrix sz(2, 2), sp(2, 2), sm(2, 2), id = ComplexMatrix::Identity(2, 2);
  sz << 1, 0, 0, -1;
  sp << 0, 1, 0, 0;
  sm << 0, 0, 1, 0;

  const ComplexMatrix lambda_diag =
      ComplexMatrix(gate.Lambda.cast<Complex>().asDiagonal());
  const ComplexMatrix d_diag = ComplexMatrix(alphas.cast<Complex>().asDiagonal());

  auto kron2 = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Index p = 0; p < a.rows(); ++p)
      for (Index q = 0; q < a.cols(); ++q)
        out.block(p * b.rows(), q * b.cols(), b.rows(), b.cols()) = a(p, q) * b;
    return out;
  };

  return kron2(0.5 * (id + sz), gate.A) - kron2(i * 0.5 * (id - sz), lambda_diag) +
         kron2(sp, gate.Omega * d_diag) - kron2(sm, d_diag * gate.Omega.adjoint());
}

ComplexMatrix LocalLoop::exp_full(double t) const {
  std::vector<Index> factors = {0};
  for (Index q : targets) factors.push_back(q);
  return embed_op(loopsynth::exp_tX(plan, t), factors, layout.total_qubits());
}

LocalLoop embed_single(const ComplexMatrix& u, Index k, const ArrayLayout& layout,
                       const std::vector<int>& windings, loopsynth::AlphaPolicy policy) {
  if (k < 1 || k > layout.n_main)
    throw QubitOutOfRangeError("embed_single: target qubit out of range");
  LocalLoop loop;
  loop.layout = layout;
  loop.targets = {k};
  const gatelog::GateSpec gate = gatelog::gate_generator(gatelog::resolve_gate(u));
  loop.plan = loopsynth::plan_doubled(gate, windings, policy);
  loop.x_local = loop.plan.X;
  loop.X_full = embed_op(loop.x_local, {0, k}, layout.total_qubits());
  loop.H0 = h0_array(layout);
  return loop;
}

LocalLoop embed_two(const ComplexMatrix& u4, Index k, Index l, const ArrayLayout& layout,
                    const std::vector<int>& windings, loopsynth::AlphaPolicy policy) {
  if (k == l) throw DuplicateTargetError("embed_two: duplicate target qubit");
  if (k < 1 || k > layout.n_main || l < 1 || l > layout.n_main)
    throw QubitOutOfRangeError("embed_two: target qubit out of range");
  LocalLoop loop;
  loop.layout = layout;
  loop.targets = {k, l};
  const gatelog::GateSpec gate = gatelog::gate_generator(gatelog::resolve_gate(u4));
  loop.plan = loopsynth::plan_doubled(gate, windings, policy);
  loop.x_local = loop.plan.X;
  loop.X_full = embed_op(loop.x_local, {0, k, l}, layout.total_qubits());
  loop.H0 = h0_array(layout);
  return loop;
}

LocalActionReport verify_local_action(const LocalLoop& loop,
                                      const ComplexMatrix& expected_local,
                                      Index n_steps) {
  const Index main_dim = loop.layout.main_dim();
  const Index n = loop.layout.n_main;

  LocalActionReport rep;
  const ComplexMatrix eX = loop.exp_full(1.0);
  rep.closure_residual = (eX * loop.H0 * eX.adjoint() - loop.H0).norm();
  rep.ancilla_offdiag = eX.topRightCorner(main_dim, main_dim).norm();

  // Main-array factor index q-1 for target qubit q (ancilla stripped).
  std::vector<Index> main_factors;
  for (Index q : loop.targets) main_factors.push_back(q - 1);
  const ComplexMatrix expected = embed_op(expected_local, main_factors, n);

  const ComplexMatrix w = holocheck::wilson_product(
      [&](double t) { return ComplexMatrix(loop.exp_full(t).leftCols(main_dim)); },
      n_steps);
  rep.realized = holocheck::phase_align(w, expected);
  rep.holonomy_distance = (rep.realized - expected).norm();

  ComplexMatrix sz(2, 2), sx(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  for (Index q = 1; q <= n; ++q) {
    if (std::find(loop.targets.begin(), loop.targets.end(), q) != loop.targets.end())
      continue;
    for (const ComplexMatrix& sigma : {sz, sx}) {
      const ComplexMatrix s_full = embed_op(sigma, {q - 1}, n);
      rep.spectator_commutant = std::max(
          rep.spectator_commutant, (rep.realized * s_full - s_full * rep.realized).norm());
    }
  }
  return rep;
}

}  // namespace holoop::arrayembed

#include "holoop/matcore.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace holoop::matcore {

double frobenius(const ComplexMatrix& m) { return m.norm(); }

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && (m - m.adjoint()).norm() <= tol;
}

bool is_antihermitian(const ComplexMatrix& m, double tol) {
  return m.rows() == m.cols() && (m + m.adjoint()).norm() <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  ComplexMatrix g = m.adjoint() * m;
  g.diagonal().array() -= 1.0;
  return g.norm() <= tol;
}

namespace {

// Fix each column's phase so its first component above threshold is real
// positive. Makes the decomposition deterministic for identical input.
void phase_fix_columns(ComplexMatrix& v) {
  for (Index j = 0; j < v.cols(); ++j) {
    for (Index i = 0; i < v.rows(); ++i) {
      double a = std::abs(v(i, j));
      if (a > 1e-12) {
        v.col(j) *= std::conj(v(i, j)) / a;
        break;
      }
    }
  }
}

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (Index p = 0; p < a.rows(); ++p)
    for (Index q = 0; q < a.cols(); ++q)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

}  // namespace

EigResult eig_hermitian(const ComplexMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols())
    throw NotHermitianError("eig_hermitian: matrix not square");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.adjoint()).norm() > hermitian_tol * scale)
    throw NotHermitianError("eig_hermitian: matrix not Hermitian within tolerance");

  const Index n = m.rows();
  ComplexMatrix a = (m + m.adjoint()) / 2.0;  // exact Hermitian part
  ComplexMatrix v = ComplexMatrix::Identity(n, n);

  const double target = 1e-14 * scale;
  const int max_sweeps = 60;
  int sweep = 0;
  while (off_diagonal_norm(a) > target) {
    if (++sweep > max_sweeps)
      throw NoConvergenceError("eig_hermitian: Jacobi sweeps exhausted");
    for (Index p = 0; p < n - 1; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double apq = std::abs(a(p, q));
        if (apq <= 1e-300) continue;
        // Rotation annihilating a(p,q): angle from tan(2theta), phase from
        // the off-diagonal element.
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex phase = a(p, q) / apq;

        // Columns: A <- A J,  J = [[c, s*phase],[-s*conj(phase), c]]
        for (Index i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = c * aip - s * std::conj(phase) * aiq;
          a(i, q) = s * phase * aip + c * aiq;
        }
        // Rows: A <- J^dagger A
        for (Index i = 0; i < n; ++i) {
          const Complex api = a(p, i);
          const Complex aqi = a(q, i);
          a(p, i) = c * api - s * phase * aqi;
          a(q, i) = s * std::conj(phase) * api + c * aqi;
        }
        // Accumulate V <- V J
        for (Index i = 0; i < n; ++i) {
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = c * vip - s * std::conj(phase) * viq;
          v(i, q) = s * phase * vip + c * viq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<Index> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index i, Index j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigResult res;
  res.eigenvalues.resize(n);
  res.eigenvectors.resize(n, n);
  for (Index j = 0; j < n; ++j) {
    res.eigenvalues(j) = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]).real();
    res.eigenvectors.col(j) = v.col(order[static_cast<size_t>(j)]);
  }
  phase_fix_columns(res.eigenvectors);
  return res;
}

ComplexMatrix expm(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw Error("expm: matrix not square");
  if (!m.allFinite()) throw Error("expm: non-finite entries");
  const Index n = m.rows();

  int squarings = 0;
  double nrm = m.cwiseAbs().rowwise().sum().maxCoeff();  // inf-norm
  if (nrm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
    squarings = std::min(squarings, 60);
  }
  ComplexMatrix a = m / std::pow(2.0, squarings);

  ComplexMatrix result = ComplexMatrix::Identity(n, n);
  ComplexMatrix term = ComplexMatrix::Identity(n, n);
  for (int k = 1; k <= 40; ++k) {
    term = (term * a) / static_cast<double>(k);
    result += term;
    if (term.norm() <= 1e-18 * result.norm()) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  return result;
}

ComplexMatrix expm_antihermitian(const ComplexMatrix& m) {
  const Complex minus_i(0.0, -1.0);
  EigResult eig = eig_hermitian(minus_i * m, 1e-10);
  ComplexVector phases(m.rows());
  for (Index j = 0; j < m.rows(); ++j)
    phases(j) = std::exp(Complex(0.0, eig.eigenvalues(j)));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix logm_unitary(const ComplexMatrix& u, double unitary_tol) {
  if (!is_unitary(u, unitary_tol))
    throw NotUnitaryError("logm_unitary: input not unitary within tolerance");
  const Index n = u.rows();

  // U is normal, so it is diagonalized by diagonalizing the commuting
  // Hermitian pair (U+U^dag)/2 and -i(U-U^dag)/2. The real part alone is
  // unreliable near cos-degenerate phases (theta vs -theta), so its
  // degenerate clusters are split by the imaginary part.
  const ComplexMatrix h_re = (u + u.adjoint()) / 2.0;
  const ComplexMatrix h_im = Complex(0.0, -0.5) * (u - u.adjoint());
  EigResult re = eig_hermitian(h_re, 1e-8);

  ComplexMatrix w = re.eigenvectors;
  Index start = 0;
  while (start < n) {
    Index end = start + 1;
    while (end < n && re.eigenvalues(end) - re.eigenvalues(end - 1) < 1e-8) ++end;
    if (end - start > 1) {
      ComplexMatrix block = w.middleCols(start, end - start);
      ComplexMatrix sub = block.adjoint() * h_im * block;
      EigResult se = eig_hermitian((sub + sub.adjoint()) / 2.0, 1e-6);
      w.middleCols(start, end - start) = block * se.eigenvectors;
    }
    start = end;
  }

  // Each column is now an eigenvector of U; atan2 puts phase pi at +pi.
  ComplexVector log_eigs(n);
  for (Index j = 0; j < n; ++j) {
    const Complex mu = w.col(j).dot(u * w.col(j));  // <w|U|w>
    log_eigs(j) = Complex(0.0, std::atan2(mu.imag(), mu.real()));
  }
  ComplexMatrix g = w * log_eigs.asDiagonal() * w.adjoint();
  return (g - g.adjoint()) / 2.0;
}

ComplexMatrix unitarize(const ComplexMatrix& m, double sv_floor) {
  if (m.rows() != m.cols()) throw Error("unitarize: matrix not square");
  Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues().minCoeff() < sv_floor)
    throw SingularError("unitarize: singular value below floor");
  return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace holoop::matcore

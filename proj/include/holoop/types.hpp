#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace holoop {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitianError : Error {
  using Error::Error;
};
struct NoConvergenceError : Error {
  using Error::Error;
};
struct NotUnitaryError : Error {
  using Error::Error;
};
struct SingularError : Error {
  using Error::Error;
};
struct UnknownGateError : Error {
  using Error::Error;
};
struct WindingTooSmallError : Error {
  using Error::Error;
};
struct QubitOutOfRangeError : Error {
  using Error::Error;
};
struct DuplicateTargetError : Error {
  using Error::Error;
};
struct ResolutionTooLowError : Error {
  using Error::Error;
};

}  // namespace holoop

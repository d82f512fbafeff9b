#ifndef LADDERLAB_COMMON_HPP
#define LADDERLAB_COMMON_HPP

#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace ladderlab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Thrown when model parameters or preconditions violate a stated inequality.
class ConstraintError : public std::runtime_error {
 public:
  explicit ConstraintError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an argument leaves the mathematical domain (poles, intervals).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when an iterative process (series, quadrature, trajectory) fails
// to converge or detectably diverges.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool nearly_integer(double x, double tol = 1e-9) {
  return std::abs(x - std::round(x)) < tol;
}

}  // namespace ladderlab

#endif

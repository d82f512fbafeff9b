#ifndef LADDERLAB_ORTHOPOLY_HPP
#define LADDERLAB_ORTHOPOLY_HPP

#include <functional>
#include <string>
#include <vector>

#include "ladderlab/common.hpp"

namespace ladderlab::orthopoly {

enum class Family {
  Hermite,
  Laguerre,
  Jacobi,
  Gegenbauer,
  MeixnerPollaczek,
  ContinuousHahnSpecial,
  ContinuousDualHahn,
  Wilson,
  AskeyWilson,
};

std::string family_name(Family f);

// params layout: Hermite {}; Laguerre {alpha}; Jacobi {alpha, beta};
// Gegenbauer {lambda}; MeixnerPollaczek {a}; ContinuousHahnSpecial {a1, a2};
// ContinuousDualHahn {a1, a2, a3}; Wilson {a1..a4}; AskeyWilson {a1..a4, q}.
struct PolynomialFamily {
  Family family{};
  std::vector<double> params;
};

// Three-term recurrence data  eta P_n = A_n P_{n+1} + B_n P_n + C_n P_{n-1},
// with P_{-1} = 0.  For the families used here these coefficients are the
// model registry's ladder data (see models.hpp), not re-derived locally.
struct ThreeTermCoeffs {
  std::function<double(int)> A, B, C;
};

// Supplied by the model registry; throws ConstraintError for families
// without a registered model.
ThreeTermCoeffs three_term_for(const PolynomialFamily& fam);

// Value of P_n at the polynomial argument via the defining
// (q-)hypergeometric formula.
Complex eval_hypergeometric(const PolynomialFamily& fam, int n, Complex arg);

// Same value via upward recurrence with coefficients from the registry.
Complex eval_recurrence(const PolynomialFamily& fam, int n, Complex arg);

// Recurrence engine usable with explicit coefficients.
Complex eval_recurrence_with(const ThreeTermCoeffs& c, int n, Complex arg);

// |P_n^{(beta,beta)}(x)/(beta+1)_n - C_n^{(beta+1/2)}(x)/(2 beta+1)_n|
double gegenbauer_jacobi_ratio_check(double beta, int n, double arg);

// dP_n/d(arg) for the classical families (Hermite, Laguerre, Jacobi,
// Gegenbauer), by differentiating the defining series term by term.
double derivative(const PolynomialFamily& fam, int n, double arg);

// Complex-capable derivatives of the classical families, used by the
// operator machinery (order = 1 or 2).
Complex derivative_c(const PolynomialFamily& fam, int n, Complex arg,
                     int order);

}  // namespace ladderlab::orthopoly

#endif

#include "ladderlab/orthopoly.hpp"

#include <cmath>

#include "ladderlab/detail/dd.hpp"
#include "ladderlab/specfun.hpp"

namespace ladderlab::orthopoly {

using specfun::hypergeometric;
using specfun::pochhammer;
using specfun::q_pochhammer;

namespace {

void require_params(const PolynomialFamily& fam, size_t count) {
  if (fam.params.size() != count)
    throw ConstraintError(family_name(fam.family) + ": expected " +
                          std::to_string(count) + " parameters");
}

double fact(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Complex hermite(int n, Complex x) {
  if (n == 0) return 1.0;
  if (x == Complex(0.0)) {
    // parity: only even degrees survive at the origin
    if (n % 2 == 1) return 0.0;
    int m = n / 2;
    double v = fact(n) / fact(m);
    return (m % 2 == 0) ? v : -v;
  }
  auto f = hypergeometric({Complex(-0.5 * n), Complex(-0.5 * (n - 1))}, {},
                          -1.0 / (x * x));
  return std::pow(2.0 * x, n) * f.value;
}

Complex laguerre(int n, double alpha, Complex x) {
  auto f = hypergeometric({Complex(double(-n))}, {Complex(alpha + 1.0)}, x);
  return pochhammer(alpha + 1.0, n) / fact(n) * f.value;
}

Complex jacobi(int n, double alpha, double beta, Complex x) {
  auto f = hypergeometric(
      {Complex(double(-n)), Complex(n + alpha + beta + 1.0)},
      {Complex(alpha + 1.0)}, (1.0 - x) / 2.0);
  return pochhammer(alpha + 1.0, n) / fact(n) * f.value;
}

Complex gegenbauer(int n, double lam, Complex x) {
  return pochhammer(2.0 * lam, n) / pochhammer(lam + 0.5, n) *
         jacobi(n, lam - 0.5, lam - 0.5, x);
}

Complex meixner_pollaczek(int n, double a, Complex x) {
  // phi = pi/2 throughout: e^{i n phi} = i^n, 1 - e^{-2 i phi} = 2
  auto f = hypergeometric({Complex(double(-n)), Complex(a) + Complex(0, 1) * x},
                          {Complex(2.0 * a)}, 2.0);
  Complex in = std::pow(Complex(0.0, 1.0), n);
  return pochhammer(2.0 * a, n) / fact(n) * in * f.value;
}

Complex continuous_hahn_special(int n, double a1, double a2, Complex x) {
  auto f = hypergeometric(
      {Complex(double(-n)), Complex(n + 2.0 * (a1 + a2) - 1.0),
       Complex(a1) + Complex(0, 1) * x},
      {Complex(2.0 * a1), Complex(a1 + a2)}, 1.0);
  Complex in = std::pow(Complex(0.0, 1.0), n);
  return in * pochhammer(2.0 * a1, n) * pochhammer(a1 + a2, n) / fact(n) *
         f.value;
}

// Terminating 3F2/4F3 with paired parameters a1 +- ix: the product
// (a1+ix)_k (a1-ix)_k depends only on eta = x^2, so sum directly in eta.
Complex continuous_dual_hahn(int n, double a1, double a2, double a3,
                             Complex eta) {
  detail::cdd sum{1.0}, term{1.0};
  for (int k = 0; k < n; ++k) {
    detail::cdd paired =
        detail::add(detail::cdd((a1 + k) * (a1 + k)), detail::cdd(eta));
    term = detail::mul(detail::mul(term, paired),
                       double(-n + k) /
                           ((a1 + a2 + k) * (a1 + a3 + k) * double(k + 1)));
    sum = detail::add(sum, term);
  }
  return pochhammer(a1 + a2, n) * pochhammer(a1 + a3, n) * sum.value();
}

Complex wilson(int n, const double* a, Complex eta) {
  double b1 = a[0] + a[1] + a[2] + a[3];
  detail::cdd sum{1.0}, term{1.0};
  for (int k = 0; k < n; ++k) {
    detail::cdd paired =
        detail::add(detail::cdd((a[0] + k) * (a[0] + k)), detail::cdd(eta));
    double ratio = double(-n + k) * (n + b1 - 1.0 + k) /
                   ((a[0] + a[1] + k) * (a[0] + a[2] + k) *
                    (a[0] + a[3] + k) * double(k + 1));
    term = detail::mul(detail::mul(term, paired), ratio);
    sum = detail::add(sum, term);
  }
  return pochhammer(a[0] + a[1], n) * pochhammer(a[0] + a[2], n) *
         pochhammer(a[0] + a[3], n) * sum.value();
}

Complex askey_wilson(int n, const double* a, double q, Complex eta) {
  // (a1 z; q)_k (a1/z; q)_k pairs into 1 + a1^2 q^{2m} - 2 a1 q^m eta
  using detail::cdd;
  using detail::dd;
  double b4 = a[0] * a[1] * a[2] * a[3];
  cdd sum{1.0}, term{1.0};
  dd qk{1.0};
  for (int k = 0; k < n; ++k) {
    double qkv = qk.value();
    cdd paired = detail::sub(
        cdd(1.0 + a[0] * a[0] * qkv * qkv),
        detail::mul(cdd(eta), 2.0 * a[0] * qkv));
    dd fac1 = detail::sub(dd(1.0), dd(std::pow(q, k - n)));
    dd fac2 = detail::sub(dd(1.0), detail::mul(dd(b4), dd(std::pow(q, n - 1 + k))));
    term = detail::mul(term, paired);
    term = detail::mul(term, cdd{fac1, dd(0.0)});
    term = detail::mul(term, cdd{fac2, dd(0.0)});
    double den = (1.0 - a[0] * a[1] * qkv) * (1.0 - a[0] * a[2] * qkv) *
                 (1.0 - a[0] * a[3] * qkv) * (1.0 - q * qkv);
    term = detail::mul(term, q / den);
    sum = detail::add(sum, term);
    qk = detail::mul(qk, dd(q));
  }
  Complex pref = std::pow(a[0], -n) * q_pochhammer(a[0] * a[1], q, n) *
                 q_pochhammer(a[0] * a[2], q, n) *
                 q_pochhammer(a[0] * a[3], q, n);
  return pref * sum.value();
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Hermite: return "hermite";
    case Family::Laguerre: return "laguerre";
    case Family::Jacobi: return "jacobi";
    case Family::Gegenbauer: return "gegenbauer";
    case Family::MeixnerPollaczek: return "meixner-pollaczek";
    case Family::ContinuousHahnSpecial: return "continuous-hahn";
    case Family::ContinuousDualHahn: return "continuous-dual-hahn";
    case Family::Wilson: return "wilson";
    case Family::AskeyWilson: return "askey-wilson";
  }
  return "?";
}

Complex eval_hypergeometric(const PolynomialFamily& fam, int n, Complex arg) {
  if (n < 0) throw ConstraintError("polynomial degree must be non-negative");
  const auto& p = fam.params;
  switch (fam.family) {
    case Family::Hermite:
      require_params(fam, 0);
      return hermite(n, arg);
    case Family::Laguerre:
      require_params(fam, 1);
      return laguerre(n, p[0], arg);
    case Family::Jacobi:
      require_params(fam, 2);
      return jacobi(n, p[0], p[1], arg);
    case Family::Gegenbauer:
      require_params(fam, 1);
      return gegenbauer(n, p[0], arg);
    case Family::MeixnerPollaczek:
      require_params(fam, 1);
      return meixner_pollaczek(n, p[0], arg);
    case Family::ContinuousHahnSpecial:
      require_params(fam, 2);
      return continuous_hahn_special(n, p[0], p[1], arg);
    case Family::ContinuousDualHahn:
      require_params(fam, 3);
      return continuous_dual_hahn(n, p[0], p[1], p[2], arg);
    case Family::Wilson:
      require_params(fam, 4);
      return wilson(n, p.data(), arg);
    case Family::AskeyWilson:
      require_params(fam, 5);
      return askey_wilson(n, p.data(), p[4], arg);
  }
  throw ConstraintError("unknown family");
}

Complex eval_recurrence_with(const ThreeTermCoeffs& c, int n, Complex arg) {
  if (n < 0) throw ConstraintError("polynomial degree must be non-negative");
  // double-double accumulation; upward recurrence loses digits at the
  // small-|P| end of the grid otherwise
  using detail::cdd;
  cdd pm1{0.0}, p0{1.0};
  cdd e(arg);
  for (int k = 0; k < n; ++k) {
    cdd t = detail::sub(detail::mul(detail::sub(e, cdd(c.B(k))), p0),
                        detail::mul(pm1, c.C(k)));
    cdd p1 = detail::div(t, cdd(c.A(k)));
    pm1 = p0;
    p0 = p1;
  }
  return p0.value();
}

Complex eval_recurrence(const PolynomialFamily& fam, int n, Complex arg) {
  return eval_recurrence_with(three_term_for(fam), n, arg);
}

double gegenbauer_jacobi_ratio_check(double beta, int n, double arg) {
  Complex lhs = jacobi(n, beta, beta, arg) /
                pochhammer(beta + 1.0, n);
  Complex rhs = gegenbauer(n, beta + 0.5, arg) /
                pochhammer(2.0 * beta + 1.0, n);
  return std::abs(lhs - rhs);
}

Complex derivative_c(const PolynomialFamily& fam, int n, Complex arg,
                     int order) {
  if (order == 0) return eval_hypergeometric(fam, n, arg);
  if (order < 0 || order > 2)
    throw ConstraintError("derivative order must be 0, 1 or 2");
  if (n == 0) return 0.0;
  const auto& p = fam.params;
  // term-by-term derivative of the defining series = first-derivative
  // identity with shifted parameters, applied repeatedly
  switch (fam.family) {
    case Family::Hermite:
      return 2.0 * n * derivative_c(fam, n - 1, arg, order - 1);
    case Family::Laguerre: {
      PolynomialFamily up{Family::Laguerre, {p[0] + 1.0}};
      return -derivative_c(up, n - 1, arg, order - 1);
    }
    case Family::Jacobi: {
      PolynomialFamily up{Family::Jacobi, {p[0] + 1.0, p[1] + 1.0}};
      return 0.5 * (n + p[0] + p[1] + 1.0) *
             derivative_c(up, n - 1, arg, order - 1);
    }
    case Family::Gegenbauer: {
      PolynomialFamily up{Family::Gegenbauer, {p[0] + 1.0}};
      return 2.0 * p[0] * derivative_c(up, n - 1, arg, order - 1);
    }
    default:
      throw ConstraintError(
          "derivative: only the classical families are differentiable here");
  }
}

double derivative(const PolynomialFamily& fam, int n, double arg) {
  return derivative_c(fam, n, arg, 1).real();
}

}  // namespace ladderlab::orthopoly

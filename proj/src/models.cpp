#include "ladderlab/models.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ladderlab/report.hpp"
#include "ladderlab/specfun.hpp"

namespace ladderlab::models {

using orthopoly::Family;
using orthopoly::PolynomialFamily;
using orthopoly::ThreeTermCoeffs;
using specfun::log_gamma;

namespace {

const Complex kI(0.0, 1.0);

// greatest integer strictly below g
int floor_prime(double g) {
  return nearly_integer(g) ? int(std::llround(g)) - 1 : int(std::floor(g));
}

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstraintError(what + " violated");
}

double re_lgamma(double a, double x) {
  return log_gamma(Complex(a, x)).real();
}

// ---- per-family three-term builders (a-normalized ladder data) ----

ThreeTermCoeffs tt_hermite() {
  return {[](int) { return 0.5; }, [](int) { return 0.0; },
          [](int n) { return double(n); }};
}

ThreeTermCoeffs tt_laguerre(double alpha) {
  return {[](int n) { return -double(n + 1); },
          [alpha](int n) { return 2.0 * n + alpha + 1.0; },
          [alpha](int n) { return -(n + alpha); }};
}

ThreeTermCoeffs tt_jacobi(double a, double b) {
  return {[a, b](int n) {
            return 2.0 * (n + 1) * (n + a + b + 1) /
                   ((2 * n + a + b + 1) * (2 * n + a + b + 2));
          },
          [a, b](int n) {
            return (b * b - a * a) /
                   ((2 * n + a + b) * (2 * n + a + b + 2));
          },
          [a, b](int n) {
            return 2.0 * (n + a) * (n + b) /
                   ((2 * n + a + b) * (2 * n + a + b + 1));
          }};
}

ThreeTermCoeffs tt_gegenbauer(double lam) {
  return {[lam](int n) { return (n + 1) / (2.0 * (n + lam)); },
          [](int) { return 0.0; },
          [lam](int n) { return (n + 2 * lam - 1) / (2.0 * (n + lam)); }};
}

ThreeTermCoeffs tt_meixner_pollaczek(double a) {
  return {[](int n) { return (n + 1) / 2.0; }, [](int) { return 0.0; },
          [a](int n) { return (n + 2 * a - 1) / 2.0; }};
}

ThreeTermCoeffs tt_continuous_hahn(double a1, double a2) {
  double s = a1 + a2;
  return {[s](int n) {
            return (n + 1) * (n + 2 * s - 1) /
                   (2.0 * (n + s) * (2 * n + 2 * s - 1));
          },
          [](int) { return 0.0; },
          [a1, a2, s](int n) {
            return (n + s - 1) * (n + 2 * a1 - 1) * (n + 2 * a2 - 1) /
                   (2.0 * (2 * n + 2 * s - 1));
          }};
}

ThreeTermCoeffs tt_continuous_dual_hahn(std::array<double, 3> a) {
  double b1 = a[0] + a[1] + a[2];
  double b2 = a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
  return {[](int) { return -1.0; },
          [b1, b2](int n) { return 2.0 * n * n + (2 * b1 - 1) * n + b2; },
          [a](int n) {
            return -double(n) * (n + a[0] + a[1] - 1) * (n + a[0] + a[2] - 1) *
                   (n + a[1] + a[2] - 1);
          }};
}

ThreeTermCoeffs tt_wilson(std::array<double, 4> a) {
  double b1 = a[0] + a[1] + a[2] + a[3];
  double b2 = 0, b3 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      b2 += a[i] * a[j];
      for (int k = j + 1; k < 4; ++k) b3 += a[i] * a[j] * a[k];
    }
  double c1 = b1 * (b1 - 2) / 8, c2 = b2 - b1 / 2, c3 = (b1 - 2) * b3 / 4;
  return {[b1](int n) {
            return -(n + b1 - 1) / ((2 * n + b1 - 1) * (2 * n + b1));
          },
          [b1, c1, c2, c3](int n) {
            double E = n * (n + b1 - 1) / 2.0;
            return (2 * E * E + c2 * E + c3) / (2.0 * (E + c1));
          },
          [a, b1](int n) {
            double pr = 1.0;
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j) pr *= (n + a[i] + a[j] - 1);
            return -double(n) * pr / ((2 * n + b1 - 2) * (2 * n + b1 - 1));
          }};
}

ThreeTermCoeffs tt_askey_wilson(std::array<double, 4> a, double q) {
  double b1 = a[0] + a[1] + a[2] + a[3];
  double b3 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) b3 += a[i] * a[j] * a[k];
  double b4 = a[0] * a[1] * a[2] * a[3];
  double kap = q * (1 / q - 1) * (1 / q - 1);
  return {[a, b4, q](int n) {
            return (1 - b4 * std::pow(q, n - 1)) /
                   (2 * (1 - b4 * std::pow(q, 2 * n - 1)) *
                    (1 - b4 * std::pow(q, 2 * n)));
          },
          [b1, b3, b4, q, kap](int n) {
            double E = (std::pow(q, -n) - 1) * (1 - b4 * std::pow(q, n - 1)) / 2;
            double Hp = E + (1 + b4 / q) / 2;
            double R0 = kap * (Hp * Hp - (1 + 1 / q) * (1 + 1 / q) * b4 / 4);
            double Rm1 = -kap * ((b1 + b3 / q) * E / 4 +
                                 (1 - b4 / (q * q)) * (b1 - b3) / 8);
            return -Rm1 / R0;
          },
          [a, b4, q](int n) {
            double pr = 1.0;
            for (int i = 0; i < 4; ++i)
              for (int j = i + 1; j < 4; ++j)
                pr *= (1 - a[i] * a[j] * std::pow(q, n - 1));
            return (1 - std::pow(q, n)) * pr /
                   (2 * (1 - b4 * std::pow(q, 2 * n - 2)) *
                    (1 - b4 * std::pow(q, 2 * n - 1)));
          }};
}

void attach_ladder(ModelSpec& m, const ThreeTermCoeffs& c) {
  m.ladder_A = c.A;
  m.ladder_B = c.B;
  m.ladder_C = c.C;
}

// classical-family polynomial hooks with eta-derivatives
void attach_classical_poly(ModelSpec& m, PolynomialFamily fam) {
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return orthopoly::eval_hypergeometric(fam, n, e);
  };
  m.P_d1 = [fam](int n, Complex e) {
    return orthopoly::derivative_c(fam, n, e, 1);
  };
  m.P_d2 = [fam](int n, Complex e) {
    return orthopoly::derivative_c(fam, n, e, 2);
  };
}

}  // namespace

// registry hook for orthopoly::eval_recurrence

namespace detail {
ThreeTermCoeffs three_term_for_family(const PolynomialFamily& fam) {
  const auto& p = fam.params;
  switch (fam.family) {
    case Family::Hermite: return tt_hermite();
    case Family::Laguerre: return tt_laguerre(p.at(0));
    case Family::Jacobi: return tt_jacobi(p.at(0), p.at(1));
    case Family::Gegenbauer: return tt_gegenbauer(p.at(0));
    case Family::MeixnerPollaczek:
      require(p.at(0) > 0, "a > 0");
      return tt_meixner_pollaczek(p[0]);
    case Family::ContinuousHahnSpecial:
      require(p.at(0) > 0 && p.at(1) > 0, "a_j > 0");
      return tt_continuous_hahn(p[0], p[1]);
    case Family::ContinuousDualHahn:
      return tt_continuous_dual_hahn({p.at(0), p.at(1), p.at(2)});
    case Family::Wilson:
      return tt_wilson({p.at(0), p.at(1), p.at(2), p.at(3)});
    case Family::AskeyWilson:
      return tt_askey_wilson({p.at(0), p.at(1), p.at(2), p.at(3)}, p.at(4));
  }
  throw ConstraintError("no three-term coefficients registered for family");
}
}  // namespace detail

// ---------------------------------------------------------------- ordinary

ModelSpec harmonic() {
  ModelSpec m;
  m.name = ModelName::Harmonic;
  m.kind = ModelKind::Ordinary;
  m.label = "harmonic";
  m.domain_lo = -kInf;
  m.domain_hi = kInf;
  m.window_lo = -4.0;
  m.window_hi = 4.0;
  m.energy_fn = [](int n) { return double(n); };
  m.eta = [](Complex x) { return x; };
  m.eta_d1 = [](Complex) { return Complex(1.0); };
  m.eta_d2 = [](double) { return 0.0; };
  m.R0 = {1.0};
  m.R1 = {0.0};
  m.Rm1 = {0.0};
  m.R0_cl = {1.0};
  m.Rm1_cl = {0.0};
  attach_ladder(m, tt_hermite());
  m.V = [](Complex x) { return (x * x - 1.0) / 2.0; };
  m.Vc = [](Complex x) { return x * x / 2.0; };
  m.Vc_d1 = [](Complex x) { return x; };
  m.ground_log = [](double x) { return -x * x / 2; };
  m.W_d1 = [](double x) { return -x; };
  m.W_d2 = [](double) { return -1.0; };
  attach_classical_poly(m, {Family::Hermite, {}});
  return m;
}

ModelSpec sym_poschl_teller(double g) {
  require(g > 0, "g > 0");
  ModelSpec m;
  m.name = ModelName::SymPoschlTeller;
  m.kind = ModelKind::Ordinary;
  m.label = "sym-poschl-teller";
  m.params = {g};
  m.domain_lo = 0.0;
  m.domain_hi = kPi;
  m.window_lo = 0.02 * kPi;
  m.window_hi = 0.98 * kPi;
  m.energy_fn = [g](int n) { return n * (n / 2.0 + g); };
  m.eta = [](Complex x) { return std::cos(x); };
  m.eta_d1 = [](Complex x) { return -std::sin(x); };
  m.eta_d2 = [](double x) { return -std::cos(x); };
  m.R0 = {g * g - 0.25, 2.0};
  m.R1 = {1.0};
  m.Rm1 = {0.0};
  m.R0_cl = {g * g, 2.0};
  m.Rm1_cl = {0.0};
  double beta = g - 0.5;
  m.ladder_A = [g](int n) {
    return (n + 1) * (n + 2 * g) / ((n + g) * (2 * n + 2 * g + 1));
  };
  m.ladder_B = [](int) { return 0.0; };
  m.ladder_C = [g](int n) { return (n + g - 0.5) / (2.0 * (n + g)); };
  m.V = [g](Complex x) {
    Complex s = std::sin(x);
    return (g * (g - 1) / (s * s) - g * g) / 2.0;
  };
  m.Vc = [g](Complex x) {
    Complex c = std::cos(x) / std::sin(x);
    return g * g * c * c / 2.0;
  };
  m.Vc_d1 = [g](Complex x) {
    Complex s = std::sin(x);
    return -g * g * std::cos(x) / (s * s * s);
  };
  m.ground_log = [g](double x) { return g * std::log(std::sin(x)); };
  m.W_d1 = [g](double x) { return g / std::tan(x); };
  m.W_d2 = [g](double x) { return -g / (std::sin(x) * std::sin(x)); };
  attach_classical_poly(m, {Family::Jacobi, {beta, beta}});
  return m;
}

ModelSpec poschl_teller(double g, double h) {
  require(g > 0, "g > 0");
  require(h > 0, "h > 0");
  ModelSpec m;
  m.name = ModelName::PoschlTeller;
  m.kind = ModelKind::Ordinary;
  m.label = "poschl-teller";
  m.params = {g, h};
  m.domain_lo = 0.0;
  m.domain_hi = kPi / 2;
  m.window_lo = 0.02 * kPi / 2;
  m.window_hi = 0.98 * kPi / 2;
  m.energy_fn = [g, h](int n) { return 2.0 * n * (n + g + h); };
  m.eta = [](Complex x) { return std::cos(2.0 * x); };
  m.eta_d1 = [](Complex x) { return -2.0 * std::sin(2.0 * x); };
  m.eta_d2 = [](double x) { return -4.0 * std::cos(2.0 * x); };
  double al = g - 0.5, be = h - 0.5;
  m.R0 = {4 * (g + h) * (g + h) - 4, 8.0};
  m.R1 = {4.0};
  m.Rm1 = {4 * (g - h) * (g + h - 1)};
  m.R0_cl = {4 * (g + h) * (g + h), 8.0};
  m.Rm1_cl = {4 * (g * g - h * h)};
  attach_ladder(m, tt_jacobi(al, be));
  m.V = [g, h](Complex x) {
    Complex s = std::sin(x), c = std::cos(x);
    return (g * (g - 1) / (s * s) + h * (h - 1) / (c * c) -
            (g + h) * (g + h)) /
           2.0;
  };
  m.Vc = [g, h](Complex x) {
    Complex w = g * std::cos(x) / std::sin(x) - h * std::sin(x) / std::cos(x);
    return w * w / 2.0;
  };
  m.Vc_d1 = [g, h](Complex x) {
    Complex s = std::sin(x), c = std::cos(x);
    Complex w = g * c / s - h * s / c;
    return w * (-g / (s * s) - h / (c * c));
  };
  m.ground_log = [g, h](double x) {
    return g * std::log(std::sin(x)) + h * std::log(std::cos(x));
  };
  m.W_d1 = [g, h](double x) { return g / std::tan(x) - h * std::tan(x); };
  m.W_d2 = [g, h](double x) {
    double s = std::sin(x), c = std::cos(x);
    return -g / (s * s) - h / (c * c);
  };
  attach_classical_poly(m, {Family::Jacobi, {al, be}});
  return m;
}

ModelSpec soliton(double g) {
  require(g > 0, "g > 0");
  ModelSpec m;
  m.name = ModelName::Soliton;
  m.kind = ModelKind::Ordinary;
  m.label = "soliton";
  m.params = {g};
  m.domain_lo = -kInf;
  m.domain_hi = kInf;
  m.window_lo = -2.5;
  m.window_hi = 2.5;
  m.level_count = 1 + floor_prime(g);
  m.energy_fn = [g](int n) { return n * (-n / 2.0 + g); };
  m.eta = [](Complex x) { return std::sinh(x); };
  m.eta_d1 = [](Complex x) { return std::cosh(x); };
  m.eta_d2 = [](double x) { return std::sinh(x); };
  m.R0 = {g * g - 0.25, -2.0};
  m.R1 = {-1.0};
  m.Rm1 = {0.0};
  m.R0_cl = {g * g, -2.0};
  m.Rm1_cl = {0.0};
  double beta = -g - 0.5;
  m.ladder_A = [g, beta](int n) {
    return -(n + 1) * (n + 2 * beta + 1) / ((n + beta + 1) * 2 * (g - n));
  };
  m.ladder_B = [](int) { return 0.0; };
  m.ladder_C = [g, beta](int n) { return (n + beta) / (2.0 * (g - n)); };
  m.V = [g](Complex x) {
    Complex c = std::cosh(x);
    return (g * g - g * (g + 1) / (c * c)) / 2.0;
  };
  m.Vc = [g](Complex x) {
    Complex t = std::tanh(x);
    return g * g * t * t / 2.0;
  };
  m.Vc_d1 = [g](Complex x) {
    Complex c = std::cosh(x);
    return g * g * std::tanh(x) / (c * c);
  };
  m.ground_log = [g](double x) { return -g * std::log(std::cosh(x)); };
  m.W_d1 = [g](double x) { return -g * std::tanh(x); };
  m.W_d2 = [g](double x) {
    return -g / (std::cosh(x) * std::cosh(x));
  };
  // real polynomial in eta = sinh x evaluated through the Jacobi series at
  // imaginary argument; the i^{-n} prefactor keeps it real
  PolynomialFamily fam{Family::Jacobi, {beta, beta}};
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return std::pow(-kI, n) * orthopoly::eval_hypergeometric(fam, n, kI * e);
  };
  m.P_d1 = [fam](int n, Complex e) {
    return std::pow(-kI, n) * kI * orthopoly::derivative_c(fam, n, kI * e, 1);
  };
  m.P_d2 = [fam](int n, Complex e) {
    return -std::pow(-kI, n) * orthopoly::derivative_c(fam, n, kI * e, 2);
  };
  return m;
}

ModelSpec morse(double g, double mu) {
  require(g > 0, "g > 0");
  require(mu > 0, "mu > 0");
  ModelSpec m;
  m.name = ModelName::Morse;
  m.kind = ModelKind::Ordinary;
  m.label = "morse";
  m.params = {g, mu};
  m.domain_lo = -kInf;
  m.domain_hi = kInf;
  m.window_lo = -2.5;
  m.window_hi = 2.0;
  m.level_count = 1 + floor_prime(g);
  m.energy_fn = [g](int n) { return n * (-n / 2.0 + g); };
  m.eta = [](Complex x) { return std::exp(-x); };
  m.eta_d1 = [](Complex x) { return -std::exp(-x); };
  m.eta_d2 = [](double x) { return std::exp(-x); };
  m.R0 = {g * g - 0.25, -2.0};
  m.R1 = {-1.0};
  m.Rm1 = {-mu * (g + 0.5)};
  m.R0_cl = {g * g, -2.0};
  m.Rm1_cl = {-mu * g};
  m.ladder_A = [g](int n) {
    return (n + 1) * (2 * g - n) / ((2 * (g - n) - 1) * 2 * (g - n));
  };
  m.ladder_B = [g, mu](int n) {
    return 2 * mu * (2 * g + 1) / ((2 * (g - n) - 1) * (2 * (g - n) + 1));
  };
  m.ladder_C = [g, mu](int n) {
    return 4 * mu * mu / ((2 * (g - n) + 1) * 2 * (g - n));
  };
  m.V = [g, mu](Complex x) {
    Complex e = std::exp(x);
    return (mu * mu * e * e - mu * (2 * g + 1) * e + g * g) / 2.0;
  };
  m.Vc = [g, mu](Complex x) {
    Complex w = mu * std::exp(x) - g;
    return w * w / 2.0;
  };
  m.Vc_d1 = [g, mu](Complex x) {
    Complex e = mu * std::exp(x);
    return (e - g) * e;
  };
  m.ground_log = [g, mu](double x) { return -mu * std::exp(x) + g * x; };
  m.W_d1 = [g, mu](double x) { return -mu * std::exp(x) + g; };
  m.W_d2 = [mu](double x) { return -mu * std::exp(x); };
  // P_n(eta) = eta^n L_n^{(2g-2n)}(2 mu / eta), expanded into monomials
  auto coeffs = [g, mu](int n) {
    std::vector<double> c(n + 1);  // c[k] multiplies eta^k
    double al = 2 * g - 2 * n;
    for (int k = 0; k <= n; ++k) {
      // descending term index: eta^{n-k} carries (-2mu)^k (al+k+1)_{n-k}/(k!(n-k)!)
      double v = 1.0;
      for (int j = 1; j <= k; ++j) v *= -2.0 * mu / j;
      double pr = 1.0;
      for (int j = 0; j < n - k; ++j) pr *= (al + k + 1 + j);
      double fact = 1.0;
      for (int j = 2; j <= n - k; ++j) fact *= j;
      c[n - k] = v * pr / fact;
    }
    return c;
  };
  m.family = {Family::Laguerre, {2 * g}};  // level-dependent superscript; P below is exact
  m.P = [coeffs](int n, Complex e) {
    auto c = coeffs(n);
    Complex r = 0.0;
    for (int k = n; k >= 0; --k) r = r * e + c[k];
    return r;
  };
  m.P_d1 = [coeffs](int n, Complex e) {
    auto c = coeffs(n);
    Complex r = 0.0;
    for (int k = n; k >= 1; --k) r = r * e + double(k) * c[k];
    return r;
  };
  m.P_d2 = [coeffs](int n, Complex e) {
    auto c = coeffs(n);
    Complex r = 0.0;
    for (int k = n; k >= 2; --k) r = r * e + double(k) * double(k - 1) * c[k];
    return r;
  };
  return m;
}

ModelSpec radial_oscillator(double g) {
  require(g > 0, "g > 0");
  ModelSpec m;
  m.name = ModelName::RadialOscillator;
  m.kind = ModelKind::Ordinary;
  m.label = "radial-oscillator";
  m.params = {g};
  m.domain_lo = 0.0;
  m.domain_hi = kInf;
  m.window_lo = 0.15;
  m.window_hi = 3.5;
  m.energy_fn = [](int n) { return 2.0 * n; };
  m.eta = [](Complex x) { return x * x; };
  m.eta_d1 = [](Complex x) { return 2.0 * x; };
  m.eta_d2 = [](double) { return 2.0; };
  m.R0 = {4.0};
  m.R1 = {0.0};
  m.Rm1 = {-4 * g - 2, -4.0};
  m.R0_cl = {4.0};
  m.Rm1_cl = {-4 * g, -4.0};
  double beta = g - 0.5;
  attach_ladder(m, tt_laguerre(beta));
  m.V = [g](Complex x) {
    return (x * x + g * (g - 1) / (x * x) - 2 * g - 1.0) / 2.0;
  };
  m.Vc = [g](Complex x) {
    Complex w = x - g / x;
    return w * w / 2.0;
  };
  m.Vc_d1 = [g](Complex x) {
    return (x - g / x) * (1.0 + g / (x * x));
  };
  m.ground_log = [g](double x) { return -x * x / 2 + g * std::log(x); };
  m.W_d1 = [g](double x) { return -x + g / x; };
  m.W_d2 = [g](double x) { return -1.0 - g / (x * x); };
  attach_classical_poly(m, {Family::Laguerre, {beta}});
  return m;
}

// ------------------------------------------------------------- difference

ModelSpec meixner_pollaczek(double a) {
  require(a > 0, "a > 0");
  ModelSpec m;
  m.name = ModelName::MeixnerPollaczek;
  m.kind = ModelKind::DiscreteUnitShift;
  m.label = "meixner-pollaczek";
  m.params = {a};
  m.domain_lo = -kInf;
  m.domain_hi = kInf;
  m.window_lo = -4.0;
  m.window_hi = 4.0;
  m.energy_fn = [](int n) { return double(n); };
  m.eta = [](Complex x) { return x; };
  m.eta_d1 = [](Complex) { return Complex(1.0); };
  m.eta_d2 = [](double) { return 0.0; };
  m.R0 = {1.0};
  m.R1 = {0.0};
  m.Rm1 = {0.0};
  m.R0_cl = {1.0};
  m.Rm1_cl = {0.0};
  attach_ladder(m, tt_meixner_pollaczek(a));
  m.V = [a](Complex x) { return a + kI * x; };
  m.Vc = m.V;
  m.Vc_d1 = [](Complex) { return kI; };
  m.ground_log = [a](double x) { return re_lgamma(a, x); };
  m.ground_log_sq = [a](Complex z) {
    return log_gamma(a + kI * z) + log_gamma(a - kI * z);
  };
  PolynomialFamily fam{Family::MeixnerPollaczek, {a}};
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return orthopoly::eval_hypergeometric(fam, n, e);
  };
  m.shape.lambda = {a};
  m.shape.delta = {0.5};
  m.shape.varphi = [](Complex) { return Complex(1.0); };
  m.shape.f_n = [](int) { return 2.0; };
  m.shape.b_n = [](int n) { return double(n + 1); };
  m.shape.has_shift_ops = true;
  m.shifted_model = [a]() { return meixner_pollaczek(a + 0.5); };
  return m;
}

ModelSpec continuous_hahn(double a1, double a2) {
  require(a1 > 0, "a_1 > 0");
  require(a2 > 0, "a_2 > 0");
  ModelSpec m;
  m.name = ModelName::ContinuousHahn;
  m.kind = ModelKind::DiscreteUnitShift;
  m.label = "continuous-hahn";
  m.params = {a1, a2};
  m.domain_lo = -kInf;
  m.domain_hi = kInf;
  m.window_lo = -4.0;
  m.window_hi = 4.0;
  double s = a1 + a2;
  m.energy_fn = [s](int n) { return n * (n + 2 * s - 1) / 2.0; };
  m.eta = [](Complex x) { return x; };
  m.eta_d1 = [](Complex) { return Complex(1.0); };
  m.eta_d2 = [](double) { return 0.0; };
  m.R0 = {(s - 0.5) * (s - 0.5) - 0.25, 2.0};
  m.R1 = {1.0};
  m.Rm1 = {0.0};
  m.R0_cl = {s * s, 2.0};
  m.Rm1_cl = {0.0};
  attach_ladder(m, tt_continuous_hahn(a1, a2));
  m.V = [a1, a2](Complex x) { return (a1 + kI * x) * (a2 + kI * x); };
  m.Vc = m.V;
  m.Vc_d1 = [a1, a2](Complex x) {
    return kI * (a1 + kI * x) + kI * (a2 + kI * x);
  };
  m.ground_log = [a1, a2](double x) {
    return re_lgamma(a1, x) + re_lgamma(a2, x);
  };
  m.ground_log_sq = [a1, a2](Complex z) {
    return log_gamma(a1 + kI * z) + log_gamma(a1 - kI * z) +
           log_gamma(a2 + kI * z) + log_gamma(a2 - kI * z);
  };
  PolynomialFamily fam{Family::ContinuousHahnSpecial, {a1, a2}};
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return orthopoly::eval_hypergeometric(fam, n, e);
  };
  m.shape.lambda = {a1, a2};
  m.shape.delta = {0.5, 0.5};
  m.shape.varphi = [](Complex) { return Complex(1.0); };
  m.shape.f_n = [s](int n) { return n + 2 * s - 1; };
  m.shape.b_n = [](int n) { return double(n + 1); };
  m.shape.has_shift_ops = true;
  m.shifted_model = [a1, a2]() { return continuous_hahn(a1 + 0.5, a2 + 0.5); };
  return m;
}

ModelSpec continuous_dual_hahn(const std::array<double, 3>& a) {
  for (double aj : a) require(aj > 0, "a_j > 0");
  ModelSpec m;
  m.name = ModelName::ContinuousDualHahn;
  m.kind = ModelKind::DiscreteUnitShift;
  m.label = "continuous-dual-hahn";
  m.params = {a[0], a[1], a[2]};
  m.domain_lo = 0.0;
  m.domain_hi = kInf;
  m.window_lo = 0.25;
  m.window_hi = 5.0;
  m.energy_fn = [](int n) { return n / 2.0; };
  m.eta = [](Complex x) { return x * x; };
  m.eta_d1 = [](Complex x) { return 2.0 * x; };
  m.eta_d2 = [](double) { return 2.0; };
  double b1 = a[0] + a[1] + a[2];
  double b2 = a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
  m.R0 = {0.25};
  m.R1 = {0.0};
  m.Rm1 = {-b2 / 4, -(b1 - 0.5), -2.0};
  m.R0_cl = {0.25};
  m.Rm1_cl = {-b2 / 4, -b1, -2.0};
  attach_ladder(m, tt_continuous_dual_hahn(a));
  m.V = [a](Complex x) {
    return (a[0] + kI * x) * (a[1] + kI * x) * (a[2] + kI * x) /
           ((2.0 * kI * x) * (2.0 * kI * x + 1.0));
  };
  m.Vc = [a](Complex x) {
    return -(a[0] + kI * x) * (a[1] + kI * x) * (a[2] + kI * x) /
           (4.0 * x * x);
  };
  {
    auto vc = m.Vc;
    m.Vc_d1 = [a, vc](Complex x) {
      Complex sum = 0.0;
      for (double aj : a) sum += kI / (aj + kI * x);
      return vc(x) * (sum - 2.0 / x);
    };
  }
  m.ground_log = [a](double x) {
    return re_lgamma(a[0], x) + re_lgamma(a[1], x) + re_lgamma(a[2], x) -
           re_lgamma(0.0, 2 * x);
  };
  m.ground_log_sq = [a](Complex z) {
    Complex sum = 0.0;
    for (double aj : a) sum += log_gamma(aj + kI * z) + log_gamma(aj - kI * z);
    return sum - log_gamma(2.0 * kI * z) - log_gamma(-2.0 * kI * z);
  };
  PolynomialFamily fam{Family::ContinuousDualHahn, {a[0], a[1], a[2]}};
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return orthopoly::eval_hypergeometric(fam, n, e);
  };
  m.shape.lambda = {a[0], a[1], a[2]};
  m.shape.delta = {0.5, 0.5, 0.5};
  m.shape.varphi = [](Complex x) { return 2.0 * x; };
  m.shape.f_n = [](int n) { return -double(n); };
  m.shape.b_n = [](int) { return -1.0; };
  m.shape.has_shift_ops = true;
  m.shifted_model = [a]() {
    return continuous_dual_hahn({a[0] + 0.5, a[1] + 0.5, a[2] + 0.5});
  };
  return m;
}

ModelSpec wilson(const std::array<double, 4>& a) {
  for (double aj : a) require(aj > 0, "a_j > 0");
  ModelSpec m;
  m.name = ModelName::Wilson;
  m.kind = ModelKind::DiscreteUnitShift;
  m.label = "wilson";
  m.params = {a[0], a[1], a[2], a[3]};
  m.domain_lo = 0.0;
  m.domain_hi = kInf;
  m.window_lo = 0.25;
  m.window_hi = 5.0;
  double b1 = 0, b2 = 0, b3 = 0;
  for (int i = 0; i < 4; ++i) {
    b1 += a[i];
    for (int j = i + 1; j < 4; ++j) {
      b2 += a[i] * a[j];
      for (int k = j + 1; k < 4; ++k) b3 += a[i] * a[j] * a[k];
    }
  }
  m.energy_fn = [b1](int n) { return n * (n + b1 - 1) / 2.0; };
  m.eta = [](Complex x) { return x * x; };
  m.eta_d1 = [](Complex x) { return 2.0 * x; };
  m.eta_d2 = [](double) { return 2.0; };
  m.R0 = {b1 * (b1 - 2) / 4, 2.0};
  m.R1 = {1.0};
  m.Rm1 = {-(b1 - 2) * b3 / 4, -(b2 - b1 / 2), -2.0};
  m.R0_cl = {b1 * b1 / 4, 2.0};
  m.Rm1_cl = {-b1 * b3 / 4, -b2, -2.0};
  attach_ladder(m, tt_wilson(a));
  m.V = [a](Complex x) {
    Complex num = 1.0;
    for (double aj : a) num *= (aj + kI * x);
    return num / ((2.0 * kI * x) * (2.0 * kI * x + 1.0));
  };
  m.Vc = [a](Complex x) {
    Complex num = 1.0;
    for (double aj : a) num *= (aj + kI * x);
    return -num / (4.0 * x * x);
  };
  {
    auto vc = m.Vc;
    m.Vc_d1 = [a, vc](Complex x) {
      Complex sum = 0.0;
      for (double aj : a) sum += kI / (aj + kI * x);
      return vc(x) * (sum - 2.0 / x);
    };
  }
  m.ground_log = [a](double x) {
    double s = -re_lgamma(0.0, 2 * x);
    for (double aj : a) s += re_lgamma(aj, x);
    return s;
  };
  m.ground_log_sq = [a](Complex z) {
    Complex sum = 0.0;
    for (double aj : a) sum += log_gamma(aj + kI * z) + log_gamma(aj - kI * z);
    return sum - log_gamma(2.0 * kI * z) - log_gamma(-2.0 * kI * z);
  };
  PolynomialFamily fam{Family::Wilson, {a[0], a[1], a[2], a[3]}};
  m.family = fam;
  m.P = [fam](int n, Complex e) {
    return orthopoly::eval_hypergeometric(fam, n, e);
  };
  m.shape.lambda = m.params;
  m.shape.delta = {0.5, 0.5, 0.5, 0.5};
  m.shape.varphi = [](Complex x) { return 2.0 * x; };
  m.shape.f_n = [b1](int n) { return -double(n) * (n + b1 - 1); };
  m.shape.b_n = [](int) { return -1.0; };
  m.shape.has_shift_ops = true;
  m.shifted_model = [a]() {
    return wilson({a[0] + 0.5, a[1] + 0.5, a[2] + 0.5, a[3] + 0.5});
  };
  return m;
}

ModelSpec askey_wilson(const std::array<double, 4>& a, double q) {
  require(q > 0 && q < 1, "0 < q < 1");
  for (double aj : a) require(aj > -1 && aj < 1, "-1 < a_j < 1");
  double b4 = a[0] * a[1] * a[2] * a[3];
  require(b4 < q, "a_1 a_2 a_3 a_4 < q");
  ModelSpec m;
  m.name = ModelName::AskeyWilson;
  m.kind = ModelKind::DiscreteQShift;
  m.label = "askey-wilson";
  m.params = {a[0], a[1], a[2], a[3], q};
  m.domain_lo = 0.0;
  m.domain_hi = kPi;
  m.window_lo = 0.02 * kPi;
  m.window_hi = 0.98 * kPi;
  m.shift_scale = std::log(q);
  double b1 = 0, b3 = 0;
  for (int i = 0; i < 4; ++i) {
    b1 += a[i];
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) b3 += a[i] * a[j] * a[k];
  }
  m.energy_fn = [b4, q](int n) {
    return (std::pow(q, -n) - 1) * (1 - b4 * std::pow(q, n - 1)) / 2.0;
  };
  m.eta = [](Complex x) { return std::cos(x); };
  m.eta_d1 = [](Complex x) { return -std::sin(x); };
  m.eta_d2 = [](double x) { return -std::cos(x); };
  double kap = q * (1 / q - 1) * (1 / q - 1);
  double c = (1 + b4 / q) / 2;
  m.R0 = {kap * (c * c - (1 + 1 / q) * (1 + 1 / q) * b4 / 4), 2 * kap * c, kap};
  m.R1 = {kap * c, kap};
  m.Rm1 = {-kap * (1 - b4 / (q * q)) * (b1 - b3) / 8,
           -kap * (b1 + b3 / q) / 4};
  double g2 = std::log(q) * std::log(q);
  m.R0_cl = {g2 * (1 - b4) * (1 - b4) / 4, g2 * (1 + b4), g2};
  m.Rm1_cl = {-g2 * (1 - b4) * (b1 - b3) / 8, -g2 * (b1 + b3) / 4};
  attach_ladder(m, tt_askey_wilson(a, q));
  m.V = [a, q](Complex x) {
    Complex z = std::exp(kI * x);
    Complex num = 1.0;
    for (double aj : a) num *= (1.0 - aj * z);
    return num / ((1.0 - z * z) * (1.0 - q * z * z));
  };
  m.Vc = [a](Complex x) {
    Complex z = std::exp(kI * x);
    Complex num = 1.0;
    for (double aj : a) num *= (1.0 - aj * z);
    Complex d = 1.0 - z * z;
    return num / (d * d);
  };
  {
    auto vc = m.Vc;
    m.Vc_d1 = [a, vc](Complex x) {
      Complex z = std::exp(kI * x);
      Complex sum = 0.0;
      for (double aj : a) sum -= aj / (1.0 - aj * z);
      sum += 4.0 * z / (1.0 - z * z);
      return vc(x) * kI * z * sum;
    };
  }
  m.ground_log = [a, q](double x) {
    Complex z = std::exp(kI * x);
    Complex num = specfun::q_pochhammer_inf(z * z, q).value;
    double s = std::log(std::norm(num));
    for (double aj : a)
      s -= std::log(std::norm(specfun::q_pochhammer_inf(aj * z, q).value));
    return s / 2;
  };
  PolynomialFamily fam{Family::AskeyWilson, {a[0], a[1], a[2], a[3], q}};
  m.family = fam;
  // The defining basic-hypergeometric sum amplifies roundoff by roughly
  // q^{-n(n-1)/2}; the recurrence is the numerically usable route at this q.
  auto tt = tt_askey_wilson(a, q);
  m.P = [tt](int n, Complex e) {
    return orthopoly::eval_recurrence_with(tt, n, e);
  };
  m.shape.lambda = {a[0], a[1], a[2], a[3]};
  m.shape.delta = {0.5, 0.5, 0.5, 0.5};
  m.shape.delta_prime = -0.5;
  m.shape.multiplicative_shift = true;
  m.shape.varphi = [](Complex x) { return -2.0 * std::sin(x); };
  m.shape.f_n = [b4, q](int n) {
    return -std::pow(q, n / 2.0) * (std::pow(q, -n) - 1) *
           (1 - b4 * std::pow(q, n - 1));
  };
  m.shape.b_n = [q](int n) { return -std::pow(q, -(n + 1) / 2.0); };
  m.shape.has_shift_ops = true;
  double rq = std::sqrt(q);
  m.shifted_model = [a, q, rq]() {
    return askey_wilson({a[0] * rq, a[1] * rq, a[2] * rq, a[3] * rq}, q);
  };
  return m;
}

// ------------------------------------------------------------------ access

ModelSpec get_model(ModelName name, const std::vector<double>& p) {
  auto need = [&](size_t k) {
    if (p.size() != k)
      throw ConstraintError("model expects " + std::to_string(k) +
                            " parameters, got " + std::to_string(p.size()));
  };
  switch (name) {
    case ModelName::Harmonic: need(0); return harmonic();
    case ModelName::SymPoschlTeller: need(1); return sym_poschl_teller(p[0]);
    case ModelName::PoschlTeller: need(2); return poschl_teller(p[0], p[1]);
    case ModelName::Soliton: need(1); return soliton(p[0]);
    case ModelName::Morse:
      if (p.size() == 1) return morse(p[0]);
      need(2);
      return morse(p[0], p[1]);
    case ModelName::RadialOscillator: need(1); return radial_oscillator(p[0]);
    case ModelName::MeixnerPollaczek: need(1); return meixner_pollaczek(p[0]);
    case ModelName::ContinuousHahn: need(2); return continuous_hahn(p[0], p[1]);
    case ModelName::ContinuousDualHahn:
      need(3);
      return continuous_dual_hahn({p[0], p[1], p[2]});
    case ModelName::Wilson: need(4); return wilson({p[0], p[1], p[2], p[3]});
    case ModelName::AskeyWilson:
      need(5);
      return askey_wilson({p[0], p[1], p[2], p[3]}, p[4]);
  }
  throw ConstraintError("unknown model");
}

ModelSpec get_model(const std::string& label, const std::vector<double>& p) {
  static const std::map<std::string, ModelName> names = {
      {"harmonic", ModelName::Harmonic},
      {"sym-poschl-teller", ModelName::SymPoschlTeller},
      {"poschl-teller", ModelName::PoschlTeller},
      {"soliton", ModelName::Soliton},
      {"morse", ModelName::Morse},
      {"radial-oscillator", ModelName::RadialOscillator},
      {"meixner-pollaczek", ModelName::MeixnerPollaczek},
      {"continuous-hahn", ModelName::ContinuousHahn},
      {"continuous-dual-hahn", ModelName::ContinuousDualHahn},
      {"wilson", ModelName::Wilson},
      {"askey-wilson", ModelName::AskeyWilson},
  };
  auto it = names.find(label);
  if (it == names.end())
    throw ConstraintError("unknown model '" + label + "'");
  return get_model(it->second, p);
}

std::vector<std::string> model_labels() {
  return {"harmonic",          "sym-poschl-teller",    "poschl-teller",
          "soliton",           "morse",                "radial-oscillator",
          "meixner-pollaczek", "continuous-hahn",      "continuous-dual-hahn",
          "wilson",            "askey-wilson"};
}

double energy(const ModelSpec& spec, int n) {
  if (n < 0 || n >= spec.level_count)
    throw ConstraintError("level index n out of range for model " +
                          spec.label);
  return spec.energy_fn(n);
}

Complex eigenfunction(const ModelSpec& spec, int n, double x) {
  if (n < 0 || n >= spec.level_count)
    throw ConstraintError("level index n out of range");
  if (!(x > spec.domain_lo && x < spec.domain_hi))
    throw DomainError("x outside the open domain of " + spec.label);
  return std::exp(spec.ground_log(x)) * spec.P(n, spec.eta(Complex(x)));
}

LadderTriple ladder_coefficients(const ModelSpec& spec, int n) {
  if (n < 0 || n >= spec.level_count)
    throw ConstraintError("level index n out of range");
  double C = (n == 0) ? 0.0 : spec.ladder_C(n);
  return {spec.ladder_A(n), spec.ladder_B(n), C};
}

double eval_poly(const std::vector<double>& coeffs, double x) {
  double r = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

std::pair<double, double> heisenberg_frequencies(const ModelSpec& spec,
                                                 double E) {
  double r1 = eval_poly(spec.R1, E), r0 = eval_poly(spec.R0, E);
  double disc = r1 * r1 + 4 * r0;
  if (disc < 0)
    throw DomainError("negative discriminant: E outside the spectral range");
  double s = std::sqrt(disc);
  return {(r1 + s) / 2, (r1 - s) / 2};
}

double ladder_norm_factor(const ModelSpec& spec, int n) {
  auto [ap, am] = heisenberg_frequencies(spec, spec.energy_fn(n));
  return ap - am;
}

Complex v_star(const ModelSpec& spec, Complex x) {
  return std::conj(spec.V(std::conj(x)));
}

Complex vc_star(const ModelSpec& spec, Complex x) {
  return std::conj(spec.Vc(std::conj(x)));
}

std::string to_json(const ModelSpec& spec, int n_max) {
  std::ostringstream os;
  os << "{\"name\": \"" << spec.label << "\", \"params\": [";
  for (size_t i = 0; i < spec.params.size(); ++i) {
    if (i) os << ", ";
    os << report::fmt_double(spec.params[i]);
  }
  os << "], \"level_count\": ";
  if (spec.level_count == kInfiniteLevels)
    os << "null";
  else
    os << spec.level_count;
  os << ", \"spectrum\": [";
  int top = std::min(n_max, spec.level_count - 1);
  for (int n = 0; n <= top; ++n) {
    if (n) os << ", ";
    os << report::fmt_double(spec.energy_fn(n));
  }
  os << "]}";
  return os.str();
}

}  // namespace ladderlab::models

// definition of the hook declared in orthopoly.hpp
namespace ladderlab::orthopoly {
ThreeTermCoeffs three_term_for(const PolynomialFamily& fam) {
  return models::detail::three_term_for_family(fam);
}
}  // namespace ladderlab::orthopoly

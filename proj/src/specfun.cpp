#include "ladderlab/specfun.hpp"

#include <cmath>

#include "ladderlab/detail/dd.hpp"

namespace ladderlab::specfun {

namespace {

// Lanczos coefficients, g = 607/128 (Godfrey set, ~15 significant digits).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4,
    0.15808870322491248884e-3,  -0.21026444172410488319e-3,
    0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4,
    0.36899182659531622704e-5};

Complex log_gamma_lanczos(Complex z) {
  // valid for Re z >= 0.5
  Complex zm1 = z - 1.0;
  Complex s = kLanczosC[0];
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (zm1 + double(k));
  Complex t = zm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (zm1 + 0.5) * std::log(t) - t +
         std::log(s);
}

constexpr double kTermTol = 1e-16;
constexpr int kMaxTerms = 10000;

// Smallest termination index over the upper parameters, or -1.
int termination_index(const std::vector<Complex>& upper) {
  int best = -1;
  for (const Complex& a : upper) {
    if (std::abs(a.imag()) < 1e-12 && a.real() < 0.5 &&
        nearly_integer(a.real())) {
      int m = int(-std::llround(a.real()));
      if (m >= 0 && (best < 0 || m < best)) best = m;
    }
  }
  return best;
}

}  // namespace

Complex pochhammer(Complex a, int n) {
  if (n < 0) throw ConstraintError("pochhammer: n must be non-negative");
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + double(k);
  return r;
}

Complex q_pochhammer(Complex a, double q, int n) {
  if (n < 0) throw ConstraintError("q_pochhammer: n must be non-negative");
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= 1.0 - a * std::pow(q, k);
  return r;
}

SeriesResult q_pochhammer_inf(Complex a, double q) {
  if (std::abs(q) >= 1.0)
    throw ConvergenceError("q_pochhammer_inf: divergent, |q| >= 1 required");
  SeriesResult res;
  Complex r = 1.0;
  Complex aq = a;
  int k = 0;
  while (std::abs(aq) >= 1e-18 && k < kMaxTerms) {
    r *= 1.0 - aq;
    aq *= q;
    ++k;
  }
  res.value = r;
  res.terms_used = k;
  // remaining factors multiply by 1 - a q^k (1 + O(q)); bound the defect
  res.truncation_estimate = std::abs(r) * std::abs(aq) / (1.0 - std::abs(q));
  return res;
}

Complex log_sin_pi(Complex z) {
  // Unwound along Re z so that the gamma reflection formula stays on the
  // principal branch of log Gamma; plain log(sin(pi z)) would fold the
  // imaginary part back into (-pi, pi].
  const Complex i(0.0, 1.0);
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 pi i z}), |e^{2 pi i z}| <= 1
  return Complex(-std::log(2.0), kPi / 2.0) - i * kPi * z +
         std::log(1.0 - std::exp(2.0 * kPi * i * z));
}

Complex log_gamma(Complex z) {
  if (std::abs(z.imag()) < 1e-14 && z.real() <= 0.0 &&
      nearly_integer(z.real(), 1e-13)) {
    throw DomainError("log_gamma: pole at non-positive integer");
  }
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: log Gamma(z) = log(pi) - log sin(pi z) - log Gamma(1-z)
  return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

SeriesResult hypergeometric(const std::vector<Complex>& upper,
                            const std::vector<Complex>& lower, Complex z) {
  const int n_term = termination_index(upper);
  const size_t r = upper.size(), s = lower.size();
  if (n_term < 0) {
    // convergence domain of the non-terminating series
    if (r > s + 1)
      throw ConvergenceError(
          "hypergeometric: non-terminating series with r > s+1 diverges");
    if (r == s + 1 && std::abs(z) >= 1.0)
      throw ConvergenceError(
          "hypergeometric: requires |z| < 1 for r = s+1 unless terminating");
  }
  SeriesResult res;
  // terms and partial sums in double-double: the terminating series that
  // define the deformed polynomials cancel strongly at moderate degree
  detail::cdd term{1.0}, sum{1.0};
  int small_streak = 0;
  const int n_max = (n_term >= 0) ? n_term : kMaxTerms;
  int n = 0;
  for (; n < n_max; ++n) {
    term = detail::mul(term, detail::cdd(z));
    for (const Complex& a : upper)
      term = detail::mul(term, detail::shift(a, n));
    for (const Complex& b : lower)
      term = detail::div(term, detail::shift(b, n));
    term = detail::div(term, detail::cdd(double(n + 1)));
    sum = detail::add(sum, term);
    if (n_term < 0) {
      if (term.abs_approx() < kTermTol * sum.abs_approx()) {
        if (++small_streak >= 3) {
          ++n;
          break;
        }
      } else {
        small_streak = 0;
      }
    }
  }
  if (n_term < 0 && n >= kMaxTerms)
    throw ConvergenceError("hypergeometric: series did not converge");
  res.value = sum.value();
  res.terms_used = n + 1;
  res.truncation_estimate = (n_term >= 0) ? 0.0 : term.abs_approx();
  return res;
}

SeriesResult basic_hypergeometric(const std::vector<Complex>& upper,
                                  const std::vector<Complex>& lower, double q,
                                  Complex z) {
  if (q <= 0.0 || q >= 1.0)
    throw ConstraintError("basic_hypergeometric: requires 0 < q < 1");
  const int extra = 1 + int(lower.size()) - int(upper.size());
  SeriesResult res;
  detail::cdd term{1.0}, sum{1.0};
  detail::dd qn{1.0};  // q^n
  int small_streak = 0;
  bool terminated = false;
  int n = 0;
  auto one_minus = [](Complex c, detail::dd qn_) {
    // 1 - c q^n in double-double
    return detail::cdd{
        detail::sub(detail::dd(1.0), detail::mul(detail::dd(c.real()), qn_)),
        detail::mul(detail::dd(-c.imag()), qn_)};
  };
  for (; n < kMaxTerms; ++n) {
    detail::cdd ratio(z);
    for (const Complex& a : upper) {
      detail::cdd f = one_minus(a, qn);
      if (f.abs_approx() < 1e-10 * (1.0 + std::abs(a) * qn.value())) {
        terminated = true;
        break;
      }
      ratio = detail::mul(ratio, f);
    }
    if (terminated) break;
    for (const Complex& b : lower)
      ratio = detail::div(ratio, one_minus(b, qn));
    for (int e = 0; e < extra; ++e)
      ratio = detail::mul(
          ratio, detail::cdd{detail::dd(-qn.hi, -qn.lo), detail::dd(0.0)});
    ratio = detail::div(ratio, one_minus(Complex(q), qn));
    term = detail::mul(term, ratio);
    sum = detail::add(sum, term);
    qn = detail::mul(qn, detail::dd(q));
    if (term.abs_approx() < kTermTol * sum.abs_approx()) {
      if (++small_streak >= 3) {
        ++n;
        break;
      }
    } else {
      small_streak = 0;
    }
  }
  if (!terminated && n >= kMaxTerms)
    throw ConvergenceError("basic_hypergeometric: series did not converge");
  res.value = sum.value();
  res.terms_used = n + 1;
  res.truncation_estimate = terminated ? 0.0 : term.abs_approx();
  return res;
}

Complex bessel_j(double a, Complex z) {
  if (a <= -1.0) throw ConstraintError("bessel_j: requires a > -1");
  if (z == Complex(0.0)) {
    if (a == 0.0) return 1.0;
    if (a > 0.0) return 0.0;
    throw DomainError("bessel_j: singular at z = 0 for a < 0");
  }
  SeriesResult f = hypergeometric({}, {Complex(a + 1.0)}, -z * z / 4.0);
  return std::pow(z / 2.0, a) * std::exp(-log_gamma(Complex(a + 1.0))) *
         f.value;
}

}  // namespace ladderlab::specfun

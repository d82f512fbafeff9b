#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ladderlab/specfun.hpp"

using namespace ladderlab;
using namespace ladderlab::specfun;

namespace {

// brute-force oracles, independent of the implementation path
Complex poch_oracle(Complex a, int n) {
  Complex r = 1.0;
  for (int k = 0; k < n; ++k) r *= a + double(k);
  return r;
}

Complex rfs_oracle(const std::vector<Complex>& up,
                   const std::vector<Complex>& lo, Complex z, int terms) {
  Complex s = 0.0;
  for (int n = 0; n < terms; ++n) {
    Complex t = std::pow(z, n);
    double fact = 1.0;
    for (int k = 2; k <= n; ++k) fact *= k;
    t /= fact;
    for (const Complex& a : up) t *= poch_oracle(a, n);
    for (const Complex& b : lo) t /= poch_oracle(b, n);
    s += t;
  }
  return s;
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(Complex(1.7, 0.3), 0) == Complex(1.0));
  CHECK(std::abs(pochhammer(2.0, 3) - Complex(24.0)) < 1e-14);
  CHECK(std::abs(pochhammer(0.5, 2) - Complex(0.75)) < 1e-16);
}

TEST_CASE("pochhammer recursion property") {
  const Complex as[] = {{0.3, 0.0}, {-2.5, 1.0}, {4.0, -3.0}, {0.0, 1.0}};
  for (Complex a : as) {
    for (int n = 0; n <= 30; ++n) {
      Complex lhs = pochhammer(a, n + 1);
      Complex rhs = pochhammer(a, n) * (a + double(n));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
}

TEST_CASE("q_pochhammer finite") {
  CHECK(q_pochhammer(Complex(0.3, 0.1), 0.5, 0) == Complex(1.0));
  CHECK(std::abs(q_pochhammer(0.5, 0.5, 2) - Complex(0.375)) < 1e-15);
}

TEST_CASE("q_pochhammer infinite") {
  CHECK(std::abs(q_pochhammer_inf(0.0, 0.5).value - Complex(1.0)) == 0.0);
  CHECK_THROWS_AS(q_pochhammer_inf(0.5, 1.0), ConvergenceError);
  // compare against a long finite product
  auto r = q_pochhammer_inf(Complex(0.4, 0.2), 0.7);
  Complex ref = q_pochhammer(Complex(0.4, 0.2), 0.7, 400);
  CHECK(std::abs(r.value - ref) < 1e-14 * std::abs(ref));
  CHECK(r.truncation_estimate >= 0.0);
}

TEST_CASE("q_pochhammer classical limit") {
  // (q^a; q)_n / (1-q)^n -> (a)_n as q -> 1
  const double q = 0.999;
  for (int n = 1; n <= 5; ++n) {
    for (double a : {0.5, 1.0, 2.3}) {
      Complex lhs = q_pochhammer(std::pow(q, a), q, n) / std::pow(1.0 - q, n);
      Complex rhs = pochhammer(a, n);
      CHECK(std::abs(lhs - rhs) < 0.01 * std::abs(rhs));
    }
  }
}

TEST_CASE("log_gamma reference values") {
  CHECK(std::abs(log_gamma(1.0)) < 1e-14);
  CHECK(std::abs(log_gamma(0.5) - Complex(0.57236494292470008707)) < 1e-13);
  CHECK(std::abs(log_gamma(5.0) - Complex(3.1780538303479456196)) < 1e-13);
  struct Ref {
    Complex z, lg;
  };
  // frozen from a 30-digit oracle
  const Ref refs[] = {
      {{3, 4}, {-1.7566267846037841105, 4.7426644380346579282}},
      {{0.25, 2.5}, {-3.2358405107546571083, -0.59779566073996209783}},
      {{-1.5, 0.5}, {0.00081546715251823463554, -5.9267657915075467186}},
      {{12.3, -7.1}, {16.21708928080515123, -17.913593904043185354}},
      {{40, 30}, {96.140147324970933798, 112.7779839809793069}},
  };
  for (const auto& r : refs) {
    CHECK(std::abs(log_gamma(r.z) - r.lg) < 1e-12 * std::abs(r.lg));
  }
  CHECK_THROWS_AS(log_gamma(Complex(-3.0, 0.0)), DomainError);
  CHECK_THROWS_AS(log_gamma(Complex(0.0, 0.0)), DomainError);
}

TEST_CASE("log_gamma functional equation on a complex grid") {
  int idx = 0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      double re = -4.0 + 9.0 * i / 9.0;
      double im = -5.0 + 10.0 * j / 9.0;
      Complex z(re + 0.13, im + 0.07);  // keep off the poles
      Complex lhs = std::exp(log_gamma(z + 1.0) - log_gamma(z));
      CHECK(std::abs(lhs - z) <= 1e-12 * (1.0 + std::abs(z)));
      ++idx;
    }
  }
  CHECK(idx == 100);
}

TEST_CASE("hypergeometric trivial and terminating") {
  CHECK(hypergeometric({Complex(1.3), Complex(-0.2)}, {Complex(2.0)}, 0.0)
            .value == Complex(1.0));
  // 2F1(-1, b; c; z) = 1 - b z / c
  Complex b(0.7, 0.2), c(1.9, -0.4), z(0.35, 0.1);
  auto r = hypergeometric({Complex(-1.0), b}, {c}, z);
  CHECK(std::abs(r.value - (1.0 - b * z / c)) < 1e-15);
  CHECK(r.truncation_estimate == 0.0);
}

TEST_CASE("hypergeometric 0F1 against series oracle") {
  auto r = hypergeometric({}, {Complex(1.0)}, -0.25);
  Complex ref = rfs_oracle({}, {Complex(1.0)}, -0.25, 30);
  CHECK(std::abs(r.value - ref) < 1e-14);
  CHECK(std::abs(r.value - Complex(0.76519768655796655145)) < 1e-12);
}

TEST_CASE("hypergeometric non-terminating 2F1") {
  auto r = hypergeometric({Complex(0.3), Complex(0.7)}, {Complex(1.1)}, 0.4);
  CHECK(std::abs(r.value - Complex(1.0986168348873369743)) < 1e-13);
  CHECK_THROWS_AS(
      hypergeometric({Complex(0.3), Complex(0.7)}, {Complex(1.1)}, 1.2),
      ConvergenceError);
  CHECK_THROWS_AS(
      hypergeometric({Complex(0.3), Complex(0.7), Complex(0.5)}, {}, 0.4),
      ConvergenceError);
}

TEST_CASE("terminating rFs equals Horner expansion") {
  // expand 2F1(-n, b; c; z) coefficients explicitly and evaluate by Horner
  Complex b(1.3, 0.0), c(0.9, 0.0);
  for (int n = 1; n <= 10; ++n) {
    std::vector<Complex> coef(n + 1);
    for (int k = 0; k <= n; ++k) {
      double fact = 1.0;
      for (int j = 2; j <= k; ++j) fact *= j;
      coef[k] = poch_oracle(Complex(double(-n)), k) * poch_oracle(b, k) /
                (poch_oracle(c, k) * fact);
    }
    for (double z : {-0.8, 0.3, 2.7}) {
      Complex horner = 0.0;
      for (int k = n; k >= 0; --k) horner = horner * z + coef[k];
      auto r = hypergeometric({Complex(double(-n)), b}, {c}, z);
      CHECK(std::abs(r.value - horner) <= 1e-13 * (1.0 + std::abs(horner)));
    }
  }
}

TEST_CASE("basic hypergeometric") {
  CHECK(basic_hypergeometric({Complex(0.3)}, {Complex(0.7)}, 0.5, 0.0).value ==
        Complex(1.0));
  // upper parameter q^0 = 1 kills every term past n = 0
  auto r = basic_hypergeometric(
      {Complex(1.0), Complex(0.5), Complex(0.25), Complex(0.125)},
      {Complex(0.3), Complex(0.4), Complex(0.6)}, 0.5, 0.5);
  CHECK(r.value == Complex(1.0));
  CHECK(r.truncation_estimate == 0.0);
  // small 1phi1 against a frozen 25-term direct sum
  auto s = basic_hypergeometric({Complex(0.3)}, {Complex(0.7)}, 0.5, 0.1);
  CHECK(std::abs(s.value - Complex(0.57273201312329959657)) < 1e-14);
}

TEST_CASE("bessel_j") {
  CHECK(bessel_j(0.0, 0.0) == Complex(1.0));
  CHECK(bessel_j(0.5, 0.0) == Complex(0.0));
  CHECK(std::abs(bessel_j(0.0, 1.0) - Complex(0.76519768655796655145)) <
        1e-13);
  CHECK_THROWS_AS(bessel_j(-1.5, 1.0), ConstraintError);
}

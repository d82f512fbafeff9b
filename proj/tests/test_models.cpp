#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ladderlab/models.hpp"

using namespace ladderlab;
using namespace ladderlab::models;

namespace {

std::vector<ModelSpec> all_models() {
  return {harmonic(),
          sym_poschl_teller(1.3),
          poschl_teller(1.1, 0.8),
          soliton(3.7),
          morse(3.7, 1.0),
          radial_oscillator(1.0),
          meixner_pollaczek(1.0),
          continuous_hahn(0.6, 0.9),
          continuous_dual_hahn({0.7, 1.1, 1.3}),
          wilson({0.7, 0.9, 1.1, 1.3}),
          askey_wilson({0.3, 0.4, 0.5, 0.6}, 0.5)};
}

}  // namespace

TEST_CASE("spectra match closed forms at spot points") {
  auto spt = sym_poschl_teller(1.0);
  CHECK(energy(spt, 2) == doctest::Approx(4.0).epsilon(1e-14));
  for (int n = 0; n < 6; ++n)
    CHECK(energy(spt, n) == doctest::Approx(n * (n / 2.0 + 1)).epsilon(1e-14));
  auto mp = meixner_pollaczek(1.0);
  for (int n = 0; n < 6; ++n)
    CHECK(energy(mp, n) == doctest::Approx(double(n)).epsilon(1e-14));
  auto aw = askey_wilson({0.5, 0.5, 0.5, 0.5}, 0.5);
  CHECK(energy(aw, 1) == doctest::Approx(0.46875).epsilon(1e-14));
  auto w = wilson({1, 1, 1, 1});
  CHECK(energy(w, 1) == doctest::Approx(2.0).epsilon(1e-14));
  for (const auto& m : all_models()) CHECK(energy(m, 0) == 0.0);
}

TEST_CASE("level counts for the finite models") {
  CHECK(soliton(3.7).level_count == 4);
  CHECK(morse(3.7).level_count == 4);
  // integer coupling: the top would-be level is not normalizable
  CHECK(soliton(2.0).level_count == 2);
  CHECK(morse(4.0).level_count == 4);
  CHECK_THROWS_AS(energy(soliton(3.7), 4), ConstraintError);
  CHECK_THROWS_AS(energy(morse(3.7), 17), ConstraintError);
}

TEST_CASE("constraint gates name the violated inequality") {
  CHECK_THROWS_WITH_AS(sym_poschl_teller(-1.0), "g > 0 violated",
                       ConstraintError);
  CHECK_THROWS_WITH_AS(wilson({-1, 1, 1, 1}), "a_j > 0 violated",
                       ConstraintError);
  CHECK_THROWS_AS(askey_wilson({0.5, 0.5, 0.5, 0.5}, 1.2), ConstraintError);
  CHECK_THROWS_AS(askey_wilson({0.9, 0.9, 0.9, 0.9}, 0.5), ConstraintError);
}

TEST_CASE("spectrum conditions: neighbouring level differences") {
  for (const auto& m : all_models()) {
    int top = std::min(25, m.level_count - 2);
    for (int n = 0; n <= top; ++n) {
      double En = m.energy_fn(n), En1 = m.energy_fn(n + 1);
      auto [ap, am] = heisenberg_frequencies(m, En);
      CHECK(En1 - En == doctest::Approx(ap).epsilon(1e-12));
      auto [ap1, am1] = heisenberg_frequencies(m, En1);
      CHECK(En - En1 == doctest::Approx(am1).epsilon(1e-12));
      (void)am;
      (void)ap1;
    }
  }
}

TEST_CASE("frequencies at spot points") {
  auto mp = meixner_pollaczek(1.0);
  auto [p1, m1] = heisenberg_frequencies(mp, 3.0);
  CHECK(p1 == doctest::Approx(1.0));
  CHECK(m1 == doctest::Approx(-1.0));
  auto spt = sym_poschl_teller(1.0);
  auto [p2, m2] = heisenberg_frequencies(spt, 0.0);
  CHECK(p2 == doctest::Approx(1.5));
  CHECK(m2 == doctest::Approx(-0.5));
  auto h = harmonic();
  auto [p3, m3] = heisenberg_frequencies(h, 5.0);
  CHECK(p3 == doctest::Approx(1.0));
  CHECK(m3 == doctest::Approx(-1.0));
}

TEST_CASE("frequency sum and product match R1 and R0") {
  for (const auto& m : all_models()) {
    int top = std::min(12, m.level_count - 1);
    for (int n = 0; n <= top; ++n) {
      double E = m.energy_fn(n);
      auto [ap, am] = heisenberg_frequencies(m, E);
      CHECK(ap + am ==
            doctest::Approx(eval_poly(m.R1, E)).epsilon(1e-12));
      CHECK(ap * am ==
            doctest::Approx(-eval_poly(m.R0, E)).epsilon(1e-12));
    }
  }
}

TEST_CASE("ladder coefficient spot values") {
  for (const auto& m : all_models())
    CHECK(ladder_coefficients(m, 0).C == 0.0);
  // a'-normalized down coefficient (n + beta) at n = 1, g = 1
  auto spt = sym_poschl_teller(1.0);
  double cp = ladder_coefficients(spt, 1).C * ladder_norm_factor(spt, 1);
  CHECK(cp == doctest::Approx(1.5).epsilon(1e-13));
  auto mp = meixner_pollaczek(1.0);
  double cp2 = ladder_coefficients(mp, 1).C * ladder_norm_factor(mp, 1);
  CHECK(cp2 == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("B_n equals -R_{-1}(E_n)/R_0(E_n)") {
  for (const auto& m : all_models()) {
    int top = std::min(15, m.level_count - 1);
    for (int n = 0; n <= top; ++n) {
      double E = m.energy_fn(n);
      double want = -eval_poly(m.Rm1, E) / eval_poly(m.R0, E);
      CHECK(m.ladder_B(n) == doctest::Approx(want).epsilon(1e-11));
    }
  }
}

TEST_CASE("eigenfunctions") {
  for (const auto& m : all_models()) {
    double x = 0.5 * (m.window_lo + m.window_hi);
    Complex phi0 = eigenfunction(m, 0, x);
    CHECK(phi0.real() > 0.0);
    CHECK(std::abs(phi0.imag()) <= 1e-14 * phi0.real());
  }
  auto sol = soliton(2.5);
  Complex v = eigenfunction(sol, 2, 0.7);
  CHECK(std::abs(v.imag()) <= 1e-12 * (1.0 + std::abs(v.real())));
  // compose ground state with the polynomial by hand
  auto mp = meixner_pollaczek(1.0);
  Complex direct = std::exp(mp.ground_log(0.5)) * mp.P(1, Complex(0.5));
  CHECK(std::abs(eigenfunction(mp, 1, 0.5) - direct) < 1e-15);
  CHECK_THROWS_AS(eigenfunction(sol, 4, 0.5), ConstraintError);
  auto spt = sym_poschl_teller(1.0);
  CHECK_THROWS_AS(eigenfunction(spt, 1, -0.3), DomainError);
}

TEST_CASE("model polynomial matches the recurrence route") {
  // dual route for every model, including the two with level-dependent
  // polynomial data
  for (const auto& m : all_models()) {
    orthopoly::ThreeTermCoeffs c{m.ladder_A, m.ladder_B, m.ladder_C};
    if (m.name == ModelName::AskeyWilson) continue;  // P is the recurrence
    int top = std::min(20, m.level_count - 1);
    for (int n = 0; n <= top; ++n) {
      double worst = 0.0, scale = 0.0;
      for (int i = 0; i < 25; ++i) {
        double x = m.window_lo + (m.window_hi - m.window_lo) * i / 24.0;
        Complex e = m.eta(Complex(x));
        Complex a = m.P(n, e);
        Complex b = orthopoly::eval_recurrence_with(c, n, e);
        worst = std::max(worst, std::abs(a - b));
        scale = std::max({scale, std::abs(a), 1.0e-300});
      }
      CHECK(worst <= 1e-10 * scale);
    }
  }
}

TEST_CASE("parameter permutation invariance of energies and states") {
  auto w1 = wilson({0.7, 0.9, 1.1, 1.3});
  auto w2 = wilson({1.3, 0.7, 0.9, 1.1});
  auto d1 = continuous_dual_hahn({0.7, 1.1, 1.3});
  auto d2 = continuous_dual_hahn({1.3, 0.7, 1.1});
  auto q1 = askey_wilson({0.3, 0.4, 0.5, 0.6}, 0.5);
  auto q2 = askey_wilson({0.6, 0.3, 0.4, 0.5}, 0.5);
  for (int n = 0; n <= 6; ++n) {
    CHECK(w1.energy_fn(n) == doctest::Approx(w2.energy_fn(n)).epsilon(1e-13));
    CHECK(d1.energy_fn(n) == doctest::Approx(d2.energy_fn(n)).epsilon(1e-13));
    CHECK(q1.energy_fn(n) == doctest::Approx(q2.energy_fn(n)).epsilon(1e-13));
    for (double x : {0.6, 1.4}) {
      Complex v1 = eigenfunction(w1, n, x), v2 = eigenfunction(w2, n, x);
      CHECK(std::abs(v1 - v2) <= 1e-12 * (1.0 + std::abs(v1)));
      Complex u1 = eigenfunction(q1, n, x), u2 = eigenfunction(q2, n, x);
      CHECK(std::abs(u1 - u2) <= 1e-12 * (1.0 + std::abs(u1)));
    }
  }
}

TEST_CASE("json export") {
  auto spt = sym_poschl_teller(1.0);
  std::string j = to_json(spt, 3);
  CHECK(j ==
        "{\"name\": \"sym-poschl-teller\", \"params\": [1], "
        "\"level_count\": null, \"spectrum\": [0, 1.5, 4, 7.5]}");
  std::string jm = to_json(morse(3.7), 10);
  CHECK(jm.find("\"level_count\": 4") != std::string::npos);
  // finite model: spectrum table truncates at the top level (4 entries)
  auto spec_pos = jm.find("\"spectrum\": [");
  REQUIRE(spec_pos != std::string::npos);
  std::string tail = jm.substr(spec_pos);
  CHECK(std::count(tail.begin(), tail.end(), ',') == 3);
}

TEST_CASE("get_model by label") {
  auto m = get_model("wilson", {1, 1, 1, 1});
  CHECK(m.name == ModelName::Wilson);
  CHECK_THROWS_AS(get_model("kepler", {1.0}), ConstraintError);
  CHECK_THROWS_AS(get_model("wilson", {1, 1}), ConstraintError);
}

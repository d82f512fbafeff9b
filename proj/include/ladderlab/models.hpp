#ifndef LADDERLAB_MODELS_HPP
#define LADDERLAB_MODELS_HPP

#include <array>
#include <climits>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ladderlab/common.hpp"
#include "ladderlab/orthopoly.hpp"
#include "ladderlab/shape_data.hpp"

namespace ladderlab::models {

enum class ModelName {
  Harmonic,
  SymPoschlTeller,
  PoschlTeller,
  Soliton,
  Morse,
  RadialOscillator,
  MeixnerPollaczek,
  ContinuousHahn,
  ContinuousDualHahn,
  Wilson,
  AskeyWilson,
};

enum class ModelKind { Ordinary, DiscreteUnitShift, DiscreteQShift };

inline constexpr int kInfiniteLevels = INT_MAX;

// Immutable description of one solvable system.  Every member is a closed
// form; nothing here is computed numerically except through the closures.
struct ModelSpec {
  ModelName name{};
  ModelKind kind{};
  std::string label;
  std::vector<double> params;

  double domain_lo = 0.0, domain_hi = 0.0;  // open interval, +-inf allowed
  double window_lo = 0.0, window_hi = 0.0;  // finite verification window
  int level_count = kInfiniteLevels;

  std::function<double(int)> energy_fn;

  // sinusoidal coordinate and derivatives (complex-capable)
  std::function<Complex(Complex)> eta, eta_d1;
  std::function<double(double)> eta_d2;

  // quantum and classical R-polynomials, ascending coefficients in H
  std::vector<double> R0, R1, Rm1;
  std::vector<double> R0_cl, Rm1_cl;

  // three-term / ladder data in the a-normalization:
  //   a^(+) phi_n = A_n phi_{n+1},  a^(-) phi_n = C_n phi_{n-1},
  //   B_n = -R_{-1}(E_n)/R_0(E_n)
  std::function<double(int)> ladder_A, ladder_B, ladder_C;

  // potential function: ordinary models V(x); difference models the
  // function multiplying the shift (for the q-shift model as a function
  // of x with z = e^{ix})
  std::function<Complex(Complex)> V;
  // classical potential function (differs from V where quantum corrections
  // enter) and its x-derivative
  std::function<Complex(Complex)> Vc, Vc_d1;
  double shift_scale = 1.0;  // e^{p} step: 1, or log(q) for the q-shift model

  // ground state: log phi_0 on the real line; prepotential derivatives for
  // ordinary models; log(phi_0^2) continued to complex x for the
  // difference models built from gamma functions
  std::function<double(double)> ground_log;
  std::function<double(double)> W_d1, W_d2;
  std::function<Complex(Complex)> ground_log_sq;

  // polynomial part P_n(eta) and eta-derivatives (ordinary models)
  std::function<Complex(int, Complex)> P;
  std::function<Complex(int, Complex)> P_d1, P_d2;

  orthopoly::PolynomialFamily family;
  ShapeData shape;
  std::function<ModelSpec()> shifted_model;  // lambda + delta instance
};

// ---- registry ----
ModelSpec harmonic();
ModelSpec sym_poschl_teller(double g);
ModelSpec poschl_teller(double g, double h);
ModelSpec soliton(double g);
ModelSpec morse(double g, double mu = 1.0);
ModelSpec radial_oscillator(double g);
ModelSpec meixner_pollaczek(double a);
ModelSpec continuous_hahn(double a1, double a2);
ModelSpec continuous_dual_hahn(const std::array<double, 3>& a);
ModelSpec wilson(const std::array<double, 4>& a);
ModelSpec askey_wilson(const std::array<double, 4>& a, double q);

// Generic entry point used by the CLI: params in declaration order
// (AskeyWilson: a1..a4 then q; Morse: g then mu).
ModelSpec get_model(ModelName name, const std::vector<double>& params);
ModelSpec get_model(const std::string& label, const std::vector<double>& params);
std::vector<std::string> model_labels();

// ---- operations ----
double energy(const ModelSpec& spec, int n);

// phi_n(x) = phi_0(x) P_n(eta(x)); complex because a few models evaluate
// through complex intermediates (the imaginary part is a numerical zero)
Complex eigenfunction(const ModelSpec& spec, int n, double x);

struct LadderTriple {
  double A, B, C;
};
LadderTriple ladder_coefficients(const ModelSpec& spec, int n);

// conversion factor between the a- and a'-normalizations at level n:
// alpha_+(E_n) - alpha_-(E_n) = E_{n+1} - E_{n-1}
double ladder_norm_factor(const ModelSpec& spec, int n);

std::pair<double, double> heisenberg_frequencies(const ModelSpec& spec,
                                                 double E);

double eval_poly(const std::vector<double>& coeffs, double x);

// conjugate-coefficient continuation V*(x) = conj(V(conj(x)))
Complex v_star(const ModelSpec& spec, Complex x);
Complex vc_star(const ModelSpec& spec, Complex x);

// flat JSON document: name, params, level_count, spectrum table
std::string to_json(const ModelSpec& spec, int n_max);

}  // namespace ladderlab::models

#endif

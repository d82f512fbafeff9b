#ifndef LADDERLAB_SPECFUN_HPP
#define LADDERLAB_SPECFUN_HPP

#include <vector>

#include "ladderlab/common.hpp"

namespace ladderlab::specfun {

// Value of a truncated series together with how it was truncated.
// truncation_estimate is an absolute bound; it is exactly 0 for
// terminating series.
struct SeriesResult {
  Complex value{};
  int terms_used = 0;
  double truncation_estimate = 0.0;
};

// (a)_n = a(a+1)...(a+n-1); empty product for n = 0.
Complex pochhammer(Complex a, int n);

// (a;q)_n = prod_{k<n} (1 - a q^k); requires 0 < q < 1 only for n = infinity
// (use q_pochhammer_inf).
Complex q_pochhammer(Complex a, double q, int n);

// (a;q)_infinity, truncated once |a q^k| drops below roundoff of the
// partial product.  Throws ConvergenceError unless |q| < 1.
SeriesResult q_pochhammer_inf(Complex a, double q);

// Principal-branch log Gamma.  Lanczos rational approximation for
// Re z >= 0.5, reflection otherwise.  Poles at non-positive integers throw.
Complex log_gamma(Complex z);

// Overflow-safe log(sin(pi z)) used by the reflection formula; exposed for
// ground-state evaluations at complex arguments.
Complex log_sin_pi(Complex z);

// Generalized hypergeometric series rFs.  Terminating series (some upper
// parameter a non-positive integer) are summed exactly; otherwise partial
// sums run until three consecutive terms fall below 1e-16 relative.
SeriesResult hypergeometric(const std::vector<Complex>& upper,
                            const std::vector<Complex>& lower, Complex z);

// Basic (q-)hypergeometric series r phi s with the (-1)^n q^(n(n-1)/2)
// convention for r <= s.
SeriesResult basic_hypergeometric(const std::vector<Complex>& upper,
                                  const std::vector<Complex>& lower, double q,
                                  Complex z);

// J_a(z) = (z/2)^a / Gamma(a+1) * 0F1(-; a+1; -z^2/4), a > -1.
Complex bessel_j(double a, Complex z);

}  // namespace ladderlab::specfun

#endif

#pragma once

// Special functions (log-gamma, beta) and the stable normalization
// constant A_{d,-alpha}. Everything here is a pure function of its
// arguments; accuracy is sufficient for 1e-12-level identity checks
// downstream.

namespace hardy::specfun {

/// Dimension d >= 1 and stability index alpha in (0,2).
struct FracParams {
  int d;
  double alpha;

  FracParams(int d_, double alpha_);
};

/// ln Gamma(x) for x > 0. Lanczos approximation, ~1e-15 relative
/// accuracy on [1e-3, 1e3]. Throws std::domain_error for x <= 0.
double log_gamma(double x);

/// Gamma(x) for x > 0, via exp(log_gamma).
double gamma_fn(double x);

/// Euler beta B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), computed in
/// log space. Requires a > 0, b > 0.
double beta(double a, double b);

/// A_{d,-alpha} = Gamma((d+alpha)/2) / (2^{-alpha} pi^{d/2} |Gamma(-alpha/2)|).
/// The negative-argument gamma is never evaluated: we substitute
/// |Gamma(-alpha/2)| = (2/alpha) Gamma((2-alpha)/2).
double stable_normalizer(const FracParams& params);

/// Gamma(2z) - (2pi)^{-1/2} 2^{2z-1/2} Gamma(z) Gamma(z+1/2).
/// Identically zero in exact arithmetic; serves as a self-test of the
/// gamma implementation.
double duplication_residual(double z);

}  // namespace hardy::specfun

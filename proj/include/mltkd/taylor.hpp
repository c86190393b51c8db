#pragma once

#include <span>
#include <vector>

#include "mltkd/logits.hpp"

namespace mltkd {

/// Expansion orders for the approximate KL pipeline.
///
/// exp_order (n) truncates e^x to sum_{i=0..n} x^i/i!. log_order (m) is the
/// polynomial degree of the log(1+x) truncation used inside approx_kl, so
/// m = 1 keeps only the linear term. Even n is positivity-safe: an even
/// partial sum of exp has no real roots, so the Taylor softmax denominator
/// can never vanish. Odd n is allowed but guarded at runtime.
struct ApproxConfig {
  int exp_order = 2;  // n
  int log_order = 1;  // m

  bool positivity_safe() const noexcept { return exp_order % 2 == 0; }
};

/// One row of a temperature sweep. All comparisons happen in the scaled
/// domain K * tau^2 * KL, where the first-order theory predicts the limit
/// 1 - rho as tau grows.
struct ApproxKLReport {
  double tau = 0.0;
  double approx_value = 0.0;       // K * tau^2 * approx_kl
  double exact_value = 0.0;        // K * tau^2 * exact mean-normalized KL
  double correlation_limit = 0.0;  // 1 - correlation(zp, zq)
  double abs_gap_to_limit = 0.0;   // |approx_value - correlation_limit|
};

/// Partial sum of exp: sum_{i=0}^{n} z^i / i!, accumulated Horner-style.
double taylor_exp(double z, int n);

/// Softmax with exp replaced by its order-n partial sum:
/// probs_i = f_n(z_i) / sum_k f_n(z_k).
/// Throws NonPositiveExpansion when any f_n(z_k) <= 0 (odd n, very negative
/// logits); the result would not be a distribution.
ProbabilityDistribution taylor_softmax(std::span<const double> z, int n);

/// Truncated expansion of log(1 + x): sum_{i=0}^{m} (-1)^i x^{i+1}/(i+1).
/// Requires |x| < 1; throws OutOfRadius at or beyond the boundary.
double taylor_log(double x_minus_1, int m);

/// Lagrange remainder bound for taylor_exp: e^{|z|} |z|^{n+1} / (n+1)!.
/// Always >= |e^z - taylor_exp(z, n)|.
double exp_remainder_bound(double z, int n);

/// Approximate mean-normalized KL divergence between the tempered softmaxes
/// of two z-scored vectors, with every transcendental replaced by its
/// truncation: exp by f_n, each log by a degree-m polynomial in its argument
/// minus one.
///
/// Writing t = z/tau and S = sum_k f_n(t_k), the evaluated expression is
///
///   (1/K) sum_i [f_n(t^p_i)/S_p] * ( L_m(f_n(t^p_i)-1) - L_m(f_n(t^q_i)-1)
///                                   - L_m(S_p/K - 1)   + L_m(S_q/K - 1) )
///
/// with L_m the degree-m log(1+x) polynomial. The normalizer logs expand
/// about S/K rather than S because log S = log K + log(S/K) and the log K
/// parts cancel between the two models (equal class counts); the raw S - 1
/// argument would sit outside the log radius for every K >= 2.
///
/// Caller guarantees tau >= radius_bound(max z over both vectors, n); inputs
/// outside that range surface as OutOfRadius / NonPositiveExpansion.
double approx_kl(const StandardizedLogits& zp, const StandardizedLogits& zq, Temperature tau,
                 const ApproxConfig& cfg);

/// The n = m = 1 case of approx_kl in closed form: (1 - rho) / (K tau^2)
/// where rho = correlation(zp, zq). Algebraically identical to the order-one
/// expansion evaluated term by term, because sum z = 0 and sum z^2 = K for
/// z-scored inputs.
double first_order_kl_closed_form(const StandardizedLogits& zp, const StandardizedLogits& zq,
                                  Temperature tau);

/// Evaluate approx_kl, the exact KL and the correlation limit over a
/// temperature grid. Every grid entry must be >= the radius bound of the
/// larger of the two maxima for cfg.exp_order; a lower tau throws
/// InvalidParams before anything is evaluated.
std::vector<ApproxKLReport> convergence_sweep(const StandardizedLogits& zp,
                                              const StandardizedLogits& zq,
                                              const ApproxConfig& cfg,
                                              std::span<const double> tau_grid);

}  // namespace mltkd

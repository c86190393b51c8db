#include "mltkd/taylor.hpp"

#include <cmath>
#include <string>

#include "mltkd/temperature.hpp"

namespace mltkd {

namespace {

// Degree-m polynomial truncation of log(1+x): sum_{j=1}^{m} (-1)^{j-1} x^j / j.
// This is taylor_log with the upper index shifted down by one; approx_kl
// counts order as polynomial degree so that m = 1 keeps only the linear term.
double log_poly(double x, int m) { return taylor_log(x, m - 1); }

}  // namespace

double taylor_exp(double z, int n) {
  if (n < 0) throw InvalidOrder("taylor_exp order must be >= 0, got " + std::to_string(n));
  double acc = 1.0;
  for (int i = n; i >= 1; --i) acc = 1.0 + acc * z / static_cast<double>(i);
  return acc;
}

ProbabilityDistribution taylor_softmax(std::span<const double> z, int n) {
  if (n < 1) throw InvalidOrder("taylor_softmax order must be >= 1, got " + std::to_string(n));
  ProbabilityDistribution out;
  out.probs.resize(z.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = taylor_exp(z[i], n);
    if (f <= 0.0) {
      throw NonPositiveExpansion("taylor_exp(" + std::to_string(z[i]) + ", " + std::to_string(n) +
                                 ") = " + std::to_string(f) + " is not positive");
    }
    out.probs[i] = f;
    sum += f;
  }
  for (double& p : out.probs) p /= sum;
  return out;
}

double taylor_log(double x_minus_1, int m) {
  if (m < 0) throw InvalidOrder("taylor_log order must be >= 0, got " + std::to_string(m));
  if (!(std::abs(x_minus_1) < 1.0)) {
    throw OutOfRadius("taylor_log argument |" + std::to_string(x_minus_1) +
                      "| is outside the unit radius");
  }
  // sum_{i=0}^{m} (-1)^i x^{i+1}/(i+1), Horner from the highest term.
  double acc = 0.0;
  for (int i = m; i >= 0; --i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    acc = sign / static_cast<double>(i + 1) + acc * x_minus_1;
  }
  return acc * x_minus_1;
}

double exp_remainder_bound(double z, int n) {
  if (n < 0) throw InvalidOrder("exp_remainder_bound order must be >= 0, got " + std::to_string(n));
  const double a = std::abs(z);
  double pow_over_fact = 1.0;  // a^{n+1} / (n+1)!
  for (int i = 1; i <= n + 1; ++i) pow_over_fact *= a / static_cast<double>(i);
  return std::exp(a) * pow_over_fact;
}

double approx_kl(const StandardizedLogits& zp, const StandardizedLogits& zq, Temperature tau,
                 const ApproxConfig& cfg) {
  if (zp.size() != zq.size()) {
    throw LengthMismatch("approx_kl: vectors of length " + std::to_string(zp.size()) + " and " +
                         std::to_string(zq.size()));
  }
  if (cfg.exp_order < 1 || cfg.log_order < 1) {
    throw InvalidOrder("approx_kl orders must be >= 1");
  }
  const std::size_t k = zp.size();
  const double kd = static_cast<double>(k);

  std::vector<double> tp(k), tq(k);
  for (std::size_t i = 0; i < k; ++i) {
    tp[i] = zp.values[i] / tau.tau;
    tq[i] = zq.values[i] / tau.tau;
  }

  double sp = 0.0, sq = 0.0;
  std::vector<double> fp(k), fq(k);
  for (std::size_t i = 0; i < k; ++i) {
    fp[i] = taylor_exp(tp[i], cfg.exp_order);
    fq[i] = taylor_exp(tq[i], cfg.exp_order);
    if (fp[i] <= 0.0 || fq[i] <= 0.0) {
      throw NonPositiveExpansion("approx_kl: non-positive exp expansion at order " +
                                 std::to_string(cfg.exp_order));
    }
    sp += fp[i];
    sq += fq[i];
  }

  // log S = log K + log(S/K); the log K parts cancel between p and q.
  const double norm_term =
      log_poly(sp / kd - 1.0, cfg.log_order) - log_poly(sq / kd - 1.0, cfg.log_order);

  double acc = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const double log_ratio =
        log_poly(fp[i] - 1.0, cfg.log_order) - log_poly(fq[i] - 1.0, cfg.log_order);
    acc += (fp[i] / sp) * (log_ratio - norm_term);
  }
  return acc / kd;  // mean-normalized form
}

double first_order_kl_closed_form(const StandardizedLogits& zp, const StandardizedLogits& zq,
                                  Temperature tau) {
  const double rho = correlation(zp, zq);
  return (1.0 - rho) / (static_cast<double>(zp.size()) * tau.tau * tau.tau);
}

std::vector<ApproxKLReport> convergence_sweep(const StandardizedLogits& zp,
                                              const StandardizedLogits& zq,
                                              const ApproxConfig& cfg,
                                              std::span<const double> tau_grid) {
  double max_z = 0.0;
  for (double v : zp.values) max_z = std::max(max_z, v);
  for (double v : zq.values) max_z = std::max(max_z, v);
  const double bound = radius_bound(max_z, cfg.exp_order);
  for (double t : tau_grid) {
    if (t < bound) {
      throw InvalidParams("convergence_sweep: tau " + std::to_string(t) +
                          " is below the radius bound " + std::to_string(bound));
    }
  }

  const double kd = static_cast<double>(zp.size());
  const double rho = correlation(zp, zq);
  std::vector<ApproxKLReport> reports;
  reports.reserve(tau_grid.size());
  for (double t : tau_grid) {
    const Temperature tau(t);
    const double scale = kd * t * t;
    ApproxKLReport r;
    r.tau = t;
    r.approx_value = scale * approx_kl(zp, zq, tau, cfg);
    r.exact_value = scale * kl_divergence(tempered_softmax(zp.values, tau),
                                          tempered_softmax(zq.values, tau),
                                          /*mean_normalized=*/true);
    r.correlation_limit = 1.0 - rho;
    r.abs_gap_to_limit = std::abs(r.approx_value - r.correlation_limit);
    reports.push_back(r);
  }
  return reports;
}

}  // namespace mltkd

#include "mltkd/logits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace mltkd {

StandardizedLogits zscore(std::span<const double> v) {
  ZscoreStats stats;
  return zscore(v, stats);
}

StandardizedLogits zscore(std::span<const double> v, ZscoreStats& stats) {
  const std::size_t k = v.size();
  if (k < 2) throw InvalidParams("zscore needs at least 2 classes, got " + std::to_string(k));

  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= static_cast<double>(k);

  double var = 0.0;
  for (double x : v) {
    const double d = x - mean;
    var += d * d;
  }
  var /= static_cast<double>(k);  // population variance, divisor K
  const double sigma = std::sqrt(var);
  if (sigma <= kStdEpsilon) {
    throw DegenerateLogits("constant logit vector (population std " + std::to_string(sigma) +
                           " <= " + std::to_string(kStdEpsilon) + ")");
  }

  StandardizedLogits out;
  out.values.resize(k);
  for (std::size_t i = 0; i < k; ++i) out.values[i] = (v[i] - mean) / sigma;
  stats.mean = mean;
  stats.sigma = sigma;
  return out;
}

ProbabilityDistribution tempered_softmax(std::span<const double> z, Temperature tau) {
  ProbabilityDistribution out;
  out.probs.resize(z.size());
  if (z.empty()) return out;

  // Scale first, then stabilize, so softmax(z, tau) and softmax(z/tau, 1)
  // run through bit-identical arithmetic.
  for (std::size_t i = 0; i < z.size(); ++i) out.probs[i] = z[i] / tau.tau;
  const double m = *std::max_element(out.probs.begin(), out.probs.end());
  double sum = 0.0;
  for (double& p : out.probs) {
    p = std::exp(p - m);
    sum += p;
  }
  for (double& p : out.probs) p /= sum;
  return out;
}

double kl_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q,
                     bool mean_normalized) {
  if (p.size() != q.size()) {
    throw LengthMismatch("kl_divergence: p has " + std::to_string(p.size()) + " entries, q has " +
                         std::to_string(q.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.probs[i] <= 0.0) continue;  // x log x -> 0
    sum += p.probs[i] * std::log(p.probs[i] / q.probs[i]);
  }
  if (mean_normalized) sum /= static_cast<double>(p.size());
  return std::max(sum, 0.0);
}

double correlation(const StandardizedLogits& a, const StandardizedLogits& b) {
  if (a.size() != b.size()) {
    throw LengthMismatch("correlation: vectors of length " + std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a.values[i] * b.values[i];
  return dot / static_cast<double>(a.size());
}

double entropy(const ProbabilityDistribution& p) {
  double h = 0.0;
  for (double x : p.probs) {
    if (x > 0.0) h -= x * std::log(x);
  }
  return h;
}

}  // namespace mltkd

#pragma once

#include <span>
#include <vector>

#include "mltkd/errors.hpp"

namespace mltkd {

/// Raw per-sample class scores straight out of a model.
using LogitVector = std::vector<double>;

/// Smallest population standard deviation accepted by zscore().
inline constexpr double kStdEpsilon = 1e-8;

/// Per-sample z-scored class scores: zero mean, unit population variance.
struct StandardizedLogits {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

/// Softmax output. Entries are positive and sum to one.
struct ProbabilityDistribution {
  std::vector<double> probs;

  std::size_t size() const noexcept { return probs.size(); }
};

/// Positive softmax divisor. The adaptive policy additionally clamps it to
/// its floor (>= 1 by default); see temperature.hpp.
struct Temperature {
  double tau;

  explicit Temperature(double t) : tau(t) {
    if (!(t > 0.0)) throw InvalidParams("Temperature must be positive, got " + std::to_string(t));
  }
};

/// Mean and population standard deviation removed by a z-score transform.
struct ZscoreStats {
  double mean = 0.0;
  double sigma = 0.0;
};

/// Standardize a logit vector to zero mean and unit population variance
/// (divisor K, not K-1).
///
/// Throws DegenerateLogits when the population std is <= kStdEpsilon: a
/// constant vector carries no ranking information, and silently passing it
/// through would corrupt every downstream temperature bound.
StandardizedLogits zscore(std::span<const double> v);

/// zscore() that also reports the removed statistics. The student-side loss
/// gradient needs sigma to push gradients back through the transform.
StandardizedLogits zscore(std::span<const double> v, ZscoreStats& stats);

/// Temperature-scaled softmax: probs_i = exp(z_i/tau) / sum_k exp(z_k/tau).
/// Stabilized by subtracting max(z/tau) before exponentiation, so it is exact
/// under the identity softmax(z, tau) == softmax(z/tau, 1).
ProbabilityDistribution tempered_softmax(std::span<const double> z, Temperature tau);

/// KL divergence D(p||q) = sum_i p_i log(p_i / q_i), always >= 0.
///
/// mean_normalized divides the sum by K. Analysis paths use that form; the
/// training loss uses the plain sum, which is what the classical tau^2
/// scaling pairs with.
double kl_divergence(const ProbabilityDistribution& p, const ProbabilityDistribution& q,
                     bool mean_normalized = false);

/// (1/K) sum_i a_i b_i for z-scored inputs. Equals the Pearson correlation of
/// the raw vectors and the cosine similarity of a and b.
double correlation(const StandardizedLogits& a, const StandardizedLogits& b);

/// Shannon entropy -sum p_i ln p_i, in [0, ln K].
double entropy(const ProbabilityDistribution& p);

}  // namespace mltkd

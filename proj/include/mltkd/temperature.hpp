#pragma once

#include <span>
#include <vector>

#include "mltkd/logits.hpp"

namespace mltkd {

enum class PolicyKind { kStatic, kMaxLogit };

/// How a distillation run picks its temperature.
///
/// kStatic replicates static_tau for every sample. kMaxLogit derives a
/// per-sample tau from the larger of the teacher's and student's maximum
/// z-scored logits via the order_a radius bound, clamped to floor from
/// below: below one the softmax sharpens instead of smoothing, defeating the
/// aggregation argument.
///
/// strict_abs_max switches the policy to max |z_i|. The default follows the
/// adaptive rule verbatim (raw maximum); the negative tail of a z-scored
/// vector can exceed the positive maximum in magnitude, and strict mode
/// keeps every coordinate inside the expansion radius at the price of larger
/// temperatures.
struct TemperaturePolicy {
  PolicyKind kind = PolicyKind::kMaxLogit;
  double static_tau = 4.0;  // used iff kStatic
  int order_a = 2;          // used iff kMaxLogit
  double floor = 1.0;
  bool strict_abs_max = false;
};

/// One temperature per sample of a batch.
struct BatchTemperatures {
  std::vector<double> taus;
};

/// Smallest temperature keeping the order-n log expansion convergent for a
/// logit of magnitude max_z:
///   n = 1:  max_z
///   n = 2:  max_z (1 + sqrt 3) / 2
///   n >= 3: root of sum_{i=1..n} (max_z/tau)^i / i! = 1, by bisection.
/// The bound is positively homogeneous in max_z (the root is solved in
/// u = max_z/tau, which is scale-free). Throws InvalidOrder for n < 1.
double radius_bound(double max_z, int n);

/// The generic bisection solver behind radius_bound, callable for any
/// n >= 1. Exposed so the closed forms for n = 1, 2 can be cross-checked.
double radius_bound_bisection(double max_z, int n);

/// Per-sample adaptive temperature: the radius bound of
/// max(max(zt), max(zs)) at policy.order_a, clamped to policy.floor.
Temperature mlt_temperature(const StandardizedLogits& zt, const StandardizedLogits& zs,
                            const TemperaturePolicy& policy);

/// Per-sample temperatures for a batch of raw logit pairs. Each sample is
/// z-scored on both sides first; a constant vector raises DegenerateLogits
/// carrying the sample index. The static policy replicates static_tau.
BatchTemperatures batch_temperatures(std::span<const LogitVector> teacher_logits,
                                     std::span<const LogitVector> student_logits,
                                     const TemperaturePolicy& policy);

}  // namespace mltkd

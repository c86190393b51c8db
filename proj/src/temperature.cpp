#include "mltkd/temperature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mltkd/taylor.hpp"

namespace mltkd {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

double vec_max(std::span<const double> v) {
  return *std::max_element(v.begin(), v.end());
}

double vec_abs_max(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

double radius_bound_bisection(double max_z, int n) {
  if (n < 1) throw InvalidOrder("radius_bound order must be >= 1, got " + std::to_string(n));
  if (!(max_z > 0.0)) {
    throw InvalidParams("radius_bound needs max_z > 0, got " + std::to_string(max_z));
  }
  // Solve sum_{i=1..n} u^i / i! = 1 in u = max_z / tau. The root is
  // scale-free, so tau = max_z / u is exactly homogeneous in max_z. The
  // bracket mirrors tau in [max_z/10, 10 n max_z].
  // sum_{i=1..n} u^i/i! = taylor_exp(u, n) - 1, so the root condition is
  // taylor_exp(u, n) = 2.
  const auto g = [n](double u) { return taylor_exp(u, n) - 2.0; };
  double lo = 1.0 / (10.0 * static_cast<double>(n));  // tau = 10 n max_z
  double hi = 10.0;                                   // tau = max_z / 10
  // g(lo) < 0 (series tiny), g(hi) > 0 (series huge); bisect to ~1e-12 in u,
  // which keeps tau well inside 1e-9 absolute for any sane logit scale.
  for (int it = 0; it < 200 && (hi - lo) > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return max_z / (0.5 * (lo + hi));
}

double radius_bound(double max_z, int n) {
  if (n < 1) throw InvalidOrder("radius_bound order must be >= 1, got " + std::to_string(n));
  if (!(max_z > 0.0)) {
    throw InvalidParams("radius_bound needs max_z > 0, got " + std::to_string(max_z));
  }
  switch (n) {
    case 1:
      return max_z;
    case 2:
      return max_z * (1.0 + kSqrt3) / 2.0;
    default:
      return radius_bound_bisection(max_z, n);
  }
}

Temperature mlt_temperature(const StandardizedLogits& zt, const StandardizedLogits& zs,
                            const TemperaturePolicy& policy) {
  const double mt = policy.strict_abs_max ? vec_abs_max(zt.values) : vec_max(zt.values);
  const double ms = policy.strict_abs_max ? vec_abs_max(zs.values) : vec_max(zs.values);
  const double m_tau = std::max(mt, ms);
  const double bound = radius_bound(m_tau, policy.order_a);
  return Temperature(std::max(bound, policy.floor));
}

BatchTemperatures batch_temperatures(std::span<const LogitVector> teacher_logits,
                                     std::span<const LogitVector> student_logits,
                                     const TemperaturePolicy& policy) {
  if (teacher_logits.size() != student_logits.size()) {
    throw LengthMismatch("batch_temperatures: " + std::to_string(teacher_logits.size()) +
                         " teacher samples vs " + std::to_string(student_logits.size()) +
                         " student samples");
  }
  if (teacher_logits.empty()) throw InvalidParams("batch_temperatures: empty batch");

  BatchTemperatures out;
  out.taus.resize(teacher_logits.size());
  if (policy.kind == PolicyKind::kStatic) {
    Temperature check(policy.static_tau);  // validates positivity
    std::fill(out.taus.begin(), out.taus.end(), check.tau);
    return out;
  }

  for (std::size_t b = 0; b < teacher_logits.size(); ++b) {
    if (teacher_logits[b].size() != student_logits[b].size()) {
      throw LengthMismatch("batch_temperatures: sample " + std::to_string(b) +
                           " has mismatched class counts");
    }
    try {
      const StandardizedLogits zt = zscore(teacher_logits[b]);
      const StandardizedLogits zs = zscore(student_logits[b]);
      out.taus[b] = mlt_temperature(zt, zs, policy).tau;
    } catch (const DegenerateLogits& e) {
      throw DegenerateLogits(std::string(e.what()) + " (sample " + std::to_string(b) + ")",
                             static_cast<std::ptrdiff_t>(b));
    }
  }
  return out;
}

}  // namespace mltkd

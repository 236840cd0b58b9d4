#include "lightcone/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace lightcone {

DecayHint DecayHint::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("DecayHint: rate must be > 0");
  return DecayHint(Kind::exponential, rate);
}

DecayHint DecayHint::algebraic(double power) {
  if (!(power > 1.0) || !std::isfinite(power)) throw DomainError("DecayHint: power must be > 1");
  return DecayHint(Kind::algebraic, power);
}

DecayHint DecayHint::compact(double support_end) {
  if (!std::isfinite(support_end)) throw DomainError("DecayHint: support end must be finite");
  return DecayHint(Kind::compact, support_end);
}

double DecayHint::rate() const {
  if (kind_ != Kind::exponential) throw DomainError("DecayHint: not exponential");
  return parameter_;
}

double DecayHint::power() const {
  if (kind_ != Kind::algebraic) throw DomainError("DecayHint: not algebraic");
  return parameter_;
}

double DecayHint::support_end() const {
  if (kind_ != Kind::compact) throw DomainError("DecayHint: not compact");
  return parameter_;
}

namespace quad {

namespace {

GaussLegendreRule compute_rule(int n) {
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1 || n > 512) throw DomainError("gauss_legendre: order must be in [1, 512]");
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
  return it->second;
}

}  // namespace quad
}  // namespace lightcone

#include "dnalr/evidence.hpp"

#include <cmath>
#include <stdexcept>

namespace dnalr {

namespace detail {

void require_open_unit(Probability p) {
  const double v = p.value();
  if (!(v > 0.0 && v < 1.0)) {
    throw std::domain_error(
        "random-match probability must lie strictly in (0,1): "
        "perfect specificity/sensitivity is not a finite ratio");
  }
}

}  // namespace detail

double log10_one_minus_p_pow(double p, long long d) {
  return static_cast<double>(d) * std::log1p(-p) / std::log(10.0);
}

RatioValue lr_hot(Probability p) {
  detail::require_open_unit(p);
  return RatioValue::from_log10(-std::log10(p.value()));
}

RatioValue lr_frequentist(Probability p, long long d) {
  detail::require_open_unit(p);
  if (d < 0) throw std::domain_error("database size parameter d must be >= 0");
  return RatioValue::from_log10(-std::log10(p.value()) -
                                std::log10(static_cast<double>(d) + 1.0));
}

RatioValue lr_bayes(Probability p, Probability psnd) {
  detail::require_open_unit(p);
  if (psnd.value() == 0.0) return RatioValue::infinity();
  return RatioValue::from_log10(-std::log10(p.value()) - std::log10(psnd.value()));
}

Probability psnd_from_population(double n_outside, double m_factor, long long d) {
  if (n_outside < 0.0 || m_factor < 0.0 || d < 0) {
    throw std::domain_error("population prior needs N >= 0, m >= 0, d >= 0");
  }
  const double denom = m_factor * static_cast<double>(d) + n_outside;
  if (denom <= 0.0) {
    throw std::domain_error("population prior needs m*D + N > 0");
  }
  return Probability(n_outside / denom);
}

RatioValue lr_pure(Probability p) { return lr_hot(p); }

RatioValue prior_odds(Probability psnd) {
  const double v = psnd.value();
  if (v == 0.0) return RatioValue::infinity();
  if (v == 1.0) return RatioValue::zero();
  return RatioValue::from_log10(std::log1p(-v) / std::log(10.0) - std::log10(v));
}

RatioValue lr_total(const RatioValue& r0, Probability p) {
  return r0 * lr_hot(p);
}

ComparisonReport compare_schools(const Scenario& scenario) {
  detail::require_open_unit(scenario.p);
  if (scenario.d < 0) throw std::domain_error("scenario needs d >= 0");

  Probability psnd;
  if (const auto* direct = std::get_if<DirectPrior>(&scenario.prior)) {
    psnd = direct->psnd;
  } else {
    const auto& pop = std::get<PopulationPrior>(scenario.prior);
    psnd = psnd_from_population(pop.n_outside, pop.m_factor, scenario.d);
  }

  ComparisonReport out;
  out.label = scenario.label;
  out.psnd = psnd;
  out.r1 = lr_hot(scenario.p);
  out.rf = lr_frequentist(scenario.p, scenario.d);
  out.rb = lr_bayes(scenario.p, psnd);
  out.rl = lr_pure(scenario.p);
  out.r0 = prior_odds(psnd);
  out.rt = lr_total(out.r0, scenario.p);
  out.bayes_degenerate = (psnd.value() == 1.0);
  return out;
}

}  // namespace dnalr

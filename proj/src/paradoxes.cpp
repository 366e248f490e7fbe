#include "dnalr/paradoxes.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

#include "dnalr/evidence.hpp"

namespace dnalr {

namespace {

// Smallest integer s such that s/t >= theta, evaluated so that a typed
// decimal threshold behaves like the decimal it denotes. theta*t is formed
// in extended precision; when it lies within a few ulps of an integer j the
// threshold is taken to be exactly j/t (0.9 stored as a double sits just
// above 9/10, and without the snap t = 100 would yield k_max = 9, not 10).
long long survival_numerator(double theta, long long t) {
  const long double prod = static_cast<long double>(theta) * static_cast<long double>(t);
  const long double nearest = std::round(prod);
  const long double tol = prod * 8.0L * static_cast<long double>(DBL_EPSILON);
  if (std::fabs(prod - nearest) <= tol) return static_cast<long long>(nearest);
  return static_cast<long long>(std::ceil(prod));
}

}  // namespace

std::pair<long long, long long> raffle_survival_fraction(long long tickets, long long k) {
  if (tickets < 1) throw std::domain_error("raffle needs at least one ticket");
  if (k < 1 || k > tickets) {
    throw std::domain_error("ticket count k must lie in [1, tickets]");
  }
  return {tickets - k, tickets};
}

Probability raffle_survival(long long tickets, long long k) {
  const auto [num, den] = raffle_survival_fraction(tickets, k);
  return Probability(static_cast<double>(num) / static_cast<double>(den));
}

ParadoxReport lottery_paradox_report(long long tickets, Probability threshold) {
  if (tickets < 1) throw std::domain_error("raffle needs at least one ticket");
  const double theta = threshold.value();
  if (theta <= 0.0) throw std::domain_error("acceptance threshold must be in (0,1]");

  ParadoxReport report;
  report.threshold = threshold;

  // (t-k)/t >= theta  <=>  t-k >= s with s the exact integer threshold.
  const long long s = survival_numerator(theta, tickets);
  report.singleton_accepted = tickets - 1 >= s;
  report.k_max = std::clamp<long long>(tickets - s, 0, tickets);

  report.full_conjunction_prob = raffle_survival(tickets, tickets);  // always 0
  report.contradiction =
      report.singleton_accepted && report.full_conjunction_prob.value() == 0.0;
  return report;
}

Probability birthday_collision(long long n, long long days) {
  if (n < 0) throw std::domain_error("group size must be >= 0");
  if (days < 1) throw std::domain_error("year must have at least one day");
  if (n <= 1) return Probability(0.0);
  if (n > days) return Probability(1.0);  // pigeonhole

  // log P(no shared birthday) = sum_i log(1 - i/days), stable for large n.
  double log_no_collision = 0.0;
  for (long long i = 1; i < n; ++i) {
    log_no_collision += std::log1p(-static_cast<double>(i) / static_cast<double>(days));
  }
  return Probability(-std::expm1(log_no_collision));
}

Probability card_pick_probability(long long deck_size) {
  if (deck_size < 1) throw std::domain_error("deck must hold at least one card");
  return Probability(1.0 / static_cast<double>(deck_size));
}

RatioValue deck_likelihood_ratio(long long deck_size) {
  if (deck_size < 1) throw std::domain_error("deck must hold at least one card");
  // L(all-same) / L(standard) = 1 / (1/deck_size) = deck_size; structurally
  // the same ratio as lr_hot(1/deck_size).
  return RatioValue::from_linear(static_cast<double>(deck_size));
}

}  // namespace dnalr

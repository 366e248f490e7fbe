#include "dnalr/simulation.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "dnalr/evidence.hpp"
#include "dnalr/rng.hpp"

namespace dnalr {

MatchVector MatchVector::from_mask(std::uint64_t mask, long long d) {
  MatchVector y;
  y.bits.resize(static_cast<std::size_t>(d) + 1);
  for (long long i = 0; i <= d; ++i) {
    y.bits[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
  }
  return y;
}

int MatchVector::match_count() const {
  int n = 0;
  for (bool b : bits) n += b ? 1 : 0;
  return n;
}

HypothesisSpec HypothesisSpec::source_is_profile(long long i) {
  if (i < 1) throw std::domain_error("profile index is 1-based");
  return HypothesisSpec{Kind::SourceIsProfile, i};
}

HypothesisSpec HypothesisSpec::source_not_in_db() {
  return HypothesisSpec{Kind::SourceNotInDb, 0};
}

double match_vector_probability(const MatchVector& y, const HypothesisSpec& hyp,
                                Probability p) {
  const double pv = p.value();
  double prob = 1.0;
  for (std::size_t i = 0; i < y.bits.size(); ++i) {
    const bool is_source = hyp.kind == HypothesisSpec::Kind::SourceIsProfile &&
                           static_cast<long long>(i) + 1 == hyp.profile;
    const double match_p = is_source ? 1.0 : pv;
    prob *= y.bits[i] ? match_p : 1.0 - match_p;
  }
  return prob;
}

double EventProbs::given_sid() const { return std::pow(10.0, log10_given_sid); }
double EventProbs::given_snd() const { return std::pow(10.0, log10_given_snd); }

EventProbs match_event_probs(Probability p, long long d) {
  detail::require_open_unit(p);
  if (d < 0) throw std::domain_error("d must be >= 0");
  const double log10_q_pow = log10_one_minus_p_pow(p.value(), d);
  EventProbs out;
  out.log10_given_sid = log10_q_pow;
  out.log10_given_snd =
      std::log10(static_cast<double>(d) + 1.0) + std::log10(p.value()) + log10_q_pow;
  return out;
}

double MatcherLikelihoods::theta11() const { return std::pow(10.0, log10_theta11); }
double MatcherLikelihoods::theta10() const { return std::pow(10.0, log10_theta10); }

MatcherLikelihoods likelihoods_matcher(Probability p, long long d) {
  detail::require_open_unit(p);
  if (d < 0) throw std::domain_error("d must be >= 0");
  const double log10_q_pow = log10_one_minus_p_pow(p.value(), d);
  MatcherLikelihoods out;
  out.log10_theta11 = log10_q_pow;
  out.log10_p = std::log10(p.value());
  out.log10_theta10 = out.log10_p + log10_q_pow;
  return out;
}

ExactTable enumerate_exact(Probability p, long long d, long long cap) {
  detail::require_open_unit(p);
  if (d < 0) throw std::domain_error("d must be >= 0");
  if (d > cap) {
    throw std::domain_error(
        "enumeration over 2^(d+1) outcomes refused for d = " + std::to_string(d) +
        " (cap " + std::to_string(cap) + "); use Monte Carlo instead");
  }

  const int n = static_cast<int>(d) + 1;
  const double pv = p.value();

  std::vector<double> pow_p(n + 1), pow_q(n + 1);
  pow_p[0] = pow_q[0] = 1.0;
  for (int k = 1; k <= n; ++k) {
    pow_p[k] = pow_p[k - 1] * pv;
    pow_q[k] = pow_q[k - 1] * (1.0 - pv);
  }

  ExactTable t;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const int k = std::popcount(mask);
    // Source outside the database: every profile matches with probability p.
    const double prob_snd = pow_p[k] * pow_q[n - k];
    // Source is profile 1: y_1 = 1 always, others match with probability p.
    const double prob_sid = (mask & 1u) ? pow_p[k - 1] * pow_q[n - k] : 0.0;

    t.total_mass_snd += prob_snd;
    t.total_mass_sid += prob_sid;
    if (k == 1) {
      t.p_single_match_given_snd += prob_snd;
      t.p_single_match_given_sid += prob_sid;
    }
    if (mask == 1u) {
      t.p_matcher1_given_theta10 = prob_snd;
      t.p_matcher1_given_theta11 = prob_sid;
    }
  }
  return t;
}

namespace {

void tally_range(Probability p, long long d, const HypothesisSpec& hyp,
                 long long first, long long last, std::uint64_t seed,
                 EmpiricalCounts& out) {
  const double pv = p.value();
  const long long n = d + 1;
  const long long source =
      hyp.kind == HypothesisSpec::Kind::SourceIsProfile ? hyp.profile : 0;

  for (long long t = first; t < last; ++t) {
    TrialRng rng(seed, static_cast<std::uint64_t>(t));
    int matches = 0;
    long long first_match = 0;
    for (long long i = 1; i <= n; ++i) {
      const bool hit = (i == source) ? true : rng.bernoulli(pv);
      if (hit) {
        if (++matches == 1) first_match = i;
        if (matches == 2) break;  // classification settled
      }
    }
    if (matches == 0) {
      ++out.zero_match;
    } else if (matches == 1) {
      ++out.single_match;
      if (first_match == 1) ++out.matcher_is_1;
    } else {
      ++out.multi_match;
    }
  }
}

}  // namespace

EmpiricalCounts simulate_trials(Probability p, long long d, HypothesisSpec hyp,
                                long long trials, std::uint64_t seed,
                                unsigned threads) {
  detail::require_open_unit(p);
  if (d < 0) throw std::domain_error("d must be >= 0");
  if (trials < 1) throw std::domain_error("trials must be >= 1");
  if (hyp.kind == HypothesisSpec::Kind::SourceIsProfile &&
      (hyp.profile < 1 || hyp.profile > d + 1)) {
    throw std::domain_error("source profile index out of [1, d+1]");
  }

  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<long long>(threads, std::max<long long>(1, trials / 4096)));

  std::vector<EmpiricalCounts> partial(workers);
  std::vector<std::thread> pool;
  const long long chunk = (trials + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const long long first = static_cast<long long>(w) * chunk;
    const long long last = std::min(trials, first + chunk);
    if (first >= last) continue;
    pool.emplace_back(
        [&, first, last, w] { tally_range(p, d, hyp, first, last, seed, partial[w]); });
  }
  for (auto& th : pool) th.join();

  EmpiricalCounts out;
  out.trials = trials;
  out.seed = seed;
  for (const auto& c : partial) {
    out.single_match += c.single_match;
    out.matcher_is_1 += c.matcher_is_1;
    out.zero_match += c.zero_match;
    out.multi_match += c.multi_match;
  }
  return out;
}

namespace {

RatioEstimate rate_ratio(long long num_count, long long den_count,
                         long long trials, double ci_multiplier) {
  RatioEstimate est;
  if (den_count == 0) return est;  // unresolved at this trial budget
  const double n = static_cast<double>(trials);
  const double a = static_cast<double>(num_count) / n;
  const double b = static_cast<double>(den_count) / n;
  est.resolved = true;
  est.value = a / b;
  // Delta-method standard error for a ratio of independent binomial rates.
  const double var_a = a * (1.0 - a) / n;
  const double var_b = b * (1.0 - b) / n;
  const double rel_var = (a > 0.0 ? var_a / (a * a) : 0.0) + var_b / (b * b);
  const double se = est.value * std::sqrt(rel_var);
  est.lo = std::max(0.0, est.value - ci_multiplier * se);
  est.hi = est.value + ci_multiplier * se;
  return est;
}

}  // namespace

EmpiricalRatioReport empirical_lr(const EmpiricalCounts& counts_sid,
                                  const EmpiricalCounts& counts_snd,
                                  double ci_multiplier) {
  if (counts_sid.trials != counts_snd.trials) {
    throw std::domain_error("empirical_lr needs matching trial counts");
  }
  EmpiricalRatioReport out;
  out.ci_multiplier = ci_multiplier;
  out.single_match_ratio = rate_ratio(counts_sid.single_match, counts_snd.single_match,
                                      counts_sid.trials, ci_multiplier);
  out.matcher_ratio = rate_ratio(counts_sid.matcher_is_1, counts_snd.matcher_is_1,
                                 counts_sid.trials, ci_multiplier);
  return out;
}

}  // namespace dnalr

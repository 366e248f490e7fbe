#pragma once

#include <cstdint>
#include <vector>

#include "dnalr/ratio_value.hpp"

namespace dnalr {

/// Observed match outcomes y over the d+1 database profiles.
struct MatchVector {
  std::vector<bool> bits;

  static MatchVector from_mask(std::uint64_t mask, long long d);
  int match_count() const;
};

/// Which hypothesis generates the data: a named profile is the source, or
/// the source is outside the database.
struct HypothesisSpec {
  enum class Kind { SourceIsProfile, SourceNotInDb };

  Kind kind = Kind::SourceNotInDb;
  long long profile = 0;  // 1-based; meaningful only for SourceIsProfile

  static HypothesisSpec source_is_profile(long long i);
  static HypothesisSpec source_not_in_db();
};

/// Probability of observing `y` under `hyp`: the source profile matches with
/// probability 1, every other profile matches independently with probability p.
double match_vector_probability(const MatchVector& y, const HypothesisSpec& hyp,
                                Probability p);

/// Closed-form probabilities of the single-match event E.
struct EventProbs {
  double log10_given_sid;  // (1-p)^D
  double log10_given_snd;  // (D+1) p (1-p)^D

  double given_sid() const;
  double given_snd() const;
};

EventProbs match_event_probs(Probability p, long long d);

/// Closed-form likelihoods of the observed data "profile 1 matches, all
/// others do not" under the two non-zero-likelihood hypotheses.
struct MatcherLikelihoods {
  double log10_theta11;  // source is profile 1: (1-p)^D
  double log10_theta10;  // source not in database: p (1-p)^D

  double theta11() const;
  double theta10() const;
  /// log10 of the likelihood ratio. The common (1-p)^D factor cancels
  /// algebraically, so this is -log10 p for every d without cancellation loss.
  double log10_ratio() const { return -log10_p; }

  double log10_p;
};

MatcherLikelihoods likelihoods_matcher(Probability p, long long d);

/// Event masses recovered by brute-force enumeration over all 2^(d+1)
/// match vectors.
struct ExactTable {
  double p_single_match_given_sid = 0.0;
  double p_single_match_given_snd = 0.0;
  double p_matcher1_given_theta11 = 0.0;
  double p_matcher1_given_theta10 = 0.0;
  double total_mass_sid = 0.0;
  double total_mass_snd = 0.0;
};

inline constexpr long long kEnumerationCapDefault = 20;

/// Enumerates the full sample space under both hypotheses. Refuses d above
/// the cap; use simulate_trials there instead.
ExactTable enumerate_exact(Probability p, long long d,
                           long long cap = kEnumerationCapDefault);

/// Tallied Monte Carlo outcomes for one hypothesis.
struct EmpiricalCounts {
  long long trials = 0;
  long long single_match = 0;
  long long matcher_is_1 = 0;
  long long zero_match = 0;
  long long multi_match = 0;
  std::uint64_t seed = 0;
};

/// Draws `trials` independent match vectors under `hyp` and tallies them.
/// Results depend only on (p, d, hyp, trials, seed), not on `threads`.
EmpiricalCounts simulate_trials(Probability p, long long d, HypothesisSpec hyp,
                                long long trials, std::uint64_t seed,
                                unsigned threads = 0);

/// A ratio of empirical rates with a normal-approximation interval.
/// `resolved` is false when the denominator count is zero at this trial
/// budget; the ratio is then not reported as infinite.
struct RatioEstimate {
  bool resolved = false;
  double value = 0.0;
  double lo = 0.0;
  double hi = 0.0;
};

struct EmpiricalRatioReport {
  RatioEstimate single_match_ratio;  // empirical R_F
  RatioEstimate matcher_ratio;       // empirical 1/p
  double ci_multiplier = 4.0;
};

/// Both counts must come from the same (p, d, trials) settings.
EmpiricalRatioReport empirical_lr(const EmpiricalCounts& counts_sid,
                                  const EmpiricalCounts& counts_snd,
                                  double ci_multiplier = 4.0);

}  // namespace dnalr

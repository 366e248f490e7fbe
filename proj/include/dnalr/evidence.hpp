#pragma once

#include <string>
#include <variant>

#include "dnalr/ratio_value.hpp"

namespace dnalr {

/// Prior given directly as P(SND).
struct DirectPrior {
  Probability psnd;
};

/// Prior given through population counts: N potential suspects outside the
/// database, each database member m-times more probable to be the source
/// than an outsider. P(SND) = N / (m*D + N).
struct PopulationPrior {
  double n_outside = 0.0;
  double m_factor = 1.0;
};

using PriorSpec = std::variant<DirectPrior, PopulationPrior>;

/// One database-search situation. The database holds d+1 profiles.
struct Scenario {
  Probability p;
  long long d = 0;
  PriorSpec prior = DirectPrior{Probability(0.5)};
  std::string label;
};

/// All five ratios for one scenario, side by side.
struct ComparisonReport {
  Probability psnd;
  RatioValue r1 = RatioValue::zero();
  RatioValue rf = RatioValue::zero();
  RatioValue rb = RatioValue::zero();
  RatioValue rl = RatioValue::zero();
  RatioValue r0 = RatioValue::zero();
  RatioValue rt = RatioValue::zero();
  bool bayes_degenerate = false;  // set when psnd == 1
  std::string label;
};

/// Hot-suspect likelihood ratio 1/p. Requires p strictly in (0,1).
RatioValue lr_hot(Probability p);

/// Cold-search frequentist ratio: lr_hot(p) / (d+1).
RatioValue lr_frequentist(Probability p, long long d);

/// Cold-search Bayesian ratio: lr_hot(p) / psnd. psnd == 0 gives +infinity.
RatioValue lr_bayes(Probability p, Probability psnd);

/// Prior weight that the source is outside the database: N / (m*D + N).
Probability psnd_from_population(double n_outside, double m_factor, long long d);

/// Pure-likelihood ratio for the Matcher; equal to lr_hot(p) for every d.
RatioValue lr_pure(Probability p);

/// Prior odds (1 - psnd) / psnd; +infinity at psnd = 0, zero at psnd = 1.
RatioValue prior_odds(Probability psnd);

/// Total ratio r0 * lr_hot(p) under extended-real multiplication.
RatioValue lr_total(const RatioValue& r0, Probability p);

/// Evaluates every school on one scenario, resolving a population-form
/// prior through psnd_from_population.
ComparisonReport compare_schools(const Scenario& scenario);

/// log10((1-p)^d), kept accurate through log1p for tiny p and huge d.
double log10_one_minus_p_pow(double p, long long d);

namespace detail {
/// Shared precondition: ratio formulas need p strictly inside (0,1).
void require_open_unit(Probability p);
}  // namespace detail

}  // namespace dnalr

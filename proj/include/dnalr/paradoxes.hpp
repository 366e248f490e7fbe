#pragma once

#include <utility>

#include "dnalr/ratio_value.hpp"

namespace dnalr {

/// Probability that k given tickets all lose in a t-ticket raffle with one
/// guaranteed winner: (t - k) / t.
Probability raffle_survival(long long tickets, long long k);

/// The same survival probability as an exact fraction (t - k, t).
std::pair<long long, long long> raffle_survival_fraction(long long tickets, long long k);

struct ParadoxReport {
  Probability threshold;
  bool singleton_accepted = false;
  long long k_max = 0;  // largest k with survival >= threshold
  Probability full_conjunction_prob;
  bool contradiction = false;
};

/// Applies the high-probability acceptance rule to a raffle: each single
/// ticket may clear the threshold while the conjunction of all is impossible.
ParadoxReport lottery_paradox_report(long long tickets, Probability threshold);

/// Probability that at least two of n people share a birthday.
Probability birthday_collision(long long n, long long days = 365);

/// Chance of naming the card a magician pre-selected from the deck.
Probability card_pick_probability(long long deck_size);

/// Likelihood ratio of "all cards are the named card" vs "standard deck"
/// after observing one matching draw. The same value whether the hypotheses
/// were stated before or after the draw.
RatioValue deck_likelihood_ratio(long long deck_size);

}  // namespace dnalr

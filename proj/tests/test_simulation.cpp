#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dnalr/evidence.hpp"
#include "dnalr/simulation.hpp"

using namespace dnalr;

TEST_CASE("match_event_probs closed forms") {
  SUBCASE("empty complement, d = 0") {
    const auto ev = match_event_probs(Probability(0.3), 0);
    CHECK(ev.given_sid() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(ev.given_snd() == doctest::Approx(0.3).epsilon(1e-14));
  }
  SUBCASE("p = 0.5, d = 3, frozen from the 16-outcome enumeration") {
    const auto ev = match_event_probs(Probability(0.5), 3);
    CHECK(ev.given_sid() == doctest::Approx(0.125).epsilon(1e-13));
    CHECK(ev.given_snd() == doctest::Approx(0.25).epsilon(1e-13));
  }
  SUBCASE("p = 0.01, d = 9, frozen from the D=9 enumeration") {
    const auto ev = match_event_probs(Probability(0.01), 9);
    CHECK(ev.given_sid() == doctest::Approx(0.9135172474836408).epsilon(1e-13));
    CHECK(ev.given_snd() == doctest::Approx(0.09135172474836409).epsilon(1e-13));
  }
}

TEST_CASE("likelihoods_matcher closed forms and d-free ratio") {
  SUBCASE("p = 0.5, d = 1, frozen from the 4-outcome enumeration") {
    const auto lk = likelihoods_matcher(Probability(0.5), 1);
    CHECK(lk.theta11() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(lk.theta10() == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::pow(10.0, lk.log10_ratio()) == doctest::Approx(2.0).epsilon(1e-13));
  }
  SUBCASE("single-profile database") {
    const auto lk = likelihoods_matcher(Probability(0.2), 0);
    CHECK(lk.theta11() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(lk.theta10() == doctest::Approx(0.2).epsilon(1e-14));
  }
  SUBCASE("ratio equals 1/p for every d") {
    for (double p : {0.5, 0.1, 0.01})
      for (long long d : {0LL, 1LL, 5LL, 12LL, 100LL, 100000LL}) {
        const auto lk = likelihoods_matcher(Probability(p), d);
        CHECK(lk.log10_ratio() == doctest::Approx(-std::log10(p)).epsilon(1e-12));
      }
  }
}

TEST_CASE("match_vector_probability agrees with hand values") {
  const auto hyp_sid = HypothesisSpec::source_is_profile(1);
  const auto hyp_snd = HypothesisSpec::source_not_in_db();
  const Probability p(0.5);
  // d = 1: vectors (1,0) has mass 1*0.5 under theta11, 0.5*0.5 under theta10.
  const auto y10 = MatchVector::from_mask(0b01, 1);
  CHECK(match_vector_probability(y10, hyp_sid, p) == doctest::Approx(0.5));
  CHECK(match_vector_probability(y10, hyp_snd, p) == doctest::Approx(0.25));
  // (0,1) is impossible when profile 1 is the source.
  const auto y01 = MatchVector::from_mask(0b10, 1);
  CHECK(match_vector_probability(y01, hyp_sid, p) == 0.0);
  CHECK(y01.match_count() == 1);
}

TEST_CASE("enumerate_exact spot values") {
  SUBCASE("p = 0.5, d = 1") {
    const auto t = enumerate_exact(Probability(0.5), 1);
    CHECK(t.p_matcher1_given_theta11 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(t.p_matcher1_given_theta10 == doctest::Approx(0.25).epsilon(1e-14));
  }
  SUBCASE("p = 0.5, d = 3: C(4,1) * 0.5^4") {
    const auto t = enumerate_exact(Probability(0.5), 3);
    CHECK(t.p_single_match_given_snd == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(t.p_single_match_given_sid == doctest::Approx(0.125).epsilon(1e-14));
  }
  SUBCASE("normalization") {
    for (double p : {0.5, 0.1, 0.01})
      for (long long d : {0LL, 3LL, 8LL}) {
        const auto t = enumerate_exact(Probability(p), d);
        CHECK(t.total_mass_sid == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t.total_mass_snd == doctest::Approx(1.0).epsilon(1e-12));
      }
  }
  SUBCASE("cap refusal") {
    CHECK_THROWS_WITH_AS(enumerate_exact(Probability(0.5), 21),
                         doctest::Contains("use Monte Carlo"), std::domain_error);
    CHECK_NOTHROW(enumerate_exact(Probability(0.5), 21, 25));
  }
}

TEST_CASE("oracle equivalence: enumeration vs closed forms, d <= 12") {
  for (double p : {0.5, 0.25, 0.1, 0.01}) {
    for (long long d = 0; d <= 12; ++d) {
      const auto t = enumerate_exact(Probability(p), d);
      const auto ev = match_event_probs(Probability(p), d);
      const auto lk = likelihoods_matcher(Probability(p), d);
      CHECK(t.p_single_match_given_sid ==
            doctest::Approx(ev.given_sid()).epsilon(1e-12));
      CHECK(t.p_single_match_given_snd ==
            doctest::Approx(ev.given_snd()).epsilon(1e-12));
      CHECK(t.p_matcher1_given_theta11 == doctest::Approx(lk.theta11()).epsilon(1e-12));
      CHECK(t.p_matcher1_given_theta10 == doctest::Approx(lk.theta10()).epsilon(1e-12));
    }
  }
}

TEST_CASE("enumeration reproduces the frequentist and matcher ratios") {
  for (double p : {0.5, 0.1, 0.01}) {
    for (long long d : {1LL, 4LL, 9LL}) {
      const auto t = enumerate_exact(Probability(p), d);
      const double rf = t.p_single_match_given_sid / t.p_single_match_given_snd;
      CHECK(rf == doctest::Approx(1.0 / ((d + 1) * p)).epsilon(1e-12));
      const double rl = t.p_matcher1_given_theta11 / t.p_matcher1_given_theta10;
      CHECK(rl == doctest::Approx(1.0 / p).epsilon(1e-12));
    }
  }
}

TEST_CASE("simulate_trials determinism across thread counts") {
  const Probability p(0.05);
  const auto hyp = HypothesisSpec::source_not_in_db();
  const auto a = simulate_trials(p, 20, hyp, 50000, 42, 1);
  const auto b = simulate_trials(p, 20, hyp, 50000, 42, 4);
  const auto c = simulate_trials(p, 20, hyp, 50000, 42, 7);
  CHECK(a.single_match == b.single_match);
  CHECK(a.matcher_is_1 == b.matcher_is_1);
  CHECK(a.zero_match == b.zero_match);
  CHECK(a.multi_match == b.multi_match);
  CHECK(a.single_match == c.single_match);
  CHECK(a.zero_match == c.zero_match);
}

TEST_CASE("simulate_trials tallies and full-sensitivity guarantees") {
  const auto counts = simulate_trials(Probability(0.1), 9,
                                      HypothesisSpec::source_is_profile(1), 20000, 7);
  CHECK(counts.single_match + counts.zero_match + counts.multi_match == counts.trials);
  CHECK(counts.matcher_is_1 <= counts.single_match);
  CHECK(counts.zero_match == 0);  // the source always matches
  CHECK(counts.trials == 20000);
  CHECK(counts.seed == 7);
}

TEST_CASE("simulate_trials input validation") {
  CHECK_THROWS_AS(simulate_trials(Probability(0.1), 4,
                                  HypothesisSpec::source_is_profile(6), 10, 1),
                  std::domain_error);
  CHECK_THROWS_AS(simulate_trials(Probability(0.1), 4,
                                  HypothesisSpec::source_not_in_db(), 0, 1),
                  std::domain_error);
}

TEST_CASE("Monte Carlo frequencies land near the closed forms") {
  const Probability p(0.01);
  const long long d = 9;
  const long long trials = 400000;
  const auto ev = match_event_probs(p, d);

  const auto sid = simulate_trials(p, d, HypothesisSpec::source_is_profile(1), trials, 123);
  const auto snd = simulate_trials(p, d, HypothesisSpec::source_not_in_db(), trials, 456);

  const double n = static_cast<double>(trials);
  const double se_sid = std::sqrt(ev.given_sid() * (1.0 - ev.given_sid()) / n);
  const double se_snd = std::sqrt(ev.given_snd() * (1.0 - ev.given_snd()) / n);
  CHECK(std::abs(sid.single_match / n - ev.given_sid()) < 4.0 * se_sid);
  CHECK(std::abs(snd.single_match / n - ev.given_snd()) < 4.0 * se_snd);
}

TEST_CASE("empirical_lr reproduces R_F and the matcher ratio") {
  const Probability p(0.5);
  const long long d = 3;
  const long long trials = 1000000;
  const auto sid = simulate_trials(p, d, HypothesisSpec::source_is_profile(1), trials, 99);
  const auto snd = simulate_trials(p, d, HypothesisSpec::source_not_in_db(), trials, 100);
  const auto rep = empirical_lr(sid, snd);

  REQUIRE(rep.single_match_ratio.resolved);
  REQUIRE(rep.matcher_ratio.resolved);
  // R_F = R_1/(D+1) = 2/4; matcher ratio = 1/p = 2.
  CHECK(rep.single_match_ratio.lo <= 0.5);
  CHECK(rep.single_match_ratio.hi >= 0.5);
  CHECK(rep.single_match_ratio.value == doctest::Approx(0.5).epsilon(0.02));
  CHECK(rep.matcher_ratio.lo <= 2.0);
  CHECK(rep.matcher_ratio.hi >= 2.0);
  CHECK(rep.matcher_ratio.value == doctest::Approx(2.0).epsilon(0.02));
}

TEST_CASE("empirical_lr marks zero denominators unresolved") {
  EmpiricalCounts sid{1000, 900, 900, 0, 100, 1};
  EmpiricalCounts snd{1000, 0, 0, 990, 10, 2};
  const auto rep = empirical_lr(sid, snd);
  CHECK(!rep.single_match_ratio.resolved);
  CHECK(!rep.matcher_ratio.resolved);

  EmpiricalCounts mismatched{500, 0, 0, 500, 0, 3};
  CHECK_THROWS_AS(empirical_lr(sid, mismatched), std::domain_error);
}

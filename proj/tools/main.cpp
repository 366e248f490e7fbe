// Command-line front end: scenario comparison across the inference schools,
// enumeration and Monte Carlo verification, parameter sweeps, and the
// paradox demonstrations. Emits tables, CSV, or JSON lines.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dnalr/evidence.hpp"
#include "dnalr/paradoxes.hpp"
#include "dnalr/rng.hpp"
#include "dnalr/simulation.hpp"

using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternalCheck = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InternalCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Table, Csv, JsonLines };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "csv") return Format::Csv;
  if (s == "json-lines") return Format::JsonLines;
  throw UsageError("unknown format: " + s);
}

// ---------------------------------------------------------------------------
// Scenario assembly: CLI flags layered over an optional scenario file.
// ---------------------------------------------------------------------------

struct ScenarioOpts {
  std::optional<double> p;
  std::optional<long long> d;
  std::optional<long long> db_size;
  std::optional<double> psnd;
  std::optional<double> n_outside;
  std::optional<double> m_factor;
  std::optional<std::string> label;
};

void merge_defaults(ScenarioOpts& opts, const ScenarioOpts& file) {
  if (!opts.p) opts.p = file.p;
  if (!opts.d) opts.d = file.d;
  if (!opts.db_size) opts.db_size = file.db_size;
  if (!opts.psnd) opts.psnd = file.psnd;
  if (!opts.n_outside) opts.n_outside = file.n_outside;
  if (!opts.m_factor) opts.m_factor = file.m_factor;
  if (!opts.label) opts.label = file.label;
}

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Flat key = value format mirroring the CLI flags; '#' starts a comment.
ScenarioOpts load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open scenario file: " + path);
  ScenarioOpts opts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "p") {
        opts.p = std::stod(value);
      } else if (key == "d") {
        opts.d = std::stoll(value);
      } else if (key == "db-size") {
        opts.db_size = std::stoll(value);
      } else if (key == "psnd") {
        opts.psnd = std::stod(value);
      } else if (key == "n-outside") {
        opts.n_outside = std::stod(value);
      } else if (key == "m-factor") {
        opts.m_factor = std::stod(value);
      } else if (key == "label") {
        opts.label = value;
      } else {
        throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": bad value for '" + key + "'");
    }
  }
  return opts;
}

dnalr::Scenario build_scenario(const ScenarioOpts& opts) {
  if (!opts.p) throw UsageError("missing random-match probability (--p)");
  if (opts.d && opts.db_size) {
    throw UsageError("--d and --db-size are mutually exclusive");
  }
  const bool has_pop = opts.n_outside || opts.m_factor;
  if (opts.psnd && has_pop) {
    throw UsageError("give either --psnd or --n-outside/--m-factor, not both");
  }
  if (has_pop && !(opts.n_outside && opts.m_factor)) {
    throw UsageError("population prior needs both --n-outside and --m-factor");
  }

  dnalr::Scenario s;
  s.p = dnalr::Probability(*opts.p);
  if (opts.db_size) {
    if (*opts.db_size < 1) throw UsageError("--db-size must be >= 1");
    s.d = *opts.db_size - 1;
  } else {
    s.d = opts.d.value_or(0);
  }
  if (opts.psnd) {
    s.prior = dnalr::DirectPrior{dnalr::Probability(*opts.psnd)};
  } else if (has_pop) {
    s.prior = dnalr::PopulationPrior{*opts.n_outside, *opts.m_factor};
  }  // else keep the default psnd = 0.5
  s.label = opts.label.value_or("");
  return s;
}

// ---------------------------------------------------------------------------
// Record emission. One ordered_json object per record; CSV and JSON lines
// serialize the same object so their numeric values round-trip identically.
// ---------------------------------------------------------------------------

ordered_json ratio_log10_field(const dnalr::RatioValue& r) {
  if (r.is_infinite()) return "inf";
  if (r.is_zero()) return "-inf";
  return r.log10_value();
}

ordered_json ratio_linear_field(const dnalr::RatioValue& r) {
  if (auto lin = r.linear()) return *lin;
  return nullptr;
}

std::string csv_cell(const ordered_json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void emit_csv(const std::vector<ordered_json>& records, std::ostream& os) {
  if (records.empty()) return;
  bool first = true;
  for (const auto& [key, value] : records.front().items()) {
    (void)value;
    os << (first ? "" : ",") << key;
    first = false;
  }
  os << "\n";
  for (const auto& rec : records) {
    first = true;
    for (const auto& [key, value] : rec.items()) {
      (void)key;
      os << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    os << "\n";
  }
}

void emit_json_lines(const std::vector<ordered_json>& records, std::ostream& os) {
  for (const auto& rec : records) os << rec.dump() << "\n";
}

// Linear values above 10^15 are shown in log10 form only in tables.
std::string table_ratio(const dnalr::RatioValue& r) {
  char buf[64];
  if (r.is_infinite()) return "inf";
  if (r.is_zero()) return "0";
  const double lg = r.log10_value();
  if (std::abs(lg) <= 15.0) {
    std::snprintf(buf, sizeof(buf), "%.6g  (log10 %.6f)", *r.linear(), lg);
  } else {
    std::snprintf(buf, sizeof(buf), "10^%.6f", lg);
  }
  return buf;
}

// ---------------------------------------------------------------------------
// compare / sweep
// ---------------------------------------------------------------------------

ordered_json compare_record(const dnalr::Scenario& s, const dnalr::ComparisonReport& rep) {
  ordered_json rec;
  rec["label"] = rep.label;
  rec["p"] = s.p.value();
  rec["d"] = s.d;
  rec["db_size"] = s.d + 1;
  rec["psnd"] = rep.psnd.value();
  rec["bayes_degenerate"] = rep.bayes_degenerate;
  const std::pair<const char*, const dnalr::RatioValue*> ratios[] = {
      {"r1", &rep.r1}, {"rf", &rep.rf}, {"rb", &rep.rb},
      {"rl", &rep.rl}, {"r0", &rep.r0}, {"rt", &rep.rt}};
  for (const auto& [name, r] : ratios) {
    rec[std::string(name) + "_log10"] = ratio_log10_field(*r);
    rec[name] = ratio_linear_field(*r);
  }
  return rec;
}

void print_compare_table(const dnalr::Scenario& s, const dnalr::ComparisonReport& rep,
                         std::ostream& os) {
  if (!rep.label.empty()) os << "scenario: " << rep.label << "\n";
  os << "p = " << s.p.value() << "   D+1 = " << s.d + 1
     << "   P(SND) = " << rep.psnd.value() << "\n";
  if (rep.bayes_degenerate) {
    os << "note: P(SND) = 1, the Bayesian ratio is degenerate here\n";
  }
  os << "  R_1 (hot suspect)     " << table_ratio(rep.r1) << "\n"
     << "  R_F (frequentist)     " << table_ratio(rep.rf) << "\n"
     << "  R_B (Bayesian)        " << table_ratio(rep.rb) << "\n"
     << "  R_L (pure likelihood) " << table_ratio(rep.rl) << "\n"
     << "  R_0 (prior odds)      " << table_ratio(rep.r0) << "\n"
     << "  R_T (total)           " << table_ratio(rep.rt) << "\n";
}

int run_compare(const ScenarioOpts& opts, Format format) {
  const dnalr::Scenario s = build_scenario(opts);
  const dnalr::ComparisonReport rep = dnalr::compare_schools(s);
  if (format == Format::Table) {
    print_compare_table(s, rep, std::cout);
  } else {
    const std::vector<ordered_json> records{compare_record(s, rep)};
    format == Format::Csv ? emit_csv(records, std::cout)
                          : emit_json_lines(records, std::cout);
  }
  return kExitOk;
}

struct SweepOpts {
  std::string param;
  double start = 0.0;
  double stop = 0.0;
  long long points = 0;
};

std::vector<double> sweep_axis(const SweepOpts& sw) {
  if (sw.points < 2) throw UsageError("--sweep-points must be >= 2");
  std::vector<double> xs;
  xs.reserve(static_cast<std::size_t>(sw.points));
  const bool geometric = sw.param == "db-size" || sw.param == "p";
  if (geometric) {
    if (sw.start <= 0.0 || sw.stop <= 0.0) {
      throw UsageError("geometric sweep needs positive start/stop");
    }
    const double step = std::log(sw.stop / sw.start) / static_cast<double>(sw.points - 1);
    for (long long i = 0; i < sw.points; ++i) {
      xs.push_back(sw.start * std::exp(step * static_cast<double>(i)));
    }
  } else {
    const double step = (sw.stop - sw.start) / static_cast<double>(sw.points - 1);
    for (long long i = 0; i < sw.points; ++i) {
      xs.push_back(sw.start + step * static_cast<double>(i));
    }
  }
  return xs;
}

int run_sweep(ScenarioOpts opts, const SweepOpts& sw, Format format) {
  if (sw.param != "db-size" && sw.param != "p" && sw.param != "psnd") {
    throw UsageError("--sweep-param must be one of db-size, p, psnd");
  }
  if (sw.param == "db-size" && (opts.d || opts.db_size)) {
    throw UsageError("db-size sweep conflicts with --d/--db-size");
  }
  if (sw.param == "p" && opts.p) throw UsageError("p sweep conflicts with --p");
  if (sw.param == "psnd" && opts.psnd) throw UsageError("psnd sweep conflicts with --psnd");
  if (sw.param == "p" && !opts.p) opts.p = 0.5;  // placeholder, overwritten per point
  if (sw.param == "psnd" && !opts.psnd) opts.psnd = 0.5;
  if (sw.param == "db-size") opts.db_size = 1;

  std::vector<ordered_json> records;
  for (double x : sweep_axis(sw)) {
    ScenarioOpts point = opts;
    if (sw.param == "db-size") {
      point.db_size = std::max<long long>(1, std::llround(x));
    } else if (sw.param == "p") {
      point.p = x;
    } else {
      point.psnd = x;
    }
    const dnalr::Scenario s = build_scenario(point);
    const dnalr::ComparisonReport rep = dnalr::compare_schools(s);
    ordered_json rec;
    rec["sweep_param"] = sw.param;
    rec["sweep_value"] = sw.param == "db-size" ? ordered_json(*point.db_size) : ordered_json(x);
    rec.update(compare_record(s, rep));
    records.push_back(std::move(rec));
  }

  if (format == Format::Table) {
    std::printf("%-12s %12s %12s %12s %12s %12s\n", sw.param.c_str(), "R_1 log10",
                "R_F log10", "R_B log10", "R_L log10", "R_T log10");
    for (const auto& rec : records) {
      auto lg = [&](const char* k) {
        const auto& v = rec[std::string(k) + "_log10"];
        return v.is_string() ? std::string(v.get<std::string>())
                             : std::to_string(v.get<double>());
      };
      std::printf("%-12s %12s %12s %12s %12s %12s\n",
                  csv_cell(rec["sweep_value"]).c_str(), lg("r1").c_str(), lg("rf").c_str(),
                  lg("rb").c_str(), lg("rl").c_str(), lg("rt").c_str());
    }
  } else {
    format == Format::Csv ? emit_csv(records, std::cout)
                          : emit_json_lines(records, std::cout);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

int run_enumerate(const ScenarioOpts& opts, Format format) {
  const dnalr::Scenario s = build_scenario(opts);
  const dnalr::ExactTable t = dnalr::enumerate_exact(s.p, s.d);
  if (std::abs(t.total_mass_sid - 1.0) > 1e-12 ||
      std::abs(t.total_mass_snd - 1.0) > 1e-12) {
    throw InternalCheckError("enumeration mass check failed");
  }

  const dnalr::EventProbs ev = dnalr::match_event_probs(s.p, s.d);
  const dnalr::MatcherLikelihoods lk = dnalr::likelihoods_matcher(s.p, s.d);
  auto rel_err = [](double exact, double closed) {
    return std::abs(exact - closed) / closed;
  };

  ordered_json rec;
  rec["p"] = s.p.value();
  rec["d"] = s.d;
  rec["p_single_match_given_sid"] = t.p_single_match_given_sid;
  rec["p_single_match_given_snd"] = t.p_single_match_given_snd;
  rec["p_matcher1_given_theta11"] = t.p_matcher1_given_theta11;
  rec["p_matcher1_given_theta10"] = t.p_matcher1_given_theta10;
  rec["closed_single_match_given_sid"] = ev.given_sid();
  rec["closed_single_match_given_snd"] = ev.given_snd();
  rec["closed_matcher1_given_theta11"] = lk.theta11();
  rec["closed_matcher1_given_theta10"] = lk.theta10();
  rec["rel_err_single_sid"] = rel_err(t.p_single_match_given_sid, ev.given_sid());
  rec["rel_err_single_snd"] = rel_err(t.p_single_match_given_snd, ev.given_snd());
  rec["rel_err_matcher_theta11"] = rel_err(t.p_matcher1_given_theta11, lk.theta11());
  rec["rel_err_matcher_theta10"] = rel_err(t.p_matcher1_given_theta10, lk.theta10());
  rec["total_mass_sid"] = t.total_mass_sid;
  rec["total_mass_snd"] = t.total_mass_snd;

  if (format == Format::Table) {
    std::printf("enumeration over %lld match vectors (p = %g, D = %lld)\n",
                1LL << (s.d + 1), s.p.value(), s.d);
    std::printf("%-28s %14s %14s %10s\n", "event", "enumerated", "closed form", "rel err");
    auto row = [&](const char* name, double exact, double closed) {
      std::printf("%-28s %14.10f %14.10f %10.2e\n", name, exact, closed,
                  rel_err(exact, closed));
    };
    row("P(E | SID)", t.p_single_match_given_sid, ev.given_sid());
    row("P(E | SND)", t.p_single_match_given_snd, ev.given_snd());
    row("L(theta11; y)", t.p_matcher1_given_theta11, lk.theta11());
    row("L(theta10; y)", t.p_matcher1_given_theta10, lk.theta10());
    std::printf("total mass: SID %.15f, SND %.15f\n", t.total_mass_sid, t.total_mass_snd);
  } else {
    const std::vector<ordered_json> records{rec};
    format == Format::Csv ? emit_csv(records, std::cout)
                          : emit_json_lines(records, std::cout);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

void check_tallies(const dnalr::EmpiricalCounts& c) {
  if (c.single_match + c.zero_match + c.multi_match != c.trials ||
      c.matcher_is_1 > c.single_match) {
    throw InternalCheckError("simulation tally invariant violated");
  }
}

void counts_into(ordered_json& rec, const std::string& prefix,
                 const dnalr::EmpiricalCounts& c) {
  rec[prefix + "_single_match"] = c.single_match;
  rec[prefix + "_matcher_is_1"] = c.matcher_is_1;
  rec[prefix + "_zero_match"] = c.zero_match;
  rec[prefix + "_multi_match"] = c.multi_match;
}

void estimate_into(ordered_json& rec, const std::string& prefix,
                   const dnalr::RatioEstimate& est) {
  rec[prefix + "_resolved"] = est.resolved;
  rec[prefix] = est.resolved ? ordered_json(est.value) : ordered_json(nullptr);
  rec[prefix + "_lo"] = est.resolved ? ordered_json(est.lo) : ordered_json(nullptr);
  rec[prefix + "_hi"] = est.resolved ? ordered_json(est.hi) : ordered_json(nullptr);
}

int run_simulate(const ScenarioOpts& opts, long long trials, std::uint64_t seed,
                 double ci_multiplier, Format format) {
  const dnalr::Scenario s = build_scenario(opts);
  // Two independent simulations from one user seed: sub-seeds are derived
  // deterministically so a rerun with the same --seed is byte-identical.
  const std::uint64_t seed_sid = dnalr::derive_seed(seed, 1);
  const std::uint64_t seed_snd = dnalr::derive_seed(seed, 2);

  const auto counts_sid = dnalr::simulate_trials(
      s.p, s.d, dnalr::HypothesisSpec::source_is_profile(1), trials, seed_sid);
  const auto counts_snd = dnalr::simulate_trials(
      s.p, s.d, dnalr::HypothesisSpec::source_not_in_db(), trials, seed_snd);
  check_tallies(counts_sid);
  check_tallies(counts_snd);

  const auto report = dnalr::empirical_lr(counts_sid, counts_snd, ci_multiplier);
  const auto ev = dnalr::match_event_probs(s.p, s.d);
  const auto rf = dnalr::lr_frequentist(s.p, s.d);
  const auto r1 = dnalr::lr_hot(s.p);

  ordered_json rec;
  rec["p"] = s.p.value();
  rec["d"] = s.d;
  rec["trials"] = trials;
  rec["seed"] = seed;
  rec["ci_multiplier"] = ci_multiplier;
  counts_into(rec, "sid", counts_sid);
  counts_into(rec, "snd", counts_snd);
  rec["closed_single_match_given_sid"] = ev.given_sid();
  rec["closed_single_match_given_snd"] = ev.given_snd();
  estimate_into(rec, "empirical_rf", report.single_match_ratio);
  estimate_into(rec, "empirical_matcher_ratio", report.matcher_ratio);
  rec["closed_rf"] = ratio_linear_field(rf);
  rec["closed_rf_log10"] = ratio_log10_field(rf);
  rec["closed_matcher_ratio"] = ratio_linear_field(r1);
  rec["closed_matcher_ratio_log10"] = ratio_log10_field(r1);

  if (format == Format::Table) {
    const double n = static_cast<double>(trials);
    std::printf("simulation: p = %g, D = %lld, trials = %lld, seed = %llu\n",
                s.p.value(), s.d, trials, static_cast<unsigned long long>(seed));
    std::printf("%-22s %14s %14s\n", "", "source in db", "source not in db");
    std::printf("%-22s %14lld %14lld\n", "single match", counts_sid.single_match,
                counts_snd.single_match);
    std::printf("%-22s %14lld %14lld\n", "matcher is profile 1", counts_sid.matcher_is_1,
                counts_snd.matcher_is_1);
    std::printf("%-22s %14lld %14lld\n", "zero matches", counts_sid.zero_match,
                counts_snd.zero_match);
    std::printf("%-22s %14lld %14lld\n", "multiple matches", counts_sid.multi_match,
                counts_snd.multi_match);
    std::printf("%-22s %14.6f %14.6f\n", "single-match rate",
                counts_sid.single_match / n, counts_snd.single_match / n);
    std::printf("%-22s %14.6f %14.6f\n", "closed form", ev.given_sid(), ev.given_snd());
    auto print_est = [&](const char* name, const dnalr::RatioEstimate& est,
                         const dnalr::RatioValue& closed) {
      if (est.resolved) {
        std::printf("%s: %.6g  [%.6g, %.6g]  closed form %s\n", name, est.value, est.lo,
                    est.hi, table_ratio(closed).c_str());
      } else {
        std::printf("%s: unresolved at this trial budget\n", name);
      }
    };
    print_est("empirical R_F", report.single_match_ratio, rf);
    print_est("empirical matcher ratio", report.matcher_ratio, r1);
  } else {
    const std::vector<ordered_json> records{rec};
    format == Format::Csv ? emit_csv(records, std::cout)
                          : emit_json_lines(records, std::cout);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// paradox
// ---------------------------------------------------------------------------

int emit_single(const ordered_json& rec, Format format,
                const std::function<void()>& table_printer) {
  if (format == Format::Table) {
    table_printer();
  } else {
    const std::vector<ordered_json> records{rec};
    format == Format::Csv ? emit_csv(records, std::cout)
                          : emit_json_lines(records, std::cout);
  }
  return kExitOk;
}

int run_birthday(long long n, long long days, Format format) {
  const auto prob = dnalr::birthday_collision(n, days);
  ordered_json rec;
  rec["paradox"] = "birthday";
  rec["n"] = n;
  rec["days"] = days;
  rec["collision_probability"] = prob.value();
  return emit_single(rec, format, [&] {
    std::printf("P(at least one shared birthday among %lld people) = %.6g\n", n,
                prob.value());
  });
}

int run_lottery(long long tickets, double threshold, Format format) {
  const auto rep = dnalr::lottery_paradox_report(tickets, dnalr::Probability(threshold));
  ordered_json rec;
  rec["paradox"] = "lottery";
  rec["tickets"] = tickets;
  rec["threshold"] = rep.threshold.value();
  rec["singleton_accepted"] = rep.singleton_accepted;
  rec["k_max"] = rep.k_max;
  rec["full_conjunction_prob"] = rep.full_conjunction_prob.value();
  rec["contradiction"] = rep.contradiction;
  return emit_single(rec, format, [&] {
    std::printf("raffle with %lld tickets, acceptance threshold %g\n", tickets,
                rep.threshold.value());
    std::printf("  single ticket loses with probability %g -> %s\n",
                dnalr::raffle_survival(tickets, 1).value(),
                rep.singleton_accepted ? "accepted" : "not accepted");
    std::printf("  largest k with survival >= threshold: %lld\n", rep.k_max);
    std::printf("  all %lld tickets lose with probability %g\n", tickets,
                rep.full_conjunction_prob.value());
    std::printf("  contradiction: %s\n", rep.contradiction ? "yes" : "no");
  });
}

int run_card(long long deck_size, Format format) {
  const auto pick = dnalr::card_pick_probability(deck_size);
  const auto lr = dnalr::deck_likelihood_ratio(deck_size);
  ordered_json rec;
  rec["paradox"] = "card";
  rec["deck_size"] = deck_size;
  rec["pick_probability"] = pick.value();
  rec["likelihood_ratio"] = ratio_linear_field(lr);
  rec["likelihood_ratio_log10"] = ratio_log10_field(lr);
  return emit_single(rec, format, [&] {
    std::printf("deck of %lld cards\n", deck_size);
    std::printf("  probability of naming the chosen card: %g\n", pick.value());
    std::printf("  L(all-same deck)/L(standard deck) after one matching draw: %s\n",
                table_ratio(lr).c_str());
    std::printf("  identical whether the hypotheses were stated before or after the draw\n");
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"likelihood-ratio calculator for DNA database-search evidence"};
  app.require_subcommand(1);

  std::string format_name = "table";
  app.add_option("--format", format_name, "output format: table, csv, json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines"}));

  ScenarioOpts opts;
  std::string scenario_file;
  auto add_scenario_flags = [&](CLI::App* cmd) {
    cmd->add_option("--p", opts.p, "random-match probability, in (0,1)");
    cmd->add_option("--d", opts.d, "database size minus one (D)");
    cmd->add_option("--db-size", opts.db_size, "database size D+1");
    cmd->add_option("--psnd", opts.psnd, "prior P(source not in database)");
    cmd->add_option("--n-outside", opts.n_outside, "potential suspects outside the database (N)");
    cmd->add_option("--m-factor", opts.m_factor, "in-database propensity factor (m)");
    cmd->add_option("--scenario", scenario_file, "scenario file; explicit flags override");
    cmd->add_option("--label", opts.label, "scenario label for reports");
  };

  auto* compare = app.add_subcommand("compare", "all schools side by side for one scenario");
  add_scenario_flags(compare);

  long long trials = 1000000;
  std::uint64_t seed = 1;
  double ci_multiplier = 4.0;
  auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo vs closed forms");
  add_scenario_flags(simulate);
  simulate->add_option("--trials", trials, "Monte Carlo trials per hypothesis");
  simulate->add_option("--seed", seed, "simulation seed");
  simulate->add_option("--ci-multiplier", ci_multiplier, "interval half-width in standard errors");

  auto* enumerate = app.add_subcommand("enumerate", "exact enumeration vs closed forms");
  add_scenario_flags(enumerate);

  SweepOpts sweep_opts;
  auto* sweep = app.add_subcommand("sweep", "compare along one parameter axis");
  add_scenario_flags(sweep);
  sweep->add_option("--sweep-param", sweep_opts.param, "axis: db-size, p, or psnd")->required();
  sweep->add_option("--sweep-start", sweep_opts.start)->required();
  sweep->add_option("--sweep-stop", sweep_opts.stop)->required();
  sweep->add_option("--sweep-points", sweep_opts.points)->required();

  auto* paradox = app.add_subcommand("paradox", "lottery, birthday and card-trick numbers");
  paradox->require_subcommand(1);
  long long birthday_n = 0, birthday_days = 365;
  auto* birthday = paradox->add_subcommand("birthday", "shared-birthday probability");
  birthday->add_option("--n", birthday_n, "people in the room")->required();
  birthday->add_option("--days", birthday_days, "days in the year");
  long long lottery_tickets = 0;
  double lottery_threshold = 0.0;
  auto* lottery = paradox->add_subcommand("lottery", "raffle acceptance-rule report");
  lottery->add_option("--tickets", lottery_tickets)->required();
  lottery->add_option("--threshold", lottery_threshold)->required();
  long long deck_size = 52;
  auto* card = paradox->add_subcommand("card", "card-trick likelihood ratio");
  card->add_option("--deck-size", deck_size);

  // --format lives on the top-level app; let it appear after a subcommand.
  for (auto* sub : {compare, simulate, enumerate, sweep, paradox, birthday, lottery, card}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = parse_format(format_name);
    if (!scenario_file.empty()) {
      merge_defaults(opts, load_scenario_file(scenario_file));
    }
    if (compare->parsed()) return run_compare(opts, format);
    if (simulate->parsed()) return run_simulate(opts, trials, seed, ci_multiplier, format);
    if (enumerate->parsed()) return run_enumerate(opts, format);
    if (sweep->parsed()) return run_sweep(opts, sweep_opts, format);
    if (paradox->parsed()) {
      if (birthday->parsed()) return run_birthday(birthday_n, birthday_days, format);
      if (lottery->parsed()) return run_lottery(lottery_tickets, lottery_threshold, format);
      if (card->parsed()) return run_card(deck_size, format);
    }
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalCheckError& e) {
    std::cerr << "internal check failure: " << e.what() << "\n";
    return kExitInternalCheck;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternalCheck;
  }
}

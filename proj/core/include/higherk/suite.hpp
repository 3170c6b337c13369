#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "higherk/higher_ar.hpp"
#include "higherk/ktheory.hpp"
#include "higherk/tilting.hpp"

namespace higherk {

enum class CheckKind {
  Cluster,
  Gram,
  ErrorTerm,
  RelationMembership,
  K0Iso,
  ConditionH,
  DefectSymmetry,
  ArFormula,
  Determination,
};

/// In execution order.
const std::vector<CheckKind>& all_checks();
std::string_view check_name(CheckKind k);
std::optional<CheckKind> parse_check(std::string_view name);

enum class Verdict { Pass, Fail, Skipped, HypothesesNotMet };
std::string_view verdict_name(Verdict v);

struct Witness {
  std::string description;
  std::string data;  // JSON text that reproduces the failure, may be empty
};

struct CheckResult {
  CheckKind kind = CheckKind::Cluster;
  Verdict verdict = Verdict::Skipped;
  std::string summary;
  std::vector<std::string> details;
  std::map<std::string, IntegerMatrix> matrices;
  std::vector<Witness> witnesses;
  std::optional<double> seconds;
};

struct SuiteConfig {
  TiltingData tilting;
  /// Enumerated when empty.
  std::vector<Representation> indecomposables;
  std::uint64_t seed = 1;
  std::size_t probes = 100;
  std::vector<CheckKind> checks = all_checks();
  std::size_t max_indecs = 200;
  bool timing = false;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t probes = 0;
  std::size_t d = 0;
  std::vector<std::string> summands;
  std::size_t indecomposables = 0;
  std::map<std::string, std::string> versions;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckResult* find(CheckKind k) const;
};

/// Deterministic in the seed: 0 -> ker phi -> X -> im phi -> 0 for random
/// nonzero phi: X -> Y between sums of one or two listed indecomposables.
/// Throws DegenerateDraw if no draw gives a nonzero map.
std::vector<ShortExactSequence> random_ses(const AlgebraPtr& a, const std::vector<Representation>& indecs,
                                           std::uint64_t seed, std::size_t count);

struct PairWitness {
  std::size_t s = 0, t = 0;
};

/// Pairs (s, t) of summands with Hom(s, t) != 0 and Hom(t, tau_d s) != 0.
std::vector<PairWitness> condition_h_violations(const TiltingData& t);

struct ArFormulaSides {
  long lhs = 0;
  long rhs = 0;
};
ArFormulaSides ar_formula(const Representation& s, const Representation& t, std::size_t d);

SuiteReport run_suite(const SuiteConfig& cfg);
std::string format_report(const SuiteReport& r);

}  // namespace higherk

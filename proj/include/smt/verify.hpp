#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "smt/instance.hpp"
#include "smt/matching.hpp"
#include "smt/rational.hpp"

#include <json.hpp>

namespace smt {

struct VerifyOptions {
  int instance_count = 100;
  int max_people = 8;  // per side budget: men + women <= 2*..., see report
  Rational tie_probability = Rational(1, 2);
  std::uint64_t seed = 0;
  int enumeration_cap = kDefaultEnumerationCap;
};

struct AssertionStats {
  std::string name;
  long long checked = 0;
  long long failed = 0;
};

// On failure: which assertion, where, and a minimized reproducer (people are
// greedily removed while the same assertion keeps failing).
struct FailureReport {
  std::string assertion;
  std::string detail;
  std::uint64_t instance_seed = 0;
  std::string instance_text;  // minimized instance, canonical text form
  std::string matching_a, matching_b;
};

struct VerifyReport {
  bool ok = true;
  int instances_run = 0;
  std::vector<AssertionStats> assertions;
  std::optional<FailureReport> failure;
};

// Randomized self-check battery. For each generated instance it enumerates
// the stable matchings and asserts, across all stable pairs:
//   isolated-is-intersection   isolated vertices of the between-subgraph
//                              are exactly the common pairs;
//   blocks-cover-edges         every between-subgraph edge appears in the
//                              block of a shared person;
//   vertex-alternatives        every between-subgraph vertex outside both
//                              matchings has, on each side, a weakly better
//                              alternative inside the vertex set;
//   oracle-agreement           component, rank, and midpoint-LP adjacency
//                              verdicts coincide;
//   path-valid                 the constructed path has component-count
//                              length, all nodes stable, consecutive nodes
//                              adjacent;
//   distance-bound             skeleton distance <= component count;
//   diameter-third             skeleton diameter <= floor(people/3);
//   diameter-quarter-strict    ... <= floor(people/4) when no list has ties.
// Deterministic in the options. Stops at the first failure.
VerifyReport run_verification(const VerifyOptions& options);

nlohmann::json to_json(const VerifyReport& report);
std::string format_report(const VerifyReport& report);

}  // namespace smt

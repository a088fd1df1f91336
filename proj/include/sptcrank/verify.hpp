#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "sptcrank/injections.hpp"

namespace sptcrank {

/// One axis of the lattice a check covers, inclusive. An axis with lo > hi is empty.
struct ParamRange {
  std::string name;
  int lo = 0;
  int hi = -1;
};

struct Counterexample {
  std::vector<std::pair<std::string, std::int64_t>> params;  ///< e.g. {{"n", 7}, {"m", 2}}
  std::string message;
  std::vector<std::pair<std::string, std::string>> witnesses;  ///< partitions, symbols, values
};

/// Result of a single exhaustive check.
struct CheckResult {
  std::string name;
  std::string statement;
  std::vector<ParamRange> lattice;
  std::string guard;  ///< extra restriction inside the lattice, empty if none
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  /// The first failures in canonical order (n, then m, then the objects in
  /// enumeration order), at most kCounterexampleCap of them.
  std::vector<Counterexample> counterexamples;

  bool passed() const { return failures == 0; }

  void pass() { ++cases; }
  void fail(Counterexample c);
  /// Adds a fragment computed for later lattice points.
  void merge(CheckResult&& later);
};

inline constexpr std::size_t kCounterexampleCap = 10;

/// Facts recorded without being asserted, e.g. where an inequality is tight.
struct Observation {
  std::string name;
  std::string description;
  std::int64_t total = 0;
  std::vector<std::string> values;  ///< first kObservationCap values
};

inline constexpr std::size_t kObservationCap = 50;

struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<CheckResult> checks;
  std::vector<Observation> observations;
  std::vector<MappingTrace> traces;  ///< only when detail output was requested
  double elapsed_seconds = 0;        ///< not part of the serialized form

  bool passed() const;
  std::int64_t failures() const;
};

struct VerifyOptions {
  int workers = 1;
  bool detail = false;
  /// Largest n for which checks that enumerate S-partitions are run.
  int s_enumeration_limit = 26;
};

/// q(m,n) <= p(-m,n) for 1 <= n <= max_n and N_{<=m}(n) >= M_{<=m}(n) for
/// 0 <= n <= max_n, both over 0 <= m <= max_m.
VerificationReport verify_conjecture(int max_n, int max_m, const VerifyOptions& opts = {});

/// The injection and its class maps over all of Q(m,n) for one (m,n).
VerificationReport verify_injection(int m, int n, const VerifyOptions& opts = {});
/// The same checks over 1 <= n <= max_n, 0 <= m <= max_m.
VerificationReport verify_injection_range(int max_n, int max_m, const VerifyOptions& opts = {});

/// Window identities, the crank window versus rank-set counts and the symmetries up to max_n.
VerificationReport verify_identities(int max_n, const VerifyOptions& opts = {});

/// Window formulas for the positive moments and the moment inequalities for
/// 1 <= k <= max_k, 1 <= n <= max_n.
VerificationReport verify_moments(int max_k, int max_n, const VerifyOptions& opts = {});

/// spt values, congruences mod 5, 7, 13, and the equal distribution of the
/// spt-crank over residue classes.
VerificationReport verify_spt(int max_n, const VerifyOptions& opts = {});

/// The spt-crank/rank/crank bridge identity, unimodality and symmetry of N_S.
VerificationReport verify_spt_crank(int max_n, const VerifyOptions& opts = {});

nlohmann::ordered_json to_json(const MappingTrace& trace);
nlohmann::ordered_json to_json(const CheckResult& check);
nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace sptcrank

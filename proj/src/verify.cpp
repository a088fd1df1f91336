#include "sptcrank/verify.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "sptcrank/spt.hpp"
#include "sptcrank/stats.hpp"

namespace sptcrank {

void CheckResult::fail(Counterexample c) {
  ++cases;
  ++failures;
  if (counterexamples.size() < kCounterexampleCap) counterexamples.push_back(std::move(c));
}

void CheckResult::merge(CheckResult&& later) {
  cases += later.cases;
  failures += later.failures;
  for (auto& c : later.counterexamples) {
    if (counterexamples.size() >= kCounterexampleCap) break;
    counterexamples.push_back(std::move(c));
  }
}

bool VerificationReport::passed() const { return failures() == 0; }

std::int64_t VerificationReport::failures() const {
  std::int64_t total = 0;
  for (const auto& c : checks) total += c.failures;
  return total;
}

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::int64_t>>;
using Witnesses = std::vector<std::pair<std::string, std::string>>;

// The checks and observations of one suite. Each job fills a copy of the
// suite's template; copies are merged in job order.
struct Fragment {
  std::vector<CheckResult> checks;
  std::vector<Observation> observations;
  std::vector<MappingTrace> traces;
};

void observe(Observation& o, std::string value) {
  ++o.total;
  if (o.values.size() < kObservationCap) o.values.push_back(std::move(value));
}

void merge_into(Fragment& base, Fragment&& later) {
  for (std::size_t i = 0; i < base.checks.size(); ++i) base.checks[i].merge(std::move(later.checks[i]));
  for (std::size_t i = 0; i < base.observations.size(); ++i) {
    Observation& o = base.observations[i];
    o.total += later.observations[i].total;
    for (auto& v : later.observations[i].values) {
      if (o.values.size() >= kObservationCap) break;
      o.values.push_back(std::move(v));
    }
  }
  for (auto& t : later.traces) base.traces.push_back(std::move(t));
}

// Runs job(i) for i in [0, count) on up to `workers` threads. Results are
// returned in index order whatever the scheduling.
template <class Job>
std::vector<Fragment> run_jobs(std::size_t count, int workers, Job&& job) {
  std::vector<Fragment> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto drain = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        out[i] = job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), count);
  if (threads <= 1) {
    drain();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(drain);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

VerificationReport assemble(std::string suite, Params parameters, Fragment tmpl, std::vector<Fragment> parts,
                            Clock::time_point start) {
  for (auto& part : parts) merge_into(tmpl, std::move(part));
  VerificationReport report;
  report.suite = std::move(suite);
  report.parameters = std::move(parameters);
  report.checks = std::move(tmpl.checks);
  report.observations = std::move(tmpl.observations);
  report.traces = std::move(tmpl.traces);
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

CheckResult make_check(std::string name, std::string statement, std::vector<ParamRange> lattice,
                       std::string guard = {}) {
  CheckResult c;
  c.name = std::move(name);
  c.statement = std::move(statement);
  c.lattice = std::move(lattice);
  c.guard = std::move(guard);
  return c;
}

Observation make_observation(std::string name, std::string description) {
  Observation o;
  o.name = std::move(name);
  o.description = std::move(description);
  return o;
}

std::string str(Count v) { return std::to_string(v); }
std::string str(Moment v) { return to_string(v); }

std::string point(int m, int n) { return "(m=" + std::to_string(m) + ",n=" + std::to_string(n) + ")"; }

// Records an equality check of two exact values.
template <class T>
void expect_equal(CheckResult& c, Params params, const std::string& what, T lhs, T rhs) {
  if (lhs == rhs) {
    c.pass();
    return;
  }
  c.fail({std::move(params), what + " differs", {{"lhs", str(lhs)}, {"rhs", str(rhs)}}});
}

// ---- conjecture ---------------------------------------------------------------

enum ConjectureCheck { kRankSetBound, kWindowInequality, kSaturated };
enum ConjectureObservation { kRankSetTight, kWindowTight };

Fragment conjecture_template(int max_n, int max_m) {
  Fragment f;
  f.checks = {
      make_check("rank-set-count-bounded", "q(m,n) <= p(-m,n)", {{"n", 1, max_n}, {"m", 0, max_m}}),
      make_check("rank-window-dominates-crank-window", "N_{<=m}(n) >= M_{<=m}(n)",
                 {{"n", 0, max_n}, {"m", 0, max_m}}, "M(0,1) = -1, M(+-1,1) = 1"),
      make_check("saturated-window", "q(m,n) = p(-m,n) = p(n) once m >= n", {{"n", 1, max_n}, {"m", 0, max_m}},
                 "m >= n"),
  };
  f.observations = {
      make_observation("rank-set-count-equality", "points with m < n where q(m,n) = p(-m,n)"),
      make_observation("window-equality", "points with m < n where N_{<=m}(n) = M_{<=m}(n)"),
  };
  return f;
}

Fragment conjecture_job(int n, int max_m, const Fragment& tmpl) {
  Fragment f = tmpl;
  const RankCrankTable table = RankCrankTable::build(n);
  const std::vector<Count> q = rank_set_counts(n);
  const Count total = count_partitions(n);
  for (int m = 0; m <= max_m; ++m) {
    const Count qm = m <= n ? q[static_cast<std::size_t>(m)] : total;
    const Count pm = table.rank_at_least(m);
    const Params at{{"n", n}, {"m", m}};
    if (n >= 1) {
      CheckResult& c = f.checks[kRankSetBound];
      if (qm <= pm) {
        c.pass();
      } else {
        c.fail({at, "q(m,n) > p(-m,n)", {{"q(m,n)", str(qm)}, {"p(-m,n)", str(pm)}}});
      }
      if (m < n && qm == pm) observe(f.observations[kRankSetTight], point(m, n));
    }
    const Count nw = table.rank_within(m);
    const Count mw = table.crank_within(m);
    CheckResult& w = f.checks[kWindowInequality];
    if (nw >= mw) {
      w.pass();
    } else {
      w.fail({at, "N_{<=m}(n) < M_{<=m}(n)", {{"N_{<=m}(n)", str(nw)}, {"M_{<=m}(n)", str(mw)}}});
    }
    if (m < n && nw == mw) observe(f.observations[kWindowTight], point(m, n));
    if (n >= 1 && m >= n) {
      CheckResult& s = f.checks[kSaturated];
      if (qm == total && pm == total) {
        s.pass();
      } else {
        s.fail({at, "window not saturated", {{"q(m,n)", str(qm)}, {"p(-m,n)", str(pm)}, {"p(n)", str(total)}}});
      }
    }
  }
  return f;
}

// ---- injection ----------------------------------------------------------------

enum InjectionCheck {
  kSymbolRoundTrip,
  kMembership,
  kSymbolRank,
  kQClasses,
  kPClasses,
  kPhiDefined,
  kPhiWeight,
  kPhiImage,
  kPhiRouting,
  kPhiInjective,
  kRoundTrip,
  kInverseOnImage,
  kImageCounts,
  kQ1EqualsP1,
  kQ2Image,
  kQ3Bijective,
  kQbar4Bijective,
};

Fragment injection_template(std::vector<ParamRange> lattice) {
  auto check = [&](std::string name, std::string statement, std::string guard = {}) {
    return make_check(std::move(name), std::move(statement), lattice, std::move(guard));
  };
  Fragment f;
  f.checks = {
      check("symbol-round-trip", "rebuilding a partition from its m-Durfee rectangle symbol is the identity"),
      check("membership-by-shape",
            "m is in the rank-set iff j = 0 or beta_1 = j; rank >= -m iff j = 0 or l(beta) <= l(alpha)"),
      check("symbol-rank", "rank = l(alpha) - l(beta) - m", "j >= 1"),
      check("q-classes-partition", "each symbol of Q(m,n) lies in exactly one class", "m in rank-set"),
      check("p-classes-partition", "each symbol of P(-m,n) lies in exactly one class", "rank >= -m"),
      check("map-defined", "the class map applies to every symbol of Q(m,n)", "m in rank-set"),
      check("map-weight", "the image has the same weight", "m in rank-set"),
      check("map-image-in-p", "the image has rank >= -m", "m in rank-set"),
      check("map-routing", "the image lies in the target class of the source class", "m in rank-set"),
      check("map-injective", "distinct symbols have distinct images", "m in rank-set"),
      check("map-round-trip", "the inverse map recovers the source symbol", "m in rank-set"),
      check("inverse-on-image", "an inverse that accepts a symbol returns a preimage of it",
            "rank >= -m, class with a source class"),
      check("image-counts", "each inverse accepts exactly as many symbols as its source class has",
            "one case per source class"),
      check("q1-equals-p1", "|Q1(m,n)| = |P1(-m,n)|"),
      check("q2-image", "|Q2(m,n)| = |P2(-m,n)| - [n = m+1]"),
      check("q3-bijective", "|Q3(m,n)| = |P3(-m,n)|"),
      check("qbar4-bijective", "|Qbar4(0,n)| = |P7(0,n)|", "m = 0"),
  };
  return f;
}

constexpr std::array kDomainClasses{ClassLabel::kQ1,    ClassLabel::kQ2,    ClassLabel::kQ3,
                                    ClassLabel::kQ4,    ClassLabel::kQ5,    ClassLabel::kQ6,
                                    ClassLabel::kQbar1, ClassLabel::kQbar2, ClassLabel::kQbar3,
                                    ClassLabel::kQbar4, ClassLabel::kQbar5};

bool is_refined(ClassLabel c) {
  return (c >= ClassLabel::kQbar1 && c <= ClassLabel::kQbar5) || c >= ClassLabel::kPbar1;
}

bool active_domain_class(ClassLabel d, int m) {
  if (m == 0) return d != ClassLabel::kQ5 && d != ClassLabel::kQ6;
  return !is_refined(d);
}

std::optional<ClassLabel> source_class_for(ClassLabel target, int m) {
  for (ClassLabel d : kDomainClasses) {
    if (active_domain_class(d, m) && target_class_of(d) == target) return d;
  }
  return std::nullopt;
}

// One coarse class, refined by exactly one finer class when m = 0 and the
// coarse class is the refined pair.
bool one_class(const std::vector<ClassLabel>& hits, int m, ClassLabel split_a, ClassLabel split_b) {
  int coarse = 0, refined = 0;
  ClassLabel which = ClassLabel::kQ1;
  for (ClassLabel c : hits) {
    if (is_refined(c)) {
      ++refined;
    } else {
      ++coarse;
      which = c;
    }
  }
  if (coarse != 1) return false;
  const bool split = m == 0 && (which == split_a || which == split_b);
  return refined == (split ? 1 : 0);
}

std::string join_labels(const std::vector<ClassLabel>& hits) {
  std::string out;
  for (ClassLabel c : hits) {
    if (!out.empty()) out += ' ';
    out += to_string(c);
  }
  return out.empty() ? "none" : out;
}

void injection_point(int m, int n, const std::vector<Partition>& partitions, bool detail, Fragment& f) {
  auto& ch = f.checks;
  const Params at{{"n", n}, {"m", m}};
  std::map<ClassLabel, std::int64_t> q_counts, p_counts, accepted;
  std::map<std::vector<int>, std::string> images;

  for (const Partition& lambda : partitions) {
    const Witnesses who{{"partition", lambda.to_string()}};
    DurfeeSymbol sym;
    try {
      sym = to_symbol(lambda, m);
      if (is_valid_symbol(sym) && from_symbol(sym) == lambda) {
        ch[kSymbolRoundTrip].pass();
      } else {
        ch[kSymbolRoundTrip].fail({at, "symbol does not rebuild the partition", {who[0], {"symbol", sym.to_string()}}});
        continue;
      }
    } catch (const std::exception& e) {
      ch[kSymbolRoundTrip].fail({at, e.what(), who});
      continue;
    }
    Witnesses ws{who[0], {"symbol", sym.to_string()}};
    const bool in_q = rank_set_contains(lambda, m);
    const bool in_p = lambda.empty() || rank(lambda) >= -m;
    if (in_Q_by_shape(sym) == in_q && in_P_by_shape(sym) == in_p) {
      ch[kMembership].pass();
    } else {
      ch[kMembership].fail({at, "shape test disagrees with the statistic", ws});
    }
    if (sym.j >= 1) {
      const int predicted = static_cast<int>(sym.alpha.length()) - static_cast<int>(sym.beta.length()) - m;
      if (predicted == rank(lambda)) {
        ch[kSymbolRank].pass();
      } else {
        ch[kSymbolRank].fail({at, "rank differs from l(alpha) - l(beta) - m", ws});
      }
    }

    if (in_p) {
      const auto hits = matching_P_classes(sym);
      if (one_class(hits, m, ClassLabel::kP5, ClassLabel::kP6)) {
        ch[kPClasses].pass();
        const ClassLabel c = classify_P(sym);
        ++p_counts[c];
        if (auto d = source_class_for(c, m)) {
          try {
            const MappingTrace back = invert_class(*d, sym);
            const MappingTrace again = inject(back.output);
            if (again.output == sym && again.source_class == *d) {
              ch[kInverseOnImage].pass();
              ++accepted[*d];
            } else {
              ch[kInverseOnImage].fail({at, "inverse result does not map back",
                                        {ws[0], ws[1], {"preimage", back.output.to_string()},
                                         {"image of preimage", again.output.to_string()}}});
            }
          } catch (const std::invalid_argument&) {
            ch[kInverseOnImage].pass();  // not an image; rejection is the expected outcome
          } catch (const std::exception& e) {
            ch[kInverseOnImage].fail({at, e.what(), ws});
          }
        }
      } else {
        ch[kPClasses].fail({at, "class predicates matched: " + join_labels(hits), ws});
      }
    }

    if (!in_q) continue;
    const auto hits = matching_Q_classes(sym);
    if (!one_class(hits, m, ClassLabel::kQ5, ClassLabel::kQ6)) {
      ch[kQClasses].fail({at, "class predicates matched: " + join_labels(hits), ws});
      continue;
    }
    ch[kQClasses].pass();
    const ClassLabel source = classify_Q(sym);
    ++q_counts[source];

    MappingTrace trace;
    try {
      trace = inject(sym);
      ch[kPhiDefined].pass();
    } catch (const std::exception& e) {
      ch[kPhiDefined].fail({at, e.what(), {ws[0], ws[1], {"class", std::string(to_string(source))}}});
      continue;
    }
    ws.emplace_back("image", trace.output.to_string());
    Partition image;
    try {
      image = from_symbol(trace.output);
    } catch (const std::exception& e) {
      ch[kPhiWeight].fail({at, std::string("image is not a symbol: ") + e.what(), ws});
      continue;
    }
    if (image.weight() == n) {
      ch[kPhiWeight].pass();
    } else {
      ch[kPhiWeight].fail({at, "weight changed to " + std::to_string(image.weight()), ws});
    }
    if (in_P(trace.output)) {
      ch[kPhiImage].pass();
    } else {
      ch[kPhiImage].fail({at, "image has rank below -m", ws});
    }
    if (trace.target_class && *trace.target_class == target_class_of(source)) {
      ch[kPhiRouting].pass();
    } else {
      ch[kPhiRouting].fail({at,
                            std::string(to_string(source)) + " landed in " +
                                (trace.target_class ? std::string(to_string(*trace.target_class)) : "no class"),
                            ws});
    }
    const auto [it, fresh] =
        images.emplace(std::vector<int>(image.parts().begin(), image.parts().end()), lambda.to_string());
    if (fresh) {
      ch[kPhiInjective].pass();
    } else {
      ch[kPhiInjective].fail({at, "two partitions share an image", {ws[0], {"other", it->second}, ws[2]}});
    }
    try {
      const MappingTrace back = invert_class(source, trace.output);
      if (back.output == sym) {
        ch[kRoundTrip].pass();
      } else {
        ch[kRoundTrip].fail({at, "inverse returned " + back.output.to_string(), ws});
      }
    } catch (const std::exception& e) {
      ch[kRoundTrip].fail({at, e.what(), ws});
    }
    if (detail) f.traces.push_back(std::move(trace));
  }

  for (ClassLabel d : kDomainClasses) {
    if (!active_domain_class(d, m)) continue;
    expect_equal(ch[kImageCounts], at, std::string("accepted preimages for ") + std::string(to_string(d)),
                 Count{accepted[d]}, Count{q_counts[d]});
  }
  expect_equal(ch[kQ1EqualsP1], at, "|Q1| vs |P1|", Count{q_counts[ClassLabel::kQ1]},
               Count{p_counts[ClassLabel::kP1]});
  expect_equal(ch[kQ2Image], at, "|Q2| vs |P2| - [n = m+1]", Count{q_counts[ClassLabel::kQ2]},
               Count{p_counts[ClassLabel::kP2] - (n == m + 1 ? 1 : 0)});
  expect_equal(ch[kQ3Bijective], at, "|Q3| vs |P3|", Count{q_counts[ClassLabel::kQ3]},
               Count{p_counts[ClassLabel::kP3]});
  if (m == 0) {
    expect_equal(ch[kQbar4Bijective], at, "|Qbar4| vs |P7|", Count{q_counts[ClassLabel::kQbar4]},
                 Count{p_counts[ClassLabel::kP7]});
  }
}

// ---- identities ---------------------------------------------------------------

enum IdentityCheck {
  kWindowDifference,
  kRankWindow,
  kCrankWindow,
  kCrankBound,
  kRankSymmetry,
  kCrankSymmetry,
  kTotals,
};

Fragment identities_template(int max_n) {
  Fragment f;
  f.checks = {
      make_check("window-difference", "N_{<=m}(n) - M_{<=m}(n) = 2(p(-m,n) - q(m,n))",
                 {{"n", 2, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("rank-window", "N_{<=m}(n) = 2p(-m,n) - p(n)", {{"n", 0, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("crank-window", "M_{<=m}(n) = 2q(m,n) - p(n)", {{"n", 2, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("crank-bound-is-rank-set-count", "#{crank <= m} = q(m,n)", {{"n", 2, max_n}, {"m", 0, max_n}},
                 "m <= n"),
      make_check("rank-symmetry", "N(m,n) = N(-m,n)", {{"n", 0, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("crank-symmetry", "M(m,n) = M(-m,n)", {{"n", 0, max_n}, {"m", 0, max_n}},
                 "m <= n; M(0,1) = -1, M(+-1,1) = 1"),
      make_check("totals", "sum_m N(m,n) = sum_m M(m,n) = p(n)", {{"n", 0, max_n}},
                 "M(0,1) = -1, M(+-1,1) = 1"),
  };
  return f;
}

Fragment identities_job(int n, const Fragment& tmpl) {
  Fragment f = tmpl;
  auto& ch = f.checks;
  const RankCrankTable table = RankCrankTable::build(n);
  const std::vector<Count> q = rank_set_counts(n);
  const Count total = count_partitions(n);
  for (int m = 0; m <= n; ++m) {
    const Params at{{"n", n}, {"m", m}};
    const Count qm = q[static_cast<std::size_t>(m)];
    const Count pm = table.rank_at_least(m);
    const Count nw = table.rank_within(m);
    const Count mw = table.crank_within(m);
    if (n >= 2) {
      expect_equal(ch[kWindowDifference], at, "window difference", nw - mw, 2 * (pm - qm));
      expect_equal(ch[kCrankWindow], at, "M_{<=m}(n)", mw, 2 * qm - total);
      expect_equal(ch[kCrankBound], at, "#{crank <= m}", table.crank_at_most(m), qm);
    }
    expect_equal(ch[kRankWindow], at, "N_{<=m}(n)", nw, 2 * pm - total);
    expect_equal(ch[kRankSymmetry], at, "N(m,n) vs N(-m,n)", table.rank_count(m), table.rank_count(-m));
    expect_equal(ch[kCrankSymmetry], at, "M(m,n) vs M(-m,n)", table.crank_count(m), table.crank_count(-m));
  }
  const Params at{{"n", n}};
  if (table.rank_total() == total && table.crank_total() == total) {
    ch[kTotals].pass();
  } else {
    ch[kTotals].fail({at, "totals differ from p(n)",
                      {{"rank total", str(table.rank_total())},
                       {"crank total", str(table.crank_total())},
                       {"p(n)", str(total)}}});
  }
  return f;
}

// ---- moments ------------------------------------------------------------------

enum MomentCheck {
  kRankMomentWindows,
  kCrankMomentWindows,
  kDifferenceWindows,
  kPositiveInequality,
  kEvenInequality,
  kOddRankVanish,
  kOddCrankVanish,
  kWindowBoundary,
};

Fragment moments_template(int max_k, int max_n) {
  const std::vector<ParamRange> nk{{"n", 1, max_n}, {"k", 1, max_k}};
  Fragment f;
  f.checks = {
      make_check("positive-rank-moment-windows",
                 "sum_{m>=1} m^k N(m,n) = 1/2 sum_{m=1}^{n} (m^k - (m-1)^k)(p(n) - N_{<=m-1}(n))", nk),
      make_check("positive-crank-moment-windows",
                 "sum_{m>=1} m^k M(m,n) = 1/2 sum_{m=1}^{n} (m^k - (m-1)^k)(p(n) - M_{<=m-1}(n))", nk,
                 "M(0,1) = -1, M(+-1,1) = 1"),
      make_check("positive-moment-difference-windows",
                 "Mbar_k(n) - Nbar_k(n) = 1/2 sum_{m=1}^{n-1} (m^k - (m-1)^k)(N_{<=m-1}(n) - M_{<=m-1}(n)) "
                 "+ n^k - (n-1)^k",
                 nk, "M(0,1) = -1, M(+-1,1) = 1"),
      make_check("positive-moment-inequality", "Mbar_k(n) > Nbar_k(n)", nk, "M(0,1) = -1, M(+-1,1) = 1"),
      make_check("even-moment-inequality", "M_{2k}(n) > N_{2k}(n)", nk),
      make_check("odd-rank-moments-vanish", "N_{2k-1}(n) = 0", nk),
      make_check("odd-crank-moments-vanish", "M_{2k-1}(n) = 0", {{"n", 2, max_n}, {"k", 1, max_k}}),
      make_check("window-boundary", "N_{<=n-1}(n) - M_{<=n-1}(n) = 2 and N_{<=m}(n) = M_{<=m}(n) = p(n) for m >= n",
                 {{"n", 1, max_n}}, "M(0,1) = -1, M(+-1,1) = 1"),
  };
  return f;
}

Fragment moments_job(int n, int max_k, const Fragment& tmpl) {
  Fragment f = tmpl;
  auto& ch = f.checks;
  const RankCrankTable table = RankCrankTable::build(n);
  for (int k = 1; k <= max_k; ++k) {
    const Params at{{"n", n}, {"k", k}};
    auto guarded = [&](CheckResult& c, const auto& body) {
      try {
        body();
      } catch (const std::exception& e) {
        c.fail({at, e.what(), {}});
      }
    };
    const Moment nbar = positive_rank_moment(k, table);
    const Moment mbar = positive_crank_moment(k, table);
    guarded(ch[kRankMomentWindows],
            [&] { expect_equal(ch[kRankMomentWindows], at, "Nbar_k(n)", nbar, positive_rank_moment_by_windows(k, table)); });
    guarded(ch[kCrankMomentWindows],
            [&] { expect_equal(ch[kCrankMomentWindows], at, "Mbar_k(n)", mbar, positive_crank_moment_by_windows(k, table)); });
    guarded(ch[kDifferenceWindows], [&] {
      expect_equal(ch[kDifferenceWindows], at, "Mbar_k(n) - Nbar_k(n)", mbar - nbar,
                   positive_moment_difference_by_windows(k, table));
    });
    if (mbar > nbar) {
      ch[kPositiveInequality].pass();
    } else {
      ch[kPositiveInequality].fail({at, "Mbar_k(n) <= Nbar_k(n)", {{"Mbar_k(n)", str(mbar)}, {"Nbar_k(n)", str(nbar)}}});
    }
    const Moment m2k = crank_moment(2 * k, table);
    const Moment n2k = rank_moment(2 * k, table);
    if (m2k > n2k) {
      ch[kEvenInequality].pass();
    } else {
      ch[kEvenInequality].fail({at, "M_{2k}(n) <= N_{2k}(n)", {{"M_{2k}(n)", str(m2k)}, {"N_{2k}(n)", str(n2k)}}});
    }
    expect_equal(ch[kOddRankVanish], at, "N_{2k-1}(n)", rank_moment(2 * k - 1, table), Moment{0});
    if (n >= 2) {
      expect_equal(ch[kOddCrankVanish], at, "M_{2k-1}(n)", crank_moment(2 * k - 1, table), Moment{0});
    }
  }
  const Count total = count_partitions(n);
  const Count edge = table.rank_within(n - 1) - table.crank_within(n - 1);
  const bool saturated = table.rank_within(n) == total && table.crank_within(n) == total;
  if (edge == 2 && saturated) {
    ch[kWindowBoundary].pass();
  } else {
    ch[kWindowBoundary].fail({{{"n", n}},
                              "window boundary values",
                              {{"N_{<=n-1} - M_{<=n-1}", str(edge)},
                               {"N_{<=n}", str(table.rank_within(n))},
                               {"M_{<=n}", str(table.crank_within(n))}}});
  }
  return f;
}

// ---- spt ----------------------------------------------------------------------

enum SptCheck { kSptValues, kSptMod5, kSptMod7, kSptMod13, kSptTotal, kSptEqual5, kSptEqual7 };

Fragment spt_template(int max_n, int limit) {
  const int capped = std::min(max_n, limit);
  Fragment f;
  f.checks = {
      make_check("spt-values", "spt(3) = 5, spt(4) = 10, spt(5) = 14", {{"n", 3, std::min(max_n, 5)}}),
      make_check("spt-congruence-5", "spt(5a+4) = 0 (mod 5)", {{"n", 1, max_n}}, "n = 4 (mod 5)"),
      make_check("spt-congruence-7", "spt(7a+5) = 0 (mod 7)", {{"n", 1, max_n}}, "n = 5 (mod 7)"),
      make_check("spt-congruence-13", "spt(13a+6) = 0 (mod 13)", {{"n", 1, max_n}}, "n = 6 (mod 13)"),
      make_check("spt-crank-total", "sum_m N_S(m,n) = spt(n)", {{"n", 1, capped}}),
      make_check("spt-crank-equidistributed-5", "N_S(k,5,n) = spt(n)/5 for 0 <= k < 5", {{"n", 1, capped}},
                 "n = 4 (mod 5)"),
      make_check("spt-crank-equidistributed-7", "N_S(k,7,n) = spt(n)/7 for 0 <= k < 7", {{"n", 1, capped}},
                 "n = 5 (mod 7)"),
  };
  return f;
}

Fragment spt_job(int n, int limit, const Fragment& tmpl) {
  Fragment f = tmpl;
  auto& ch = f.checks;
  const Params at{{"n", n}};
  const Count value = spt(n);
  constexpr std::array<std::pair<int, Count>, 3> kKnown{{{3, 5}, {4, 10}, {5, 14}}};
  for (const auto& [arg, expected] : kKnown) {
    if (arg == n) expect_equal(ch[kSptValues], at, "spt(n)", value, expected);
  }
  auto congruence = [&](CheckResult& c, int modulus, int residue) {
    if (n % modulus != residue) return;
    if (value % modulus == 0) {
      c.pass();
    } else {
      c.fail({at, "spt(n) not divisible by " + std::to_string(modulus), {{"spt(n)", str(value)}}});
    }
  };
  congruence(ch[kSptMod5], 5, 4);
  congruence(ch[kSptMod7], 7, 5);
  congruence(ch[kSptMod13], 13, 6);
  if (n > limit) return f;
  const SptCrankCounts counts = SptCrankCounts::build(n);
  expect_equal(ch[kSptTotal], at, "sum_m N_S(m,n)", counts.total(), value);
  auto equal_split = [&](CheckResult& c, int modulus, int residue) {
    if (n % modulus != residue) return;
    for (int k = 0; k < modulus; ++k) {
      const Count part = counts.residue_count(k, modulus);
      if (part * modulus == value) {
        c.pass();
      } else {
        c.fail({{{"n", n}, {"k", k}},
                "residue class count is not spt(n)/" + std::to_string(modulus),
                {{"N_S(k,t,n)", str(part)}, {"spt(n)", str(value)}}});
      }
    }
  };
  equal_split(ch[kSptEqual5], 5, 4);
  equal_split(ch[kSptEqual7], 7, 5);
  return f;
}

// ---- spt-crank ----------------------------------------------------------------

enum SptCrankCheck { kBridge, kUnimodal, kSptCrankSymmetry };

Fragment spt_crank_template(int max_n) {
  Fragment f;
  f.checks = {
      make_check("bridge-identity", "N_S(m,n) - N_S(m+1,n) = (N_{<=m}(n) - M_{<=m}(n))/2",
                 {{"n", 2, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("unimodality", "N_S(m,n) >= N_S(m+1,n) >= 0", {{"n", 1, max_n}, {"m", 0, max_n}}, "m <= n"),
      make_check("spt-crank-symmetry", "N_S(m,n) = N_S(-m,n)", {{"n", 1, max_n}, {"m", 0, max_n}}, "m <= n"),
  };
  return f;
}

Fragment spt_crank_job(int n, const Fragment& tmpl) {
  Fragment f = tmpl;
  auto& ch = f.checks;
  const SptCrankCounts counts = SptCrankCounts::build(n);
  const RankCrankTable table = RankCrankTable::build(n);
  for (int m = 0; m <= n; ++m) {
    const Params at{{"n", n}, {"m", m}};
    const Count here = counts.count(m);
    const Count next = counts.count(m + 1);
    if (n >= 2) {
      expect_equal(ch[kBridge], at, "2(N_S(m,n) - N_S(m+1,n)) vs N_{<=m}(n) - M_{<=m}(n)", 2 * (here - next),
                   table.rank_within(m) - table.crank_within(m));
    }
    if (here >= next && next >= 0) {
      ch[kUnimodal].pass();
    } else {
      ch[kUnimodal].fail({at, "N_S not weakly decreasing and non-negative",
                          {{"N_S(m,n)", str(here)}, {"N_S(m+1,n)", str(next)}}});
    }
    expect_equal(ch[kSptCrankSymmetry], at, "N_S(m,n) vs N_S(-m,n)", here, counts.count(-m));
  }
  return f;
}

void require_range(int value, const char* name) {
  if (value < 0) throw std::invalid_argument(std::string(name) + " must be non-negative");
}

}  // namespace

VerificationReport verify_conjecture(int max_n, int max_m, const VerifyOptions& opts) {
  require_range(max_n, "max_n");
  require_range(max_m, "max_m");
  const auto start = Clock::now();
  const Fragment tmpl = conjecture_template(max_n, max_m);
  auto parts = run_jobs(static_cast<std::size_t>(max_n) + 1, opts.workers,
                        [&](std::size_t i) { return conjecture_job(static_cast<int>(i), max_m, tmpl); });
  return assemble("conjecture", {{"max_n", max_n}, {"max_m", max_m}}, tmpl, std::move(parts), start);
}

VerificationReport verify_injection(int m, int n, const VerifyOptions& opts) {
  require_range(m, "m");
  require_range(n, "n");
  const auto start = Clock::now();
  Fragment f = injection_template({{"n", n, n}, {"m", m, m}});
  injection_point(m, n, enumerate_partitions(n), opts.detail, f);
  return assemble("injection", {{"m", m}, {"n", n}}, std::move(f), {}, start);
}

VerificationReport verify_injection_range(int max_n, int max_m, const VerifyOptions& opts) {
  require_range(max_n, "max_n");
  require_range(max_m, "max_m");
  const auto start = Clock::now();
  const Fragment tmpl = injection_template({{"n", 1, max_n}, {"m", 0, max_m}});
  auto parts = run_jobs(static_cast<std::size_t>(max_n), opts.workers, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    const auto partitions = enumerate_partitions(n);
    Fragment f = tmpl;
    for (int m = 0; m <= max_m; ++m) injection_point(m, n, partitions, opts.detail, f);
    return f;
  });
  return assemble("injection", {{"max_n", max_n}, {"max_m", max_m}}, tmpl, std::move(parts), start);
}

VerificationReport verify_identities(int max_n, const VerifyOptions& opts) {
  require_range(max_n, "max_n");
  const auto start = Clock::now();
  const Fragment tmpl = identities_template(max_n);
  auto parts = run_jobs(static_cast<std::size_t>(max_n) + 1, opts.workers,
                        [&](std::size_t i) { return identities_job(static_cast<int>(i), tmpl); });
  return assemble("identities", {{"max_n", max_n}}, tmpl, std::move(parts), start);
}

VerificationReport verify_moments(int max_k, int max_n, const VerifyOptions& opts) {
  require_range(max_k, "max_k");
  require_range(max_n, "max_n");
  const auto start = Clock::now();
  const Fragment tmpl = moments_template(max_k, max_n);
  auto parts = run_jobs(static_cast<std::size_t>(max_n), opts.workers,
                        [&](std::size_t i) { return moments_job(static_cast<int>(i) + 1, max_k, tmpl); });
  return assemble("moments", {{"max_k", max_k}, {"max_n", max_n}}, tmpl, std::move(parts), start);
}

VerificationReport verify_spt(int max_n, const VerifyOptions& opts) {
  require_range(max_n, "max_n");
  const auto start = Clock::now();
  const Fragment tmpl = spt_template(max_n, opts.s_enumeration_limit);
  auto parts = run_jobs(static_cast<std::size_t>(max_n), opts.workers, [&](std::size_t i) {
    return spt_job(static_cast<int>(i) + 1, opts.s_enumeration_limit, tmpl);
  });
  return assemble("spt", {{"max_n", max_n}, {"s_enumeration_limit", opts.s_enumeration_limit}}, tmpl,
                  std::move(parts), start);
}

VerificationReport verify_spt_crank(int max_n, const VerifyOptions& opts) {
  require_range(max_n, "max_n");
  const auto start = Clock::now();
  const Fragment tmpl = spt_crank_template(max_n);
  auto parts = run_jobs(static_cast<std::size_t>(max_n), opts.workers,
                        [&](std::size_t i) { return spt_crank_job(static_cast<int>(i) + 1, tmpl); });
  return assemble("spt-crank", {{"max_n", max_n}}, tmpl, std::move(parts), start);
}

// ---- serialization ------------------------------------------------------------

nlohmann::ordered_json to_json(const MappingTrace& trace) {
  nlohmann::ordered_json j;
  j["map"] = trace.map;
  j["inverse"] = trace.inverse;
  j["source_class"] = std::string(to_string(trace.source_class));
  j["target_class"] = trace.target_class ? nlohmann::ordered_json(std::string(to_string(*trace.target_class)))
                                         : nlohmann::ordered_json(nullptr);
  j["input"] = trace.input.to_string();
  j["output"] = trace.output.to_string();
  nlohmann::ordered_json indices = nlohmann::ordered_json::object();
  for (const auto& [name, value] : trace.indices) indices[name] = value;
  j["indices"] = std::move(indices);
  return j;
}

nlohmann::ordered_json to_json(const CheckResult& check) {
  nlohmann::ordered_json j;
  j["check"] = check.name;
  j["statement"] = check.statement;
  nlohmann::ordered_json lattice = nlohmann::ordered_json::array();
  for (const auto& r : check.lattice) {
    lattice.push_back({{"param", r.name}, {"min", r.lo}, {"max", r.hi}});
  }
  j["lattice"] = std::move(lattice);
  j["guard"] = check.guard;
  j["status"] = check.passed() ? "pass" : "fail";
  j["cases"] = check.cases;
  j["failures"] = check.failures;
  nlohmann::ordered_json examples = nlohmann::ordered_json::array();
  for (const auto& c : check.counterexamples) {
    nlohmann::ordered_json e;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [name, value] : c.params) params[name] = value;
    e["parameters"] = std::move(params);
    e["message"] = c.message;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::object();
    for (const auto& [name, value] : c.witnesses) witnesses[name] = value;
    e["witnesses"] = std::move(witnesses);
    examples.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(examples);
  return j;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["status"] = report.passed() ? "pass" : "fail";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.parameters) params[name] = value;
  j["parameters"] = std::move(params);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  nlohmann::ordered_json observations = nlohmann::ordered_json::array();
  for (const auto& o : report.observations) {
    observations.push_back(
        {{"observation", o.name}, {"description", o.description}, {"total", o.total}, {"values", o.values}});
  }
  j["observations"] = std::move(observations);
  if (!report.traces.empty()) {
    nlohmann::ordered_json traces = nlohmann::ordered_json::array();
    for (const auto& t : report.traces) traces.push_back(to_json(t));
    j["traces"] = std::move(traces);
  }
  return j;
}

}  // namespace sptcrank

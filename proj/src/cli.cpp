#include "sptcrank/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "sptcrank/injections.hpp"
#include "sptcrank/spt.hpp"
#include "sptcrank/stats.hpp"
#include "sptcrank/verify.hpp"

namespace sptcrank {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string target;  // table kind, partition text or suite
  std::string format;
  std::optional<int> n, max_n, m, max_m, mod, max_k;
  bool detail = false;
  int workers = 1;
};

void require_non_negative(const std::optional<int>& v, const char* flag) {
  if (v && *v < 0) throw UsageError(std::string(flag) + " must be non-negative");
}

void forbid(const std::optional<int>& v, const char* flag, const std::string& context) {
  if (v) throw UsageError(std::string(flag) + " does not apply to " + context);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ---- tables -------------------------------------------------------------------

using Cell = std::variant<std::int64_t, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

void write_table(const Table& t, const Json& parameters, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
        std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
      }
      rows.push_back(std::move(obj));
    }
    Json doc;
    doc["command"] = "table";
    doc["parameters"] = parameters;
    doc["generated_rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      std::visit(
          [&](const auto& v) {
            if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::string>) {
              out << csv_field(v);
            } else {
              out << v;
            }
          },
          row[i]);
    }
    out << '\n';
  }
}

struct Span {
  int lo, hi;
};

// The n values a table covers: --n alone, or lo..--max-n (default 10).
Span n_span(const Options& o, int lo) {
  if (o.n && o.max_n) throw UsageError("--n and --max-n are mutually exclusive");
  if (o.n) {
    if (*o.n < lo) throw UsageError("--n must be at least " + std::to_string(lo) + " for this table");
    return {*o.n, *o.n};
  }
  const int hi = o.max_n.value_or(10);
  return {lo, hi};
}

// Signed m values for rank, crank and spt-crank tables at a given n.
Span signed_m_span(const Options& o, int n) {
  if (o.m) return {*o.m, *o.m};
  const int bound = o.max_m ? std::min(*o.max_m, n) : n;
  return {-bound, bound};
}

Span unsigned_m_span(const Options& o, int n) {
  if (o.m) return {*o.m, *o.m};
  return {0, o.max_m.value_or(n)};
}

int cmd_table(const Options& o, std::ostream& out) {
  const std::string& kind = o.target;
  if (o.m && o.max_m) throw UsageError("--m and --max-m are mutually exclusive");
  if (kind != "ns") forbid(o.mod, "--mod", "table " + kind);
  if (kind != "moments") forbid(o.max_k, "--max-k", "table " + kind);
  if (kind == "spt" || kind == "moments") {
    forbid(o.m, "--m", "table " + kind);
    forbid(o.max_m, "--max-m", "table " + kind);
  }
  if (o.mod && *o.mod < 1) throw UsageError("--mod must be at least 1");
  if (o.mod && (o.m || o.max_m)) throw UsageError("--mod cannot be combined with --m or --max-m");
  if (o.max_k && *o.max_k < 1) throw UsageError("--max-k must be at least 1");
  if ((kind == "rankset-q" || kind == "p-rank") && o.m && *o.m < 0) {
    throw UsageError("--m must be non-negative for table " + kind);
  }

  Json params = Json::object();
  params["kind"] = kind;
  Table t;
  const bool positive_only = kind == "ns" || kind == "spt" || kind == "moments";
  const Span ns = n_span(o, positive_only ? 1 : 0);
  params["n_min"] = ns.lo;
  params["n_max"] = ns.hi;
  if (o.m) params["m"] = *o.m;
  if (o.max_m) params["max_m"] = *o.max_m;

  if (kind == "rank" || kind == "crank") {
    t.columns = {"n", "m", kind == "rank" ? "N(m,n)" : "M(m,n)"};
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const RankCrankTable table = RankCrankTable::build(n);
      const Span ms = signed_m_span(o, n);
      for (int m = ms.lo; m <= ms.hi; ++m) {
        t.rows.push_back({n, m, kind == "rank" ? table.rank_count(m) : table.crank_count(m)});
      }
    }
  } else if (kind == "rankset-q" || kind == "p-rank") {
    t.columns = {"n", "m", kind == "rankset-q" ? "q(m,n)" : "p(-m,n)"};
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const Span ms = unsigned_m_span(o, n);
      if (kind == "rankset-q") {
        const auto q = rank_set_counts(n);
        const Count total = count_partitions(n);
        for (int m = ms.lo; m <= ms.hi; ++m) {
          t.rows.push_back({n, m, m <= n ? q[static_cast<std::size_t>(m)] : total});
        }
      } else {
        const RankCrankTable table = RankCrankTable::build(n);
        for (int m = ms.lo; m <= ms.hi; ++m) t.rows.push_back({n, m, table.rank_at_least(m)});
      }
    }
  } else if (kind == "ns") {
    if (o.mod) {
      params["mod"] = *o.mod;
      t.columns = {"n", "k", "t", "N_S(k,t,n)"};
    } else {
      t.columns = {"n", "m", "N_S(m,n)"};
    }
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const SptCrankCounts counts = SptCrankCounts::build(n);
      if (o.mod) {
        for (int k = 0; k < *o.mod; ++k) t.rows.push_back({n, k, *o.mod, counts.residue_count(k, *o.mod)});
      } else {
        const Span ms = signed_m_span(o, n);
        for (int m = ms.lo; m <= ms.hi; ++m) t.rows.push_back({n, m, counts.count(m)});
      }
    }
  } else if (kind == "spt") {
    t.columns = {"n", "spt(n)"};
    for (int n = ns.lo; n <= ns.hi; ++n) t.rows.push_back({n, spt(n)});
  } else {
    const int max_k = o.max_k.value_or(6);
    params["max_k"] = max_k;
    t.columns = {"n", "k", "N_k(n)", "M_k(n)", "Nbar_k(n)", "Mbar_k(n)"};
    for (int n = ns.lo; n <= ns.hi; ++n) {
      const RankCrankTable table = RankCrankTable::build(n);
      for (int k = 1; k <= max_k; ++k) {
        t.rows.push_back({n, k, to_string(rank_moment(k, table)), to_string(crank_moment(k, table)),
                          to_string(positive_rank_moment(k, table)), to_string(positive_crank_moment(k, table))});
      }
    }
  }
  params["format"] = o.format;
  write_table(t, params, o.format, out);
  return kExitPass;
}

// ---- inspect ------------------------------------------------------------------

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

Partition parse_partition(const std::string& text, std::ostream& err) {
  std::string body = trim(text);
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = trim(body.substr(1, body.size() - 2));
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = body.find(',', pos);
      const std::string token = trim(std::string_view(body).substr(pos, comma == std::string::npos ? body.npos : comma - pos));
      int value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw UsageError("malformed part '" + token + "' in partition '" + text + "'");
      }
      if (value < 1) throw UsageError("parts must be positive, got " + token);
      parts.push_back(value);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    Partition sorted = Partition::from_unsorted(parts);
    err << "warning: parts reordered to " << sorted << '\n';
    return sorted;
  }
  return Partition(std::move(parts));
}

int cmd_inspect(const Options& o, std::ostream& out, std::ostream& err) {
  forbid(o.n, "--n", "inspect");
  forbid(o.max_n, "--max-n", "inspect");
  forbid(o.max_m, "--max-m", "inspect");
  forbid(o.mod, "--mod", "inspect");
  forbid(o.max_k, "--max-k", "inspect");
  const Partition lambda = parse_partition(o.target, err);
  const int m = o.m.value_or(0);
  if (m < 0) throw UsageError("--m must be non-negative");

  const DurfeeSymbol sym = to_symbol(lambda, m);
  const bool in_q = rank_set_contains(lambda, m);
  const bool in_p = lambda.empty() || rank(lambda) >= -m;

  Json report;
  report["partition"] = lambda.to_string();
  report["weight"] = lambda.weight();
  report["m"] = m;
  report["rank"] = lambda.empty() ? Json(nullptr) : Json(rank(lambda));
  report["crank"] = lambda.empty() ? Json(nullptr) : Json(crank(lambda));
  report["symbol"] = sym.to_string();
  report["durfee_index"] = sym.j;
  report["m_in_rank_set"] = in_q;
  report["rank_at_least_minus_m"] = in_p;
  report["q_class"] = in_q ? Json(std::string(to_string(classify_Q(sym)))) : Json(nullptr);
  report["p_class"] = in_p ? Json(std::string(to_string(classify_P(sym)))) : Json(nullptr);
  if (in_q) {
    const MappingTrace trace = inject(sym);
    const MappingTrace back = invert_class(trace.source_class, trace.output);
    report["status"] = "in Q(m,n)";
    report["image"] = trace.output.to_string();
    report["image_partition"] = from_symbol(trace.output).to_string();
    report["round_trip"] = back.output == sym;
    report["trace"] = to_json(trace);
  } else {
    report["status"] = "outside Q(m,n)";
  }

  Json params;
  params["partition"] = lambda.to_string();
  params["m"] = m;
  params["format"] = o.format;
  if (o.format == "json") {
    Json doc;
    doc["command"] = "inspect";
    doc["parameters"] = params;
    doc["report"] = report;
    out << doc.dump(2) << '\n';
  } else {
    out << "field,value\n";
    for (const auto& [key, value] : report.items()) {
      if (key == "trace") {
        for (const auto& [tk, tv] : value.items()) {
          if (tk == "indices") {
            for (const auto& [ik, iv] : tv.items()) out << "trace." << ik << ',' << iv.dump() << '\n';
          } else {
            out << "trace." << tk << ',' << csv_field(tv.is_string() ? tv.get<std::string>() : tv.dump()) << '\n';
          }
        }
        continue;
      }
      out << key << ',' << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    }
  }
  if (!in_q) err << "partition " << lambda << " is outside Q(" << m << ',' << lambda.weight() << ")\n";
  return in_q ? kExitPass : kExitFailure;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::string& suite = o.target;
  if (o.workers < 1) throw UsageError("--workers must be at least 1");
  forbid(o.mod, "--mod", "verify");
  const bool single_point = o.n || o.m;
  if (single_point && suite != "injection") throw UsageError("--n and --m select a single point of verify injection");
  if (single_point && !(o.n && o.m)) throw UsageError("verify injection needs both --n and --m");
  if (single_point && (o.max_n || o.max_m)) throw UsageError("--n/--m cannot be combined with --max-n/--max-m");
  if (o.max_k && suite != "moments" && suite != "all") throw UsageError("--max-k applies to verify moments");
  if (o.max_m && suite != "conjecture" && suite != "injection" && suite != "all") {
    throw UsageError("--max-m does not apply to verify " + suite);
  }
  if (o.detail && suite != "injection") throw UsageError("--detail applies to verify injection");

  VerifyOptions opts;
  opts.workers = o.workers;
  opts.detail = o.detail;

  Json params;
  params["suite"] = suite;
  std::vector<VerificationReport> reports;
  auto want = [&](const char* name) { return suite == name || suite == "all"; };
  if (want("conjecture")) {
    reports.push_back(verify_conjecture(o.max_n.value_or(60), o.max_m.value_or(12), opts));
  }
  if (want("injection")) {
    if (single_point) {
      reports.push_back(verify_injection(*o.m, *o.n, opts));
    } else {
      reports.push_back(verify_injection_range(o.max_n.value_or(30), o.max_m.value_or(8), opts));
    }
  }
  if (want("identities")) reports.push_back(verify_identities(o.max_n.value_or(50), opts));
  if (want("moments")) reports.push_back(verify_moments(o.max_k.value_or(6), o.max_n.value_or(40), opts));
  if (want("spt")) reports.push_back(verify_spt(o.max_n.value_or(60), opts));
  if (want("spt-crank")) reports.push_back(verify_spt_crank(o.max_n.value_or(20), opts));

  if (o.n) params["n"] = *o.n;
  if (o.m) params["m"] = *o.m;
  if (o.max_n) params["max_n"] = *o.max_n;
  if (o.max_m) params["max_m"] = *o.max_m;
  if (o.max_k) params["max_k"] = *o.max_k;
  params["detail"] = o.detail;
  params["format"] = o.format;

  bool passed = true;
  for (const auto& r : reports) {
    passed = passed && r.passed();
    err << "suite " << r.suite << ": " << (r.passed() ? "pass" : "fail") << " in " << std::fixed
        << std::setprecision(2) << r.elapsed_seconds << "s\n";
  }

  if (o.format == "json") {
    Json doc;
    doc["command"] = "verify";
    doc["parameters"] = params;
    if (reports.size() == 1) {
      doc["report"] = to_json(reports.front());
    } else {
      Json all;
      all["suite"] = "all";
      all["status"] = passed ? "pass" : "fail";
      Json suites = Json::array();
      for (const auto& r : reports) suites.push_back(to_json(r));
      all["suites"] = std::move(suites);
      doc["report"] = std::move(all);
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "suite,check,status,cases,failures,first_counterexample\n";
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        std::string first;
        if (!c.counterexamples.empty()) {
          const Counterexample& ce = c.counterexamples.front();
          for (const auto& [name, value] : ce.params) first += name + "=" + std::to_string(value) + " ";
          first += ce.message;
        }
        out << r.suite << ',' << c.name << ',' << (c.passed() ? "pass" : "fail") << ',' << c.cases << ','
            << c.failures << ',' << csv_field(first) << '\n';
      }
    }
  }
  return passed ? kExitPass : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rank, crank, rank-set and spt-crank tables, the rank-set injection, and exhaustive verification"};
  app.require_subcommand(1);
  Options o;
  o.workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));

  auto* table = app.add_subcommand("table", "Print a table of exact counts");
  table->add_option("kind", o.target, "rank | crank | rankset-q | p-rank | ns | spt | moments")
      ->required()
      ->check(CLI::IsMember({"rank", "crank", "rankset-q", "p-rank", "ns", "spt", "moments"}));
  table->add_option("--n", o.n, "Single n");
  table->add_option("--max-n", o.max_n, "Largest n (default 10)");
  table->add_option("--m", o.m, "Single m");
  table->add_option("--max-m", o.max_m, "Largest |m|");
  table->add_option("--mod", o.mod, "Modulus for residue classes of the spt-crank (ns only)");
  table->add_option("--max-k", o.max_k, "Largest moment order (moments only, default 6)");
  add_common(table, o);

  auto* inspect = app.add_subcommand("inspect", "Symbol, class and injection image of one partition");
  inspect->add_option("partition", o.target, "Comma-separated parts, e.g. 7,7,6,4,3,3,2,2,2; empty for ()")
      ->required();
  inspect->add_option("--m", o.m, "Rectangle offset m (default 0)");
  inspect->add_option("--n", o.n)->group("");
  inspect->add_option("--max-n", o.max_n)->group("");
  inspect->add_option("--max-m", o.max_m)->group("");
  inspect->add_option("--mod", o.mod)->group("");
  inspect->add_option("--max-k", o.max_k)->group("");
  add_common(inspect, o);

  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification suite");
  verify->add_option("suite", o.target, "conjecture | injection | identities | moments | spt | spt-crank | all")
      ->required()
      ->check(CLI::IsMember({"conjecture", "injection", "identities", "moments", "spt", "spt-crank", "all"}));
  verify->add_option("--max-n", o.max_n, "Largest n");
  verify->add_option("--max-m", o.max_m, "Largest m");
  verify->add_option("--n", o.n, "Single n (verify injection)");
  verify->add_option("--m", o.m, "Single m (verify injection)");
  verify->add_option("--max-k", o.max_k, "Largest moment order (verify moments)");
  verify->add_option("--mod", o.mod)->group("");
  verify->add_flag("--detail", o.detail, "Include every mapping trace (verify injection)");
  verify->add_option("--workers", o.workers, "Worker threads (default: hardware concurrency)");
  add_common(verify, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    require_non_negative(o.n, "--n");
    require_non_negative(o.max_n, "--max-n");
    require_non_negative(o.max_m, "--max-m");
    if (table->parsed()) {
      if (o.format.empty()) o.format = "csv";
      return cmd_table(o, out);
    }
    if (o.format.empty()) o.format = "json";
    if (inspect->parsed()) return cmd_inspect(o, out, err);
    require_non_negative(o.m, "--m");
    return cmd_verify(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sptcrank

// Command-line front end for the tamari library.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "tamari/bijections.hpp"
#include "tamari/counting.hpp"
#include "tamari/enumerate.hpp"
#include "tamari/golden.hpp"
#include "tamari/io.hpp"
#include "tamari/verify.hpp"

using namespace tamari;

namespace {

constexpr int kSafeN = 7;
constexpr int kLargeN = 8;
constexpr int kHugeN = 9;

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string format = "ascii";
  std::string cache_path;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool allow_large = false;
  bool allow_huge = false;
};

int enumeration_limit(const RunConfig& cfg) {
  if (cfg.allow_huge) return kHugeN;
  if (cfg.allow_large) return kLargeN;
  return kSafeN;
}

void require_enumerable(int n, const RunConfig& cfg) {
  if (n > enumeration_limit(cfg)) {
    throw UsageError("enumerating T_" + std::to_string(n) + " needs " +
                     (n == kLargeN ? "--allow-large" : n == kHugeN ? "--allow-huge" : "a smaller n") +
                     " (default limit n <= " + std::to_string(kSafeN) + ")");
  }
}

// ---- cache ----

std::optional<std::filesystem::path> cache_path(const RunConfig& cfg) {
  if (!cfg.cache_path.empty()) return std::filesystem::path(cfg.cache_path);
  return default_cache_path();
}

CacheFile open_cache(const RunConfig& cfg) {
  auto path = cache_path(cfg);
  if (!path) return {};
  std::string warning;
  auto c = load_cache(*path, warning);
  if (!warning.empty()) std::cerr << "warning: ignoring cache " << path->string() << ": " << warning << '\n';
  return c ? *c : CacheFile{};
}

void store_cache(const RunConfig& cfg, const CacheFile& c) {
  if (auto path = cache_path(cfg)) save_cache(*path, c);
}

// A recomputed value that contradicts the cache.
struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void record_checked(CacheFile& cache, int i, int t, const Count& v, const std::string& tag) {
  try {
    cache.record(i, t, v, tag);
  } catch (const ValidationError& e) {
    throw CheckFailure(std::string("cache disagreement: ") + e.what());
  }
}

// ---- input ----

std::string slurp(const std::string& file) {
  std::stringstream ss;
  if (file.empty() || file == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    ss << in.rdbuf();
  }
  return ss.str();
}

Tableau read_tableau(const std::string& file) {
  const std::string text = slurp(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return tableau_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw ValidationError(std::string("bad JSON: ") + e.what());
    }
  }
  return parse_tableau(text);
}

MaximalChain read_chain(const std::string& file) { return MaximalChain(read_tableau(file)); }

// ---- output ----

void emit_tableau(const Tableau& t, const RunConfig& cfg) {
  if (cfg.format == "json") {
    std::cout << to_json(t).dump() << '\n';
  } else {
    std::cout << to_text(t);
  }
}

std::string pad(const std::string& s, std::size_t w) {
  return std::string(w > s.size() ? w - s.size() : 0, ' ') + s;
}

std::string row_label(int i) {
  if (i < 0) return "n" + std::to_string(i);
  return "n+" + std::to_string(i);
}

void print_grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> w(header.size(), 0);
  auto widen = [&w](const std::vector<std::string>& r) {
    for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
  };
  widen(header);
  for (const auto& r : rows) widen(r);
  auto line = [&w](const std::vector<std::string>& r) {
    for (std::size_t k = 0; k < r.size(); ++k) std::cout << (k ? " " : "") << pad(r[k], w[k]);
    std::cout << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

// ---- enumerate ----

int cmd_enumerate(int n, std::optional<int> length, const RunConfig& cfg) {
  if (n < 1) throw UsageError("--n must be positive");
  require_enumerable(n, cfg);
  const TamariGraph g(n);
  std::uint64_t count = 0;
  if (cfg.format == "json") std::cout << "{\"n\":" << n << ",\"chains\":[";
  if (cfg.format == "csv") std::cout << "index,length,rows\n";
  for_each_maximal_chain(
      g,
      [&](const MaximalChain& c) {
        if (cfg.format == "json") {
          std::cout << (count ? "," : "") << to_json(c.tableau()).at("rows").dump();
        } else if (cfg.format == "csv") {
          std::string rows;
          for (const auto& r : c.tableau().rows()) {
            if (!rows.empty()) rows += '/';
            for (std::size_t y = 0; y < r.size(); ++y) rows += (y ? " " : "") + std::to_string(r[y]);
          }
          std::cout << count + 1 << ',' << c.length() << ',' << rows << '\n';
        } else {
          if (count) std::cout << '\n';
          std::cout << to_text(c.tableau());
        }
        ++count;
      },
      length);
  if (cfg.format == "json") {
    std::cout << "],\"total\":" << count << "}\n";
  } else if (cfg.format == "ascii") {
    std::cout << (count ? "\n" : "") << "total " << count << '\n';
  }
  return kOk;
}

// ---- table ----

int cmd_table(int max_n, bool check, const std::string& method, const RunConfig& cfg) {
  if (max_n < 1) throw UsageError("--max-n must be positive");
  if (method == "brute") {
    require_enumerable(max_n, cfg);
  } else if (max_n > kMaxGraphN) {
    throw UsageError("--method lattice supports --max-n <= " + std::to_string(kMaxGraphN));
  }
  std::vector<LengthHistogram> hs;
  for (int n = 1; n <= max_n; ++n) {
    hs.push_back(method == "brute" ? count_by_length_brute(n, cfg.threads) : count_by_length(n));
  }

  int failures = 0;
  if (check) {
    for (const auto& cell : golden::kChainsByLength) {
      if (cell.n > max_n) continue;
      const Count want = parse_count(std::string(cell.count));
      const Count got = hs[static_cast<std::size_t>(cell.n - 1)].at(cell.length);
      if (got != want) {
        ++failures;
        std::cerr << "mismatch T_" << cell.n << " length " << cell.length << ": " << got << " vs " << want << '\n';
      }
    }
    for (int n = 1; n <= std::min<int>(max_n, static_cast<int>(golden::kTotals.size())); ++n) {
      const Count want = parse_count(std::string(golden::kTotals[static_cast<std::size_t>(n - 1)]));
      const Count got = hs[static_cast<std::size_t>(n - 1)].total();
      if (got != want) {
        ++failures;
        std::cerr << "mismatch T_" << n << " total: " << got << " vs " << want << '\n';
      }
    }
  }

  if (cfg.format == "csv") {
    write_histogram_csv(std::cout, hs);
  } else if (cfg.format == "json") {
    json cols = json::array();
    for (const auto& h : hs) {
      json col = to_json(h);
      col["total"] = to_decimal(h.total());
      cols.push_back(col);
    }
    std::cout << json{{"columns", cols}}.dump(2) << '\n';
  } else {
    std::vector<std::string> header{"length"};
    for (int n = 1; n <= max_n; ++n) header.push_back("T_" + std::to_string(n));
    const int top_i = max_n * (max_n - 1) / 2 - max_n;
    std::vector<std::vector<std::string>> rows;
    for (int i = -1; i <= top_i; ++i) {
      std::vector<std::string> r{row_label(i)};
      for (const auto& h : hs) {
        const Count v = h.at(h.n + i);
        r.push_back(v == 0 ? "" : to_decimal(v));
      }
      rows.push_back(r);
    }
    std::vector<std::string> total{"total"};
    for (const auto& h : hs) total.push_back(to_decimal(h.total()));
    rows.push_back(total);
    print_grid(header, rows);
  }
  if (check) std::cerr << (failures ? "check FAILED" : "check passed") << '\n';
  return failures ? kFailed : kOk;
}

// ---- nofull ----

int cmd_nofull(int max_i, bool check, const std::string& method, const RunConfig& cfg) {
  if (max_i < -1) throw UsageError("--max-i must be >= -1");
  const int limit = method == "brute" ? enumeration_limit(cfg) : kMaxGraphN;
  CacheFile cache = open_cache(cfg);
  NoFullTable table;
  ProfileCache profiles(cfg.threads);
  std::map<int, LengthHistogram> histograms;
  int failures = 0;
  int skipped = 0;

  auto golden_value = [](int i, int t) {
    for (const auto& cell : golden::kNoFull) {
      if (cell.i == i && cell.t == t) return parse_count(std::string(cell.count));
    }
    return Count(0);
  };
  auto record = [&](int i, int t, const Count& v, const std::string& tag) {
    try {
      record_checked(cache, i, t, v, tag);
    } catch (const CheckFailure& e) {
      ++failures;
      std::cerr << e.what() << '\n';
    }
  };

  for (int i = -1; i <= max_i; ++i) {
    const int last = std::min(2 * i + 3, limit);
    skipped += 2 * i + 3 - last;
    for (int t = 1; t <= last; ++t) {
      Count v;
      if (method == "brute") {
        const auto& at_t = profiles(t);
        auto it = at_t.find(t + i);
        v = it == at_t.end() ? Count(0) : it->second.nofull();
        record(i, t, v, "brute");
        if (!histograms.count(t)) histograms[t] = count_by_length_brute(t, cfg.threads);
      } else {
        v = nofull_by_length(t, t + i).at(t + i);
        record(i, t, v, "lattice");
      }
      table.set(i, t, v);
    }
    if (method == "brute" && last >= 1) {
      const NoFullTable ie = nofull_initial_values(i, histograms, last);
      for (int t = 1; t <= last; ++t) {
        if (ie.get(i, t) != table.get(i, t)) {
          ++failures;
          std::cerr << "N_" << i << "(" << t << "): brute " << table.get(i, t) << " vs inclusion-exclusion "
                    << ie.get(i, t) << '\n';
        }
        record(i, t, ie.get(i, t), "inclusion-exclusion");
      }
    }
    if (check) {
      for (int t = 1; t <= last; ++t) {
        if (table.get(i, t) != golden_value(i, t)) {
          ++failures;
          std::cerr << "mismatch N_" << i << "(" << t << "): " << table.get(i, t) << " vs " << golden_value(i, t)
                    << '\n';
        }
      }
    }
  }
  if (skipped) {
    std::cerr << "note: " << skipped << " cells need T_t beyond the enumeration limit; use --method lattice"
              << " or --allow-large/--allow-huge\n";
  }

  if (cfg.format == "csv") {
    write_nofull_csv(std::cout, table);
  } else if (cfg.format == "json") {
    std::cout << to_json(table).dump(2) << '\n';
  } else {
    int max_t = 0;
    for (const auto& [key, v] : table.entries()) max_t = std::max(max_t, key.second);
    std::vector<std::string> header{"length"};
    for (int t = 1; t <= max_t; ++t) header.push_back("T_" + std::to_string(t));
    std::vector<std::vector<std::string>> rows;
    for (int i = -1; i <= max_i; ++i) {
      std::vector<std::string> r{row_label(i)};
      for (int t = 1; t <= max_t; ++t) {
        const auto it = table.entries().find({i, t});
        r.push_back(it == table.entries().end() || it->second == 0 ? "" : to_decimal(it->second));
      }
      rows.push_back(r);
    }
    print_grid(header, rows);
  }
  if (!check && failures == 0) store_cache(cfg, cache);
  if (check) std::cerr << (failures ? "check FAILED" : "check passed") << '\n';
  return failures ? kFailed : kOk;
}

// ---- count ----

// N_i(1..last) from the cache, by brute force and inclusion-exclusion while
// T_t is small enough to enumerate, and from the lattice count beyond.
NoFullTable initial_values(int i, int last, CacheFile& cache, bool& dirty, const RunConfig& cfg) {
  const int brute_top = std::min(last, enumeration_limit(cfg));
  bool need_brute = false;
  for (int t = 1; t <= brute_top; ++t) need_brute = need_brute || !cache.nofull.has(i, t);
  if (need_brute) {
    std::map<int, LengthHistogram> histograms;
    for (int t = 1; t <= brute_top; ++t) histograms[t] = count_by_length_brute(t, cfg.threads);
    const NoFullTable ie = nofull_initial_values(i, histograms, brute_top);
    for (int t = 1; t <= brute_top; ++t) record_checked(cache, i, t, ie.get(i, t), "inclusion-exclusion");
    dirty = true;
  }
  NoFullTable out;
  for (int t = 1; t <= last; ++t) {
    if (!cache.nofull.has(i, t)) {
      if (t > kMaxGraphN) {
        throw CacheMissError("N_" + std::to_string(i) + "(" + std::to_string(t) + ") is not cached");
      }
      record_checked(cache, i, t, nofull_by_length(t, t + i).at(t + i), "lattice");
      dirty = true;
    }
    out.set(i, t, cache.nofull.get(i, t));
  }
  return out;
}

int cmd_count(int i, int n, const std::string& method, const RunConfig& cfg) {
  if (i < -1 || n < 1) throw UsageError("need --i >= -1 and --n >= 1");
  std::optional<Count> brute, recursion;
  if (method == "brute" || method == "both") {
    require_enumerable(n, cfg);
    brute = count_by_length_brute(n, cfg.threads).at(n + i);
  }
  if (method == "recursion" || method == "both") {
    CacheFile cache = open_cache(cfg);
    bool dirty = false;
    const NoFullTable table = initial_values(i, std::min(n, 2 * i + 3), cache, dirty, cfg);
    recursion = chains_count(i, n, table);
    if (dirty) store_cache(cfg, cache);
  }
  if (brute && recursion && *brute != *recursion) {
    std::cerr << "disagreement: brute " << *brute << ", recursion " << *recursion << '\n';
    return kFailed;
  }
  const Count value = recursion ? *recursion : *brute;
  if (cfg.format == "json") {
    std::cout << json{{"i", i}, {"n", n}, {"count", to_decimal(value)}, {"method", method}}.dump() << '\n';
  } else if (cfg.format == "csv") {
    std::cout << "i,n,count\n" << i << ',' << n << ',' << value << '\n';
  } else {
    std::cout << value << '\n';
  }
  return kOk;
}

// ---- verify ----

int cmd_verify(const std::string& suite, SuiteLimits lim, const RunConfig& cfg) {
  lim.threads = cfg.threads;
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    names = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  if (lim.max_n > kSafeN + 1) require_enumerable(lim.max_n, cfg);
  bool ok = true;
  json reports = json::array();
  for (const auto& name : names) {
    const SuiteReport rep = run_suite(name, lim);
    ok = ok && rep.ok;
    if (cfg.format == "json") {
      reports.push_back({{"suite", rep.name}, {"ok", rep.ok}, {"checked", rep.checked},
                         {"counterexample", rep.ok ? json(nullptr) : json(rep.counterexample)}});
    } else {
      std::cout << rep.name << ' ' << (rep.ok ? "ok" : "FAILED") << " checked=" << rep.checked << '\n';
      if (!rep.ok) std::cout << "counterexample:\n" << rep.counterexample << '\n';
    }
    if (!rep.ok) break;
  }
  if (cfg.format == "json") std::cout << reports.dump(2) << '\n';
  return ok ? kOk : kFailed;
}

// ---- bijections ----

int cmd_phi(int r, bool inverse, const std::string& input, const RunConfig& cfg) {
  const MaximalChain c = read_chain(input);
  if (inverse) {
    const PhiInverse back = phi_inv(c);
    if (cfg.format == "json") {
      std::cout << json{{"r", back.r}, {"chain", to_json(back.chain.tableau())}}.dump() << '\n';
    } else {
      std::cout << "r=" << back.r << '\n' << to_text(back.chain.tableau());
    }
    return kOk;
  }
  emit_tableau(phi(c, r).tableau(), cfg);
  return kOk;
}

int cmd_decompose(const std::string& input, const RunConfig& cfg) {
  const ChainDecomposition dec = decompose(read_chain(input));
  if (cfg.format == "json") {
    std::cout << json{{"base", to_json(dec.base.tableau())}, {"params", dec.params}}.dump() << '\n';
  } else {
    std::cout << "params=" << (dec.params.empty() ? "-" : format_params(dec.params)) << '\n'
              << to_text(dec.base.tableau());
  }
  return kOk;
}

int cmd_recompose(const std::string& params, const std::string& input, const RunConfig& cfg) {
  emit_tableau(recompose({read_chain(input), parse_params(params)}).tableau(), cfg);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximal chains of the Tamari lattice: enumeration, counting and bijections"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"ascii", "json", "csv"}));
  app.add_option("--cache", cfg.cache_path, "Cache file for N_i(t) (default: $TAMARI_CACHE)");
  app.add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
  app.add_flag("--allow-large", cfg.allow_large, "Permit enumerating T_8");
  app.add_flag("--allow-huge", cfg.allow_huge, "Permit enumerating T_9 (hours)");

  int n = 0;
  std::optional<int> length;
  auto* enumerate = app.add_subcommand("enumerate", "List every maximal chain of T_n as a tableau");
  enumerate->add_option("--n", n, "Lattice index")->required();
  enumerate->add_option("--length", length, "Only chains of this length");

  int max_n = kSafeN;
  bool check = false;
  std::string method = "brute";
  auto* table = app.add_subcommand("table", "Maximal chains of T_1..T_max-n by length");
  table->add_option("--max-n", max_n, "Largest column");
  table->add_flag("--check", check, "Compare with the published table");
  table->add_option("--method", method, "Counting route")->check(CLI::IsMember({"brute", "lattice"}));

  int max_i = 2;
  auto* nofull = app.add_subcommand("nofull", "Chains with no plus-full-sets, N_i(t) for t <= 2i+3");
  nofull->add_option("--max-i", max_i, "Largest i");
  nofull->add_flag("--check", check, "Compare with the published table; never writes the cache");
  nofull->add_option("--method", method, "Counting route")->check(CLI::IsMember({"brute", "lattice"}));

  int i = 0;
  std::string count_method = "recursion";
  auto* count = app.add_subcommand("count", "Number of maximal chains of T_n of length n+i");
  count->add_option("--i", i, "Length offset")->required();
  count->add_option("--n", n, "Lattice index")->required();
  count->add_option("--method", count_method, "Counting route")
      ->check(CLI::IsMember({"brute", "recursion", "both"}));

  std::string suite = "all";
  SuiteLimits lim;
  auto* verify = app.add_subcommand("verify", "Run property suites");
  verify->add_option("--suite", suite, "covers, psi, phi, formulas, conjecture or all");
  verify->add_option("--max-n", lim.max_n, "Exhaustive bound on n");
  verify->add_option("--max-i", lim.max_i, "Bound on i for the conjecture suite");
  verify->add_option("--random-cases", lim.random_cases, "Randomized cases for the phi suite");
  verify->add_option("--random-n", lim.random_n, "Lattice index of the randomized cases");
  verify->add_option("--seed", lim.seed, "Seed of the randomized cases");

  int r = 0;
  bool inverse = false;
  std::string input;
  auto* phi_cmd = app.add_subcommand("phi", "Lift a maximal chain of T_n to T_{n+1}");
  phi_cmd->add_option("--r", r, "Lifting parameter");
  phi_cmd->add_flag("--inverse", inverse, "Undo a lift instead");
  phi_cmd->add_option("--input", input, "Tableau file (text or JSON; default stdin)");

  auto* decompose_cmd = app.add_subcommand("decompose", "Split a chain into a plus-full-free base and parameters");
  decompose_cmd->add_option("--input", input, "Tableau file (text or JSON; default stdin)");

  std::string params;
  auto* recompose_cmd = app.add_subcommand("recompose", "Rebuild a chain from a base and parameters");
  recompose_cmd->add_option("--params", params, "Comma-separated r_1,...,r_t, or -")->required();
  recompose_cmd->add_option("--input", input, "Base tableau file (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(n, length, cfg);
    if (*table) return cmd_table(max_n, check, method, cfg);
    if (*nofull) return cmd_nofull(max_i, check, method, cfg);
    if (*count) return cmd_count(i, n, count_method, cfg);
    if (*verify) return cmd_verify(suite, lim, cfg);
    if (*phi_cmd) return cmd_phi(r, inverse, input, cfg);
    if (*decompose_cmd) return cmd_decompose(input, cfg);
    if (*recompose_cmd) return cmd_recompose(params, input, cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CheckFailure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const CacheMissError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

#pragma once

// JSON and CSV forms of tableaux, histograms and no-full tables, plus the
// on-disk cache of N_i(t) initial values.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "tamari/count.hpp"
#include "tamari/counting.hpp"
#include "tamari/errors.hpp"
#include "tamari/tableau.hpp"

namespace tamari {

using nlohmann::json;

inline json to_json(const Tableau& t) { return json{{"n", t.n()}, {"rows", t.rows()}}; }

inline Tableau tableau_from_json(const json& j) {
  try {
    return Tableau(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad tableau JSON: ") + e.what());
  }
}

inline json to_json(const LengthHistogram& h) {
  json counts = json::object();
  for (const auto& [len, c] : h.counts) counts[std::to_string(len)] = to_decimal(c);
  return json{{"n", h.n}, {"counts", counts}};
}

inline json to_json(const NoFullTable& table) {
  json out = json::object();
  for (const auto& [key, v] : table.entries()) {
    out[std::to_string(key.first)][std::to_string(key.second)] = to_decimal(v);
  }
  return out;
}

inline int parse_int_key(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ValidationError("bad integer key '" + s + "'");
  return v;
}

inline NoFullTable nofull_from_json(const json& j) {
  NoFullTable table;
  if (!j.is_object()) throw ValidationError("no-full table must be a JSON object");
  for (const auto& [i, row] : j.items()) {
    if (!row.is_object()) throw ValidationError("no-full row must be a JSON object");
    for (const auto& [t, v] : row.items()) {
      if (!v.is_string()) throw ValidationError("no-full counts are decimal strings");
      table.set(parse_int_key(i), parse_int_key(t), parse_count(v.get<std::string>()));
    }
  }
  return table;
}

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

// Reads `header` then rows of three fields.
template <class Row>
void read_csv3(std::istream& in, const std::string& header, Row on_row) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ValidationError("expected CSV header '" + header + "'");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto f = split_csv(line);
    if (f.size() != 3) throw ValidationError("line " + std::to_string(lineno) + ": need 3 fields");
    on_row(parse_int_key(f[0]), parse_int_key(f[1]), parse_count(f[2]));
  }
}

}  // namespace detail

inline void write_histogram_csv(std::ostream& out, const std::vector<LengthHistogram>& hs) {
  out << "n,length,count\n";
  for (const auto& h : hs) {
    for (const auto& [len, c] : h.counts) out << h.n << ',' << len << ',' << c << '\n';
  }
}

inline std::map<int, LengthHistogram> read_histogram_csv(std::istream& in) {
  std::map<int, LengthHistogram> out;
  detail::read_csv3(in, "n,length,count", [&out](int n, int len, Count c) {
    auto& h = out[n];
    h.n = n;
    h.counts[len] = std::move(c);
  });
  return out;
}

inline void write_nofull_csv(std::ostream& out, const NoFullTable& table) {
  out << "i,t,count\n";
  for (const auto& [key, v] : table.entries()) {
    out << key.first << ',' << key.second << ',' << v << '\n';
  }
}

inline NoFullTable read_nofull_csv(std::istream& in) {
  NoFullTable table;
  detail::read_csv3(in, "i,t,count",
                    [&table](int i, int t, Count c) { table.set(i, t, std::move(c)); });
  return table;
}

/// 64-bit FNV-1a, hex encoded.
inline std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline constexpr int kCacheVersion = 1;

/// Persisted N_i(t) values with the routes that produced each one.
struct CacheFile {
  int version = kCacheVersion;
  NoFullTable nofull;
  std::map<std::pair<int, int>, std::set<std::string>> provenance;

  /// Records a value; a disagreement with a stored value is an error.
  void record(int i, int t, const Count& value, const std::string& tag) {
    if (nofull.has(i, t) && t <= 2 * i + 3 && nofull.get(i, t) != value) {
      throw ValidationError("N_" + std::to_string(i) + "(" + std::to_string(t) + ") from " + tag +
                            " is " + to_decimal(value) + " but the cache holds " +
                            to_decimal(nofull.get(i, t)));
    }
    nofull.set(i, t, value);
    provenance[{i, t}].insert(tag);
  }
};

inline json cache_body(const CacheFile& c) {
  json prov = json::object();
  for (const auto& [key, tags] : c.provenance) {
    prov[std::to_string(key.first)][std::to_string(key.second)] = tags;
  }
  return json{{"version", c.version}, {"nofull", to_json(c.nofull)}, {"provenance", prov}};
}

inline std::string serialize_cache(const CacheFile& c) {
  json body = cache_body(c);
  body["checksum"] = fnv1a_hex(cache_body(c).dump());
  return body.dump(2) + "\n";
}

/// Parses a cache; any defect is reported through `warning` and yields
/// nullopt rather than partially trusted data.
inline std::optional<CacheFile> parse_cache(const std::string& text, std::string& warning) {
  try {
    json j = json::parse(text);
    const std::string sum = j.at("checksum").get<std::string>();
    j.erase("checksum");
    if (fnv1a_hex(j.dump()) != sum) {
      warning = "cache checksum mismatch";
      return std::nullopt;
    }
    CacheFile c;
    c.version = j.at("version").get<int>();
    if (c.version != kCacheVersion) {
      warning = "unsupported cache version " + std::to_string(c.version);
      return std::nullopt;
    }
    c.nofull = nofull_from_json(j.at("nofull"));
    for (const auto& [i, row] : j.at("provenance").items()) {
      for (const auto& [t, tags] : row.items()) {
        for (const auto& tag : tags) {
          c.provenance[{parse_int_key(i), parse_int_key(t)}].insert(tag.get<std::string>());
        }
      }
    }
    for (const auto& [key, v] : c.nofull.entries()) {
      if (c.provenance[key].empty()) {
        warning = "cache entry without provenance";
        return std::nullopt;
      }
    }
    return c;
  } catch (const std::exception& e) {
    warning = std::string("unreadable cache: ") + e.what();
    return std::nullopt;
  }
}

inline std::optional<CacheFile> load_cache(const std::filesystem::path& path,
                                           std::string& warning) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_cache(ss.str(), warning);
}

/// Writes to a sibling temporary file, then renames over the target.
inline void save_cache(const std::filesystem::path& path, const CacheFile& c) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << serialize_cache(c);
    if (!out.flush()) throw Error("cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

/// The TAMARI_CACHE environment variable, if set and nonempty.
inline std::optional<std::filesystem::path> default_cache_path() {
  const char* env = std::getenv("TAMARI_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::filesystem::path(env);
}

}  // namespace tamari

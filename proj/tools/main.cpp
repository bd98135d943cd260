// shidist: distance enumerator of the Shi arrangement, the Pak-Stanley
// labeling, and the three 3-part partitions of (n+1)^(n-1).
//
// Subcommands: tables, dist, verify, conjectures, mine-forbidden.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "shidist/dist_table.hpp"
#include "shidist/forbidden.hpp"
#include "shidist/partitions.hpp"
#include "shidist/permutation.hpp"
#include "shidist/shi_enumerate.hpp"
#include "shidist/verification.hpp"

using json = nlohmann::ordered_json;
using namespace shidist;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo = 0, hi = 0;
};

// "k" or "a..b", both ends inclusive.
std::optional<Range> parse_range(const std::string& spec) {
  const auto dots = spec.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(spec, &used);
      if (used != spec.size()) return std::nullopt;
      return Range{v, v};
    }
    const std::string lo = spec.substr(0, dots), hi = spec.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) return std::nullopt;
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) return std::nullopt;
    if (a > b) return std::nullopt;
    return Range{a, b};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::optional<std::pair<int, int>> parse_int_pair(const std::string& spec) {
  const auto comma = spec.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string a = spec.substr(0, comma), b = spec.substr(comma + 1);
    const int x = std::stoi(a, &used);
    if (used != a.size()) return std::nullopt;
    const int y = std::stoi(b, &used);
    if (used != b.size()) return std::nullopt;
    return std::make_pair(x, y);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

// ---------------------------------------------------------------------------
// Region cache: one file per (n, route) keyed by a format-version string;
// anything that fails validation is discarded and recomputed.

const char* kCacheFormat = "shidist-regions format=1";

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("SHIDIST_CACHE_DIR")) return env;
  return {};
}

std::filesystem::path cache_path(const std::string& dir, int n, Route route) {
  return std::filesystem::path(dir) /
         ("regions-n" + std::to_string(n) + "-" + route_name(route) + ".txt");
}

std::optional<std::vector<Region>> read_region_cache(const std::filesystem::path& path, int n,
                                                     Route route, std::string& reason) {
  std::ifstream in(path);
  if (!in) {
    reason = "absent";
    return std::nullopt;
  }
  std::string header;
  std::getline(in, header);
  const std::string expected = std::string(kCacheFormat) + " n=" + std::to_string(n) +
                               " route=" + route_name(route) +
                               " count=" + std::to_string(shi_region_count(n));
  if (header != expected) {
    reason = "bad header";
    return std::nullopt;
  }
  std::vector<Region> regions;
  regions.reserve(shi_region_count(n));
  std::set<Region> distinct;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      regions.push_back(region_from_line(n, line));
    } catch (const std::exception&) {
      reason = "unparsable line";
      return std::nullopt;
    }
    if (!distinct.insert(regions.back()).second) {
      reason = "duplicate region";
      return std::nullopt;
    }
  }
  if (static_cast<long long>(regions.size()) != shi_region_count(n)) {
    reason = "wrong region count";
    return std::nullopt;
  }
  return regions;
}

void write_region_cache(const std::filesystem::path& path, int n, Route route,
                        const std::vector<Region>& regions) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path);
  if (!out) {
    std::cerr << "warning: cannot write cache file " << path << "\n";
    return;
  }
  out << kCacheFormat << " n=" << n << " route=" << route_name(route)
      << " count=" << shi_region_count(n) << "\n";
  for (const Region& r : regions) out << region_line(r) << "\n";
}

std::vector<Region> regions_for(int n, Route route, const std::string& cache_dir) {
  if (cache_dir.empty()) {
    return route == Route::Geometric ? enumerate_regions_geometric(n)
                                     : enumerate_regions_combinatorial(n);
  }
  const auto path = cache_path(cache_dir, n, route);
  std::string reason;
  if (auto cached = read_region_cache(path, n, route, reason)) return *cached;
  if (reason != "absent") {
    std::cerr << "warning: ignoring corrupt cache file " << path << " (" << reason
              << "); recomputing\n";
  }
  std::vector<Region> regions = route == Route::Geometric ? enumerate_regions_geometric(n)
                                                          : enumerate_regions_combinatorial(n);
  write_region_cache(path, n, route, regions);
  return regions;
}

// ---------------------------------------------------------------------------
// Per-n work units, run sequentially or via std::async; output is always
// assembled in order, so the bytes do not depend on the schedule.

struct UnitResult {
  std::string out;
  int code = kExitOk;
};

int run_over_range(const Range& range, int threads, const std::function<UnitResult(int)>& work) {
  std::vector<UnitResult> results(range.hi - range.lo + 1);
  if (threads > 1) {
    std::vector<std::future<UnitResult>> futures;
    for (int n = range.lo; n <= range.hi; ++n) {
      futures.push_back(std::async(std::launch::async, work, n));
    }
    for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
  } else {
    for (int n = range.lo; n <= range.hi; ++n) results[n - range.lo] = work(n);
  }
  int code = kExitOk;
  for (const UnitResult& r : results) {
    std::cout << r.out;
    code = std::max(code, r.code);
  }
  return code;
}

// ---------------------------------------------------------------------------
// tables

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

int cmd_tables(const std::string& n_spec, const std::string& format, const std::string& pair_spec,
               const std::string& vertices_spec, int threads) {
  const auto range = parse_range(n_spec);
  if (!range || range->lo < 2 || range->hi > 8) {
    return usage_error("tables: --n must be a value or range within 2..8");
  }
  int pi = 1, pj = 2, v1 = 1, v2 = 2;
  if (!pair_spec.empty()) {
    const auto p = parse_int_pair(pair_spec);
    if (!p || !(1 <= p->first && p->first < p->second && p->second <= range->lo)) {
      return usage_error("tables: --pair must be i,j with 1 <= i < j <= n");
    }
    pi = p->first;
    pj = p->second;
  }
  if (!vertices_spec.empty()) {
    const auto v = parse_int_pair(vertices_spec);
    if (!v || v->first == v->second || v->first < 1 || v->second < 1 || v->first > range->lo ||
        v->second > range->lo) {
      return usage_error("tables: --vertices must be v1,v2 distinct within 1..n");
    }
    v1 = v->first;
    v2 = v->second;
  }

  if (format == "csv") {
    std::cout << "n,parking_gt,parking_eq,parking_lt,tree_poset_lt0,tree_poset_between,"
                 "tree_poset_gt1,spanning_disj,spanning_on_v1,spanning_on_v2\n";
  } else if (format == "table") {
    std::cout << std::left << std::setw(4) << "n" << std::setw(24) << "parking (gt,eq,lt)"
              << std::setw(30) << "tree-poset (lt0,between,gt1)"
              << "spanning-tree (disj,on_v1,on_v2)\n";
  }

  return run_over_range(*range, threads, [&](int n) {
    const Partition3 parking = parking_partition(n, pi, pj);
    const Partition3 poset = tree_poset_partition(n, pi, pj);
    const Partition3 spanning = spanning_tree_partition(n, v1, v2);
    std::ostringstream os;
    if (format == "json") {
      json o;
      o["n"] = n;
      o["parking"] = {{"gt", parking.parts[0]}, {"eq", parking.parts[1]}, {"lt", parking.parts[2]}};
      o["tree_poset"] = {
          {"lt0", poset.parts[0]}, {"between", poset.parts[1]}, {"gt1", poset.parts[2]}};
      o["spanning_tree"] = {
          {"disj", spanning.parts[0]}, {"on_v1", spanning.parts[1]}, {"on_v2", spanning.parts[2]}};
      os << o.dump() << "\n";
    } else if (format == "csv") {
      os << n;
      for (const Partition3* p : {&parking, &poset, &spanning}) {
        for (long long part : p->parts) os << ',' << part;
      }
      os << "\n";
    } else {
      auto cell = [](const Partition3& p) {
        return std::to_string(p.parts[0]) + " " + std::to_string(p.parts[1]) + " " +
               std::to_string(p.parts[2]);
      };
      os << std::left << std::setw(4) << n << std::setw(24) << cell(parking) << std::setw(30)
         << cell(poset) << cell(spanning) << "\n";
    }
    return UnitResult{os.str(), kExitOk};
  });
}

// ---------------------------------------------------------------------------
// dist

int cmd_dist(const std::string& n_spec, const std::string& route, const std::string& format,
             const std::string& cache_dir, int threads) {
  const auto range = parse_range(n_spec);
  if (!range || range->lo < 2) return usage_error("dist: --n must be a value or range with n >= 2");
  if (route != "geometric" && route != "combinatorial" && route != "both") {
    return usage_error("dist: --route must be geometric, combinatorial or both");
  }
  const bool wants_geometric = route != "combinatorial";
  if (wants_geometric && range->hi > 6) {
    return usage_error("dist: the geometric route is refused for n > 6");
  }
  if (range->hi > 8) return usage_error("dist: --n bound for the combinatorial route is 8");

  if (format == "csv") std::cout << "n,k,l,count\n";

  return run_over_range(*range, threads, [&](int n) {
    DistTable table;
    int code = kExitOk;
    std::string note;
    if (route == "combinatorial") {
      table = dist_table(n, Route::Combinatorial);
    } else {
      table = dist_table_from_regions(n, regions_for(n, Route::Geometric, cache_dir));
      if (route == "both") {
        const DistTable comb = dist_table(n, Route::Combinatorial);
        if (comb == table) {
          note = "routes agree";
        } else {
          note = "ROUTE MISMATCH";
          code = kExitVerificationFailure;
        }
      }
    }

    std::ostringstream os;
    if (format == "json") {
      json o;
      o["n"] = n;
      o["route"] = route;
      o["total"] = table.total();
      json terms = json::array();
      for (const auto& [kl, c] : table.counts) {
        terms.push_back({{"k", kl.first}, {"l", kl.second}, {"count", c}});
      }
      o["terms"] = std::move(terms);
      o["polynomial"] = dist_polynomial_string(table);
      if (!note.empty()) o["note"] = note;
      os << o.dump() << "\n";
    } else if (format == "csv") {
      for (const auto& [kl, c] : table.counts) {
        os << n << ',' << kl.first << ',' << kl.second << ',' << c << "\n";
      }
    } else {
      os << "Dist_" << n << "(k,l)  route=" << route << (note.empty() ? "" : "  [" + note + "]")
         << "\n";
      const int pairs = pair_count(n);
      os << std::setw(4) << "k\\l";
      for (int l = 0; l <= pairs; ++l) os << std::setw(7) << l;
      os << "\n";
      for (int k = 0; k <= pairs; ++k) {
        os << std::setw(4) << k;
        for (int l = 0; l + k <= pairs; ++l) os << std::setw(7) << table.at(k, l);
        os << "\n";
      }
      os << "D(q,t) = " << dist_polynomial_string(table) << "\n";
      os << "D(1,1) = " << table.total() << "\n";
    }
    return UnitResult{os.str(), code};
  });
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& n_spec, const std::string& format, const std::string& cache_dir,
               int threads) {
  const auto range = parse_range(n_spec);
  if (!range || range->lo < 2 || range->hi > 7) {
    return usage_error("verify: --n must be a value or range within 2..7");
  }

  if (format == "csv") std::cout << "n,check,pass,detail\n";

  return run_over_range(*range, threads, [&](int n) {
    std::optional<std::vector<Region>> regions;
    if (!cache_dir.empty() && n <= 5) regions = regions_for(n, Route::Geometric, cache_dir);
    const VerificationReport rep = theorem_suite(n, regions ? &*regions : nullptr);

    std::ostringstream os;
    if (format == "json") {
      json o;
      o["n"] = n;
      o["all_pass"] = rep.all_pass();
      json checks = json::array();
      for (const Check& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      }
      o["checks"] = std::move(checks);
      os << o.dump() << "\n";
    } else if (format == "csv") {
      for (const Check& c : rep.checks) {
        os << n << ',' << c.name << ',' << (c.pass ? "true" : "false") << ','
           << csv_quote(c.detail) << "\n";
      }
    } else {
      os << "n=" << n << (rep.all_pass() ? "  all checks pass" : "  FAILURES PRESENT") << "\n";
      for (const Check& c : rep.checks) {
        os << "  [" << (c.pass ? " ok " : "FAIL") << "] " << c.name << "  (" << c.detail << ")\n";
      }
    }
    return UnitResult{os.str(), rep.all_pass() ? kExitOk : kExitVerificationFailure};
  });
}

// ---------------------------------------------------------------------------
// conjectures

int cmd_conjectures(int max_n, const std::string& format) {
  if (max_n < 2 || max_n > 7) return usage_error("conjectures: --max-n must be within 2..7");
  const VerificationReport rep = conjecture_suite(max_n);
  if (format == "json") {
    json o;
    o["max_n"] = max_n;
    o["all_hold"] = rep.all_pass();
    json checks = json::array();
    for (const Check& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    o["checks"] = std::move(checks);
    std::cout << o.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "check,pass,detail\n";
    for (const Check& c : rep.checks) {
      std::cout << c.name << ',' << (c.pass ? "true" : "false") << ',' << csv_quote(c.detail)
                << "\n";
    }
  } else {
    std::cout << "conjecture evidence for n = 2.." << max_n << "\n";
    for (const Check& c : rep.checks) {
      std::cout << "  [" << (c.pass ? "holds" : "COUNTEREXAMPLE") << "] " << c.name << "  ("
                << c.detail << ")\n";
    }
    std::cout << (rep.all_pass() ? "all conjectures hold in range\n"
                                 : "counterexample found; see details above\n");
  }
  // Evidence, not verification: a failing conjecture is reported, never a
  // nonzero exit.
  return kExitOk;
}

// ---------------------------------------------------------------------------
// mine-forbidden

int cmd_mine_forbidden(const std::string& n_spec, const std::string& format) {
  const auto range = parse_range(n_spec);
  if (!range || range->lo < 3 || range->hi > 5) {
    return usage_error("mine-forbidden: --n must lie within 3..5 (geometric oracle bound)");
  }
  std::vector<int> ns;
  for (int n = range->lo; n <= range->hi; ++n) ns.push_back(n);
  std::vector<std::vector<TripleConfig>> mined;
  for (int n : ns) mined.push_back(mine_forbidden_triples(n));
  bool stable = true;
  for (const auto& m : mined) stable = stable && (m == mined.front());

  if (format == "json") {
    json o;
    o["n_values"] = ns;
    o["stable"] = stable;
    json configs = json::array();
    for (const TripleConfig& c : mined.front()) {
      configs.push_back({{"ij", std::string(1, pair_state_char(c.states[0]))},
                         {"jk", std::string(1, pair_state_char(c.states[1]))},
                         {"ik", std::string(1, pair_state_char(c.states[2]))},
                         {"description", to_string(c)}});
    }
    o["configs"] = std::move(configs);
    std::cout << o.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "ij,jk,ik\n";
    for (const TripleConfig& c : mined.front()) {
      std::cout << pair_state_char(c.states[0]) << ',' << pair_state_char(c.states[1]) << ','
                << pair_state_char(c.states[2]) << "\n";
    }
  } else {
    std::cout << "forbidden subposets mined from n = " << ns.front() << ".." << ns.back() << "\n";
    for (const TripleConfig& c : mined.front()) std::cout << "  " << to_string(c) << "\n";
    std::cout << "stable across the range: " << (stable ? "yes" : "NO") << "\n";
  }
  return stable ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shi arrangement distance enumerator: paper-style tables, the Dist_n(k,l) "
               "matrix via two independent routes, theorem verification, conjecture evidence, "
               "and forbidden-subposet mining."};
  app.require_subcommand(1);

  std::string n_spec = "4", format = "table", route = "combinatorial";
  std::string pair_spec, vertices_spec, cache_dir_flag;
  int threads = 1, max_n = 5;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
  };
  auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Parallelize across the n range")
        ->check(CLI::PositiveNumber);
  };
  auto add_cache = [&](CLI::App* cmd) {
    cmd->add_option("--cache-dir", cache_dir_flag,
                    "Directory for region caches (fallback: SHIDIST_CACHE_DIR)");
  };

  CLI::App* tables = app.add_subcommand("tables", "The three 3-part partitions of (n+1)^(n-1)");
  tables->add_option("--n", n_spec, "Dimension or inclusive range a..b");
  tables->add_option("--pair", pair_spec, "Compared pair i,j (default 1,2)");
  tables->add_option("--vertices", vertices_spec, "Compared vertices v1,v2 (default 1,2)");
  add_format(tables);
  add_threads(tables);

  CLI::App* dist = app.add_subcommand("dist", "Dist_n(k,l) and the polynomial D(q,t)");
  dist->add_option("--n", n_spec, "Dimension or inclusive range a..b");
  dist->add_option("--route", route, "geometric, combinatorial or both")
      ->check(CLI::IsMember({"geometric", "combinatorial", "both"}));
  add_format(dist);
  add_cache(dist);
  add_threads(dist);

  CLI::App* verify = app.add_subcommand("verify", "Exact theorem checks; exit 1 on failure");
  verify->add_option("--n", n_spec, "Dimension or inclusive range a..b");
  add_format(verify);
  add_cache(verify);
  add_threads(verify);

  CLI::App* conjectures = app.add_subcommand("conjectures", "Conjecture evidence up to --max-n");
  conjectures->add_option("--max-n", max_n, "Largest dimension to test (<= 7)");
  add_format(conjectures);

  CLI::App* mine = app.add_subcommand("mine-forbidden", "Reconstruct the forbidden subposets");
  mine->add_option("--n", n_spec, "Dimension or inclusive range within 3..5");
  add_format(mine);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string cache_dir = resolve_cache_dir(cache_dir_flag);
  try {
    if (tables->parsed()) return cmd_tables(n_spec, format, pair_spec, vertices_spec, threads);
    if (dist->parsed()) return cmd_dist(n_spec, route, format, cache_dir, threads);
    if (verify->parsed()) return cmd_verify(n_spec, format, cache_dir, threads);
    if (conjectures->parsed()) return cmd_conjectures(max_n, format);
    if (mine->parsed()) return cmd_mine_forbidden(n_spec, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return usage_error("no subcommand given");
}

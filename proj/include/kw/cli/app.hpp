#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kw/acceptance.hpp"
#include "kw/rootdata/select.hpp"

namespace kw {

inline constexpr const char* kToolVersion = "kw 1.0.0";

struct CliContext {
  /// Overrides KW_CACHE and the default data directory when set.
  std::optional<std::filesystem::path> cache_dir;
  std::string testdata_dir =
#ifdef KW_TESTDATA_DIR
      KW_TESTDATA_DIR;
#else
      "testdata";
#endif
};

namespace cli_detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("KW_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "kw" / "cache";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".local" / "share" / "kw" / "cache";
  return std::filesystem::temp_directory_path() / "kw-cache";
}

/// Content-addressed store; a hit requires matching version and key material.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<std::string> load(const std::string& material) const {
    std::ifstream in(path(material));
    if (!in) return std::nullopt;
    try {
      const Json j = Json::parse(in);
      if (j.at("version") != kToolVersion || j.at("key") != material) return std::nullopt;
      return j.at("payload").get<std::string>();
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

  /// Write-then-rename so concurrent readers never see partial entries.
  void store(const std::string& material, const std::string& payload) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    const Json j = {{"version", kToolVersion}, {"key", material}, {"payload", payload}};
    std::random_device rd;
    const auto tmp = dir_ / (name(material) + ".tmp" + std::to_string(rd()));
    {
      std::ofstream out(tmp, std::ios::binary);
      if (!out) return;
      out << j.dump();
      if (!out) return;
    }
    std::filesystem::rename(tmp, path(material), ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

  std::filesystem::path path(const std::string& material) const { return dir_ / (name(material) + ".json"); }

 private:
  static std::string name(const std::string& material) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << fnv1a(material);
    return os.str();
  }
  std::filesystem::path dir_;
};

inline Weight parse_weight(const std::string& text) {
  std::vector<int> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coords.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw DomainError("weight coordinates must be comma-separated integers: " + text);
    }
  }
  if (coords.empty()) throw DomainError("empty weight");
  return Weight(coords);
}

inline LeviSet parse_roots(const std::string& text, std::size_t rank) {
  LeviSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int k = -1;
    try {
      std::size_t used = 0;
      k = std::stoi(item, &used);
      if (used != item.size()) k = -1;
    } catch (const std::exception&) {
      k = -1;
    }
    if (k < 0 || static_cast<std::size_t>(k) >= rank) throw DomainError("invalid simple root index: " + item);
    out.insert(static_cast<std::size_t>(k));
  }
  return out;
}

inline Json levi_json(const RootSystem& rs, const Weight& hw, const LeviSet& levi) {
  const auto cosets = levi_coarsen(rs, graph_model(rs, hw), levi);
  Json list = Json::array();
  for (const auto& [key, c] : cosets) {
    Json k = Json::array();
    for (const auto& r : key) k.push_back(r.str());
    Json irr = Json::array();
    for (const auto& [w, m] : c.irreducibles) irr.push_back({{"coords", w.coords}, {"mult", m}});
    list.push_back({{"key", std::move(k)}, {"weights", to_json(c.model)["weights"]}, {"irreducibles", std::move(irr)}});
  }
  return {{"type", rs.tag()}, {"hw", hw.coords}, {"levi", std::vector<std::size_t>(levi.begin(), levi.end())},
          {"cosets", std::move(list)}};
}

inline std::string graph_csv(const GraphModel& g) {
  std::ostringstream os;
  os << "weight,mult\n";
  for (const auto& [w, m] : g.mult) {
    os << "\"";
    for (std::size_t i = 0; i < w.rank(); ++i) os << (i ? "," : "") << w[i];
    os << "\"," << m << "\n";
  }
  return os.str();
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cli_detail

inline std::string cli_determinism_check(const CliContext& ctx, bool quick);

/// Runs the tool on `args` (without the program name). Exit codes: 0 success,
/// 1 domain error, 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   const CliContext& ctx = {}) {
  CLI::App app{"Exact computations for Kostant-Whittaker reduction, graph modules and rank-one Toda", "kw"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  bool no_cache = false;
  std::string format = "auto";
  app.add_flag("--no-cache", no_cache, "Recompute without reading or writing the cache");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"auto", "json", "csv"}));

  int n = 0, max_degree = 0;
  std::string type, hw, roots;
  bool quick = false;

  auto* phi = app.add_subcommand("phi", "Kostant reduction phi(V_n) with its Casimir action");
  phi->add_option("--n", n, "Highest weight")->required();
  auto* split = app.add_subcommand("split", "Split basis and idiot coefficients of phi(V_n)");
  split->add_option("--n", n, "Highest weight")->required();
  auto* coh = app.add_subcommand("coh", "Cohomology of Gr_n with its sl2 action and filtration generators");
  coh->add_option("--n", n, "Highest weight")->required();
  auto* compare = app.add_subcommand("compare", "Compare cohomology and algebra lattices");
  compare->add_option("--n", n, "Highest weight")->required();
  auto* hilbert = app.add_subcommand("hilbert", "Graded dimension of the normal-cone ring");
  hilbert->add_option("--type", type, "Root system tag or {\"cartan\": [[...]]}")->required();
  hilbert->add_option("--max", max_degree, "Largest degree")->required();
  auto* graph = app.add_subcommand("graph", "Graph model of a highest weight");
  graph->add_option("--type", type, "Root system")->required();
  graph->add_option("--hw", hw, "Highest weight, comma-separated fundamental coordinates")->required();
  auto* levi = app.add_subcommand("levi", "Levi coarsening of a graph model");
  levi->add_option("--type", type, "Root system")->required();
  levi->add_option("--hw", hw, "Highest weight")->required();
  levi->add_option("--roots", roots, "Comma-separated simple root indices of the Levi")->required();
  auto* toda = app.add_subcommand("toda", "Quantum Toda reduction");
  toda->require_subcommand(1);
  auto* toda_casimir = toda->add_subcommand("casimir", "Reduced Casimir operator");
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
  selftest->add_flag("--quick", quick, "Smaller ranges");

  std::vector<std::string> argv_store{"kw"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const bool csv_capable = hilbert->parsed() || graph->parsed();
  if (format == "csv" && !csv_capable) {
    err << "error: --format csv is only available for hilbert and graph\n";
    return 2;
  }
  const bool csv = format == "csv" || (format == "auto" && hilbert->parsed());

  if (selftest->parsed()) {
    AcceptanceOptions opts;
    opts.quick = quick;
    opts.testdata_dir = ctx.testdata_dir;
    opts.cli_check = [&] { return cli_determinism_check(ctx, quick); };
    bool all = true;
    for (const auto& r : AcceptanceSuite(opts).run()) {
      out << format_result(r) << "\n";
      all = all && r.pass;
    }
    return all ? 0 : 1;
  }

  // Canonical key material: version, subcommand, normalized flags.
  std::ostringstream material;
  material << kToolVersion << "|";
  std::function<std::string()> compute;
  try {
    if (phi->parsed()) {
      material << "phi|n=" << n;
      compute = [n] {
        Json j = to_json(phi_module(n));
        j["idiot"] = idiot_json(idiot_expansion(n));
        return cli_detail::dump(j);
      };
    } else if (split->parsed()) {
      material << "split|n=" << n;
      compute = [n] { return cli_detail::dump(to_json(highest_weight_split(n))); };
    } else if (coh->parsed()) {
      material << "coh|n=" << n;
      compute = [n] { return cli_detail::dump(to_json(coh_module(n))); };
    } else if (compare->parsed()) {
      material << "compare|n=" << n;
      compute = [n] { return cli_detail::dump(to_json(lattice_compare(n))); };
    } else if (hilbert->parsed()) {
      const RootSystem rs = parse_root_system(type);
      if (max_degree < 0) throw DomainError("--max must be nonnegative");
      material << "hilbert|cartan=" << Json(rs.cartan()).dump() << "|tag=" << rs.tag() << "|max=" << max_degree
               << "|csv=" << csv;
      compute = [rs, max_degree, csv] {
        const auto s = normal_cone_hilbert(rs, max_degree);
        return csv ? to_csv(s) : cli_detail::dump(to_json(s));
      };
    } else if (graph->parsed()) {
      const RootSystem rs = parse_root_system(type);
      const Weight w = cli_detail::parse_weight(hw);
      material << "graph|cartan=" << Json(rs.cartan()).dump() << "|tag=" << rs.tag() << "|hw=" << Json(w.coords).dump()
               << "|csv=" << csv;
      compute = [rs, w, csv] {
        const auto g = graph_model(rs, w);
        return csv ? cli_detail::graph_csv(g) : cli_detail::dump(to_json(g));
      };
    } else if (levi->parsed()) {
      const RootSystem rs = parse_root_system(type);
      const Weight w = cli_detail::parse_weight(hw);
      const LeviSet l = cli_detail::parse_roots(roots, rs.rank());
      material << "levi|cartan=" << Json(rs.cartan()).dump() << "|tag=" << rs.tag() << "|hw=" << Json(w.coords).dump()
               << "|roots=" << Json(std::vector<std::size_t>(l.begin(), l.end())).dump();
      compute = [rs, w, l] { return cli_detail::dump(cli_detail::levi_json(rs, w, l)); };
    } else if (toda_casimir->parsed()) {
      material << "toda casimir";
      compute = [] { return cli_detail::dump(to_json(reduced_casimir())); };
    }

    std::optional<cli_detail::Cache> cache;
    if (!no_cache) cache.emplace(ctx.cache_dir ? *ctx.cache_dir : cli_detail::default_cache_dir());
    if (cache) {
      if (auto hit = cache->load(material.str())) {
        out << *hit;
        return 0;
      }
    }
    const std::string payload = compute();
    if (cache) cache->store(material.str(), payload);
    out << payload;
    return 0;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

/// Byte-identical output across repeated runs and between cached and
/// uncached execution, for every computing subcommand.
inline std::string cli_determinism_check(const CliContext& ctx, bool quick) {
  const std::string n = quick ? "2" : "3";
  const std::vector<std::vector<std::string>> commands = {
      {"phi", "--n", n},
      {"split", "--n", n},
      {"coh", "--n", n},
      {"compare", "--n", n},
      {"hilbert", "--type", "A1", "--max", "8"},
      {"hilbert", "--type", "B2", "--max", "20", "--format", "json"},
      {"graph", "--type", "G2", "--hw", "1,0"},
      {"graph", "--type", "A2", "--hw", "1,1", "--format", "csv"},
      {"levi", "--type", "A2", "--hw", "1,1", "--roots", "0"},
      {"toda", "casimir"},
  };
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("kw-selftest-" + std::to_string(rd()));
  CliContext c = ctx;
  c.cache_dir = dir;
  std::string problem;
  for (const auto& cmd : commands) {
    auto run = [&](bool cached) {
      std::vector<std::string> a = cmd;
      if (!cached) a.insert(a.begin(), "--no-cache");
      std::ostringstream out, err;
      const int code = run_cli(a, out, err, c);
      if (code != 0) problem = "exit code " + std::to_string(code) + " for " + a.front() + ": " + err.str();
      return out.str();
    };
    const std::string plain1 = run(false), plain2 = run(false);
    const std::string miss = run(true), hit = run(true);
    if (!problem.empty()) break;
    std::string name;
    for (const auto& a : cmd) name += a + " ";
    if (plain1 != plain2) { problem = "repeated runs differ: " + name; break; }
    if (plain1 != miss || plain1 != hit) { problem = "cached output differs: " + name; break; }
  }
  std::error_code ec;
  std::filesystem::remove_all(dir, ec);
  return problem;
}

}  // namespace kw

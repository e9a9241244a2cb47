// Command-line laboratory: sampling, statistics, reference values, oracles,
// and Monte Carlo experiments.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "cyclegeo/harness.hpp"
#include "cyclegeo/oracle.hpp"
#include "cyclegeo/stats.hpp"
#include "cyclegeo/theory.hpp"

namespace {

using namespace cyclegeo;

CycleType type_from_flags(const std::string& type, const std::string& all_p,
                          const std::string& involution, const std::string& ewens,
                          Rng& rng) {
  auto parse_pair = [](const std::string& s, long long& a, double& b) {
    std::istringstream iss(s);
    char comma = 0;
    if (!(iss >> a >> comma >> b) || comma != ',')
      throw std::invalid_argument("expected 'a,b' but got '" + s + "'");
  };
  if (!type.empty()) return parse_cycle_type(type);
  long long n = 0;
  double x = 0;
  if (!all_p.empty()) {
    parse_pair(all_p, n, x);
    return all_p_cycles(n, static_cast<long long>(x));
  }
  if (!involution.empty()) {
    parse_pair(involution, n, x);
    return involution_type(n, static_cast<long long>(x));
  }
  if (!ewens.empty()) {
    parse_pair(ewens, n, x);
    return ewens_type(n, x, rng);
  }
  throw std::invalid_argument(
      "one of --type/--all-p-cycles/--involution/--ewens is required");
}

std::string perm_line(const Perm& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

Perm parse_perm_line(const std::string& line) {
  Perm p;
  std::istringstream iss(line);
  std::string tok;
  while (std::getline(iss, tok, ',')) p.push_back(std::stoi(tok));
  return p;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int cmd_sample(const std::string& type, const std::string& all_p,
               const std::string& involution, const std::string& ewens,
               std::uint64_t seed, long long count, const std::string& out,
               bool points, bool conjugate) {
  Rng rng(seed);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  for (long long i = 0; i < count; ++i) {
    const CycleType t = type_from_flags(type, all_p, involution, ewens, rng);
    if (points) {
      const PointSet ps = sample_point_set(t, rng);
      os << "p,k,l,x,y\n";
      char buf[128];
      for (std::size_t j = 0; j < ps.size(); ++j) {
        const IndexV idx = ps.index_of(j);
        const Point z = ps.point(j);
        std::snprintf(buf, sizeof buf, "%lld,%lld,%lld,%.17g,%.17g\n", idx.p, idx.k,
                      idx.l, z.x, z.y);
        os << buf;
      }
    } else {
      os << perm_line(conjugate ? conjugate_uniform_sampler(t, rng)
                                : sample_t_cyclic(t, rng))
         << "\n";
    }
  }
  return 0;
}

int cmd_stats(const std::string& in, const std::string& metrics, const std::string& out) {
  std::vector<std::string> wanted;
  {
    std::istringstream iss(metrics);
    std::string tok;
    while (std::getline(iss, tok, ',')) wanted.push_back(tok);
  }
  std::ifstream input(in);
  if (!input) throw std::runtime_error("cannot open " + in);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  for (std::size_t i = 0; i < wanted.size(); ++i)
    os << (i ? "," : "") << wanted[i];
  os << "\n";
  std::string line;
  while (std::getline(input, line)) {
    if (line.empty()) continue;
    const Perm perm = parse_perm_line(line);
    bool first = true;
    for (const std::string& m : wanted) {
      if (!first) os << ",";
      first = false;
      if (m == "lis") {
        os << lis(perm);
      } else if (m == "lds") {
        os << lds(perm);
      } else if (m == "shape") {
        const YoungDiagram shape = rs_shape(perm);
        for (std::size_t j = 0; j < shape.rows.size(); ++j)
          os << (j ? " " : "") << shape.rows[j];
      } else if (m == "records") {
        const RecordCounts rc = records(perm);
        os << rc.high << " " << rc.low;
      } else if (m.rfind("pattern:", 0) == 0) {
        Perm pattern;
        for (char c : m.substr(8)) pattern.push_back(c - '0');
        os << pattern_count(perm, pattern, true);
      } else {
        throw std::invalid_argument("unknown metric '" + m + "'");
      }
    }
    os << "\n";
  }
  return 0;
}

int cmd_theory_sigma(int r, double p1, double p2, long long mc_trials,
                     std::uint64_t seed, const std::string& out) {
  SigmaMatrix s;
  if (p1 == 0.0) {
    s = sigma_matrix_p2(r, p2);
  } else if (r <= 3 && mc_trials == 0) {
    s = sigma_matrix_general_exact(r, p1, p2);
  } else {
    Rng rng(seed);
    s = sigma_matrix_general_mc(r, p1, p2, mc_trials > 0 ? mc_trials : 1000000, rng);
  }
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "# rows/cols: patterns of S_" << r << " in lexicographic one-line order\n";
  const auto patterns = all_patterns(r);
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", s.entries.at(i, j));
      os << (j ? "," : "") << buf;
    }
    os << "\n";
  }
  return 0;
}

int cmd_theory_flskv(const std::string& grid, const std::string& out) {
  double lo = 0, hi = 2, step = 0.05;
  {
    std::istringstream iss(grid);
    char c1 = 0, c2 = 0;
    if (!(iss >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':')
      throw std::invalid_argument("grid must be lo:hi:step");
  }
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "r,f_lskv\n";
  for (double r = lo; r <= hi + 1e-12; r += step) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g,%.10g\n", r, f_lskv(r));
    os << buf;
  }
  return 0;
}

int cmd_theory_mu(int r, double p1, const std::string& out) {
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  os << "pattern,mu\n";
  for (const Perm& pi : all_patterns(r)) {
    std::string name;
    for (int v : pi) name += static_cast<char>('0' + v);
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", mu_pattern(pi, p1));
    os << name << "," << buf << "\n";
  }
  return 0;
}

int cmd_oracle_enumerate(const std::string& type, const std::string& out) {
  const CycleType t = parse_cycle_type(type);
  std::ofstream file;
  std::ostream& os = open_out(file, out);
  for (const Perm& p : enumerate_class(t)) os << perm_line(p) << "\n";
  return 0;
}

int cmd_oracle_greene(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    Perm perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i + 1;
    do {
      const YoungDiagram shape = rs_shape(perm);
      for (long long k = 0; k <= n; ++k) {
        if (lds_k(shape, k) != brute_lds_k(perm, k)) {
          std::printf("MISMATCH n=%d perm=%s k=%lld\n", n, perm_line(perm).c_str(), k);
          return 1;
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::printf("greene-check n=%d ok\n", n);
  }
  return 0;
}

int cmd_experiment(const std::string& kind, const std::string& config_path,
                   std::optional<std::uint64_t> seed, int threads,
                   const std::string& out_dir) {
  using namespace cyclegeo::harness;
  if (kind == "all") {
    return run_all_acceptance(seed.value_or(20260826ULL), threads, out_dir);
  }
  std::ifstream in(config_path);
  if (!in) {
    std::fprintf(stderr, "cannot open config %s\n", config_path.c_str());
    return 2;
  }
  ExperimentConfig cfg;
  try {
    cfg = parse_config(json::parse(in));
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
  if (seed) cfg.seed = *seed;
  ExperimentReport rep;
  try {
    if (kind == "lds") {
      rep = run_lds_experiment(cfg, threads);
    } else if (kind == "shape") {
      rep = run_shape_experiment(cfg, threads);
    } else if (kind == "records") {
      rep = run_records_experiment(cfg, threads);
    } else if (kind == "patterns") {
      rep = run_pattern_experiment(cfg, threads);
    } else {
      std::fprintf(stderr, "unknown experiment kind '%s'\n", kind.c_str());
      return 2;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  }
  if (!out_dir.empty()) write_report(rep, out_dir);
  std::printf("%s: %s\n", rep.name.c_str(), rep.pass ? "PASS" : "FAIL");
  std::printf("%s\n", rep.summary.dump(2).c_str());
  return rep.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point-process laboratory for uniform cycle-type permutations"};
  app.require_subcommand(1);

  std::string type, all_p, involution, ewens, out, in, metrics, grid = "0:2:0.05";
  std::uint64_t seed = 1;
  long long count = 1, mc_trials = 0;
  int r = 2, max_n = 8, threads = 1;
  double p1 = 0, p2 = 0;
  bool points = false, conjugate = false;

  auto* sample = app.add_subcommand("sample", "draw permutations or point sets");
  sample->add_option("--type", type, "explicit counts, e.g. 1,2,1,1");
  sample->add_option("--all-p-cycles", all_p, "n,p");
  sample->add_option("--involution", involution, "n,fixed");
  sample->add_option("--ewens", ewens, "n,theta");
  sample->add_option("--seed", seed);
  sample->add_option("--count", count);
  sample->add_option("--out", out);
  sample->add_flag("--points", points, "emit the planar point set as CSV");
  sample->add_flag("--conjugate", conjugate, "use the conjugation sampler");

  auto* stats = app.add_subcommand("stats", "per-permutation statistics from a CSV");
  stats->add_option("--in", in)->required();
  stats->add_option("--metrics", metrics)->required();
  stats->add_option("--out", out);

  auto* theory = app.add_subcommand("theory", "reference values");
  theory->require_subcommand(1);
  auto* sigma = theory->add_subcommand("sigma", "asymptotic covariance matrix");
  sigma->add_option("--r", r);
  sigma->add_option("--p1", p1);
  sigma->add_option("--p2", p2);
  sigma->add_option("--mc-trials", mc_trials, "force Monte Carlo with this many trials");
  sigma->add_option("--seed", seed);
  sigma->add_option("--out", out);
  auto* flskv = theory->add_subcommand("flskv", "limit shape functional on a grid");
  flskv->add_option("--grid", grid, "lo:hi:step");
  flskv->add_option("--out", out);
  auto* mu = theory->add_subcommand("mu", "pattern occurrence probabilities");
  mu->add_option("--r", r);
  mu->add_option("--p1", p1);
  mu->add_option("--out", out);

  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
  oracle->require_subcommand(1);
  auto* enumerate = oracle->add_subcommand("enumerate", "list a conjugacy class");
  enumerate->add_option("--type", type)->required();
  enumerate->add_option("--out", out);
  auto* greene = oracle->add_subcommand("greene-check", "Greene vs Dilworth oracle");
  greene->add_option("--max-n", max_n);

  std::string exp_kind, config_path;
  bool seed_given = false;
  auto* experiment = app.add_subcommand("experiment", "Monte Carlo experiments");
  experiment->add_option("kind", exp_kind, "lds|shape|records|patterns|all")->required();
  experiment->add_option("--config", config_path);
  experiment->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
  experiment->add_option("--threads", threads);
  experiment->add_option("--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sample->parsed())
      return cmd_sample(type, all_p, involution, ewens, seed, count, out, points,
                        conjugate);
    if (stats->parsed()) return cmd_stats(in, metrics, out);
    if (theory->parsed()) {
      if (sigma->parsed()) return cmd_theory_sigma(r, p1, p2, mc_trials, seed, out);
      if (flskv->parsed()) return cmd_theory_flskv(grid, out);
      if (mu->parsed()) return cmd_theory_mu(r, p1, out);
    }
    if (oracle->parsed()) {
      if (enumerate->parsed()) return cmd_oracle_enumerate(type, out);
      if (greene->parsed()) return cmd_oracle_greene(max_n);
    }
    if (experiment->parsed())
      return cmd_experiment(exp_kind, config_path,
                            seed_given ? std::optional<std::uint64_t>(seed) : std::nullopt,
                            threads, out);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

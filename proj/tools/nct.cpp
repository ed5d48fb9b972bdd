// Command-line front end: gamma brackets, family verification, the
// primitive catalog, extremal searches, coverage classifiers, and the
// desk-scale limits table.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "nct/io.hpp"
#include "nct/parallel.hpp"

using namespace nct;

namespace {

constexpr int kExitVerifyFailed = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitBudget = 4;

struct OutputConfig {
  std::string format = "json";
  std::string out_path;
};

void emit(const OutputConfig& cfg, const std::vector<std::string>& columns,
          const std::vector<json>& rows) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + cfg.out_path);
    os = &file;
  }
  if (cfg.format == "csv")
    write_csv(*os, columns, rows);
  else
    write_json(*os, rows);
}

double env_budget() {
  const char* v = std::getenv("NCT_TIME_BUDGET");
  if (!v) return 0;
  return std::atof(v);
}

Group parse_group(const std::string& s) {
  if (s == "S" || s == "s") return Group::S;
  if (s == "A" || s == "a") return Group::A;
  throw CLI::ValidationError("--group", "expected S or A");
}

std::vector<int> sweep_values(int lo, int hi, const std::string& step,
                              const std::string& parity) {
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) {
    if (parity == "even" && n % 2 != 0) continue;
    if (parity == "odd" && n % 2 != 1) continue;
    if (step == "2p") {
      if (n % 2 != 0 || !is_prime(n / 2)) continue;
    } else if (step == "primes") {
      if (!is_prime(n)) continue;
    } else if (step == "mult6") {
      if (n % 6 != 0) continue;
    }
    out.push_back(n);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normal covering number toolkit"};
  app.require_subcommand(1);

  OutputConfig out;
  int threads = 0;
  double budget = env_budget();
  bool deterministic = true;
  app.add_option("--format", out.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.out_path, "write to a file instead of stdout");
  app.add_option("--threads", threads, "parallelism hint (0 = auto)");
  app.add_option("--budget", budget, "time budget in seconds (overrides NCT_TIME_BUDGET)");
  app.add_flag("--deterministic,!--no-deterministic", deterministic,
               "serial search order under a budget");

  // --- gamma ---
  auto* gamma = app.add_subcommand("gamma", "two-sided bounds for gamma(S_n) or gamma(A_n)");
  int g_n = 0, g_min = 0, g_max = 0, g_cap = 100;
  std::string g_group = "S", g_step = "all", g_parity = "any";
  bool g_no_lex = false;
  gamma->add_option("--n", g_n, "single degree");
  gamma->add_option("--min", g_min, "sweep start");
  gamma->add_option("--max", g_max, "sweep end");
  gamma->add_option("--step", g_step, "all, 2p, primes, or mult6")
      ->check(CLI::IsMember({"all", "2p", "primes", "mult6"}));
  gamma->add_option("--parity", g_parity, "any, even, or odd")
      ->check(CLI::IsMember({"any", "even", "odd"}));
  gamma->add_option("--group", g_group, "S or A");
  gamma->add_option("--verify-cap", g_cap,
                    "largest degree verified over the full type space");
  gamma->add_flag("--no-lex", g_no_lex, "skip witness canonicalization");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "check a covering-family construction");
  int v_n = 0;
  std::string v_group = "S", v_prov;
  verify->add_option("--n", v_n, "degree")->required();
  verify->add_option("--group", v_group, "S or A");
  verify->add_option("--provenance", v_prov,
                     "construction tag (default: all applicable)");

  // --- catalog ---
  auto* catalog = app.add_subcommand("catalog", "primitive exceptional-coverage catalog");
  int c_n = 0;
  catalog->add_option("--n", c_n, "degree")->required();

  // --- sumfree ---
  auto* sumfree = app.add_subcommand("sumfree", "largest symmetric sum-free-type subset of Z/n");
  int sf_n = 0, sf_min = 0, sf_max = 0;
  std::string sf_variant = "coprime";
  sumfree->add_option("--n", sf_n, "single modulus");
  sumfree->add_option("--min", sf_min, "sweep start");
  sumfree->add_option("--max", sf_max, "sweep end");
  sumfree->add_option("--variant", sf_variant, "coprime or restricted")
      ->check(CLI::IsMember({"coprime", "restricted"}));

  // --- cubefree ---
  auto* cubefree =
      app.add_subcommand("cubefree", "largest symmetric cube-free subset of {1..n-1}");
  int cf_n = 0, cf_min = 0, cf_max = 0;
  std::string cf_variant = "coprime";
  cubefree->add_option("--n", cf_n, "single bound");
  cubefree->add_option("--min", cf_min, "sweep start");
  cubefree->add_option("--max", cf_max, "sweep end");
  cubefree->add_option("--variant", cf_variant, "coprime, degenerate, or degenerate-even")
      ->check(CLI::IsMember({"coprime", "degenerate", "degenerate-even"}));

  // --- triples ---
  auto* triples = app.add_subcommand(
      "triples", "classify transitively covered restricted triples or degenerate cubes");
  int t_n = 0, t_min = 0, t_max = 0;
  std::string t_kind = "restricted";
  bool t_detail = false;
  triples->add_option("--n", t_n, "single degree");
  triples->add_option("--min", t_min, "sweep start");
  triples->add_option("--max", t_max, "sweep end");
  triples->add_option("--kind", t_kind, "restricted or cubes")
      ->check(CLI::IsMember({"restricted", "cubes"}));
  triples->add_flag("--detail", t_detail, "emit one row per hit instead of summaries");

  // --- limits ---
  auto* limits = app.add_subcommand("limits", "gamma(n)/n ratio table over a sweep");
  int l_min = 5, l_max = 100;
  std::string l_group = "S", l_parity = "any", l_step = "all";
  bool l_upper_only = false;
  limits->add_option("--group", l_group, "S or A");
  limits->add_option("--parity", l_parity, "any, even, or odd")
      ->check(CLI::IsMember({"any", "even", "odd"}));
  limits->add_option("--min", l_min, "sweep start");
  limits->add_option("--max", l_max, "sweep end");
  limits->add_option("--step", l_step, "all, 2p, primes, or mult6")
      ->check(CLI::IsMember({"all", "2p", "primes", "mult6"}));
  limits->add_flag("--upper-only", l_upper_only, "skip the set-cover lower bound");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();
  CLI11_PARSE(app, argc, argv);

  int exit_code = 0;
  try {
    if (*gamma) {
      Group g = parse_group(g_group);
      std::vector<int> ns;
      if (g_n > 0)
        ns.push_back(g_n);
      else if (g_min > 0 && g_max >= g_min)
        ns = sweep_values(g_min, g_max, g_step, g_parity);
      else
        throw CLI::ValidationError("gamma", "need --n or --min/--max");
      BracketOptions opt;
      opt.threads = threads;
      opt.time_budget_seconds = budget;
      opt.exhaustive_verify_cap = g_cap;
      opt.lex_witness = !g_no_lex;
      std::vector<json> rows;
      for (int n : ns) {
        auto br = gamma_bracket(n, g, opt);
        if (!br.lower_certified) exit_code = kExitBudget;
        rows.push_back(bracket_row(br));
      }
      emit(out, bracket_columns(), rows);
    } else if (*verify) {
      Group g = parse_group(v_group);
      std::vector<Provenance> tags;
      if (!v_prov.empty()) {
        auto tag = provenance_from_string(v_prov);
        if (!tag) throw CLI::ValidationError("--provenance", "unknown tag " + v_prov);
        tags.push_back(*tag);
      } else {
        tags = applicable_provenances(v_n, g);
      }
      std::vector<CoveringFamily> fams;
      for (Provenance tag : tags) fams.push_back(build_covering_family(tag, v_n, g));
      VerifyOptions vopt;
      vopt.threads = threads;
      auto reports = verify_families(fams, vopt);
      std::vector<json> rows;
      for (size_t i = 0; i < fams.size(); ++i) {
        if (!reports[i].covered) exit_code = kExitVerifyFailed;
        rows.push_back(family_report_row(fams[i], reports[i]));
      }
      emit(out, verify_columns(), rows);
    } else if (*catalog) {
      const auto& cat = primitive_catalog(c_n);
      std::vector<json> rows;
      for (const auto& e : cat.entries) rows.push_back(catalog_row(c_n, e, cat.valid));
      emit(out, catalog_columns(), rows);
    } else if (*sumfree || *cubefree) {
      bool is_sum = static_cast<bool>(*sumfree);
      int n1 = is_sum ? sf_n : cf_n;
      int lo = is_sum ? sf_min : cf_min;
      int hi = is_sum ? sf_max : cf_max;
      std::string variant = is_sum ? sf_variant : cf_variant;
      ExtremalVariant v;
      if (variant == "coprime")
        v = is_sum ? ExtremalVariant::CoprimeSumFree : ExtremalVariant::CoprimeCubeFree;
      else if (variant == "restricted")
        v = ExtremalVariant::RestrictedTripleFree;
      else if (variant == "degenerate")
        v = ExtremalVariant::DegenerateCubeFree;
      else
        v = ExtremalVariant::DegenerateCubeEvenFree;
      std::vector<int> ns;
      if (n1 > 0)
        ns.push_back(n1);
      else if (lo > 0 && hi >= lo)
        for (int n = lo; n <= hi; ++n) ns.push_back(n);
      else
        throw CLI::ValidationError(is_sum ? "sumfree" : "cubefree", "need --n or --min/--max");
      ExtremalSearchOptions sopt;
      sopt.time_budget_seconds = budget;
      sopt.threads = resolve_threads(threads);
      sopt.deterministic = deterministic;
      std::vector<json> rows;
      for (int n : ns) {
        ExtremalProblem p{v, n};
        auto r = max_extremal(p, sopt);
        if (!r.certified) exit_code = kExitBudget;
        rows.push_back(extremal_row(p, r));
      }
      emit(out, extremal_columns(), rows);
    } else if (*triples) {
      std::vector<int> ns;
      if (t_n > 0)
        ns.push_back(t_n);
      else if (t_min > 0 && t_max >= t_min)
        for (int n = t_min; n <= t_max; ++n) ns.push_back(n);
      else
        throw CLI::ValidationError("triples", "need --n or --min/--max");
      std::vector<json> rows;
      for (int n : ns) {
        if (t_kind == "restricted") {
          auto rep = classify_restricted_triples(n, threads);
          if (t_detail)
            for (const auto& hit : rep.hits) rows.push_back(triple_hit_row(n, hit));
          else
            rows.push_back(triples_summary_row(rep));
        } else {
          Group g = n % 2 == 1 ? Group::S : Group::A;
          auto rep = classify_degenerate_cubes(n, g, threads);
          if (t_detail)
            for (const auto& hit : rep.hits) rows.push_back(cube_hit_row(n, hit));
          else
            rows.push_back(cubes_summary_row(rep));
        }
      }
      emit(out, t_detail ? hit_columns() : triples_columns(), rows);
    } else if (*limits) {
      Group g = parse_group(l_group);
      auto ns = sweep_values(l_min, l_max, l_step, l_parity);
      BracketOptions opt;
      opt.threads = threads;
      opt.time_budget_seconds = budget;
      opt.exhaustive_verify_cap = 64;  // ratio sweeps lean on the constructions
      opt.skip_lower = l_upper_only;
      opt.lex_witness = false;
      std::vector<json> rows;
      for (int n : ns) {
        auto br = gamma_bracket(n, g, opt);
        if (!l_upper_only && !br.lower_certified) exit_code = kExitBudget;
        rows.push_back(limits_row(br));
      }
      emit(out, limits_columns(), rows);
    }
  } catch (const InfeasibleCover& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (std::string(e.what()).find("infeasible") != std::string::npos) return kExitInfeasible;
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forge/audit.hpp"
#include "forge/beiter.hpp"
#include "forge/constants.hpp"
#include "forge/cyclotomic.hpp"
#include "forge/report.hpp"
#include "forge/ternary.hpp"

namespace {

using namespace forge;
using ordered_json = nlohmann::ordered_json;

// Published 15-digit reference values the `constants` command must reproduce.
constexpr double kRefC1 = 0.249029016616718;
constexpr double kRefC2 = 0.597771234896174;
constexpr double kRefPrimeSum = 0.77315666904975;
constexpr double kConstantsTol = 1e-12;

std::string join_u64(const std::vector<u64>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int cmd_constants() {
  auto line = [](const char* name, const CertifiedValue& v, double ref) {
    std::printf("%-9s = %.15f  (tail <= %.3g, terms = %llu)\n", name, v.value, v.tail_bound,
                static_cast<unsigned long long>(v.terms_used));
    double diff = std::abs(v.value - ref);
    bool ok = diff <= kConstantsTol;
    std::printf("  vs %.15f : %s (|diff| = %.3g)\n", ref, ok ? "ok" : "MISMATCH", diff);
    return ok;
  };
  bool ok = true;
  ok &= line("C1", compute_c1(kConstantsTol), kRefC1);
  ok &= line("sum_p", prime_reciprocal_sum_zeta(kConstantsTol), kRefPrimeSum);
  ok &= line("C2", compute_c2(kConstantsTol), kRefC2);
  return ok ? 0 : 1;
}

ConstraintSpec constraint_from_flags(const std::string& name, i64 a) {
  if (name == "ternary") return ConstraintSpec::unconstrained();
  if (name == "coefficient-optimal") return ConstraintSpec::coefficient_optimal();
  if (name == "mod-pq") return ConstraintSpec::residue_mod_pq(a);
  if (name == "pair-set-bb") return ConstraintSpec::pair_set_mod_p(beiter_pair_predicate());
  if (name == "crypto-gap") return ConstraintSpec::crypto_gap();
  throw CLI::ValidationError("--constraint", "unknown constraint '" + name + "'");
}

struct CountOptions {
  std::vector<u64> xs;
  std::string constraint = "ternary";
  i64 a = 0;
  u64 x_cap = 1'000'000'000ULL;
  unsigned threads = default_thread_count();
  std::string format = "csv";
  std::string out_dir = "out";
  bool no_cache = false;
};

ExperimentReport build_count_report(const CountOptions& opt, const ConstraintSpec& spec) {
  ExperimentReport rep;
  rep.experiment_id = "count";
  rep.parameters = "constraint=" + spec.label() + ";x=" + join_u64(opt.xs);
  auto start = std::chrono::steady_clock::now();
  for (u64 x : opt.xs) {
    CountReport c = count_ternary(x, spec, opt.threads);
    ReportRow row;
    row.x = x;
    row.count = c.count;
    row.predicted_available = c.predicted_available;
    row.predicted = c.predicted;
    row.ratio = c.ratio;
    rep.rows.push_back(row);
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  rep.timestamp = iso8601_utc_now();
  return rep;
}

int cmd_count(const CountOptions& opt_in) {
  CountOptions opt = opt_in;
  std::sort(opt.xs.begin(), opt.xs.end());
  for (u64 x : opt.xs)
    if (x > opt.x_cap)
      throw CLI::ValidationError("--x", "x exceeds the configured cap " + std::to_string(opt.x_cap));
  ConstraintSpec spec = constraint_from_flags(opt.constraint, opt.a);

  ResultCache cache = ResultCache::resolve(opt.out_dir);
  std::string params = "constraint=" + spec.label() + ";x=" + join_u64(opt.xs);
  std::string json_bytes;
  if (!opt.no_cache) {
    if (auto hit = cache.load("count", params)) json_bytes = *hit;
  }
  if (json_bytes.empty()) {
    ExperimentReport rep = build_count_report(opt, spec);
    json_bytes = rep.to_json();
    if (!opt.no_cache) cache.store("count", params, json_bytes);
  }
  if (opt.format == "json") {
    std::fputs(json_bytes.c_str(), stdout);
  } else {
    ExperimentReport rep = ExperimentReport::from_json(json_bytes);
    std::fputs(rep.to_csv().c_str(), stdout);
  }
  return 0;
}

int cmd_coeffs(u64 n, bool inverse) {
  IntegerPolynomial poly = inverse ? inverse_cyclotomic_coeffs(n) : cyclotomic_coeffs(n);
  std::printf("%s_%llu: degree %lld, height %llu\n", inverse ? "Psi" : "Phi",
              static_cast<unsigned long long>(n), static_cast<long long>(poly.degree()),
              static_cast<unsigned long long>(poly.height()));
  std::string line;
  for (i64 c : poly.coeffs()) {
    if (!line.empty()) line += ' ';
    line += std::to_string(c);
  }
  std::printf("%s\n", line.c_str());
  return 0;
}

int cmd_audit(const AuditConfig& cfg, bool only_ngb, bool only_kaplan) {
  std::vector<CheckResult> results;
  if (only_ngb) {
    results.push_back(check_pair_cardinalities(cfg.p_max, cfg.threads));
  } else if (only_kaplan) {
    results.push_back(
        check_kaplan_flatness(cfg.kaplan_samples, cfg.kaplan_n_cap, cfg.seed, cfg.threads));
  } else {
    results = run_full_audit(cfg);
  }
  bool all_ok = true;
  for (const auto& r : results) {
    std::printf("[%s] %-22s (%6.2fs)  %s\n", r.ok ? "ok" : "FAIL", r.name.c_str(), r.seconds,
                r.detail.c_str());
    all_ok &= r.ok;
  }
  return all_ok ? 0 : 1;
}

struct DensityRow {
  u64 x;
  u64 nt, t, ta1, bb;
  double ratio_nt, ratio_t, ratio_ta1, ratio_bb;
};

int cmd_density(std::vector<u64> xs, const std::string& out_dir, unsigned threads,
                const std::string& format) {
  std::sort(xs.begin(), xs.end());
  ResultCache cache = ResultCache::resolve(out_dir);
  std::string params = "x=" + join_u64(xs);
  std::string json_bytes;
  if (auto hit = cache.load("density", params)) json_bytes = *hit;

  if (json_bytes.empty()) {
    auto start = std::chrono::steady_clock::now();
    std::vector<DensityRow> rows;
    for (u64 x : xs) {
      DensityRow row{};
      row.x = x;
      CountReport nt = count_ternary(x, ConstraintSpec::unconstrained(), threads);
      CountReport t = count_ternary(x, ConstraintSpec::coefficient_optimal(), threads);
      CountReport ta1 = count_ternary(x, ConstraintSpec::residue_mod_pq(1), threads);
      CountReport bb =
          count_ternary(x, ConstraintSpec::pair_set_mod_p(beiter_pair_predicate()), threads);
      row.nt = nt.count;
      row.t = t.count;
      row.ta1 = ta1.count;
      row.bb = bb.count;
      row.ratio_nt = nt.ratio;
      row.ratio_t = t.ratio;
      row.ratio_ta1 = ta1.ratio;
      row.ratio_bb = bb.ratio;
      rows.push_back(row);
    }
    ordered_json j;
    j["experiment"] = "density";
    j["version"] = kVersion;
    j["parameters"] = params;
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json row;
      row["x"] = r.x;
      row["nt"] = r.nt;
      row["t"] = r.t;
      row["ta1"] = r.ta1;
      row["bb_certified"] = r.bb;
      row["frac_t"] = r.nt ? static_cast<double>(r.t) / r.nt : 0.0;
      row["frac_bb"] = r.nt ? static_cast<double>(r.bb) / r.nt : 0.0;
      row["ratio_nt"] = r.ratio_nt;
      row["ratio_t"] = r.ratio_t;
      row["ratio_ta1"] = r.ratio_ta1;
      row["ratio_bb"] = r.ratio_bb;
      j["rows"].push_back(row);
    }
    j["stamp"]["timestamp"] = iso8601_utc_now();
    j["stamp"]["wall_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json_bytes = j.dump(2) + "\n";
    cache.store("density", params, json_bytes);
  }

  // plot-data files: plain whitespace columns behind a comment header
  ordered_json j = ordered_json::parse(json_bytes);
  std::filesystem::create_directories(out_dir);
  {
    std::ofstream counts(std::filesystem::path(out_dir) / "density_counts.dat");
    counts << "# x  N_T  T_coeff_optimal  T_a1  BB_certified  frac_T  frac_BB\n";
    for (const auto& r : j["rows"])
      counts << r["x"] << ' ' << r["nt"] << ' ' << r["t"] << ' ' << r["ta1"] << ' '
             << r["bb_certified"] << ' ' << format_double(r["frac_t"].get<double>()) << ' '
             << format_double(r["frac_bb"].get<double>()) << '\n';
  }
  {
    std::ofstream ratios(std::filesystem::path(out_dir) / "density_ratios.dat");
    ratios << "# x  ratio_NT  ratio_T  ratio_Ta1  ratio_BB   (count / theorem main term)\n";
    for (const auto& r : j["rows"])
      ratios << r["x"] << ' ' << format_double(r["ratio_nt"].get<double>()) << ' '
             << format_double(r["ratio_t"].get<double>()) << ' '
             << format_double(r["ratio_ta1"].get<double>()) << ' '
             << format_double(r["ratio_bb"].get<double>()) << '\n';
  }

  if (format == "json") {
    std::fputs(json_bytes.c_str(), stdout);
  } else {
    std::printf("x,nt,t,ta1,bb_certified,frac_t,frac_bb\n");
    for (const auto& r : j["rows"])
      std::printf("%llu,%llu,%llu,%llu,%llu,%s,%s\n",
                  r["x"].get<unsigned long long>(), r["nt"].get<unsigned long long>(),
                  r["t"].get<unsigned long long>(), r["ta1"].get<unsigned long long>(),
                  r["bb_certified"].get<unsigned long long>(),
                  format_double(r["frac_t"].get<double>()).c_str(),
                  format_double(r["frac_bb"].get<double>()).c_str());
  }
  std::fprintf(stderr, "wrote %s/density_counts.dat and density_ratios.dat\n", out_dir.c_str());
  return 0;
}

int cmd_cache(bool do_list, bool do_clear, const std::string& out_dir) {
  ResultCache cache = ResultCache::resolve(out_dir);
  if (do_clear) {
    u64 n = cache.clear();
    std::printf("cleared %llu cached report(s) under %s\n", static_cast<unsigned long long>(n),
                cache.root().c_str());
    return 0;
  }
  if (!do_list) {
    std::fprintf(stderr, "cache: specify --list or --clear\n");
    return 2;
  }
  for (const auto& entry : cache.list()) std::printf("%s\n", entry.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ternary-forge: exact enumeration, cyclotomic coefficients and certified "
               "constants for ternary integers"};
  app.require_subcommand(1);

  app.add_subcommand("constants", "certified C1, C2 and the prime sum, checked to 1e-12");

  CountOptions copt;
  auto* count = app.add_subcommand("count", "exact constrained counts next to theorem main terms");
  count->add_option("--x", copt.xs, "cutoff(s), repeatable")->required();
  count->add_option("--constraint", copt.constraint,
                    "ternary|coefficient-optimal|mod-pq|pair-set-bb|crypto-gap");
  count->add_option("--a", copt.a, "residue a for mod-pq (nonzero)");
  count->add_option("--x-cap", copt.x_cap, "refuse cutoffs above this (default 1e9)");
  count->add_option("--threads", copt.threads, "worker threads");
  count->add_option("--format", copt.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  count->add_option("--out", copt.out_dir, "output/cache directory");
  count->add_flag("--no-cache", copt.no_cache, "skip the result cache");

  u64 coeffs_n = 0;
  bool coeffs_inverse = false;
  auto* coeffs = app.add_subcommand("coeffs", "exact coefficients of Phi_n (or Psi_n)");
  coeffs->add_option("--n", coeffs_n, "index n")->required();
  coeffs->add_flag("--inverse", coeffs_inverse, "print Psi_n instead of Phi_n");

  AuditConfig acfg;
  bool only_ngb = false, only_kaplan = false;
  auto* audit = app.add_subcommand("audit", "run every property suite; exit 0 iff zero violations");
  audit->add_option("--p-max", acfg.p_max, "closed-form cardinality range (default 200)");
  audit->add_option("--exhaustive-cap", acfg.exhaustive_cap,
                    "exhaustive ternary scan bound (default 2e5)");
  audit->add_option("--samples", acfg.optimality_samples,
                    "random triples for criterion/direct agreement (default 1e4)");
  audit->add_option("--kaplan-samples", acfg.kaplan_samples, "Kaplan flatness samples (default 500)");
  audit->add_option("--seed", acfg.seed, "sampling seed");
  audit->add_option("--threads", acfg.threads, "worker threads");
  audit->add_flag("--ngb", only_ngb, "only the GB/BB cardinality checks");
  audit->add_flag("--kaplan", only_kaplan, "only the Kaplan flatness check");

  std::vector<u64> density_xs = {100'000, 1'000'000, 10'000'000};
  std::string density_out = "out";
  unsigned density_threads = default_thread_count();
  std::string density_format = "csv";
  auto* density = app.add_subcommand("density", "density experiment with plot-data files");
  density->add_option("--x", density_xs, "cutoff(s), repeatable");
  density->add_option("--out", density_out, "output/cache directory");
  density->add_option("--threads", density_threads, "worker threads");
  density->add_option("--format", density_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));

  bool cache_list = false, cache_clear = false;
  std::string cache_out = "out";
  auto* cachecmd = app.add_subcommand("cache", "inspect or clear the result cache");
  cachecmd->add_flag("--list", cache_list, "list cached reports");
  cachecmd->add_flag("--clear", cache_clear, "remove all cached reports");
  cachecmd->add_option("--out", cache_out, "output/cache directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("constants")) return cmd_constants();
    if (app.got_subcommand("count")) {
      if (copt.constraint == "mod-pq" && copt.a == 0)
        throw CLI::ValidationError("--a", "mod-pq needs a nonzero --a");
      return cmd_count(copt);
    }
    if (app.got_subcommand("coeffs")) return cmd_coeffs(coeffs_n, coeffs_inverse);
    if (app.got_subcommand("audit")) return cmd_audit(acfg, only_ngb, only_kaplan);
    if (app.got_subcommand("density"))
      return cmd_density(density_xs, density_out, density_threads, density_format);
    if (app.got_subcommand("cache")) return cmd_cache(cache_list, cache_clear, cache_out);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}

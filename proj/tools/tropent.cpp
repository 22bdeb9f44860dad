#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "tropent/io.hpp"

using namespace tropent;

namespace {

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

struct Options {
  std::string poly_path, system_path, point_path, forms_path, g_path, f_path;
  std::string family, format = "json";
  long long N = 0, N_max = 0, threshold = 0;
  std::uint64_t budget = 0;
  int workers = 0;
  unsigned seed = 1;
};

SearchBudget make_budget(const Options& opt) {
  SearchBudget b;
  if (opt.budget) b.max_cells = opt.budget;
  if (opt.workers) b.workers = opt.workers;
  if (const char* env = std::getenv("TROPENT_BUDGET"); env && !opt.budget)
    b.max_cells = std::strtoull(env, nullptr, 10);
  if (const char* env = std::getenv("TROPENT_WORKERS"); env && !opt.workers)
    b.workers = std::atoi(env);
  if (b.workers < 1) b.workers = 1;
  return b;
}

TropicalLinearSystem load_system(const Options& opt) {
  if (!opt.system_path.empty()) return system_from_json(load_json(opt.system_path));
  if (opt.poly_path.empty())
    throw std::invalid_argument("need --poly with --N, or --system");
  if (opt.N < 1) throw std::invalid_argument("need --N >= 1 with --poly");
  return linearize_polynomial(poly_from_json(load_json(opt.poly_path)), opt.N);
}

int cmd_dim(const Options& opt) {
  TropicalLinearSystem system = load_system(opt);
  DimResult r;
  if (system.equations.empty()) {
    r.dim = system.window.var_count();
    r.witness_pattern = CellPattern{};
  } else {
    r = dim_prevariety(system, make_budget(opt));
  }
  std::cout << dim_result_to_json(r).dump(2) << '\n';
  return r.complete ? 0 : 2;
}

int cmd_entropy(const Options& opt) {
  if (opt.poly_path.empty()) throw std::invalid_argument("need --poly");
  if (opt.N_max < 1) throw std::invalid_argument("need --N-max >= 1");
  TropicalPolynomial f = poly_from_json(load_json(opt.poly_path));
  std::vector<WitnessFamily> families;
  if (f.n() == 2) families = {even_column_family(), concave_column_family(), diagonal_family()};
  EntropyBracket bracket = entropy_bracket(f, opt.N_max, families, make_budget(opt));
  if (opt.format == "csv")
    std::cout << entropy_csv(bracket.upper_sequence);
  else
    std::cout << bracket_to_json(bracket).dump(2) << '\n';
  for (const auto& e : bracket.upper_sequence.entries)
    if (e.status == EntryStatus::Partial) return 2;
  return 0;
}

int cmd_sweep(const Options& opt) {
  if (opt.poly_path.empty() || opt.point_path.empty() || opt.N < 1)
    throw std::invalid_argument("need --poly, --point and --N");
  TropicalPolynomial f = poly_from_json(load_json(opt.poly_path));
  int n = 0;
  long long Np = 0;
  std::vector<Rat> w = grid_point_from_json(load_json(opt.point_path), n, Np);
  if (n != 2 || Np != opt.N)
    throw std::invalid_argument("point must live on the planar --N grid");
  Window window{2, opt.N};
  SweepOutcome out = sweep_curve(f, opt.N, w);
  std::cout << sweep_outcome_to_json(out, window, w).dump(2) << '\n';
  return 0;
}

int cmd_radical(const Options& opt) {
  if (opt.g_path.empty()) throw std::invalid_argument("need --g");
  TropicalPolynomial g = poly_from_json(load_json(opt.g_path));
  json out;
  if (!opt.f_path.empty()) {
    TropicalPolynomial f = poly_from_json(load_json(opt.f_path));
    RadicalCurveVerdict v = radical_member_curve(g, f);
    out = {{"member", v.member}, {"sufficient_condition_met", v.sufficient_condition_met}};
  } else if (!opt.forms_path.empty()) {
    std::vector<std::vector<Rat>> forms;
    forms_from_json(load_json(opt.forms_path), forms);
    out = {{"member", radical_member_zero_dim(g, zero_dim_points(forms))}};
  } else {
    throw std::invalid_argument("need --f (curve) or --forms (zero-dimensional)");
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_fit(const Options& opt) {
  if (opt.forms_path.empty() || opt.point_path.empty() || opt.N < 1)
    throw std::invalid_argument("need --forms, --point and --N");
  std::vector<std::vector<Rat>> forms;
  forms_from_json(load_json(opt.forms_path), forms);
  int n = 0;
  long long Np = 0;
  std::vector<Rat> w = grid_point_from_json(load_json(opt.point_path), n, Np);
  if (forms.empty() || static_cast<int>(forms[0].size()) != n || Np != opt.N)
    throw std::invalid_argument("forms/point dimension mismatch");
  DeficiencyVerdict verdict = boundary_deficiency(forms, opt.N, w, opt.threshold);
  json out = fit_to_json(verdict.fit);
  out["certified"] = verdict.certified;
  if (verdict.certified) out["dim_bound"] = verdict.dim_bound;
  if (forms.size() >= 2)
    out["probe"] = probe_to_json(zero_dim_radical_probe(forms, opt.N, w));
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_witness_verify(const Options& opt) {
  TropicalLinearSystem system = load_system(opt);
  WitnessFamily fam;
  if (opt.family == "even-column")
    fam = even_column_family();
  else if (opt.family == "concave-column")
    fam = concave_column_family();
  else if (opt.family == "diagonal")
    fam = diagonal_family();
  else
    throw std::invalid_argument("unknown --family (even-column|concave-column|diagonal)");
  std::optional<long long> d = witness_lower(system, fam, system.window.N);
  json out = {{"family", fam.name},
              {"verified", d.has_value()},
              {"claimed_dim", fam.claimed_dim(system.window.N)}};
  if (d) out["affine_dim"] = *d;
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_selftest(const Options& opt) {
  std::mt19937 rng(opt.seed);
  int failures = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
    if (!ok) ++failures;
  };

  TropicalPolynomial f4(2, {{Rat(0), {0, 0}}, {Rat(0), {1, 0}}, {Rat(0), {0, 1}}, {Rat(0), {1, 1}}});
  DimResult r = dim_prevariety(linearize_polynomial(f4, 2));
  check(r.dim == 3, "dim(U_2) of the unit-square polynomial is 3");

  TropicalPolynomial uni(1, {{Rat(0), {1}}, {Rat(0), {2}}});
  DimResult r1 = dim_prevariety(linearize_polynomial(uni, 4));
  check(r1.dim == 1, "univariate forcing system has dimension 1");

  std::uniform_int_distribution<long long> val(-5, 5);
  bool sweeps_ok = true;
  for (int t = 0; t < 5 && sweeps_ok; ++t) {
    std::vector<Rat> w;
    for (int i = 0; i < 9; ++i) w.push_back(Rat(val(rng)));
    SweepOutcome out = sweep_curve(f4, 3, w);
    if (out.certificate)
      sweeps_ok = out.certificate->distinct_values <= 12;
  }
  check(sweeps_ok, "sweep certificates stay within the 4N value bound");

  std::vector<std::vector<Rat>> forms{{Rat(1), Rat(0)}, {Rat(-1), Rat(1)}};
  std::vector<Rat> w;
  Window window{2, 3};
  for (long long i = 0; i < 9; ++i) {
    auto a = window.unflatten(i);
    Rat roof = std::max(Rat(a[0]), Rat(-a[0] + a[1]) + Rat(-2));
    w.push_back(-roof);
  }
  MaxPlusFit fit = maxplus_fit(forms, 3, w);
  check(fit.deficiency.empty(), "exact boundary data fits with empty deficiency");

  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tropical entropy toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", opt.budget, "cell exploration cap");
    sub->add_option("--workers", opt.workers, "worker thread count");
    sub->add_option("--format", opt.format, "json|csv");
    sub->add_option("--seed", opt.seed, "seed for randomized checks");
  };

  CLI::App* dim = app.add_subcommand("dim", "dimension of a tropical linear prevariety");
  dim->add_option("--poly", opt.poly_path);
  dim->add_option("--system", opt.system_path);
  dim->add_option("--N", opt.N);
  add_common(dim);

  CLI::App* entropy = app.add_subcommand("entropy", "entropy bracket over N = 1..N_max");
  entropy->add_option("--poly", opt.poly_path);
  entropy->add_option("--N-max,--Nmax", opt.N_max);
  add_common(entropy);

  CLI::App* sweep = app.add_subcommand("sweep", "curve sweep certificate / counterexample");
  sweep->add_option("--poly", opt.poly_path);
  sweep->add_option("--N", opt.N);
  sweep->add_option("--point", opt.point_path);
  add_common(sweep);

  CLI::App* radical = app.add_subcommand("radical", "radical membership");
  radical->add_option("--g", opt.g_path);
  radical->add_option("--f", opt.f_path);
  radical->add_option("--forms", opt.forms_path);
  add_common(radical);

  CLI::App* fit = app.add_subcommand("fit", "residuated max-plus boundary fit");
  fit->add_option("--forms", opt.forms_path);
  fit->add_option("--N", opt.N);
  fit->add_option("--point", opt.point_path);
  fit->add_option("--threshold", opt.threshold, "deficiency certification threshold");
  add_common(fit);

  CLI::App* wv = app.add_subcommand("witness-verify", "verify a witness family against a system");
  wv->add_option("--family", opt.family);
  wv->add_option("--poly", opt.poly_path);
  wv->add_option("--system", opt.system_path);
  wv->add_option("--N", opt.N);
  add_common(wv);

  CLI::App* selftest = app.add_subcommand("selftest", "quick internal consistency checks");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (dim->parsed()) return cmd_dim(opt);
    if (entropy->parsed()) return cmd_entropy(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (radical->parsed()) return cmd_radical(opt);
    if (fit->parsed()) return cmd_fit(opt);
    if (wv->parsed()) return cmd_witness_verify(opt);
    if (selftest->parsed()) return cmd_selftest(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

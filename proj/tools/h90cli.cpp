#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "h90/backends.hpp"
#include "h90/model_io.hpp"
#include "h90/synthgen.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace {

using namespace h90;
using cli::Kind;
using cli::Report;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string path;
  std::string suite = "all";
  std::string format = "text";
  std::string dump_dir = "h90-counterexamples";
  bool expect_negative = false;
  // backend
  std::string kind;
  int p = 2;
  std::int64_t q = 0;
  std::int64_t ell = 5;
  std::string a = "u";
  int n_max = 3;
  int precision = 6;
  // sweeps
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string mode = "realizable";
  std::size_t max_dim = 8;
  std::vector<int> blocks;
  bool dump_given = false;
};

void emit(const Report& report, const Options& o) {
  if (o.format == "json")
    std::cout << report.to_json().dump(2) << "\n";
  else
    std::cout << report.to_text();
}

/// Exit code from the report; --expect-negative inverts the outcome.
int finish(const Report& report, const Options& o) {
  emit(report, o);
  const bool failed = report.any_check_failed();
  if (o.expect_negative) {
    if (!failed) std::cerr << "expected a failing check, but every check passed\n";
    return failed ? kExitPass : kExitFail;
  }
  return failed ? kExitFail : kExitPass;
}

void add_outcomes(Report& report, const std::vector<cli::Outcome>& outs, const ExtensionModel& m,
                  std::optional<int> degree = std::nullopt) {
  for (auto o : outs) {
    if (degree) o.report.degree = degree;
    report.add(std::move(o.report), &m, o.kind);
  }
}

std::string dump_model(const ExtensionModel& m, const Options& o, const std::string& stem) {
  std::filesystem::create_directories(o.dump_dir);
  const auto path = (std::filesystem::path(o.dump_dir) / (stem + ".h90")).string();
  save_model(m, path);
  return path;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  const ExtensionModel m = load_model(o.path);
  Report report("validate " + o.path);
  report.note("provenance: " + m.provenance());
  for (const auto& a : check_axioms(m)) {
    TheoremReport r;
    r.checker = "axiom " + std::string(to_string(a.axiom));
    r.verdict = a.holds ? Verdict::pass : Verdict::fail;
    r.fingerprint = fingerprint(m);
    if (a.witness) r.witnesses.push_back(*a.witness);
    report.add(std::move(r), &m);
  }
  return finish(report, o);
}

int cmd_check(const Options& o) {
  const ExtensionModel m = load_model(o.path);
  if (!satisfies_base_axioms(m)) {
    auto v = validate_model(m);
    std::cerr << "model does not satisfy the base axioms: " << v.detail << "\n";
    return kExitUsage;
  }
  Report report("check " + o.path + " --suite " + o.suite);
  report.note("provenance: " + m.provenance());
  add_outcomes(report, cli::run_model_suite(m, o.suite, false), m);
  return finish(report, o);
}

int cmd_backend(const Options& o) {
  DegreeTower t;
  if (o.kind == "ff") {
    if (o.q == 0) throw CLI::ValidationError("--q", "required for the ff backend");
    t = ff_build_tower(o.p, o.q, o.n_max);
  } else if (o.kind == "real") {
    t = real_build_tower(o.n_max);
  } else {
    t = local_build_tower(o.ell, o.a, o.n_max, o.precision);
  }
  Report report("backend " + t.backend + " n_max=" + std::to_string(t.n_max));
  report.note("cd = " + t.cd_string());
  for (const auto& n : t.notes) report.note(n);
  for (auto r : check_tower_consistency(t)) report.add(std::move(r));
  report.add(root_relation_check(t));
  for (int n = 1; n <= t.n_max; ++n) {
    const ExtensionModel& m = t.model(n);
    auto v = validate_model(m, true);
    v.checker = "validate";
    v.degree = n;
    report.add(std::move(v), &m);
    add_outcomes(report, cli::run_model_suite(m, "all", true), m, n);
    if (t.p == 2) report.add(hs_p2_ann_check(t, n), &m);
  }
  report.add(hereditary_check(t));
  report.add(cd_forward_check(t));
  if (o.dump_given) {
    std::filesystem::create_directories(o.dump_dir);
    const auto path = (std::filesystem::path(o.dump_dir) / "tower.h90t").string();
    std::ofstream(path) << serialize_tower(t);
    report.note("tower written to " + path);
  }
  return finish(report, o);
}

void record_trial(Report& report, const std::vector<cli::Outcome>& outs, const ExtensionModel& m,
                  const Options& o, std::uint64_t trial) {
  for (const auto& out : outs) {
    if (out.kind != Kind::check) continue;
    auto& agg = report.aggregate(out.report.checker);
    if (out.report.verdict == Verdict::skipped) {
      ++agg.skipped;
    } else if (out.report.passed()) {
      ++agg.passed;
    } else {
      ++agg.failed;
      if (!agg.first_failure) {
        agg.first_failure = "trial " + std::to_string(trial) + ": " + out.report.detail;
        agg.counterexample = dump_model(m, o, out.report.checker + "-seed" + std::to_string(o.seed) +
                                                  "-trial" + std::to_string(trial));
      }
    }
  }
}

GenSpec trial_spec(const Options& o, std::uint64_t trial) {
  const GenMode mode = o.mode == "freeform" ? GenMode::freeform : GenMode::realizable;
  GenSpec spec = random_spec(o.p, mode, o.max_dim, split_seed(o.seed, trial));
  if (!o.blocks.empty()) {
    if (mode != GenMode::freeform) throw Error("--blocks needs --mode freeform");
    spec.block_sizes = o.blocks;
  }
  return spec;
}

cli::Outcome validity(const ExtensionModel& m, bool realizable) {
  auto v = validate_model(m, realizable);
  v.checker = realizable ? "valid_with_a7" : "valid_base";
  if (!realizable && satisfies_base_axioms(m)) {
    v.verdict = Verdict::pass;
    v.witnesses.clear();
  }
  return {v, Kind::check};
}

int cmd_synth(const Options& o) {
  Report report("synth p=" + std::to_string(o.p) + " mode=" + o.mode + " trials=" +
                std::to_string(o.trials) + " seed=" + std::to_string(o.seed) + " suite=" + o.suite);
  report.note("per-trial seed = splitmix64(seed + (trial + 1) * 0x9E3779B97F4A7C15)");
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const ExtensionModel m = generate(trial_spec(o, t));
    auto outs = cli::run_model_suite(m, o.suite, true);
    outs.insert(outs.begin(), validity(m, o.mode == "realizable"));
    record_trial(report, outs, m, o, t);
  }
  return finish(report, o);
}

int cmd_oracle(const Options& o) {
  if (!o.path.empty()) {
    const ExtensionModel m = load_model(o.path);
    Report report("oracle " + o.path);
    add_outcomes(report, cli::run_oracles(m), m);
    return finish(report, o);
  }
  Report report("oracle p=" + std::to_string(o.p) + " trials=" + std::to_string(o.trials) +
                " seed=" + std::to_string(o.seed) + " max_dim=" + std::to_string(o.max_dim));
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    const ExtensionModel m = generate(trial_spec(o, t));
    record_trial(report, cli::run_oracles(m), m, o, t);
  }
  return finish(report, o);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Hilbert 90 verification engine for cyclic extensions of degree p"};
  app.require_subcommand(1);
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_negative = [&](CLI::App* sub) {
    sub->add_flag("--expect-negative", o.expect_negative,
                  "exit 0 only when some check fails (negative controls)");
  };
  auto add_dump = [&](CLI::App* sub) {
    sub->add_option("--dump-dir", o.dump_dir, "directory for counterexamples and towers");
  };
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "prime p")->check(CLI::IsMember({2, 3, 5, 7}));
    sub->add_option("--trials", o.trials, "number of trials")->check(CLI::Range(1, 1000000));
    sub->add_option("--seed", o.seed, "master seed");
    sub->add_option("--mode", o.mode, "realizable or freeform")
        ->check(CLI::IsMember({"realizable", "freeform"}));
    sub->add_option("--max-dim", o.max_dim, "largest dim A")->check(CLI::Range(1, 40));
    sub->add_option("--blocks", o.blocks, "freeform block sizes, e.g. --blocks 3 1")
        ->check(CLI::Range(1, 7));
    add_dump(sub);
    add_format(sub);
    add_negative(sub);
  };

  auto* validate = app.add_subcommand("validate", "check the axioms of a model file");
  validate->add_option("path", o.path, "model file")->required();
  add_format(validate);
  add_negative(validate);

  auto* check = app.add_subcommand("check", "run a theorem suite on a model file");
  check->add_option("path", o.path, "model file")->required();
  check->add_option("--suite", o.suite, "h90, criteria, summand, hs, lemma or all")
      ->check(CLI::IsMember({"h90", "criteria", "summand", "hs", "lemma", "all"}));
  add_format(check);
  add_negative(check);

  auto* backend = app.add_subcommand("backend", "build an arithmetic tower and check it");
  backend->add_option("kind", o.kind, "ff, real or local")
      ->required()
      ->check(CLI::IsMember({"ff", "real", "local"}));
  backend->add_option("--p", o.p, "prime p (ff)")->check(CLI::IsMember({2, 3, 5, 7}));
  backend->add_option("--q", o.q, "prime power q (ff)")->check(CLI::Range(std::int64_t{2}, std::int64_t{10000000}));
  backend->add_option("--ell", o.ell, "odd prime ell (local)")->check(CLI::Range(std::int64_t{3}, std::int64_t{97}));
  backend->add_option("--a", o.a, "u, ell or u*ell (local)")->check(CLI::IsMember({"u", "ell", "u*ell"}));
  backend->add_option("--n-max", o.n_max, "top degree")->check(CLI::Range(1, 64));
  backend->add_option("--precision", o.precision, "ell-adic precision k")->check(CLI::Range(6, 40));
  auto* dump_opt = backend->add_option("--dump-dir", o.dump_dir, "write the tower file here");
  add_format(backend);
  add_negative(backend);

  auto* synth = app.add_subcommand("synth", "sweep generated models through a suite");
  synth->add_option("--suite", o.suite, "h90, criteria, summand, hs, lemma or all")
      ->check(CLI::IsMember({"h90", "criteria", "summand", "hs", "lemma", "all"}));
  add_sweep(synth);

  auto* oracle = app.add_subcommand("oracle", "compare fast procedures with exhaustive oracles");
  oracle->add_option("path", o.path, "model file (omit to sweep generated models)");
  add_sweep(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }
  o.dump_given = dump_opt->count() > 0;

  try {
    if (*validate) return cmd_validate(o);
    if (*check) return cmd_check(o);
    if (*backend) return cmd_backend(o);
    if (*synth) return cmd_synth(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

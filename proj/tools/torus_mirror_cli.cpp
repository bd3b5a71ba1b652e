#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "torus_mirror/errors.hpp"
#include "torus_mirror/json_io.hpp"
#include "torus_mirror/verify.hpp"

namespace tmr = torus_mirror;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr const char* kTolEnv = "TORUS_MIRROR_TOL";

struct Options {
  tmr::VerifyConfig cfg;
  std::string input;
  std::string suite;
  std::string json_path;
  bool float_mode = false;
  bool exact_mode = false;
  bool timing = false;
};

double default_tol() {
  const char* env = std::getenv(kTolEnv);
  if (!env || !*env) return 1e-8;
  try {
    std::size_t used = 0;
    const double tol = std::stod(env, &used);
    if (used != std::string(env).size() || !(tol > 0)) throw std::invalid_argument(env);
    return tol;
  } catch (const std::exception&) {
    throw tmr::InputError(std::string(kTolEnv) + " is not a positive number: '" + env + "'");
  }
}

// Inline JSON when the argument opens an object, otherwise a path or "-".
tmr::Json read_input(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return tmr::parse_document(arg);
  return tmr::load_document(arg);
}

void print_text(const tmr::Report& rep, std::ostream& os) {
  for (const auto& c : rep.checks) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (c.kind == tmr::CheckKind::Numeric) os << "  residual=" << c.residual << " tol=" << c.tol;
    os << "\n";
    if (!c.pass) {
      os << "     predicate: " << c.predicate << "\n";
      for (const auto& w : c.witnesses) os << "     witness: " << w.dump() << "\n";
    }
  }
  if (!rep.result.empty()) os << "result: " << rep.result.dump(2) << "\n";
  os << rep.command << ": " << (rep.pass() ? "pass" : "FAIL") << " (" << rep.checks.size()
     << " checks)\n";
}

void emit(const tmr::Report& rep, const Options& opt, double seconds) {
  tmr::Json j = rep.to_json();
  if (opt.timing) j["wall_time_seconds"] = seconds;
  if (opt.json_path.empty()) {
    print_text(rep, std::cout);
    if (opt.timing) std::cout << "wall time: " << seconds << " s\n";
    return;
  }
  const std::string text = j.dump(2) + "\n";
  if (opt.json_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.json_path);
  if (!out) throw tmr::InputError("cannot write '" + opt.json_path + "'");
  out << text;
  print_text(rep, std::cout);
}

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--tol", opt.cfg.tol, "numeric tolerance (default $" + std::string(kTolEnv) + " or 1e-8)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", opt.cfg.seed, "random seed");
  cmd->add_option("--bound", opt.cfg.bound, "enumeration radius for entries of A")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--samples", opt.cfg.samples, "sample points per case")->check(CLI::PositiveNumber);
  cmd->add_option("--json", opt.json_path, "write the JSON report to a path, or '-' for stdout");
  auto* exact = cmd->add_flag("--exact", opt.exact_mode, "rationals as \"p/q\" strings (default)");
  auto* flt = cmd->add_flag("--float", opt.float_mode, "accept and emit IEEE doubles");
  exact->excludes(flt);
  cmd->add_flag("--timing", opt.timing, "add wall time to the report");
}

int run(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact and numeric checks for mirror pairs of tori"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto* find = app.add_subcommand("find-delta", "integer shift delta with det(T - delta) != 0");
  auto* mirror = app.add_subcommand("mirror", "mirror partner B + i omega of (T, delta)");
  auto* bundle = app.add_subcommand("check-bundle", "holomorphicity, unitaries and mirror object of a bundle");
  auto* unit = app.add_subcommand("build-unitaries", "unitary cocycle set of (r, A)");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* enumerate = app.add_subcommand("enumerate", "compare E_delta with E_SYZ and check injectivity");
  for (auto* cmd : {find, mirror, bundle, unit})
    cmd->add_option("input", opt.input, "JSON file, '-' for stdin, or inline JSON")->required();
  enumerate->add_option("input", opt.input, "torus JSON (default: the worked example)");
  std::string suites = "suite: ";
  for (const auto& s : tmr::suite_names()) suites += s + ", ";
  verify->add_option("suite", opt.suite, suites + "all")->required();
  for (auto* cmd : {find, mirror, bundle, unit, verify, enumerate}) add_common(cmd, opt);

  try {
    opt.cfg.tol = default_tol();
  } catch (const tmr::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInput;
  }
  opt.cfg.mode = opt.float_mode ? tmr::NumberMode::Float : tmr::NumberMode::Exact;

  const auto start = std::chrono::steady_clock::now();
  try {
    tmr::Report rep;
    const auto mode = opt.cfg.mode;
    if (find->parsed()) {
      rep = tmr::find_delta_report(tmr::read_torus(read_input(opt.input), mode), opt.cfg);
    } else if (mirror->parsed()) {
      rep = tmr::mirror_report(tmr::read_torus(read_input(opt.input), mode), opt.cfg);
    } else if (bundle->parsed()) {
      rep = tmr::check_bundle_report(tmr::read_bundle(read_input(opt.input), mode), opt.cfg);
    } else if (unit->parsed()) {
      rep = tmr::build_unitaries_report(tmr::read_unitary_input(read_input(opt.input)), opt.cfg);
    } else if (verify->parsed()) {
      rep = tmr::run_suite(opt.suite, opt.cfg);
    } else {
      const tmr::TorusInput in =
          opt.input.empty() ? tmr::section5_torus() : tmr::read_torus(read_input(opt.input), mode);
      rep = tmr::enumerate_report(in, opt.cfg);
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(rep, opt, seconds);
    return rep.pass() ? kExitPass : kExitFail;
  } catch (const tmr::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const tmr::NotPositiveDefinite& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const tmr::SingularMatrix& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const tmr::NotAlternating& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const tmr::ConditionViolated& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (const tmr::Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitFail;
  }
}

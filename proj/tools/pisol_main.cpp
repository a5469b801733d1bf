// pisol: command-line front end for the Pi-manifold engine.
//
//   pisol validate <spec> | --builtin
//   pisol run <spec> | --builtin [--format text|json] [--set p=2]... [--mu X --nu Y] [--k X] [-o FILE]
//   pisol check <section>... (--spec FILE | --builtin) [same options as run]
//   pisol example
//   pisol sections
//
// Exit codes: 0 all checks pass or fit, 1 a check failed or did not fit,
// 2 input or validation error.

#include "pisol/suite.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace pisol;

constexpr int kInputError = 2;

struct Common {
  std::string spec_path;
  bool builtin = false;
  std::string format = "text";
  std::vector<std::string> sets;
  std::optional<std::string> mu, nu, k;
  std::string output;
};

ManifoldSpec load(const Common& c) {
  if (c.builtin == !c.spec_path.empty()) throw SpecError("give exactly one of a spec file or --builtin");
  return c.builtin ? builtin_example() : load_spec(c.spec_path);
}

std::map<std::string, Rational> substitutions(const std::vector<std::string>& sets) {
  std::map<std::string, Rational> out;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw SpecError("--set expects name=value, got '" + s + "'");
    const std::string name = s.substr(0, eq);
    try {
      out[name] = parse_rational(s.substr(eq + 1));
    } catch (const ParseError& e) {
      throw SpecError("--set " + name + ": " + e.what());
    }
  }
  return out;
}

void add_run_options(CLI::App* app, Common& c) {
  app->add_flag("--builtin", c.builtin, "Use the compiled-in five-dimensional example");
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app->add_option("--set", c.sets, "Fix a parameter to a rational, e.g. --set p=2");
  app->add_option("--mu", c.mu, "mu for h = 1/2 L_xi g + rho + mu g~ + nu eta (x) eta");
  app->add_option("--nu", c.nu, "nu for h");
  app->add_option("--k", c.k, "Fixed factor k of the collinear potential v = k xi (default: solved)");
  app->add_option("-o,--output", c.output, "Write the report to a file instead of stdout");
}

int run(const Common& c, std::set<Section> sections) {
  const ManifoldSpec spec = load(c);
  SuiteOptions opt;
  opt.sections = std::move(sections);
  opt.substitutions = substitutions(c.sets);
  opt.h_mu = c.mu;
  opt.h_nu = c.nu;
  opt.k = c.k;
  const RunReport report = run_suite(spec, opt);
  const std::string text = emit(report, c.format == "json" ? Format::json : Format::text);
  if (c.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(c.output, std::ios::binary);
    if (!out || !(out << text)) throw SpecError("cannot write '" + c.output + "'");
  }
  return report.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tensor calculus for para-Sasaki-like Riemannian Pi-manifolds"};
  app.require_subcommand(1);

  Common validate_opts;
  auto* validate = app.add_subcommand("validate", "Parse and validate a manifold spec");
  validate->add_option("spec", validate_opts.spec_path, "Spec file");
  validate->add_flag("--builtin", validate_opts.builtin, "Validate the compiled-in example");

  Common run_opts;
  auto* run_cmd = app.add_subcommand("run", "Run the full check suite");
  run_cmd->add_option("spec", run_opts.spec_path, "Spec file");
  add_run_options(run_cmd, run_opts);

  Common check_opts;
  std::vector<std::string> names;
  auto* check = app.add_subcommand("check", "Run the named sections only (see 'pisol sections')");
  check->add_option("sections", names, "Section names")->required();
  check->add_option("--spec", check_opts.spec_path, "Spec file");
  add_run_options(check, check_opts);

  app.add_subcommand("example", "Print the built-in example spec");
  app.add_subcommand("sections", "List section names in run order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*validate) {
      const ManifoldSpec spec = load(validate_opts);
      std::cout << "ok: " << spec.name << " (dim " << spec.dim << ", params";
      for (const auto& p : spec.params) std::cout << ' ' << p;
      std::cout << ")\n";
      return 0;
    }
    if (*run_cmd) return run(run_opts, {all_sections().begin(), all_sections().end()});
    if (*check) {
      std::set<Section> selected;
      for (const auto& n : names) {
        auto s = section_from_string(n);
        if (!s) throw SpecError("unknown section '" + n + "'");
        selected.insert(*s);
      }
      return run(check_opts, std::move(selected));
    }
    if (app.got_subcommand("example")) {
      std::cout << builtin_example_text();
      return 0;
    }
    if (app.got_subcommand("sections")) {
      for (Section s : all_sections()) std::cout << to_string(s) << "\n";
      return 0;
    }
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

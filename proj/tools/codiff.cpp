#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "codiff/io.hpp"

using namespace codiff;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformations of Lie, associative, L-infinity and A-infinity algebras"};
  app.require_subcommand(1);

  std::string file;
  RunOptions opts;
  int cap = 0, order = 0;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "algebra description")->required();
    sub->add_option("--weight-cap", cap, "largest arity kept (overrides the file)")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  };
  auto add_deform = [&](CLI::App* sub) {
    sub->add_option("--order", order, "truncation order of the miniversal deformation")->check(CLI::PositiveNumber);
    sub->add_flag("--strict", opts.strict, "classical deformations: weight-2 coefficients only");
    sub->add_flag("--even-parameters", opts.even_parameters, "drop parameters dual to even classes");
  };

  auto* check = app.add_subcommand("check", "test whether the structure is a codifferential");
  add_common(check);
  auto* cohom = app.add_subcommand("cohomology", "cohomology dimensions per weight and parity");
  add_common(cohom);
  auto* mini = app.add_subcommand("miniversal", "truncated miniversal deformation");
  add_common(mini);
  add_deform(mini);
  auto* verify = app.add_subcommand("verify", "check that a given deformation factors through the miniversal one");
  add_common(verify);
  add_deform(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (cap > 0) opts.weight_cap = cap;
  if (order > 0) opts.order = order;
  bool machine = format == "machine";

  try {
    AlgebraInput input = parse_input(read_file(file));
    if (check->parsed()) {
      int c = opts.weight_cap.value_or(input.weight_cap);
      require_codifferential(build_codifferential(input, c));
      std::cout << (machine ? "codifferential = true\n" : "codifferential up to weight " + std::to_string(c) + "\n");
      return 0;
    }
    if (cohom->parsed()) {
      std::cout << format_cohomology(cohomology_table(input, opts), machine);
      return 0;
    }
    if (mini->parsed()) {
      std::cout << format_report(run(input, opts), machine);
      return 0;
    }
    MiniversalReport r = run_verify(input, opts);
    std::cout << format_report(r, machine);
    return r.verify->ok ? 0 : 2;
  } catch (const RejectedInput& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

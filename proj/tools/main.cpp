#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace rrgraph;

  CLI::App app{"Linear systems of divisors on edge-weighted graphs"};
  app.require_subcommand(1);

  std::string graph, divisor;
  bool self_check = false;
  fuzz::Options fopts;
  std::string profile = "rational";

  auto* info = app.add_subcommand("info", "Vertex degrees, genus and canonical divisor");
  info->add_option("--graph", graph, "Graph file")->required();

  auto* red = app.add_subcommand("reduce", "Reduced divisor with certificate");
  red->add_option("--graph", graph, "Graph file")->required();
  red->add_option("--divisor", divisor, "Divisor file")->required();
  red->add_flag("--self-check", self_check, "Verify the output");

  auto* dim = app.add_subcommand("dim", "l(D), l(K-D) and the Riemann-Roch residual");
  dim->add_option("--graph", graph, "Graph file")->required();
  dim->add_option("--divisor", divisor, "Divisor file")->required();
  dim->add_flag("--self-check", self_check, "Verify the minimizing witness");

  auto* nset = app.add_subcommand("nset", "Reduced degree g-1 divisors with empty linear system");
  nset->add_option("--graph", graph, "Graph file")->required();

  auto* fz = app.add_subcommand("fuzz", "Seeded random invariant checks");
  fz->add_option("--seed", fopts.seed, "Seed")->default_val(1);
  fz->add_option("--count", fopts.count, "Number of cases")->default_val(100);
  fz->add_option("--profile", profile, "int or rational")
      ->check(CLI::IsMember({"int", "rational"}))
      ->default_val("rational");
  fz->add_option("--max-n", fopts.max_n, "Largest number of non-base vertices")
      ->check(CLI::Range(1, 5))
      ->default_val(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitInput;
  }
  fopts.profile = profile == "int" ? fuzz::Profile::integer : fuzz::Profile::rational;

  return cli::run_guarded(
      [&] {
        if (*info) return cli::cmd_info(graph, std::cout);
        if (*red) return cli::cmd_reduce(graph, divisor, self_check, std::cout);
        if (*dim) return cli::cmd_dim(graph, divisor, self_check, std::cout);
        if (*nset) return cli::cmd_nset(graph, std::cout);
        return cli::cmd_fuzz(fopts, std::cout);
      },
      std::cerr);
}

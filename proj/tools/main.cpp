#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "collinear/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "collinear: enumerate every maximal collinear subset (size >= 3) of a planar\n"
      "integer point set, by cyclic sorting with optional convex-layer acceleration."};

  collinear::RunConfig cfg;
  app.add_option("input", cfg.input_path, "Input file of \"x y\" lines ('-' reads stdin)");
  app.add_option("--gen", cfg.gen_spec,
                 "Generate the input instead: grid:WxH | random:N,box=B | "
                 "planted:lines=L,per_line=K,noise=R[,box=B]");
  auto* seed_opt = app.add_option("--seed", cfg.seed, "64-bit seed (required with --gen)");
  app.add_option("--algo", cfg.algo, "baseline | layered | parallel | oracle")
      ->check(CLI::IsMember({"baseline", "layered", "parallel", "oracle"}));
  app.add_option("--workers", cfg.workers, "Worker threads for --algo parallel")
      ->check(CLI::PositiveNumber);
  app.add_option("--min-size", cfg.min_size, "Smallest set size to report (>= 3)")
      ->check(CLI::Range(std::size_t{3}, std::size_t{1} << 40));
  app.add_option("--format", cfg.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--check", cfg.check, "Also run the brute-force oracle and diff (exit 2 on mismatch)");
  app.add_flag("--bench", cfg.bench, "Time baseline vs layered vs parallel and print a table");
  app.add_flag("--sigma-shuffle", cfg.sigma_shuffle,
               "Permute the processing order deterministically from --seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  cfg.seed_set = seed_opt->count() > 0;

  return collinear::run(cfg, std::cin, std::cout, std::cerr);
}

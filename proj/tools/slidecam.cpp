#include <iostream>

#include "CLI11.hpp"
#include "slidecam/cli.hpp"

int main(int argc, char** argv) {
  slidecam::RunConfig cfg;
  CLI::App app{"Sliding-camera guarding for orthogonal polygons"};
  app.require_subcommand(1);

  auto input = [&](CLI::App* sub) { sub->add_option("input", cfg.input, "polygon JSON file, - for stdin"); };
  auto out = [&](CLI::App* sub) { sub->add_option("--out,-o", cfg.out, "output file"); };
  auto problem = [&](CLI::App* sub) {
    sub->add_option("--mode", cfg.mode, "msc | mhsc | mvsc | custom")
        ->check(CLI::IsMember({"msc", "mhsc", "mvsc", "custom"}));
    sub->add_option("--custom", cfg.custom, "custom problem JSON (crosses, orientations, guards)");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a polygon and print it normalized");
  input(validate);
  out(validate);

  CLI::App* pixelate = app.add_subcommand("pixelate", "summarize the pixelation of a polygon");
  input(pixelate);
  out(pixelate);
  pixelate->add_option("--render", cfg.render, "SVG output file");

  CLI::App* solve = app.add_subcommand("solve", "compute a camera set");
  input(solve);
  out(solve);
  problem(solve);
  solve->add_option("--algo", cfg.algo, "exact | dp | bg | greedy | path")
      ->check(CLI::IsMember({"exact", "dp", "bg", "greedy", "path"}));
  solve->add_option("--seed", cfg.seed, "random seed for bg");
  solve->add_option("--cap", cfg.cap, "largest universe the exact solver accepts");
  solve->add_option("--width-max", cfg.width_max, "largest lifted decomposition width for dp");
  solve->add_option("--net-constant", cfg.net_constant, "net size constant for bg");
  solve->add_option("--round-constant", cfg.round_constant, "round cutoff constant for bg");
  solve->add_option("--render", cfg.render, "SVG output file");

  CLI::App* generate = app.add_subcommand("generate", "emit a polygon from the gallery");
  out(generate);
  generate->add_option("--shape", cfg.shape, "comb | path_lb | random_simple | random_monotone | thin_tree");
  generate->add_option("--k", cfg.k, "size parameter");
  generate->add_option("--seed", cfg.seed, "random seed");

  CLI::App* verify = app.add_subcommand("verify", "check that a solution guards the polygon");
  input(verify);
  problem(verify);
  verify->add_option("--solution", cfg.solution, "solution JSON file")->required();
  verify->add_option("--render", cfg.render, "SVG output file");

  CLI::App* bounds = app.add_subcommand("bounds", "compare oracle optima with the combinatorial bounds");
  input(bounds);
  out(bounds);
  bounds->add_option("--count", cfg.count, "sweep this many generated polygons instead of reading one");
  bounds->add_option("--shape", cfg.shape, "generator for the sweep");
  bounds->add_option("--k", cfg.k, "generator size parameter");
  bounds->add_option("--seed", cfg.seed, "first seed of the sweep");
  bounds->add_option("--threads", cfg.threads, "worker threads");

  CLI::App* exp = app.add_subcommand("export", "dump the hitting-set instance or a tree decomposition");
  input(exp);
  out(exp);
  problem(exp);
  exp->add_option("--format", cfg.format, "instance | td | td-lifted")
      ->check(CLI::IsMember({"instance", "td", "td-lifted"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : slidecam::kExitInvalidInput;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  return slidecam::run(cfg, std::cin, std::cout, std::cerr);
}

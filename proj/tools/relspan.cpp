#include "relspan/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  using relspan::cli::Options;
  CLI::App app{"Relative pullbacks, span classes and relative categories over FinSet and coalgebras"};
  app.require_subcommand(1);
  Options opts;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", opts.path, "JSON input")->required();
    sub->add_option("--field", opts.field, "Q or Fp:<p>, overrides the file");
    sub->add_option("--instance", opts.instance, "finset or coalg")->check(CLI::IsMember({"finset", "coalg"}));
    sub->add_option("--seed", opts.seed, "seed for randomized probes");
    sub->add_flag("--json", opts.json, "machine-readable report");
  };

  auto* check = app.add_subcommand("check", "run the axiom suite of every entity (or one)");
  common(check);
  check->add_option("--name", opts.name, "entity");

  auto* pullback = app.add_subcommand("pullback", "relative pullback of a cospan");
  common(pullback);
  pullback->add_option("--cospan", opts.cospan)->required();
  pullback->add_flag("--compare-cotensor", opts.compare_cotensor, "compare with the cotensor product");

  auto* cotensor = app.add_subcommand("cotensor", "cotensor product of a cospan of coalgebras");
  common(cotensor);
  cotensor->add_option("--cospan", opts.cospan)->required();

  auto* coherence = app.add_subcommand("coherence", "triangle or pentagon on a chain");
  common(coherence);
  coherence->add_option("--chain", opts.chain)->required();
  coherence->add_option("--shape", opts.shape)->check(CLI::IsMember({"triangle", "pentagon"}));

  auto* relcat = app.add_subcommand("relcat", "relative category axioms of a small category");
  common(relcat);
  relcat->add_option("--category", opts.category)->required();

  auto* functor = app.add_subcommand("functor", "relative functor compatibility");
  common(functor);
  functor->add_option("--map", opts.map)->required();
  functor->add_option("--src", opts.src);
  functor->add_option("--tgt", opts.tgt);

  auto* monoid = app.add_subcommand("monoid", "monoid checks, or the monoid on a pullback of monoid morphisms");
  common(monoid);
  auto* name = monoid->add_option("--name", opts.name);
  monoid->add_option("--cospan", opts.cospan)->excludes(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.command = app.get_subcommands().front()->get_name();

  const auto outcome = relspan::cli::run(opts);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}

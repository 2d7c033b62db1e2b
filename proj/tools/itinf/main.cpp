#include "commands.hpp"

#include "itinf/error.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace itinf::cli;

int main(int argc, char** argv) {
  CLI::App app{"Iterative learning of integral half-spaces: runs, validators and lattice utilities"};
  app.require_subcommand(1);

  RunConfig rc;
  auto* run = app.add_subcommand("run", "Run a learner on a stream and write its trace");
  run->add_option("--dim", rc.dim, "Dimension")->default_val(2);
  run->add_option("--target", rc.target, "Slopes of the target, comma separated rationals p/q")->required();
  run->add_option("--offset", rc.offset, "Rational offset p/q")->default_val("0");
  run->add_option("--stream", rc.stream.kind, "canonical | permuted | repeat-heavy | withhold")
      ->default_val("canonical");
  run->add_option("--seed", rc.stream.seed, "Stream seed")->default_val(0);
  run->add_option("--repeat", rc.stream.repeat, "Repeats per fresh datum (repeat-heavy)")->default_val(1);
  run->add_option("--withheld", rc.stream.withheld, "Withheld point, comma separated (withhold)");
  run->add_option("--withhold-at", rc.stream.withhold_at, "Position of the withheld point (withhold)");
  run->add_option("--learner", rc.learner, "general | paper2d | canny | witness")->default_val("general");
  run->add_option("--max-steps", rc.max_steps, "Step cap")->default_val(2000);
  run->add_option("--window", rc.window, "Convergence window")->default_val(50);
  run->add_option("--out", rc.out, "Trace output path (JSONL)");

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Check learning restrictions on a trace");
  verify->add_option("trace", vc.trace, "Trace file")->required();
  verify->add_option("--restrictions", vc.restrictions, "Comma separated restriction names")
      ->default_val("conv,snu");
  verify->add_option("--radius", vc.radius, "Box radius for bounded semantic checks");
  verify->add_flag("--bounded", vc.bounded, "Use the box even where exact deciders exist");

  BenchConfig bc;
  auto* bench = app.add_subcommand("bench", "Sweep targets and seeds, write a CSV table");
  bench->add_option("--dim", bc.dim, "Dimension")->default_val(2);
  bench->add_option("--coeff-bound", bc.coeff_bound, "Largest |a_i|")->default_val(3);
  bench->add_option("--offset-min", bc.offset_min, "Smallest offset")->default_val(-3);
  bench->add_option("--offset-max", bc.offset_max, "Largest offset")->default_val(3);
  bench->add_option("--seeds", bc.seeds, "Number of permuted-stream seeds per target")->default_val(1);
  bench->add_option("--learner", bc.learner, "general | paper2d | canny | witness")->default_val("general");
  bench->add_option("--max-steps", bc.max_steps, "Step cap")->default_val(2000);
  bench->add_option("--window", bc.window, "Convergence window")->default_val(50);
  bench->add_option("--out", bc.out, "CSV output path (default stdout)");

  std::string gop;
  std::vector<std::string> gargs;
  std::size_t gj = 0;
  auto* geom = app.add_subcommand("geom", "Lattice geometry utilities");
  geom->add_option("op", gop, "reduce | tangent | mindist | jdist")->required();
  geom->add_option("args", gargs, "Coefficients, then the offset where one is expected");
  geom->add_option("-j", gj, "Axis for jdist, 1-based");
  geom->allow_extras(false);

  std::string tin, tout;
  bool ttext = false;
  auto* transform = app.add_subcommand("transform", "Boolean-map an informant file of [n, label] lines");
  transform->add_option("--in", tin, "Input stream file")->required();
  transform->add_option("--out", tout, "Output file (default stdout)");
  transform->add_flag("--text", ttext, "Emit the projected text instead of the informant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*run) return cmd_run(rc, std::cout);
    if (*verify) return cmd_verify(vc, std::cout);
    if (*bench) return cmd_bench(bc, std::cout);
    if (*geom) return cmd_geom(gop, gargs, gj, std::cout);
    if (*transform) return cmd_transform(tin, tout, ttext, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

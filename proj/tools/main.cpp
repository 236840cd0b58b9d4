#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cli.hpp"

using lightcone::cli::Command;
using lightcone::cli::RunConfig;

namespace {

void shared_flags(CLI::App* sub, RunConfig& c, std::string& format) {
  sub->add_option("--input", c.input, "Input file (CSV or JSON)");
  sub->add_option("--output", c.output, "Output file; stdout when omitted");
  sub->add_option("--tol", c.tol, "Absolute tolerance")->capture_default_str();
  sub->add_option("--grid-min", c.grid_min, "Output grid start");
  sub->add_option("--grid-max", c.grid_max, "Output grid end");
  sub->add_option("--grid-count", c.grid_count, "Output grid size")->capture_default_str();
  sub->add_option("--grid-kind", c.grid_kind, "uniform | log_uniform")->capture_default_str();
  sub->add_option("--format", format, "csv | json (default: from the output extension)");
  sub->add_option("--jobs", c.jobs, "OpenMP workers (0 = runtime default)");
  sub->add_option("--seed", c.seed, "Seed for random test families")->capture_default_str();
  sub->add_option("--decay", c.decay, "Decay hint of the input, kind:parameter");
  sub->add_option("--output-decay", c.output_decay, "Decay hint of the output, kind:parameter");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Light-cone scattering and the H transform"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format;

  auto* transform = app.add_subcommand("transform", "Apply H (or the order-zero Hankel transform)");
  shared_flags(transform, c, format);
  transform->add_option("--method", c.method, "direct | mellin | hankel0")->capture_default_str();
  transform->add_flag("--both-paths", c.both_paths, "Also report the direct/Mellin discrepancy");

  auto* propagate = app.add_subcommand("propagate", "Evaluate a solution over (t, x)");
  shared_flags(propagate, c, format);
  propagate->add_option("--packet", c.packet, "Wave packet JSON");
  propagate->add_option("--velocity", c.velocity, "d phi/dt at t = 0 (default zero)");
  propagate->add_option("--mirror", c.mirror, "none | even | odd extension of half-line data");
  propagate->add_option("--times", c.times, "Times, comma separated")->delimiter(',');

  auto* expand = app.add_subcommand("expand", "Isometric expansion k <-> (F, G)");
  shared_flags(expand, c, format);
  expand->add_flag("--inverse", c.inverse, "Input is x,F,G; reconstruct k");
  expand->add_option("--support", c.support_a, "Report g, k on (0, a) for the inverse");

  auto* scatter = app.add_subcommand("scatter", "Phase shifts from the Schrodinger equations");
  shared_flags(scatter, c, format);
  scatter->add_option("--gammas", c.gammas, "Frequencies, comma separated")->delimiter(',');
  scatter->add_option("--potential", c.potential, "A_minus | B_plus | KG")->capture_default_str();
  scatter->add_option("--zeta0", c.zeta0, "Matching point")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");
  shared_flags(verify, c, format);
  verify->add_option("--only", c.only, "Criterion numbers, comma separated")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lightcone::cli::io_or_config;
  }

  const std::map<CLI::App*, Command> commands{{transform, Command::transform},
                                               {propagate, Command::propagate},
                                               {expand, Command::expand},
                                               {scatter, Command::scatter},
                                               {verify, Command::verify}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }
  if (!format.empty()) {
    try {
      c.format = lightcone::io::format_from_string(format);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return lightcone::cli::io_or_config;
    }
  }
  return lightcone::cli::run(c, std::cout, std::cerr);
}

#include "cli.hpp"

#include <cmath>
#include <iostream>

#include "lightcone/acceptance.hpp"
#include "lightcone/debranges.hpp"
#include "lightcone/error.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/kleingordon.hpp"
#include "lightcone/parallel.hpp"
#include "lightcone/scattering.hpp"

namespace lightcone::cli {
namespace {

std::optional<DecayHint> parse_decay(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return io::decay_from_string(text);
}

io::Format output_format(const RunConfig& c) {
  if (c.format) return *c.format;
  return io::format_from_path(c.output);
}

GridKind grid_kind(const RunConfig& c) {
  try {
    return grid_kind_from_string(c.grid_kind);
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
}

// Grid from the flags, falling back to [lo, hi] for the bounds the flags leave open.
std::vector<double> make_grid(const RunConfig& c, double lo, double hi) {
  const double a = c.grid_min.value_or(lo);
  const double b = c.grid_max.value_or(hi);
  if (!(a < b)) throw IoError("grid: need grid-min < grid-max");
  if (grid_kind(c) == GridKind::log_uniform) {
    if (!(a > 0.0)) throw IoError("grid: log-uniform grids need grid-min > 0");
    return log_uniform_grid(a, b, c.grid_count);
  }
  return uniform_grid(a, b, c.grid_count);
}

bool grid_from_flags(const RunConfig& c) { return c.grid_min || c.grid_max; }

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
  } else {
    io::write_text(c.output, text);
  }
}

Mirror mirror_from_string(const std::string& name) {
  if (name == "none") return Mirror::none;
  if (name == "even") return Mirror::even;
  if (name == "odd") return Mirror::odd;
  throw IoError("mirror must be none, even or odd");
}

}  // namespace

void validate(const RunConfig& c) {
  if (!(c.tol > 0.0) || !std::isfinite(c.tol)) throw IoError("--tol must be > 0");
  if (c.grid_count < 16) throw IoError("--grid-count must be >= 16");
  if (c.jobs < 0) throw IoError("--jobs must be >= 0");
  grid_kind(c);
  parse_decay(c.decay);
  parse_decay(c.output_decay);
  switch (c.command) {
    case Command::transform:
    case Command::expand:
      if (c.input.empty()) throw IoError("--input is required");
      break;
    case Command::propagate:
      if (c.input.empty() == c.packet.empty()) throw IoError("give exactly one of --input, --packet");
      mirror_from_string(c.mirror);
      break;
    case Command::scatter:
      if (c.gammas.empty()) throw IoError("--gammas is empty");
      for (double g : c.gammas) {
        if (!(g > 0.0)) throw IoError("--gammas must be positive");
      }
      break;
    case Command::verify:
      for (int n : c.only) {
        if (n < 1 || n > 10) throw IoError("--only takes criterion numbers 1..10");
      }
      break;
  }
}

int cmd_transform(const RunConfig& c, std::ostream& out) {
  const auto f = io::read_sampled(c.input, parse_decay(c.decay));
  const auto grid = grid_from_flags(c) ? make_grid(c, f.front(), f.back()) : f.grid();
  const auto kind = grid_from_flags(c) ? grid_kind(c) : f.kind();

  TransformOptions to;
  to.tol = c.tol;
  to.output_decay = parse_decay(c.output_decay);
  if (!to.output_decay && f.decay().kind() == DecayHint::Kind::exponential) {
    to.output_decay = DecayHint::exponential(1.0 / f.decay().rate());
  }
  if (!to.output_decay) throw IoError("--output-decay is required for this input");
  MellinPathOptions mo;
  mo.mellin.tol = c.tol;
  mo.output_decay = to.output_decay;

  auto direct = [&] { return h_transform(f, grid, kind, to); };
  auto mellin = [&] { return h_via_mellin(f, grid, kind, mo); };
  SampledFunction result = [&] {
    if (c.method == "direct") return direct();
    if (c.method == "mellin") return mellin();
    if (c.method == "hankel0") return hankel0_transform(f, grid, kind, to);
    throw IoError("--method must be direct, mellin or hankel0");
  }();

  emit(c, out, io::sampled_to_string(result, output_format(c)));
  std::ostream& log = c.output.empty() ? std::cerr : out;
  log << "norm_ratio=" << io::format_double(result.l2_norm() / f.l2_norm()) << "\n";
  if (c.both_paths) {
    const auto d = c.method == "direct" ? result : direct();
    const auto m = c.method == "mellin" ? result : mellin();
    log << "cross_path_l2=" << io::format_double(l2_distance(m, d) / d.l2_norm(false)) << "\n";
  }
  return ok;
}

int cmd_propagate(const RunConfig& c, std::ostream& out) {
  std::vector<std::vector<double>> rows;
  if (!c.packet.empty()) {
    const auto packet = io::read_packet(c.packet);
    const auto grid = make_grid(c, 0.1, 10.0);
    rows.resize(c.times.size() * grid.size());
    for_each_index(rows.size(), Execution::parallel, [&](std::size_t i) {
      const double t = c.times[i / grid.size()];
      const double x = grid[i % grid.size()];
      rows[i] = {t, x, synthesize_phi(packet, t, x).real()};
    });
  } else {
    const auto decay = parse_decay(c.decay).value_or(DecayHint::exponential(1.0));
    const auto phi0 = io::read_sampled(c.input, decay);
    const auto dphi = c.velocity.empty()
                          ? phi0.with_values(std::vector<double>(phi0.size(), 0.0))
                          : io::read_sampled(c.velocity, decay);
    const Mirror m = mirror_from_string(c.mirror);
    const LineData data = line_data(phi0, m, dphi, m);
    const auto grid = make_grid(c, phi0.front(), phi0.back());
    rows.resize(c.times.size() * grid.size());
    for_each_index(rows.size(), Execution::parallel, [&](std::size_t i) {
      const double t = c.times[i / grid.size()];
      const double x = grid[i % grid.size()];
      rows[i] = {t, x, riemann_propagate(data, t, x, c.tol)};
    });
  }
  emit(c, out, io::table_to_string({"t", "x", "phi"}, rows, output_format(c)));
  return ok;
}

int cmd_expand(const RunConfig& c, std::ostream& out) {
  ExpansionOptions eo;
  eo.tol = c.tol;
  const auto decay = parse_decay(c.decay);
  std::ostream& log = c.output.empty() ? std::cerr : out;
  if (c.inverse) {
    const auto fg = io::read_cauchy(c.input, decay.value_or(DecayHint::exponential(1.0)));
    const auto grid = make_grid(c, fg.F.front(), 0.5 * fg.F.back());
    const auto out_decay = parse_decay(c.output_decay).value_or(fg.F.decay());
    const auto k = reconstruct_k(cauchy_pair(fg), grid, grid_kind(c), out_decay, eo);
    emit(c, out, io::sampled_to_string(k, output_format(c)));
    if (c.support_a) {
      SupportCheckOptions so;
      so.tol = std::min(c.tol, 1e-12);
      const auto r = support_equivalence_check(cauchy_pair(fg), *c.support_a, so);
      log << "support_max_g=" << io::format_double(r.max_g) << "\n";
      log << "support_max_k=" << io::format_double(r.max_k) << "\n";
    }
    return ok;
  }
  const auto k = io::read_sampled(c.input, decay);
  const auto grid = make_grid(c, k.front(), k.back());
  const auto out_decay = parse_decay(c.output_decay).value_or(k.decay());
  const auto fg = expand(as_function(k), grid, grid_kind(c), out_decay, eo);
  if (output_format(c) == io::Format::json) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < fg.F.size(); ++i) {
      rows.push_back({fg.F.grid()[i], fg.F.values()[i], fg.G.values()[i]});
    }
    emit(c, out, io::table_to_json({"x", "F", "G"}, rows));
  } else if (c.output.empty()) {
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < fg.F.size(); ++i) {
      rows.push_back({fg.F.grid()[i], fg.F.values()[i], fg.G.values()[i]});
    }
    out << io::table_to_csv({"x", "F", "G"}, rows);
  } else {
    io::write_cauchy(c.output, fg);
  }
  log << "isometry_defect=" << io::format_double(isometry_defect(k, fg).defect) << "\n";
  return ok;
}

int cmd_scatter(const RunConfig& c, std::ostream& out) {
  SweepOptions so;
  try {
    so.kind = potential_kind_from_string(c.potential);
  } catch (const DomainError& e) {
    throw IoError(e.what());
  }
  so.phase.zeta0 = c.zeta0;
  std::vector<std::vector<double>> rows;
  for (const auto& r : phase_sweep(c.gammas, so)) {
    rows.push_back({r.gamma, r.theta_extracted, r.theta_reference, r.abs_error});
  }
  emit(c, out,
       io::table_to_string({"gamma", "theta_extracted", "theta_reference", "abs_error"}, rows,
                           output_format(c)));
  return ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  AcceptanceOptions ao;
  ao.seed = c.seed;
  ao.only = c.only;
  bool all = true;
  run_acceptance(ao, [&](const CriterionResult& r) {
    out << format_result(r) << std::endl;
    all = all && r.pass;
  });
  return all ? ok : verify_failed;
}

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    validate(c);
    if (c.jobs > 0) set_worker_count(c.jobs);
    switch (c.command) {
      case Command::transform: return cmd_transform(c, out);
      case Command::propagate: return cmd_propagate(c, out);
      case Command::expand: return cmd_expand(c, out);
      case Command::scatter: return cmd_scatter(c, out);
      case Command::verify: return cmd_verify(c, out);
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return io_or_config;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical;
  }
  return ok;
}

}  // namespace lightcone::cli

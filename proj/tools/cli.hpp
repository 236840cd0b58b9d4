#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lightcone/io.hpp"

namespace lightcone::cli {

enum ExitCode { ok = 0, verify_failed = 1, io_or_config = 2, numerical = 3 };

enum class Command { transform, propagate, expand, scatter, verify };

struct RunConfig {
  Command command = Command::verify;
  std::string input;
  std::string output;
  double tol = 1e-10;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  std::size_t grid_count = 256;
  std::string grid_kind = "log_uniform";
  std::optional<io::Format> format;
  int jobs = 0;
  std::uint64_t seed = 20240611;

  // decay hint for inputs without one, and for outputs ("kind:parameter")
  std::string decay;
  std::string output_decay;

  // transform
  std::string method = "direct";  // direct | mellin | hankel0
  bool both_paths = false;

  // propagate
  std::string packet;
  std::string velocity;
  std::string mirror = "none";  // none | even | odd, for half-line input
  std::vector<double> times{1.0};

  // expand
  bool inverse = false;
  std::optional<double> support_a;

  // scatter
  std::vector<double> gammas{0.5, 1.0, 2.0, 4.0};
  std::string potential = "A_minus";
  double zeta0 = -10.0;

  // verify
  std::vector<int> only;
};

/// Throws IoError on an invalid configuration.
void validate(const RunConfig& config);

int cmd_transform(const RunConfig& config, std::ostream& out);
int cmd_propagate(const RunConfig& config, std::ostream& out);
int cmd_expand(const RunConfig& config, std::ostream& out);
int cmd_scatter(const RunConfig& config, std::ostream& out);
int cmd_verify(const RunConfig& config, std::ostream& out);

/// Validates, dispatches and maps exceptions to exit codes (messages go to err).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace lightcone::cli

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lightcone/kleingordon.hpp"
#include "lightcone/sampled.hpp"

namespace lightcone::io {

enum class Format { csv, json };

Format format_from_string(const std::string& name);
/// ".json" -> json, anything else -> csv.
Format format_from_path(const std::string& path);

/// Shortest round-trip decimal form, independent of the locale.
std::string format_double(double x);

std::string to_string(const DecayHint& hint);
/// "exponential:1", "algebraic:2", "compact:4".
DecayHint decay_from_string(const std::string& text);

/// CSV: optional "# grid_kind=..." and "# decay=kind:parameter" lines, a
/// header "x,value", then one row per sample.
/// JSON: {"grid": [...], "values": [...], "grid_kind": ..., "decay": {"kind", "parameter"}}.
std::string sampled_to_string(const SampledFunction& f, Format format);
/// Missing metadata falls back to `default_decay` and a grid kind guessed from
/// the spacing. Throws IoError on malformed or empty input.
SampledFunction sampled_from_string(const std::string& text, Format format,
                                    std::optional<DecayHint> default_decay = std::nullopt);

void write_sampled(const std::string& path, const SampledFunction& f, Format format);
SampledFunction read_sampled(const std::string& path,
                             std::optional<DecayHint> default_decay = std::nullopt);

/// "x,re,im" rows.
void write_complex_sampled(const std::string& path, const ComplexSampledFunction& f);

/// {"lambda_grid": [...], "alpha_re": [...], "alpha_im": [...], "parity": "even"|"none"}.
std::string packet_to_json(const WavePacket& packet);
WavePacket packet_from_json(const std::string& text);
WavePacket read_packet(const std::string& path);
void write_packet(const std::string& path, const WavePacket& packet);

/// "x,F,G" rows (F and G must share a grid).
void write_cauchy(const std::string& path, const CauchyData& data);
/// Reads "x,F,G" rows; the grid kind is guessed from the spacing.
CauchyData cauchy_from_string(const std::string& text, DecayHint decay);
CauchyData read_cauchy(const std::string& path, DecayHint decay);

/// Header row then rows of numbers.
std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows);
/// {"columns": [...], "rows": [[...], ...]}.
std::string table_to_json(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows);
std::string table_to_string(const std::vector<std::string>& header,
                            const std::vector<std::vector<double>>& rows, Format format);
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

}  // namespace lightcone::io

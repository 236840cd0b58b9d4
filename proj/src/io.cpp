#include "lightcone/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lightcone/error.hpp"

namespace lightcone::io {
namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& field) {
  const std::string t = trim(field);
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || ptr != t.data() + t.size()) throw IoError("not a number: '" + t + "'");
  return x;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

GridKind guess_kind(const std::vector<double>& grid) {
  if (grid.size() < 3 || !(grid.front() > 0.0)) return GridKind::uniform;
  const double du = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
  bool uniform = true;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (std::abs(grid[i] - grid[i - 1] - du) > 1e-9 * std::max(1.0, std::abs(du))) uniform = false;
  }
  return uniform ? GridKind::uniform : GridKind::log_uniform;
}

DecayHint decay_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const double p = j.at("parameter").get<double>();
  return decay_from_string(kind + ":" + format_double(p));
}

json decay_to_json(const DecayHint& hint) {
  const std::string s = to_string(hint);
  const auto colon = s.find(':');
  return json{{"kind", s.substr(0, colon)}, {"parameter", hint.parameter()}};
}

}  // namespace

Format format_from_string(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw IoError("unknown format: " + name);
}

Format format_from_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot != std::string::npos && path.substr(dot) == ".json") return Format::json;
  return Format::csv;
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) throw IoError("cannot format number");
  return std::string(buf.data(), ptr);
}

std::string to_string(const DecayHint& hint) {
  switch (hint.kind()) {
    case DecayHint::Kind::exponential: return "exponential:" + format_double(hint.parameter());
    case DecayHint::Kind::algebraic: return "algebraic:" + format_double(hint.parameter());
    case DecayHint::Kind::compact: return "compact:" + format_double(hint.parameter());
  }
  return {};
}

DecayHint decay_from_string(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw IoError("decay must look like kind:parameter, got " + text);
  const std::string kind = trim(text.substr(0, colon));
  const double p = parse_double(text.substr(colon + 1));
  try {
    if (kind == "exponential") return DecayHint::exponential(p);
    if (kind == "algebraic") return DecayHint::algebraic(p);
    if (kind == "compact") return DecayHint::compact(p);
  } catch (const DomainError& e) {
    throw IoError(std::string("bad decay hint: ") + e.what());
  }
  throw IoError("unknown decay kind: " + kind);
}

std::string sampled_to_string(const SampledFunction& f, Format format) {
  if (format == Format::json) {
    json j;
    j["grid"] = f.grid();
    j["values"] = f.values();
    j["grid_kind"] = to_string(f.kind());
    j["decay"] = decay_to_json(f.decay());
    return j.dump(1) + "\n";
  }
  std::string out = "# grid_kind=" + to_string(f.kind()) + "\n# decay=" + to_string(f.decay()) +
                    "\nx,value\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += format_double(f.grid()[i]) + "," + format_double(f.values()[i]) + "\n";
  }
  return out;
}

SampledFunction sampled_from_string(const std::string& text, Format format,
                                    std::optional<DecayHint> default_decay) {
  std::vector<double> grid, values;
  std::optional<GridKind> kind;
  std::optional<DecayHint> decay;
  if (format == Format::json) {
    json j;
    try {
      j = json::parse(text);
      grid = j.at("grid").get<std::vector<double>>();
      values = j.at("values").get<std::vector<double>>();
      if (j.contains("grid_kind")) kind = grid_kind_from_string(j["grid_kind"].get<std::string>());
      if (j.contains("decay")) decay = decay_from_json(j["decay"]);
    } catch (const json::exception& e) {
      throw IoError(std::string("malformed JSON: ") + e.what());
    } catch (const DomainError& e) {
      throw IoError(e.what());
    }
  } else {
    std::istringstream in(text);
    std::string line;
    bool header = false;
    while (std::getline(in, line)) {
      line = trim(line);
      if (line.empty()) continue;
      if (line[0] == '#') {
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = trim(line.substr(1, eq - 1));
        const std::string val = trim(line.substr(eq + 1));
        try {
          if (key == "grid_kind") kind = grid_kind_from_string(val);
          if (key == "decay") decay = decay_from_string(val);
        } catch (const DomainError& e) {
          throw IoError(e.what());
        }
        continue;
      }
      if (!header) {
        header = true;
        if (std::isalpha(static_cast<unsigned char>(line[0]))) continue;
      }
      const auto fields = split(line);
      if (fields.size() < 2) throw IoError("expected two columns: " + line);
      grid.push_back(parse_double(fields[0]));
      values.push_back(parse_double(fields[1]));
    }
  }
  if (values.empty()) throw IoError("no samples in input");
  if (grid.size() != values.size()) throw IoError("grid and values differ in length");
  if (!decay) decay = default_decay;
  if (!decay) throw IoError("no decay hint in input and none given");
  if (!kind) kind = guess_kind(grid);
  try {
    return SampledFunction(std::move(grid), std::move(values), *kind, *decay);
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid samples: ") + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_sampled(const std::string& path, const SampledFunction& f, Format format) {
  write_text(path, sampled_to_string(f, format));
}

SampledFunction read_sampled(const std::string& path, std::optional<DecayHint> default_decay) {
  return sampled_from_string(read_text(path), format_from_path(path), default_decay);
}

void write_complex_sampled(const std::string& path, const ComplexSampledFunction& f) {
  std::string out = "x,re,im\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out += format_double(f.grid()[i]) + "," + format_double(f.values()[i].real()) + "," +
           format_double(f.values()[i].imag()) + "\n";
  }
  write_text(path, out);
}

std::string packet_to_json(const WavePacket& packet) {
  std::vector<double> re, im;
  for (const auto& a : packet.alpha()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  json j;
  j["lambda_grid"] = packet.lambda_grid();
  j["alpha_re"] = re;
  j["alpha_im"] = im;
  j["parity"] = packet.parity() == Parity::even ? "even" : "none";
  return j.dump(1) + "\n";
}

WavePacket packet_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    auto grid = j.at("lambda_grid").get<std::vector<double>>();
    const auto re = j.at("alpha_re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("alpha_im")) im = j["alpha_im"].get<std::vector<double>>();
    if (re.size() != grid.size() || im.size() != grid.size()) {
      throw IoError("packet arrays differ in length");
    }
    std::vector<Complex> alpha(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) alpha[i] = Complex(re[i], im[i]);
    const std::string parity = j.value("parity", "none");
    if (parity != "even" && parity != "none") throw IoError("parity must be even or none");
    return WavePacket(std::move(grid), std::move(alpha),
                      parity == "even" ? Parity::even : Parity::none);
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed packet JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid packet: ") + e.what());
  }
}

WavePacket read_packet(const std::string& path) { return packet_from_json(read_text(path)); }

void write_packet(const std::string& path, const WavePacket& packet) {
  write_text(path, packet_to_json(packet));
}

void write_cauchy(const std::string& path, const CauchyData& data) {
  if (data.F.grid() != data.G.grid()) throw IoError("write_cauchy: F and G grids differ");
  std::string out = "x,F,G\n";
  for (std::size_t i = 0; i < data.F.size(); ++i) {
    out += format_double(data.F.grid()[i]) + "," + format_double(data.F.values()[i]) + "," +
           format_double(data.G.values()[i]) + "\n";
  }
  write_text(path, out);
}

CauchyData cauchy_from_string(const std::string& text, DecayHint decay) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> x, F, G;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || std::isalpha(static_cast<unsigned char>(line[0]))) continue;
    const auto fields = split(line);
    if (fields.size() < 3) throw IoError("expected three columns x,F,G: " + line);
    x.push_back(parse_double(fields[0]));
    F.push_back(parse_double(fields[1]));
    G.push_back(parse_double(fields[2]));
  }
  if (x.empty()) throw IoError("no samples in input");
  const GridKind kind = guess_kind(x);
  try {
    return CauchyData{SampledFunction(x, std::move(F), kind, decay),
                      SampledFunction(x, std::move(G), kind, decay), Extension::F_even_G_odd};
  } catch (const DomainError& e) {
    throw IoError(std::string("invalid samples: ") + e.what());
  }
}

CauchyData read_cauchy(const std::string& path, DecayHint decay) {
  return cauchy_from_string(read_text(path), decay);
}

std::string table_to_csv(const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += "\n";
  }
  return out;
}

std::string table_to_json(const std::vector<std::string>& header,
                          const std::vector<std::vector<double>>& rows) {
  json j;
  j["columns"] = header;
  j["rows"] = rows;
  return j.dump(1) + "\n";
}

std::string table_to_string(const std::vector<std::string>& header,
                            const std::vector<std::vector<double>>& rows, Format format) {
  return format == Format::json ? table_to_json(header, rows) : table_to_csv(header, rows);
}

}  // namespace lightcone::io

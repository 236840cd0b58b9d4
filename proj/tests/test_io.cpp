#include <doctest.h>

#include <cmath>
#include <filesystem>

#include "lightcone/error.hpp"
#include "lightcone/io.hpp"

using namespace lightcone;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("lightcone_io_" + name)).string();
}

SampledFunction sample() {
  return SampledFunction::from_function([](double x) { return std::exp(-x) / 3.0; },
                                        log_uniform_grid(1e-3, 20.0, 50), GridKind::log_uniform,
                                        DecayHint::exponential(1.0));
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("numbers round trip exactly") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23}) {
    CHECK(std::stod(io::format_double(x)) == x);
  }
}

TEST_CASE("decay hints as text") {
  CHECK(io::decay_from_string("exponential:2") == DecayHint::exponential(2.0));
  CHECK(io::decay_from_string("algebraic:1.5") == DecayHint::algebraic(1.5));
  CHECK(io::to_string(DecayHint::compact(4.0)) == "compact:4");
  CHECK_THROWS_AS(io::decay_from_string("exponential"), IoError);
  CHECK_THROWS_AS(io::decay_from_string("gaussian:1"), IoError);
  CHECK_THROWS_AS(io::decay_from_string("exponential:-1"), IoError);
}

TEST_CASE("sampled functions through CSV and JSON") {
  const auto f = sample();
  for (auto fmt : {io::Format::csv, io::Format::json}) {
    const auto g = io::sampled_from_string(io::sampled_to_string(f, fmt), fmt);
    CHECK(g.grid() == f.grid());
    CHECK(g.values() == f.values());
    CHECK(g.kind() == f.kind());
    CHECK(g.decay() == f.decay());
  }
  const std::string bare = "x,value\n0,1\n1,2\n2,3\n3,4\n";
  const auto b = io::sampled_from_string(bare, io::Format::csv, DecayHint::compact(3.0));
  CHECK(b.kind() == GridKind::uniform);
  CHECK_THROWS_AS(io::sampled_from_string(bare, io::Format::csv), IoError);
  CHECK_THROWS_AS(io::sampled_from_string("x,value\n", io::Format::csv, DecayHint::compact(1.0)), IoError);
  CHECK_THROWS_AS(io::sampled_from_string("x,value\n0,a\n", io::Format::csv, DecayHint::compact(1.0)),
                  IoError);
  CHECK_THROWS_AS(io::sampled_from_string("{\"grid\": [1,2]", io::Format::json), IoError);
}

TEST_CASE("files") {
  const auto path = temp_path("f.json");
  io::write_sampled(path, sample(), io::Format::json);
  CHECK(io::read_sampled(path).values() == sample().values());
  CHECK(io::format_from_path(path) == io::Format::json);
  CHECK(io::format_from_path("a.csv") == io::Format::csv);
  CHECK_THROWS_AS(io::read_text(temp_path("missing/none.csv")), IoError);
  CHECK_THROWS_AS(io::format_from_string("xml"), IoError);
}

TEST_CASE("packets and Cauchy data") {
  const WavePacket p({-2.0, -1.0, 1.0, 2.0}, {Complex(1, 0.5), Complex(2, 0), Complex(2, 0), Complex(1, 0.5)},
                     Parity::even);
  const auto q = io::packet_from_json(io::packet_to_json(p));
  CHECK(q.lambda_grid() == p.lambda_grid());
  CHECK(q.alpha() == p.alpha());
  CHECK(q.parity() == Parity::even);
  CHECK_THROWS_AS(io::packet_from_json("{\"lambda_grid\": [1, 2], \"alpha_re\": [1]}"), IoError);

  const auto f = sample();
  const CauchyData cd{f, f.with_values(std::vector<double>(f.size(), 0.5)), Extension::F_even_G_odd};
  const auto path = temp_path("c.csv");
  io::write_cauchy(path, cd);
  const auto back = io::read_cauchy(path, DecayHint::exponential(1.0));
  CHECK(back.F.values() == cd.F.values());
  CHECK(back.G.values() == cd.G.values());
  CHECK(back.F.kind() == GridKind::log_uniform);
}

TEST_CASE("tables") {
  CHECK(io::table_to_csv({"a", "b"}, {{1.0, 0.5}}) == "a,b\n1,0.5\n");
  CHECK(io::table_to_json({"a"}, {{2.0}}).find("\"columns\"") != std::string::npos);
}

}

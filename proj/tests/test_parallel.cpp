#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lightcone/debranges.hpp"
#include "lightcone/htransform.hpp"
#include "lightcone/kleingordon.hpp"
#include "lightcone/parallel.hpp"

using namespace lightcone;

TEST_SUITE("parallel") {

TEST_CASE("serial and parallel kernels agree bit for bit") {
  const auto grid = log_uniform_grid(1e-3, 30.0, 257);
  HalfLineFunction f{[](double y) { return (1.0 + y) * std::exp(-y); }, DecayHint::exponential(1.0)};
  TransformOptions s, p;
  s.execution = Execution::serial;
  p.execution = Execution::parallel;
  CHECK(h_transform(f, grid, GridKind::log_uniform, s).values() ==
        h_transform(f, grid, GridKind::log_uniform, p).values());

  const auto packet = WavePacket::from_function(
      [](double l) { return Complex(std::exp(-0.5 * std::pow((l - 2.0) / 0.35, 2))); },
      uniform_grid(0.05, 6.2, 400), Parity::even);
  const auto hint = DecayHint::exponential(1.0);
  CHECK(trace_k(packet, grid, GridKind::log_uniform, hint, Execution::serial).values() ==
        trace_k(packet, grid, GridKind::log_uniform, hint, Execution::parallel).values());

  ExpansionOptions es, ep;
  es.execution = Execution::serial;
  HalfLineFunction k{[](double v) { return std::exp(-v); }, hint};
  CHECK(expand(k, grid, GridKind::log_uniform, hint, es).G.values() ==
        expand(k, grid, GridKind::log_uniform, hint, ep).G.values());
}

TEST_CASE("exceptions inside the parallel loop reach the caller") {
  CHECK_THROWS_AS(for_each_index(100, Execution::parallel,
                                 [](std::size_t i) {
                                   if (i == 37) throw std::runtime_error("boom");
                                 }),
                  std::runtime_error);
}

TEST_CASE("worker count") {
  set_worker_count(2);
  CHECK(worker_count() == 2);
  set_worker_count(0);
}

}

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "explorer/fit.hpp"

using namespace explorer;

namespace {

SimConfig tiny_config(PolicyMode mode) {
  SimConfig config{GridWorld(8, 8, {0, 0, 2, 2}, {1, 1}), {}, 20, 100000, 7};
  config.agent.fear_decay = 0.05;
  config.agent.mode = mode;
  return config;
}

std::vector<std::uint64_t> seed_range(std::uint64_t base, int count) {
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(count));
  std::iota(seeds.begin(), seeds.end(), base);
  return seeds;
}

bool same_trace(const FitResult& a, const FitResult& b) {
  if (a.trace.size() != b.trace.size()) return false;
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    if (a.trace[i].fear_initial != b.trace[i].fear_initial ||
        a.trace[i].fear_decay != b.trace[i].fear_decay ||
        a.trace[i].loss != b.trace[i].loss) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("curve_loss basics") {
  using Series = std::vector<double>;
  CHECK(curve_loss(Series{1, 2, 3}, Series{1, 2, 3}) == 0.0);
  CHECK(curve_loss(Series{1, 1}, Series{2, 2}) == 1.0);
  CHECK(curve_loss(Series{1, 1}, Series{1, 1, 2}) == doctest::Approx(4.0 / 3.0));
  try {
    curve_loss(Series{}, Series{});
    FAIL("expected BothEmpty");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BothEmpty);
  }
}

TEST_CASE("curve_loss is symmetric, nonnegative, zero only on padded equality") {
  std::mt19937 gen(13);
  std::uniform_real_distribution<double> value(0.0, 10.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> a(1 + gen() % 8), b(1 + gen() % 8);
    for (auto& v : a) v = value(gen);
    for (auto& v : b) v = value(gen);
    const double ab = curve_loss(a, b);
    CHECK(ab == curve_loss(b, a));
    CHECK(ab >= 0.0);

    std::vector<double> padded(a);
    padded.resize(a.size() + 3, 0.0);
    CHECK(curve_loss(a, padded) == 0.0);

    std::vector<double> bumped(a);
    bumped[gen() % bumped.size()] += 0.5;
    CHECK(curve_loss(a, bumped) > 0.0);
  }
}

TEST_CASE("fit recovers the generating fear on a small deterministic problem") {
  SimConfig truth_config = tiny_config(PolicyMode::Deterministic);
  truth_config.agent.fear_initial = 0.6;
  auto seeds = seed_range(50, 4);
  MeanCurve target = run_replicates(truth_config, seeds).mean;

  FitSpec spec{tiny_config(PolicyMode::Deterministic)};
  spec.free = {FitParam::FearInitial};
  spec.seeds = seeds;
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.2);
  spec.grid_fear_decay = uniform_grid(0.0, 1.0, 0.2);

  FitResult result = fit_params(spec, target);
  CHECK(result.fear_initial == doctest::Approx(0.6).epsilon(0.1));
  CHECK(result.fear_decay == 0.05);  // stays at the base value
  CHECK(result.best_loss <= result.trace.front().loss);
  CHECK(result.evaluations == static_cast<std::int64_t>(result.trace.size()));
}

TEST_CASE("fit never returns worse than the best coarse-grid loss") {
  SimConfig truth_config = tiny_config(PolicyMode::Stochastic);
  truth_config.agent.fear_initial = 0.45;
  auto seeds = seed_range(10, 6);
  MeanCurve target = run_replicates(truth_config, seeds).mean;

  FitSpec spec{tiny_config(PolicyMode::Stochastic)};
  spec.free = {FitParam::FearInitial};
  spec.seeds = seeds;
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.25);
  spec.max_refine_iters = 10;

  FitResult result = fit_params(spec, target);
  double best_coarse = result.trace[0].loss;
  for (std::size_t i = 0; i < spec.grid_fear_initial.size(); ++i) {
    best_coarse = std::min(best_coarse, result.trace[i].loss);
  }
  CHECK(result.best_loss <= best_coarse);
}

TEST_CASE("fit is deterministic including its trace") {
  SimConfig truth_config = tiny_config(PolicyMode::Stochastic);
  truth_config.agent.fear_initial = 0.3;
  auto seeds = seed_range(400, 4);
  MeanCurve target = run_replicates(truth_config, seeds).mean;

  FitSpec spec{tiny_config(PolicyMode::Stochastic)};
  spec.free = {FitParam::FearInitial};
  spec.seeds = seeds;
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.25);
  spec.max_refine_iters = 8;

  FitResult a = fit_params(spec, target);
  FitResult b = fit_params(spec, target);
  CHECK(a.fear_initial == b.fear_initial);
  CHECK(a.best_loss == b.best_loss);
  CHECK(a.evaluations == b.evaluations);
  CHECK(same_trace(a, b));
}

TEST_CASE("all-zero target selects the frozen parameterization by tie-break") {
  // With zero decay, fear_initial = 1 freezes permanently and reproduces the
  // zero curve exactly; every other grid point explores and scores worse.
  SimConfig base = tiny_config(PolicyMode::Deterministic);
  base.agent.fear_decay = 0.0;
  base.max_ticks = 2000;

  FitSpec spec{base};
  spec.free = {FitParam::FearInitial};
  spec.seeds = {1};
  spec.grid_fear_initial = {0.0, 0.5, 1.0};

  std::vector<double> zero_target(100, 0.0);
  FitResult result = fit_params(spec, zero_target);
  CHECK(result.fear_initial == 1.0);
  CHECK(result.best_loss == 0.0);
}

TEST_CASE("fit input validation") {
  FitSpec spec{tiny_config(PolicyMode::Stochastic)};
  spec.seeds = {1};
  spec.grid_fear_initial = {0.5};

  std::vector<double> target{1.0, 2.0};

  SUBCASE("no free parameter") {
    spec.free = {};
    try {
      fit_params(spec, target);
      FAIL("expected EmptyGrid");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyGrid);
    }
  }
  SUBCASE("empty target") {
    spec.free = {FitParam::FearInitial};
    try {
      fit_params(spec, std::vector<double>{});
      FAIL("expected EmptyTarget");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyTarget);
    }
  }
  SUBCASE("empty coarse grid for a free parameter") {
    spec.free = {FitParam::FearDecay};
    spec.grid_fear_decay = {};
    try {
      fit_params(spec, target);
      FAIL("expected EmptyGrid");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::EmptyGrid);
    }
  }
  SUBCASE("grid value outside the legal range") {
    spec.free = {FitParam::FearInitial};
    spec.grid_fear_initial = {0.5, 1.2};
    try {
      fit_params(spec, target);
      FAIL("expected ValueOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ValueOutOfRange);
    }
  }
}

TEST_CASE("reported best is the tie-break argmin over the whole trace") {
  SimConfig truth_config = tiny_config(PolicyMode::Stochastic);
  truth_config.agent.fear_initial = 0.55;
  auto seeds = seed_range(90, 4);
  MeanCurve target = run_replicates(truth_config, seeds).mean;

  FitSpec spec{tiny_config(PolicyMode::Stochastic)};
  spec.free = {FitParam::FearInitial};
  spec.seeds = seeds;
  spec.grid_fear_initial = uniform_grid(0.0, 1.0, 0.25);

  FitResult result = fit_params(spec, target);
  REQUIRE_FALSE(result.trace.empty());

  FitPoint expected = result.trace[0];
  for (const FitPoint& point : result.trace) {
    const bool point_better =
        point.loss != expected.loss
            ? point.loss < expected.loss
            : (point.fear_initial != expected.fear_initial
                   ? point.fear_initial < expected.fear_initial
                   : point.fear_decay < expected.fear_decay);
    if (point_better) expected = point;
  }
  CHECK(result.best_loss == expected.loss);
  CHECK(result.fear_initial == expected.fear_initial);
  CHECK(result.fear_decay == expected.fear_decay);
}

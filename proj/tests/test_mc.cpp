// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "generator.hpp"
#include "mc.hpp"
#include "rng.hpp"

using ifbm::GenPlan;
using ifbm::HurstParams;

TEST_SUITE("mc") {

TEST_CASE("per-sample streams are deterministic and distinct") {
  ifbm::PathRng a(123, 7);
  ifbm::PathRng b(123, 7);
  ifbm::PathRng c(123, 8);
  ifbm::PathRng d(124, 7);
  double first_a = a.normal();
  CHECK(first_a == b.normal());
  CHECK(first_a != c.normal());
  CHECK(first_a != d.normal());
}

TEST_CASE("normal generator moments") {
  ifbm::PathRng rng(9, 0);
  const std::size_t n = 1000000;
  double s1 = 0.0, s2 = 0.0, s4 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = rng.normal();
    s1 += x;
    s2 += x * x;
    s4 += x * x * x * x;
  }
  const double nd = static_cast<double>(n);
  CHECK(std::abs(s1 / nd) < 4.0 / std::sqrt(nd));
  CHECK(std::abs(s2 / nd - 1.0) < 4.0 * std::sqrt(2.0 / nd));
  CHECK(std::abs(s4 / nd - 3.0) < 4.0 * std::sqrt(96.0 / nd));
}

TEST_CASE("uniforms live in the half-open unit interval") {
  ifbm::PathRng rng(77, 3);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("campaign output is independent of the worker count") {
  const GenPlan plan = GenPlan::unilateral(HurstParams(0.4), 64);
  const auto s1 = ifbm::mc::run_campaign(plan, 200, 99, 1);
  const auto s4 = ifbm::mc::run_campaign(plan, 200, 99, 4);
  REQUIRE(s1.size() == s4.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].max_value == s4[i].max_value);
    CHECK(s1[i].argmax_pos == s4[i].argmax_pos);
    CHECK(s1[i].occupation == s4[i].occupation);
    CHECK(s1[i].last_zero == s4[i].last_zero);
    CHECK(s1[i].atom == s4[i].atom);
  }
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(1000, 0);
  ifbm::mc::parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("parallel_for propagates worker exceptions") {
  CHECK_THROWS_AS(ifbm::mc::parallel_for(100, 4,
                                         [&](std::size_t i) {
                                           if (i == 57) throw std::runtime_error("boom");
                                         }),
                  std::runtime_error);
}

}  // TEST_SUITE

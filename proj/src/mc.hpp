// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic parallel Monte Carlo driver. Every sample is a pure function
// of (master seed, sample index), and results land in slots indexed by
// sample, so output is byte-identical for any worker count.

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "generator.hpp"
#include "pathstats.hpp"

namespace ifbm::mc {

// Runs fn(i) for i in [0, n) on `workers` threads. fn must only touch state
// owned by slot i. The first exception thrown by any worker is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn&& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = 16;
  auto work = [&] {
    try {
      for (;;) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= n) break;
        const std::size_t end = std::min(begin + chunk, n);
        for (std::size_t i = begin; i < end; ++i) fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Generates n paths from the shared plan and extracts their statistics.
// Result order is by sample index regardless of worker count.
std::vector<pathstats::PathStats> run_campaign(const GenPlan& plan, std::size_t n,
                                               std::uint64_t master_seed, int workers);

}  // namespace ifbm::mc

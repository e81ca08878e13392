// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#include "mc.hpp"

namespace ifbm::mc {

std::vector<pathstats::PathStats> run_campaign(const GenPlan& plan, std::size_t n,
                                               std::uint64_t master_seed, int workers) {
  std::vector<pathstats::PathStats> out(n);
  parallel_for(n, workers, [&](std::size_t i) {
    const IfbmPath path = plan.generate(master_seed, i);
    out[i] = pathstats::extract(path);
  });
  return out;
}

}  // namespace ifbm::mc

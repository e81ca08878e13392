// Copyright 2026 the ifbm authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ifbm {

enum class errc {
  ok = 0,
  invalid_argument,
  not_positive_definite,
  negative_variance,
  degenerate_pivot,
  dimension_mismatch,
  empty_path,
  too_few_samples,
  no_data,
  domain_error,
  out_of_support,
  io_error,
};

// All library failures are reported through this exception; the C API
// translates the code into a status value at the boundary.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace ifbm

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fsplit/report.hpp"

namespace fsplit::pipeline {

struct VerifyOptions {
  // Which check group to run: all | rnc | split | kempf | delta.
  std::string checks = "all";
  // Seed for randomized subchecks (reserved; the theorem checks themselves
  // are deterministic).
  std::uint64_t seed = 1;
  // Run past the resource guard.
  bool force = false;
  // Verify every Kempf vector even where the cap would pick rectangles only.
  bool all_kempf = false;
};

// Full verification of the diagonal-splitting theorem at rank n in
// characteristic p: chart data, minor identities, congruences, residual
// normal crossing, diagonal vanishing order, the splitting property,
// maximality (order criterion and bounded operator check), Kempf
// compatibility, and the two negative controls.  Instances beyond the
// resource guard — full suite for n <= 3 with p <= 5, n = 4 with p <= 3,
// and (n, p) = (5, 2) — report the heavy checks as skipped unless forced.
report::VerificationReport verify_theorem(std::uint16_t n, std::uint32_t p,
                                          const VerifyOptions& opts = {});

// The graded suite: rank recursion and dimension identity for every
// 1 <= n <= n_max and listed prime, plus the Rees compatibility check of
// the rank-3, p = 2 main section.  d_max = 0 picks 2n+3 per dimension.
report::VerificationReport verify_graded(std::uint16_t n_max,
                                         const std::vector<std::uint32_t>& p_list,
                                         std::uint32_t d_max = 0);

}  // namespace fsplit::pipeline

#pragma once

#include "report.hpp"

namespace engelrad {

/// The verification battery: each check runs when the group order is within
/// its cap and is skipped (and recorded as skipped) above it.
///   nil_set_equals_fitting_oracle      cap 200   (Baer equivalence)
///   quasinil_set_equals_radical        cap 120   (radical = quasi-nil set)
///   nil_order_equals_series_depth      cap 120   (nil-order = series depth)
///   quasinil_implies_nil               cap 120   (existence transfer)
///   pairwise_solvable_iff_radical_full cap 200   (2-generation shadow)
struct GroupVerification {
  Json checks = Json::array();
  bool all_passed = true;
  std::uint32_t checks_run = 0;
};

GroupVerification run_verification(const FiniteGroup& g, const RunOptions& opts);

Json run_verify_group(const FiniteGroup& g, const GroupSource& source, const RunOptions& opts,
                      bool* all_passed);

/// Runs the battery over the built-in catalog; all_passed reflects every
/// executed check.
Json run_verify_suite(const RunOptions& opts, bool* all_passed);

}  // namespace engelrad

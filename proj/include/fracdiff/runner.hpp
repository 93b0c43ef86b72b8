#pragma once

#include "fracdiff/config.hpp"

namespace fracdiff {

/// Snapshot selection for space profiles: geometric spacing from
/// T / 2^{count-1} up to T, preceded by the first computable level.
/// count must be >= 2.
std::vector<double> snapshot_times(double final_time, int count,
                                   double first_level_time);

/// Executes every (alpha, scheme) member of the config: writes
/// profile_<scheme>_a<alpha>.csv and trace_<scheme>_a<alpha>.csv per
/// member plus an aggregate report.json under output_dir.
///
/// Returns 0 on success and 2 when any member diverged (partial outputs
/// are still flushed). Sweep members run concurrently when `concurrent`
/// is set, capped by FRACDIFF_THREADS.
int run(const RunConfig& config, bool concurrent = false);

} // namespace fracdiff

#pragma once

// The reproduction table: every published value and property the toolkit
// checks, evaluated end to end.

#include "qprobe/cli/serialize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qprobe::cli {

struct ReproduceOptions {
  std::uint64_t seed = 1;
  int seesaw_restarts = 20;
};

struct ReproduceRow {
  int id = 0;
  std::string title;
  bool passed = false;
  json measured;
};

std::vector<ReproduceRow> reproduce_rows(const ReproduceOptions& opts);

/// Faithfulness comparison at d = 4 (isotropic boundary, Werner f=-1,
/// rho_CCNR, |Φ+>), and the partial-trace demonstration for rho_CCNR.
json comparison_table();
json trace_out_demo();

}  // namespace qprobe::cli

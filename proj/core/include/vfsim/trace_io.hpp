#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vfsim/heatmap.hpp"
#include "vfsim/runtime.hpp"

namespace vfsim {

/// Fixed trace schema, one row per step:
/// t,blinking,selected_frame,decision_kind,target_lane,ego_x,ego_lane,step_cost,switched
extern const char* const kTraceHeader;

void write_trace(std::ostream& out, const std::vector<StepRecord>& steps);
std::string trace_to_string(const std::vector<StepRecord>& steps);

struct TraceReadResult {
  std::vector<StepRecord> steps;
  int skipped_rows = 0;  // malformed rows are skipped, not fatal
};

/// Parses a trace back into step records. Rows that do not fit the schema
/// are counted and skipped. Raises ParseError only when the header itself
/// is wrong.
TraceReadResult read_trace(std::istream& in);
TraceReadResult read_trace_file(const std::string& path);

/// Aggregates context cells across traces.
HeatMap heatmap_from_steps(const std::vector<StepRecord>& steps);

/// Tabular heat-map report: cell, count, frequency (frequencies sum to 1).
std::string heatmap_report(const HeatMap& map);

/// Parses a heat-map report or hand-written heat-map file.
HeatMap load_heatmap(std::istream& in);
HeatMap load_heatmap_file(const std::string& path);

}  // namespace vfsim

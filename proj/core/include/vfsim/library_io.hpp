#pragma once

#include <iosfwd>
#include <string>

#include "vfsim/models.hpp"
#include "vfsim/vfg.hpp"

namespace vfsim {

/// Parsed model-library file: prediction models plus the frame graph.
struct LibraryDocument {
  ModelRegistry models;
  VFGraph graph;
};

/// Line-oriented text format with [section] headers, key = value lines and
/// '#' comments. Sections: [model <id>], [frame <id>], [edge], [graph].
/// Raises ParseError with the offending line number; graph-level
/// inconsistencies surface as ConsistencyError/CycleError.
LibraryDocument load_library(std::istream& in);
LibraryDocument load_library_file(const std::string& path);

/// Canonical serialization; load(save(doc)) == doc.
std::string save_library(const LibraryDocument& doc);

}  // namespace vfsim

//===- paths.h - Static execution path enumeration --------------*- C++ -*-===//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowgraph/cfg.h"
#include "flowgraph/frontend.h"

namespace flowgraph {

/// One evaluation of a branch condition.
struct Decision {
  StatementId branch;
  bool outcome;
  std::uint32_t occurrence = 1;  // 1-based visit index of this header

  friend bool operator==(const Decision&, const Decision&) = default;
};

struct StaticPath {
  std::vector<Decision> decisions;
  std::vector<StatementId> node_ids;

  friend bool operator==(const StaticPath&, const StaticPath&) = default;
};

struct PathSet {
  std::vector<StaticPath> paths;
  bool truncated = false;
  std::uint32_t loop_bound = 0;
};

inline constexpr std::uint32_t kDefaultLoopBound = 2;
inline constexpr std::size_t kDefaultMaxPaths = 1024;

/// Every ENTRY-to-EXIT walk, feasibility ignored, taking each loop header's
/// true edge at most `loop_bound` times per path. At most `max_paths`
/// distinct paths are kept; finding one more sets `truncated`.
///
/// Paths are ordered by their decision vector read as a number whose least
/// significant digit is the textually first branch (false = 0, true = 1;
/// loop headers contribute their count of true outcomes). Ties fall back to
/// the lexicographic order of the ID sequences.
PathSet enumerate_static_paths(const Cfg& cfg, std::uint32_t loop_bound = kDefaultLoopBound,
                               std::size_t max_paths = kDefaultMaxPaths);

/// "Line Number <id>: <cond>: TRUE|FALSE"
std::string render_decision(const NumberedProgram& program, const Decision& d);

/// " 0 1 2" style suffix: one leading space per ID.
std::string render_id_sequence(const std::vector<StatementId>& ids);

/// Decision lines and "Execution Path <k>: ..." per path, blank line between
/// paths, LF endings, trailing newline.
std::string render_path_report(const NumberedProgram& program, const PathSet& ps);

}  // namespace flowgraph

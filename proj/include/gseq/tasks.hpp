#pragma once

#include "gseq/report.hpp"
#include "gseq/workspace.hpp"

namespace gseq {

struct RunOptions {
  std::string task_filter;      // empty or "all": run every task
  int max_degree_override = 0;  // 0: use task parameter / default window
};

// Executes the workspace's tasks. Task-level failures (bad parameters,
// resource bounds) are reported in the section and flip its ok flag;
// InternalError (a broken mathematical invariant) propagates.
Report run_tasks(Workspace& ws, const RunOptions& opts = {});

}  // namespace gseq

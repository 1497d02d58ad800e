#pragma once

#include <functional>
#include <string>

#include "xkraw/report.hpp"

namespace xkraw {

// Runs `count` independent verification tasks and merges their reports in
// task order, so the output is identical for any parallelism degree.
// jobs == 1 is the plain serial loop (the reference path); any other value
// runs the tasks under OpenMP (0 = the runtime's default thread count).
// Exceptions escaping a task are converted into failed report cases.
Report run_cases(const std::string& suite, long count,
                 const std::function<Report(long)>& task, int jobs = 1);

} // namespace xkraw

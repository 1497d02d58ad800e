#include "xkraw/sweep.hpp"

#include <cstddef>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace xkraw {

namespace {

Report run_one(const std::string& suite, const std::function<Report(long)>& task, long i) {
    try {
        return task(i);
    } catch (const std::exception& e) {
        Report r;
        r.suite = suite;
        r.add_fail("exception", "case index " + std::to_string(i), e.what(), "no exception");
        return r;
    }
}

} // namespace

Report run_cases(const std::string& suite, long count,
                 const std::function<Report(long)>& task, int jobs) {
    Report merged;
    merged.suite = suite;
    if (jobs == 1) {
        for (long i = 0; i < count; ++i) merged.merge(run_one(suite, task, i));
        return merged;
    }
    std::vector<Report> parts(static_cast<std::size_t>(count));
#ifdef _OPENMP
    if (jobs > 1) omp_set_num_threads(jobs);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = run_one(suite, task, i);
#else
    for (long i = 0; i < count; ++i) parts[static_cast<std::size_t>(i)] = run_one(suite, task, i);
#endif
    for (const Report& r : parts) merged.merge(r);
    return merged;
}

} // namespace xkraw

#pragma once

// Chunked parallel loop on std::async. Worker count comes from the caller,
// the SL3KL_JOBS environment variable, or hardware_concurrency, in that
// order of preference.

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

#include "arith.hpp"

namespace sl3kl {

inline unsigned default_jobs() {
    if (const char* env = std::getenv("SL3KL_JOBS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Invokes body(i) for i in [0, n) across jobs workers. Exceptions from the
// workers propagate to the caller.
template <class Body>
void parallel_for(int64 n, Body&& body, unsigned jobs = 0) {
    if (n <= 0) return;
    if (jobs == 0) jobs = default_jobs();
    if (jobs > static_cast<unsigned>(n)) jobs = static_cast<unsigned>(n);
    if (jobs <= 1) {
        for (int64 i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::future<void>> futs;
    futs.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
        futs.push_back(std::async(std::launch::async, [=, &body] {
            for (int64 i = w; i < n; i += jobs) body(i);
        }));
    }
    for (auto& f : futs) f.get();
}

}  // namespace sl3kl

/*
   Copyright 2026 The permpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PERMPOLY_PARALLEL_HPP
#define PERMPOLY_PARALLEL_HPP

#include <cstdint>
#include <thread>
#include <vector>

namespace permpoly {

/// Run fn(i) for i in [0, n).  Work is split into contiguous chunks, one per
/// worker; callers write results into per-index slots so the outcome is
/// independent of the worker count.
template <class Fn>
void parallel_for(uint64_t n, unsigned jobs, Fn&& fn) {
    if (jobs <= 1 || n < 2) {
        for (uint64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    unsigned workers = unsigned(std::min<uint64_t>(jobs, n));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    uint64_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        uint64_t lo = w * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (uint64_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace permpoly

#endif

/*
   Copyright 2026 The conelab Authors

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

#pragma once

// Deterministic fan-out over replicate indices. Work is split into
// contiguous blocks; callers aggregate per-index results in index order,
// so results never depend on the worker count.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace conelab {

/// Runs fn(begin, end) over a partition of [0, count) and sums the returned
/// integer counts.
template <class Fn>
std::uint64_t parallel_count(std::uint64_t count, unsigned threads, Fn&& fn)
{
    threads = std::max(1U, threads);
    if (threads == 1 || count < 2 * threads) {
        return fn(std::uint64_t{0}, count);
    }
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        const std::uint64_t begin = count * w / threads;
        const std::uint64_t end = count * (w + 1) / threads;
        pool.emplace_back([&, w, begin, end] {
            try {
                partial[w] = fn(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::uint64_t total = 0;
    for (auto c : partial) {
        total += c;
    }
    return total;
}

/// out[i] = fn(i) for i in [0, count), evaluated on up to `threads` workers.
template <class T, class Fn>
std::vector<T> parallel_map(std::uint64_t count, unsigned threads, Fn&& fn)
{
    std::vector<T> out(count);
    parallel_count(count, threads, [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            out[i] = fn(i);
        }
        return std::uint64_t{0};
    });
    return out;
}

} // namespace conelab

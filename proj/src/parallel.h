// Copyright 2026 The Flagkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLAGKIT_SRC_PARALLEL_H
#define FLAGKIT_SRC_PARALLEL_H

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace flagkit::internal {

/// Runs body(i) for i in [0, n) on up to `workers` threads. The first exception
/// thrown by any task is rethrown after all threads join.
template <typename Body>
void parallel_for(size_t n, size_t workers, Body &&body) {
    workers = std::max<size_t>(1, std::min(workers, n));
    if (workers == 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            for (size_t i = next++; i < n; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    next = n;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace flagkit::internal

#endif

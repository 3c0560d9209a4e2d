// Copyright 2026 The relinfo Authors
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

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace relinfo {

/// The only stateful object in the library. Always constructed from an
/// explicit seed and never shared between threads.
using Rng = std::mt19937_64;

/// Trials per Monte-Carlo partition. Each partition owns a stream derived
/// from (seed, partition index), so results do not depend on worker count.
inline constexpr std::uint64_t kPartitionSize = 4096;

/// Uniform double on [0, 1) with 53 random bits. Unlike
/// std::uniform_real_distribution the mapping is fixed, so a seed reproduces
/// the same draws under any standard library.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline Rng partition_rng(std::uint64_t seed, std::uint64_t partition) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(partition),
        static_cast<std::uint32_t>(partition >> 32),
    };
    return Rng(seq);
}

inline std::uint64_t partition_count(std::uint64_t trials) {
    return (trials + kPartitionSize - 1) / kPartitionSize;
}

/// Runs `fn(rng, first_trial, count)` once per partition of `trials` and
/// returns the per-partition results in partition order. Work is spread over
/// `threads` workers; the returned vector is identical for any thread count.
template <class Fn>
auto run_partitioned(std::uint64_t trials, std::uint64_t seed, unsigned threads, Fn fn)
    -> std::vector<decltype(fn(std::declval<Rng &>(), std::uint64_t{}, std::uint64_t{}))> {
    using Result = decltype(fn(std::declval<Rng &>(), std::uint64_t{}, std::uint64_t{}));
    const std::uint64_t parts = partition_count(trials);
    std::vector<Result> results(parts);

    auto do_partition = [&](std::uint64_t p) {
        Rng rng = partition_rng(seed, p);
        const std::uint64_t first = p * kPartitionSize;
        const std::uint64_t count = std::min(kPartitionSize, trials - first);
        results[p] = fn(rng, first, count);
    };

    const unsigned workers = static_cast<unsigned>(
        std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, std::max<std::uint64_t>(parts, 1)));
    if (workers <= 1) {
        for (std::uint64_t p = 0; p < parts; ++p) {
            do_partition(p);
        }
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::uint64_t p = next.fetch_add(1); p < parts; p = next.fetch_add(1)) {
                do_partition(p);
            }
        });
    }
    pool.clear();  // joins
    return results;
}

}  // namespace relinfo

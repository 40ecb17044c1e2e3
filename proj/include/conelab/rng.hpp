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

// Counter-based random numbers. Every stream is addressed by
// (seed, purpose, group, index) so that a replicate's draws depend on
// nothing but its coordinates, whatever thread evaluates it.

#include <array>
#include <cstdint>
#include <limits>

namespace conelab {

/// Disjoint purposes that derive independent key material from one seed.
enum class Stream : std::uint32_t {
    replicate = 1,
    centering = 2,
    spectral_mass = 3,
    cond4 = 4,
    sumconv = 5,
    axioms = 6,
    calibration = 7,
};

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., Random123).
constexpr PhiloxCounter philox4x32_10(PhiloxCounter ctr, PhiloxKey key) noexcept
{
    constexpr std::uint32_t m0 = 0xD2511F53U;
    constexpr std::uint32_t m1 = 0xCD9E8D57U;
    constexpr std::uint32_t w0 = 0x9E3779B9U;
    constexpr std::uint32_t w1 = 0xBB67AE85U;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += w0;
            key[1] += w1;
        }
        const std::uint64_t p0 = std::uint64_t{m0} * ctr[0];
        const std::uint64_t p1 = std::uint64_t{m1} * ctr[2];
        const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        const auto lo0 = static_cast<std::uint32_t>(p0);
        const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        const auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

/// UniformRandomBitGenerator over a single Philox stream.
class CounterRng {
public:
    using result_type = std::uint64_t;

    CounterRng(std::uint64_t seed, Stream stream, std::uint64_t group, std::uint64_t index) noexcept
    {
        std::uint64_t k = splitmix64(seed);
        k = splitmix64(k ^ (std::uint64_t{static_cast<std::uint32_t>(stream)} << 40));
        k = splitmix64(k ^ group);
        key_ = {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
        ctr_ = {static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0U, 0U};
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        if (pos_ == 2) {
            refill();
        }
        return buffer_[pos_++];
    }

    /// Uniform variate on the open interval (0, 1).
    double uniform01() noexcept
    {
        return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

private:
    void refill() noexcept
    {
        const PhiloxCounter out = philox4x32_10(ctr_, key_);
        buffer_[0] = (std::uint64_t{out[1]} << 32) | out[0];
        buffer_[1] = (std::uint64_t{out[3]} << 32) | out[2];
        if (++ctr_[2] == 0) {
            ++ctr_[3];
        }
        pos_ = 0;
    }

    PhiloxKey key_{};
    PhiloxCounter ctr_{};
    std::array<std::uint64_t, 2> buffer_{};
    int pos_ = 2;
};

} // namespace conelab

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

#include "conelab/rng.hpp"

#include <doctest.h>

#include <set>

using namespace conelab;

TEST_SUITE("rng")
{
    // Known-answer vectors published with the Random123 library.
    TEST_CASE("philox4x32-10 known answers")
    {
        CHECK(philox4x32_10({0, 0, 0, 0}, {0, 0}) == PhiloxCounter{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
        CHECK(philox4x32_10({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
              PhiloxCounter{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
        CHECK(philox4x32_10({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
              PhiloxCounter{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
    }

    TEST_CASE("streams are reproducible and distinct")
    {
        CounterRng a(7, Stream::replicate, 10, 3);
        CounterRng b(7, Stream::replicate, 10, 3);
        for (int i = 0; i < 100; ++i) {
            CHECK(a() == b());
        }
        std::set<std::uint64_t> firsts;
        for (auto s : {Stream::replicate, Stream::centering, Stream::cond4}) {
            for (std::uint64_t group : {1ULL, 2ULL}) {
                for (std::uint64_t index : {0ULL, 1ULL, 1ULL << 40}) {
                    for (std::uint64_t seed : {1ULL, 2ULL}) {
                        firsts.insert(CounterRng(seed, s, group, index)());
                    }
                }
            }
        }
        CHECK(firsts.size() == 36);
    }

    TEST_CASE("uniform01 stays inside the open unit interval")
    {
        CounterRng rng(1, Stream::replicate, 0, 0);
        double lo = 1.0;
        double hi = 0.0;
        double sum = 0.0;
        const int n = 200000;
        for (int i = 0; i < n; ++i) {
            const double u = rng.uniform01();
            lo = std::min(lo, u);
            hi = std::max(hi, u);
            sum += u;
        }
        CHECK(lo > 0.0);
        CHECK(hi < 1.0);
        CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
    }
}

// Copyright 2026 The qfb Authors
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

#ifndef QFB_RNG_H
#define QFB_RNG_H

#include <cstdint>
#include <limits>
#include <string_view>

namespace qfb {

constexpr uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Counter-based draw: the value at (key, counter) does not depend on any
/// other draw, so any shot index can be regenerated on its own.
constexpr uint64_t counter_bits(uint64_t key, uint64_t counter) {
    return splitmix64(splitmix64(key) ^ splitmix64(counter ^ 0xD1B54A32D192ED03ULL));
}

constexpr double to_unit_interval(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Derives an independent stream key from a parent seed and a text tag.
constexpr uint64_t derive_key(uint64_t seed, std::string_view tag) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : tag) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return splitmix64(seed ^ splitmix64(h));
}

constexpr uint64_t derive_key(uint64_t seed, uint64_t index) {
    return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
}

/// Sequential view over a counter-based stream; satisfies
/// UniformRandomBitGenerator so it works with <random> distributions.
class CounterRng {
   public:
    using result_type = uint64_t;

    explicit constexpr CounterRng(uint64_t key, uint64_t start = 0) : key_(key), counter_(start) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() { return counter_bits(key_, counter_++); }
    constexpr double uniform() { return to_unit_interval((*this)()); }

    /// Uniform integer in [0, bound) by rejection, bound > 0.
    constexpr uint64_t below(uint64_t bound) {
        const uint64_t limit = max() - max() % bound;
        for (;;) {
            uint64_t v = (*this)();
            if (v < limit) return v % bound;
        }
    }

   private:
    uint64_t key_;
    uint64_t counter_;
};

}  // namespace qfb

#endif

// Copyright 2026 The covscreen Authors
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

#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace covscreen::rng {

// All randomness in the toolkit goes through std::mt19937_64, whose output
// sequence is fixed by the standard, plus the helpers below. Nothing here
// uses std::uniform_int_distribution (its algorithm is implementation
// defined), so results are identical across standard libraries.

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t Fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// Generator keyed on (seed, key): independent of call order.
inline std::mt19937_64 KeyedEngine(std::uint64_t seed, std::string_view key) {
  return std::mt19937_64(SplitMix64(seed ^ SplitMix64(Fnv1a64(key))));
}

// Uniform integer in [0, bound) by rejection; bound must be > 0.
inline std::uint64_t UniformBelow(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = gen();
  } while (x >= limit);
  return x % bound;
}

// Durstenfeld variant: for i = n-1 .. 1 swap v[i] with v[j], j in [0, i].
template <typename T>
void FisherYatesShuffle(std::vector<T>& v, std::mt19937_64& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(UniformBelow(gen, i));
    using std::swap;
    swap(v[i - 1], v[j]);
  }
}

}  // namespace covscreen::rng

// Copyright 2026 The Corn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORN_COMMON_RNG_H_
#define CORN_COMMON_RNG_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace corn {

// Seeded generator whose output sequence is identical across standard
// libraries. std::mt19937_64 is fully specified, the std distributions are
// not, so bounded draws are done here by rejection sampling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  uint64_t Below(uint64_t bound);

  // Uniform in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi], inclusive.
  size_t Between(size_t lo, size_t hi) { return lo + Below(hi - lo + 1); }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (size_t i = items.size(); i > 1; --i) {
      size_t j = Below(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  // k distinct indices from [0, n) in draw order (partial Fisher-Yates).
  std::vector<size_t> Sample(size_t n, size_t k);

 private:
  std::mt19937_64 engine_;
};

// 64-bit FNV-1a; stable across platforms, unlike std::hash.
uint64_t Fnv1a64(std::string_view data);

// Seed for an independent sub-stream keyed by name.
inline uint64_t DeriveSeed(uint64_t seed, std::string_view key) {
  return seed ^ Fnv1a64(key);
}

}  // namespace corn

#endif  // CORN_COMMON_RNG_H_

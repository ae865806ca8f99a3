// Copyright 2026 The PAOA Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "paoa/graph.hpp"

namespace paoa {

// Summary of one batch of sampled cut values.
struct SampleStats {
  int best = 0;
  double mean = 0.0;
  double sd = 0.0;  // population SD of the batch
  double ratio = 1.0;
  std::map<int, std::uint64_t> histogram;

  std::uint64_t total() const;
};

// Throws InvalidArgument on an empty sample.
SampleStats summarize(std::span<const int> cuts);
SampleStats summarize(const std::map<int, std::uint64_t>& histogram);

// mean(sample) / max(sample); an all-zero sample has ratio 1.
double approximation_ratio(std::span<const int> sample);

// Highest cut seen so far and the lexicographically smallest string attaining
// it. merge() is order-independent, so per-thread trackers combine
// deterministically.
struct BestSeen {
  int cut = -1;
  BitString bits;

  bool empty() const { return cut < 0; }
  void offer(int c, std::span<const std::uint8_t> s);
  void merge(const BestSeen& other) { offer(other.cut, other.bits); }
};

}  // namespace paoa

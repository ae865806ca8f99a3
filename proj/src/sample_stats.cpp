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

#include "paoa/sample_stats.hpp"

#include <algorithm>
#include <cmath>

#include "paoa/errors.hpp"

namespace paoa {

std::uint64_t SampleStats::total() const {
  std::uint64_t n = 0;
  for (const auto& [cut, count] : histogram) n += count;
  return n;
}

SampleStats summarize(const std::map<int, std::uint64_t>& histogram) {
  SampleStats stats;
  stats.histogram = histogram;
  const std::uint64_t n = stats.total();
  if (n == 0) throw InvalidArgument("cannot summarize an empty sample");

  // Integer sums keep the moments independent of accumulation order.
  std::uint64_t s1 = 0;
  std::uint64_t s2 = 0;
  for (const auto& [cut, count] : histogram) {
    const auto c = static_cast<std::uint64_t>(cut);
    s1 += c * count;
    s2 += c * c * count;
  }
  stats.best = histogram.rbegin()->first;
  const double count = static_cast<double>(n);
  stats.mean = static_cast<double>(s1) / count;
  const double variance = static_cast<double>(s2) / count - stats.mean * stats.mean;
  stats.sd = std::sqrt(std::max(variance, 0.0));
  stats.ratio = stats.best > 0 ? stats.mean / stats.best : 1.0;
  return stats;
}

SampleStats summarize(std::span<const int> cuts) {
  std::map<int, std::uint64_t> histogram;
  for (int c : cuts) {
    if (c < 0) throw InvalidArgument("negative cut value");
    ++histogram[c];
  }
  return summarize(histogram);
}

double approximation_ratio(std::span<const int> sample) {
  if (sample.empty()) throw InvalidArgument("approximation ratio of an empty sample");
  return summarize(sample).ratio;
}

void BestSeen::offer(int c, std::span<const std::uint8_t> s) {
  if (c < 0) return;
  if (c > cut || (c == cut && lex_less(s, bits))) {
    cut = c;
    bits.assign(s.begin(), s.end());
  }
}

}  // namespace paoa

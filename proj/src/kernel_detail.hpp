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

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "paoa/kernels.hpp"

namespace paoa::kernels::detail {

// Cut of basis index z: for each vertex, count higher neighbors with a
// different label.
inline int cut_of(std::span<const std::uint64_t> upper, std::uint64_t z) {
  int cut = 0;
  for (std::size_t v = 0; v < upper.size(); ++v) {
    const std::uint64_t flip = ((z >> v) & 1U) ? ~std::uint64_t{0} : 0;
    cut += std::popcount(upper[v] & (z ^ flip));
  }
  return cut;
}

// Key whose integer order is the lexicographic order of (z_0, ..., z_{n-1}).
inline std::uint64_t lex_key(std::uint64_t z, int n) {
  std::uint64_t key = 0;
  for (int i = 0; i < n; ++i) key = (key << 1) | ((z >> i) & 1U);
  return key;
}

inline std::vector<std::complex<double>> phase_table(int max_cut, double gamma) {
  std::vector<std::complex<double>> table(static_cast<std::size_t>(max_cut) + 1);
  for (int c = 0; c <= max_cut; ++c) table[c] = std::polar(1.0, gamma * c);
  return table;
}

// Index of the t-th amplitude whose bit k is zero.
inline std::uint64_t pair_low(std::uint64_t t, int k) {
  const std::uint64_t low = t & ((std::uint64_t{1} << k) - 1);
  return ((t >> k) << (k + 1)) | low;
}

inline void mix_pair(std::complex<double>& a0, std::complex<double>& a1, double c, double s) {
  const std::complex<double> minus_i_s(0.0, -s);
  const std::complex<double> n0 = c * a0 + minus_i_s * a1;
  const std::complex<double> n1 = c * a1 + minus_i_s * a0;
  a0 = n0;
  a1 = n1;
}

inline int max_value(std::span<const std::int32_t> cuts) {
  int m = 0;
  for (auto c : cuts) m = c > m ? c : m;
  return m;
}

}  // namespace paoa::kernels::detail

// Copyright 2026 The Mereo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mereo/rng.hpp"

#include <cmath>
#include <numbers>

namespace mereo {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 output function.
constexpr std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix(mix(seed + kGamma) ^ mix(stream + 2 * kGamma))), counter_(0) {}

std::uint64_t CounterRng::next_u64() {
  counter_ += kGamma;
  return mix(key_ + counter_);
}

double CounterRng::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_gaussian() {
  // Box-Muller; u1 in (0,1] keeps the log finite.
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex CounterRng::next_complex_gaussian() {
  const double re = next_gaussian();
  const double im = next_gaussian();
  return {re, im};
}

std::uint64_t CounterRng::next_below(std::uint64_t n) {
  // Multiply-shift bounded draw; bias is negligible for the small n used here.
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

CounterRng CounterRng::substream(std::uint64_t stream) const {
  CounterRng child(0, 0);
  child.key_ = mix(key_ ^ mix(stream + 3 * kGamma));
  child.counter_ = 0;
  return child;
}

}  // namespace mereo

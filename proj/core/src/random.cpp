// Copyright 2026 The orientwalk Authors.
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

#include "orientwalk/random.hpp"

#include <cmath>
#include <numbers>

namespace orientwalk {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

// SplitMix64 finalizer; a bijection on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, ctr[0], hi0, lo0);
    mulhilo(kPhiloxM1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kPhiloxW0;
    key[1] += kPhiloxW1;
  }
  return ctr;
}

StreamKey StreamKey::child(std::uint64_t label) const {
  StreamKey out = *this;
  out.path.push_back(label);
  return out;
}

std::uint64_t StreamKey::stream_id() const {
  // Length-prefixed fold so that {a} and {a, 0} differ.
  std::uint64_t h = mix64(0x6f7269656e74ULL + path.size());
  for (std::uint64_t label : path) h = mix64(h ^ mix64(label + 0x9E3779B97F4A7C15ULL));
  return h;
}

RandomStream::RandomStream(std::uint64_t master_seed, std::uint64_t stream_id)
    : key_{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)},
      stream_id_(stream_id) {}

void RandomStream::refill(std::uint64_t block_index) {
  const auto out = philox4x32({static_cast<std::uint32_t>(block_index),
                               static_cast<std::uint32_t>(block_index >> 32),
                               static_cast<std::uint32_t>(stream_id_),
                               static_cast<std::uint32_t>(stream_id_ >> 32)},
                              key_);
  block_[0] = (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  block_[1] = (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
}

std::uint64_t RandomStream::value_at(std::uint64_t index) const {
  const std::uint64_t block_index = index / 2;
  const auto out = philox4x32({static_cast<std::uint32_t>(block_index),
                               static_cast<std::uint32_t>(block_index >> 32),
                               static_cast<std::uint32_t>(stream_id_),
                               static_cast<std::uint32_t>(stream_id_ >> 32)},
                              key_);
  if (index % 2 == 0) return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
  return (static_cast<std::uint64_t>(out[3]) << 32) | out[2];
}

RandomStream derive_stream(const StreamKey& key) {
  return RandomStream(key.master_seed, key.stream_id());
}

double standard_normal(RandomStream& stream) {
  // 1 - u lies in (0, 1], so the logarithm is finite.
  const double u1 = 1.0 - stream.uniform();
  const double u2 = stream.uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

bool StreamRegistry::register_key(const StreamKey& key) {
  std::lock_guard lock(mutex_);
  const auto [it, inserted] = paths_.try_emplace(key.stream_id(), key.path);
  return inserted || it->second == key.path;
}

std::size_t StreamRegistry::size() const {
  std::lock_guard lock(mutex_);
  return paths_.size();
}

}  // namespace orientwalk

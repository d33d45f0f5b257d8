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

#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace orientwalk {

__extension__ typedef unsigned __int128 uint128_t;

/// Identifies one random stream: a master seed plus an ordered path of
/// labels such as {experiment, replicate, role}.
struct StreamKey {
  std::uint64_t master_seed = 0;
  std::vector<std::uint64_t> path;

  StreamKey() = default;
  explicit StreamKey(std::uint64_t seed, std::initializer_list<std::uint64_t> labels = {})
      : master_seed(seed), path(labels) {}

  /// Key with one more label appended.
  [[nodiscard]] StreamKey child(std::uint64_t label) const;

  /// 64-bit stream identifier folded from the path. Distinct paths map to
  /// distinct identifiers with overwhelming probability; StreamRegistry
  /// checks it.
  [[nodiscard]] std::uint64_t stream_id() const;

  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

/// Well-known path labels. Anything that derives a stream passes one of
/// these as the role component so that sibling roles never alias.
namespace role {
inline constexpr std::uint64_t kEnvironment = 0x656e76;  // "env"
inline constexpr std::uint64_t kWalk = 0x77616c6b;       // "walk"
inline constexpr std::uint64_t kVertical = 0x76657274;   // "vert"
inline constexpr std::uint64_t kScenery = 0x73636e;      // "scn"
inline constexpr std::uint64_t kGaussian = 0x676175;     // "gau"
inline constexpr std::uint64_t kReference = 0x726566;    // "ref"
}  // namespace role

/// Philox4x32-10 block function (Salmon et al., "Parallel random numbers:
/// as easy as 1, 2, 3"). Maps a 128-bit counter under a 64-bit key.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Counter-based stream. The generator state is (key, stream id, position);
/// the value at position i is a pure function of those, so streams can be
/// copied, split and random-accessed without coordination.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return next_u64(); }

  std::uint64_t next_u64() {
    if (position_ % 2 == 0) refill(position_ / 2);
    return block_[position_++ % 2];
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on {0, ..., bound - 1} by the multiply-shift map. The bias is
  /// below bound / 2^64, far under any Monte Carlo resolution used here.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<uint128_t>(next_u64()) * bound) >> 64);
  }

  /// Value at absolute position `index` without advancing the stream.
  [[nodiscard]] std::uint64_t value_at(std::uint64_t index) const;

  /// Uniform on [0, 1) at absolute position `index`.
  [[nodiscard]] double uniform_at(std::uint64_t index) const {
    return static_cast<double>(value_at(index) >> 11) * 0x1.0p-53;
  }

  [[nodiscard]] std::uint64_t position() const { return position_; }
  [[nodiscard]] std::uint64_t stream_id() const { return stream_id_; }

 private:
  void refill(std::uint64_t block_index);

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_id_;
  std::uint64_t position_ = 0;
  std::array<std::uint64_t, 2> block_{};
};

RandomStream derive_stream(const StreamKey& key);

/// One standard normal draw by Box-Muller, consuming exactly two uniforms
/// and keeping no cached second value.
double standard_normal(RandomStream& stream);

/// Records stream identifiers handed out during one experiment and reports
/// collisions. Thread safe.
class StreamRegistry {
 public:
  /// Returns false if the key's identifier is already held by a different
  /// path. Re-registering the same path is allowed.
  bool register_key(const StreamKey& key);
  [[nodiscard]] std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> paths_;
};

}  // namespace orientwalk

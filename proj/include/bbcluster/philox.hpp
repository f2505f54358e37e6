// Copyright (c) 2026 bbcluster contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace bbcluster::rng {

//! Philox4x64-10 counter-based generator (Salmon et al., SC'11).
//! The keyed bijection maps a 256-bit counter to 256 bits of output;
//! streams are split by key, draws within a stream by counter. Output
//! matches the published Random123 known-answer vectors.
class Philox4x64 {
 public:
  using Counter = std::array<std::uint64_t, 4>;
  using Key = std::array<std::uint64_t, 2>;

  //! Stream (seed, stream_id) starting at counter zero.
  Philox4x64(std::uint64_t seed, std::uint64_t stream_id)
      : key_{seed, stream_id}, ctr_{0, 0, 0, 0}, pos_(4) {}

  //! The raw 10-round block function; pure, no state.
  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      ctr = one_round(ctr, key);
      if (round < 9) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
    }
    return ctr;
  }

  std::uint64_t next_u64() {
    if (pos_ == 4) {
      buf_ = block(ctr_, key_);
      increment();
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  //! Uniform double in [0, 1) from the top 53 bits.
  double next_u01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kMult0 = 0xD2E7470EE14C6C93ull;
  static constexpr std::uint64_t kMult1 = 0xCA5A826395121157ull;
  static constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ull;
  static constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73Bull;

  static void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi,
                      std::uint64_t& lo) {
    const unsigned __int128 p =
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
    hi = static_cast<std::uint64_t>(p >> 64);
    lo = static_cast<std::uint64_t>(p);
  }

  static Counter one_round(const Counter& c, const Key& k) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMult0, c[0], hi0, lo0);
    mulhilo(kMult1, c[2], hi1, lo1);
    return Counter{hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
  }

  void increment() {
    for (int i = 0; i < 4; ++i) {
      if (++ctr_[i] != 0) break;
    }
  }

  Key key_;
  Counter ctr_;
  Counter buf_{};
  int pos_;
};

}  // namespace bbcluster::rng

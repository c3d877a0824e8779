#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace sksaw {

/// Philox4x64-10 block function (Salmon et al., counter-based RNG).
std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> counter,
                                        std::array<std::uint64_t, 2> key);

/// Counter-based random stream. The stream for (seed, stream_id) is fully
/// determined by those two numbers, so sample i always sees the same
/// randomness no matter which worker runs it.
///
/// Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    if (pos_ == 4) refill();
    return block_[pos_++];
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Exactly uniform index in [0, k) for 1 <= k <= 4. Consumes only the bits
  /// it needs (rejection on two bits for k = 3).
  int uniform_index(int k);

  bool coin() { return take_bits(1) != 0; }

  std::uint64_t seed() const { return key_[0]; }
  std::uint64_t stream_id() const { return key_[1]; }

 private:
  void refill();
  unsigned take_bits(int n);

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{};
  std::array<std::uint64_t, 4> block_{};
  int pos_ = 4;
  std::uint64_t bits_ = 0;
  int nbits_ = 0;
};

}  // namespace sksaw

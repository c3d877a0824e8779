#include "sksaw/random.hpp"

#include <stdexcept>

namespace sksaw {

namespace {

constexpr std::uint64_t kMul0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kMul1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kWeyl0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kWeyl1 = 0xBB67AE8584CAA73BULL;

inline void mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi, std::uint64_t& lo) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  lo = static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> philox4x64(std::array<std::uint64_t, 4> ctr,
                                        std::array<std::uint64_t, 2> key) {
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += kWeyl0;
    key[1] += kWeyl1;
  }
  return ctr;
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : key_{seed, stream_id} {}

void RandomStream::refill() {
  block_ = philox4x64(counter_, key_);
  pos_ = 0;
  // 256-bit counter increment; the low word alone never wraps in practice.
  for (auto& c : counter_) {
    if (++c != 0) break;
  }
}

unsigned RandomStream::take_bits(int n) {
  if (nbits_ < n) {
    bits_ = (*this)();
    nbits_ = 64;
  }
  const unsigned out = static_cast<unsigned>(bits_ & ((1u << n) - 1u));
  bits_ >>= n;
  nbits_ -= n;
  return out;
}

int RandomStream::uniform_index(int k) {
  switch (k) {
    case 1:
      return 0;
    case 2:
      return static_cast<int>(take_bits(1));
    case 3:
      for (;;) {
        const unsigned v = take_bits(2);
        if (v < 3) return static_cast<int>(v);
      }
    case 4:
      return static_cast<int>(take_bits(2));
    default:
      throw std::invalid_argument("uniform_index: k must be in [1, 4]");
  }
}

}  // namespace sksaw

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace dspp {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

// Counter-based pseudo-random stream: the SplitMix64 output function applied
// to key + counter. Distinct (seed, stream) pairs give statistically
// independent streams, and split() derives further independent substreams
// without consuming draws. Every library operation takes its stream
// explicitly and documents its draw order, so fixed-seed runs are
// bit-identical.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(detail::mix64(detail::mix64(seed + detail::kGolden) +
                           stream * 0xD1B54A32D192ED03ULL)),
        ctr_(0) {}

  std::uint64_t next_u64() noexcept {
    return detail::mix64(key_ + ++ctr_ * detail::kGolden);
  }

  // Uniform on the open interval (0, 1); never 0 or 1, so logs are safe.
  double next_double() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Inverse-CDF exponential draw; one uniform consumed.
  double exponential(double rate) noexcept {
    return -std::log(next_double()) / rate;
  }

  // One uniform consumed. Modulo bias is below 1e-13 for n up to 1e6.
  std::size_t uniform_index(std::size_t n) noexcept {
    return static_cast<std::size_t>(next_u64() % n);
  }

  // Standard normal via Box-Muller; two uniforms consumed.
  double normal() noexcept {
    const double u1 = next_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
  }

  // Independent stream addressed by `substream`; consumes no draws.
  RandomStream split(std::uint64_t substream) const noexcept {
    RandomStream child(0);
    child.key_ = detail::mix64(key_ ^ detail::mix64(substream + detail::kGolden));
    child.ctr_ = 0;
    return child;
  }

 private:
  std::uint64_t key_;
  std::uint64_t ctr_;
};

}  // namespace dspp

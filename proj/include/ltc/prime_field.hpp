#pragma once

#include <cstdint>
#include <random>

namespace ltc {

/// Arithmetic in the prime field F_p with p = 2^61 - 1 (a Mersenne prime).
/// Products are formed in 128-bit intermediates, so no operation overflows.
/// Used for randomized exact rank computations; all deterministic witnesses
/// use characteristic-zero integer arithmetic instead.
class Fp61 {
public:
  static constexpr std::uint64_t p = (std::uint64_t{1} << 61) - 1;

  constexpr Fp61() : v_(0) {}
  constexpr explicit Fp61(std::uint64_t v) : v_(v % p) {}

  /// Embeds a (possibly negative) machine integer.
  static constexpr Fp61 from_int(long long x) {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    Fp61 f;
    f.v_ = static_cast<std::uint64_t>(r);
    return f;
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Fp61 operator+(Fp61 a, Fp61 b) {
    std::uint64_t s = a.v_ + b.v_;
    if (s >= p) s -= p;
    Fp61 f;
    f.v_ = s;
    return f;
  }
  friend constexpr Fp61 operator-(Fp61 a, Fp61 b) {
    std::uint64_t s = a.v_ + p - b.v_;
    if (s >= p) s -= p;
    Fp61 f;
    f.v_ = s;
    return f;
  }
  friend constexpr Fp61 operator*(Fp61 a, Fp61 b) {
    unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    Fp61 f;
    f.v_ = static_cast<std::uint64_t>(prod % p);
    return f;
  }
  friend constexpr bool operator==(Fp61 a, Fp61 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Fp61 a, Fp61 b) { return a.v_ != b.v_; }

  constexpr Fp61 neg() const {
    Fp61 f;
    f.v_ = v_ == 0 ? 0 : p - v_;
    return f;
  }

  Fp61 inverse() const {
    // p is prime, so a^(p-2) = a^-1 for a != 0.
    Fp61 base = *this, acc;
    acc.v_ = 1;
    std::uint64_t e = p - 2;
    while (e != 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

private:
  std::uint64_t v_;
};

/// Deterministic RNG stream derived from (seed, stream index).  Independent
/// tasks draw from disjoint streams, so results do not depend on scheduling.
inline std::mt19937_64 rng_stream(std::uint64_t seed, std::uint64_t stream) {
  // SplitMix64 mixing of the pair; the constants are the reference ones.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

/// Uniform element of F_p (rejection sampling, bias-free, deterministic).
inline Fp61 random_fp(std::mt19937_64& rng) {
  for (;;) {
    std::uint64_t x = rng() & ((std::uint64_t{1} << 62) - 1);
    if (x < 2 * Fp61::p) {
      Fp61 f(x);
      return f;
    }
  }
}

} // namespace ltc

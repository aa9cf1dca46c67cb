#pragma once

#include <cstdint>

namespace brim {

// splitmix64: tiny, portable, bit-stable across platforms. mt19937_64
// would also do, but distributions in <random> are not portable and the
// output records promise byte-identical reruns.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish value in [1, bound]. Modulo bias is irrelevant here.
  std::int64_t point(std::int64_t bound) {
    return static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(bound)) + 1;
  }

  // Derive an independent stream, used when an operation fans out.
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9E3779B97F4A7C15ULL));
  }

private:
  std::uint64_t state_;
};

}  // namespace brim

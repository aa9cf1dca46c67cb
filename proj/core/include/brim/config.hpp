#pragma once

#include <cstdint>

#include "brim/errors.hpp"

namespace brim {

// Knobs shared by the Groebner engine and the multiplicity machinery.
// All randomized operations take the seed from here so identical
// (input, seed) pairs reproduce bit-identical results.
struct Config {
  // Reduction-step budget for one Groebner run. Exceeding it raises
  // ResourceError, never a wrong answer.
  std::uint64_t budget = 1'000'000;

  // Highest sample index for the length polynomial is nmax_base + s.
  int nmax_base = 12;

  // Extra degrees summed past the last generator degree when certifying
  // that a length is finite.
  int length_slack = 10;

  // Independent trials for randomized rank / fiber computations.
  int rank_trials = 5;

  // Evaluation points are drawn from {1..rank_point_bound}.
  std::int64_t rank_point_bound = 1'000'000;

  std::uint64_t seed = 0;
};

// Mutable reduction counter threaded through one engine call.
class Budget {
public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t steps = 1) {
    used_ += steps;
    if (used_ > limit_)
      throw ResourceError("reduction budget exceeded (" +
                          std::to_string(limit_) + " steps)");
  }

  std::uint64_t used() const { return used_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

}  // namespace brim

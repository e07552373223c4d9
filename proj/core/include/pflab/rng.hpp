#ifndef PFLAB_RNG_HPP
#define PFLAB_RNG_HPP

#include <cstdint>
#include <initializer_list>

#include "pflab/rational.hpp"

namespace pflab {

// Counter-based deterministic stream: the state is a pure function of
// (seed, stream ids, draw counter), so independently constructed streams
// reproduce bit-identically regardless of thread scheduling.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream = {});

    std::uint64_t next_u64();
    // uniform in [0, bound), bound > 0
    std::uint64_t next_below(std::uint64_t bound);
    // uniform integer in [lo, hi] inclusive
    long uniform_int(long lo, long hi);

    // Uniform rational on [lo, hi] with denominator <= max_den: draws the
    // denominator uniformly, then the numerator uniformly over the valid
    // range.  exclude_lo / exclude_hi drop the exact endpoints.
    Rational uniform_rational(const Rational& lo, const Rational& hi, long max_den,
                              bool exclude_lo = false, bool exclude_hi = false);

private:
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace pflab

#endif

#include "pflab/rng.hpp"

#include <stdexcept>

namespace pflab {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

Rng::Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) : base_(splitmix64(seed)) {
    for (std::uint64_t id : stream) base_ = splitmix64(base_ ^ (id + 0x9E3779B97F4A7C15ull));
}

std::uint64_t Rng::next_u64() {
    return splitmix64(base_ + ++counter_ * 0xD1B54A32D192ED03ull);
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: zero bound");
    // rejection to keep the draw unbiased
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % bound;
}

long Rng::uniform_int(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
    return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo) + 1));
}

Rational Rng::uniform_rational(const Rational& lo, const Rational& hi, long max_den,
                               bool exclude_lo, bool exclude_hi) {
    if (max_den < 1) throw std::invalid_argument("uniform_rational: max_den < 1");
    if (lo > hi || (lo == hi && (exclude_lo || exclude_hi)))
        throw std::invalid_argument("uniform_rational: empty range");
    if (lo == hi) return lo;
    if ((hi - lo) * max_den < 1)
        throw std::invalid_argument("uniform_rational: denominator bound too small for range");

    for (int attempt = 0; attempt < 1024; ++attempt) {
        const long den = uniform_int(1, max_den);
        // numerator range for value in [lo, hi]
        Integer num_lo, num_hi;
        mpz_cdiv_q(num_lo.get_mpz_t(), Rational(lo * den).get_num_mpz_t(),
                   Rational(lo * den).get_den_mpz_t());
        mpz_fdiv_q(num_hi.get_mpz_t(), Rational(hi * den).get_num_mpz_t(),
                   Rational(hi * den).get_den_mpz_t());
        if (num_lo > num_hi) continue;
        const Integer span = num_hi - num_lo + 1;
        Integer offset;
        if (span.fits_ulong_p()) {
            offset = static_cast<unsigned long>(next_below(span.get_ui()));
        } else {
            // spans beyond 2^64 never occur at desk scale; take the low word
            offset = static_cast<unsigned long>(next_below(UINT64_MAX));
            offset %= span;
        }
        Rational value = make_rational(num_lo + offset, den);
        if (exclude_lo && value == lo) continue;
        if (exclude_hi && value == hi) continue;
        return value;
    }
    throw std::runtime_error("uniform_rational: sampling failed to terminate");
}

}  // namespace pflab

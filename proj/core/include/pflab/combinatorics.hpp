#ifndef PFLAB_COMBINATORICS_HPP
#define PFLAB_COMBINATORICS_HPP

#include <vector>

#include "pflab/polynomial.hpp"
#include "pflab/rational.hpp"

namespace pflab {

// Sorted ascending multiset of rationals; repetitions allowed.
class Multiset {
public:
    Multiset() = default;
    explicit Multiset(std::vector<Rational> elements);

    const std::vector<Rational>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool all_positive() const;

    friend bool operator==(const Multiset& a, const Multiset& b) = default;

private:
    std::vector<Rational> elements_;
};

// (x + shift)_k = prod_{i=0}^{k-1} (x + shift + i); degree k, (.)_0 = 1.
Polynomial pochhammer(const Rational& shift, int k);

// Rising factorial evaluated at a point.
Rational pochhammer_value(const Rational& base, int k);

// C(n, k); zero outside 0 <= k <= n.
Rational binomial(int n, int k);

// n! / prod(parts[i]!); rejects negative parts or sum(parts) != n.
Rational multinomial(int n, const std::vector<int>& parts);

// Unsigned Stirling numbers of the first kind, S^p_j = coefficient of x^j
// in (x)_p.  S^0_0 = 1, S^p_0 = 0 for p >= 1, S^p_q = 0 for q > p.
// Memoized; safe to call concurrently.
Rational stirling_first_unsigned(int p, int j);

// [e_0, ..., e_q] for a multiset of size q; e_0 = 1.
std::vector<Rational> elementary_symmetric_all(const Multiset& vals);

}  // namespace pflab

#endif

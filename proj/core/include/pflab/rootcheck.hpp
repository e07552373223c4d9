#ifndef PFLAB_ROOTCHECK_HPP
#define PFLAB_ROOTCHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "pflab/combinatorics.hpp"
#include "pflab/polynomial.hpp"
#include "pflab/sequence.hpp"

namespace pflab {

enum class VerdictKind { all_coeffs_positive, hurwitz_stable, real_rooted_negative };

struct VerdictWitness {
    std::string code;  // machine-readable: "nonpositive_coefficient", "hurwitz_minor", ...
    long index = -1;
    std::string detail;
};

struct StabilityVerdict {
    VerdictKind kind;
    bool holds = false;
    std::optional<VerdictWitness> witness;  // present iff !holds
};

const char* verdict_kind_name(VerdictKind kind);

// holds iff every coefficient 0..degree is > 0 and, when given, the degree
// matches.  The zero polynomial never holds.
StabilityVerdict coeffs_positive(const Polynomial& p,
                                 std::optional<int> expected_degree = std::nullopt);

// All roots in the open left half-plane, decided by the Hurwitz-determinant
// criterion after normalizing the leading coefficient positive.  A zero or
// negative leading principal minor reports its index.  Degree 0 is vacuously
// stable.  Rejects the zero polynomial.
StabilityVerdict hurwitz_stable(const Polynomial& p);

// All roots real and strictly negative: the squarefree part must have full
// real root count (Sturm over (-inf, inf)) and no root in [0, inf).
// Rejects the zero polynomial.
StabilityVerdict real_rooted_negative(const Polynomial& p);

// Interval endpoint, possibly infinite.
struct Endpoint {
    enum class Kind { neg_inf, finite, pos_inf };
    Kind kind = Kind::finite;
    Rational value = 0;

    static Endpoint neg_inf() { return {Kind::neg_inf, 0}; }
    static Endpoint pos_inf() { return {Kind::pos_inf, 0}; }
    static Endpoint at(const Rational& v) { return {Kind::finite, v}; }
};

// Number of distinct real roots of squarefree p in (a, b]; rejects zero or
// non-squarefree input.
int sturm_count(const Polynomial& p, const Endpoint& a, const Endpoint& b);

// Sign changes in a sequence, zeros skipped.
int sign_changes(const std::vector<Rational>& seq);

// The weighted sum sum_{0<=k<=n/2} f_k f_{n-k} M_k together with the
// hypothesis flags under which it is guaranteed nonnegative.
struct Lemma1Result {
    Rational sum;
    bool m_last_positive = false;
    bool m_sum_nonneg = false;
    bool m_one_sign_change = false;
    bool f_admissible = false;
    bool f_log_concave = false;

    bool applicable() const {
        return m_last_positive && m_sum_nonneg && m_one_sign_change && f_admissible &&
               f_log_concave;
    }
};

// Rejects len(M) != floor(n/2)+1; hypothesis violations are reported in the
// flags, not fatal.
Lemma1Result lemma1_sum(const Sequence& f, const std::vector<Rational>& m_weights);

// B weakly supermajorized by A: equal sizes, all positive, every ascending
// partial sum of A bounded by the one of B.  Rejects size mismatch or
// nonpositive elements.
bool weak_supermajorized(const Multiset& b, const Multiset& a);

// e_k(A)/e_{k-1}(A) <= e_k(B)/e_{k-1}(B), compared exactly by cross
// multiplication.  Rejects unless weak_supermajorized(B, A) and 1 <= k <= q.
bool esp_ratio_decreases(const Multiset& b, const Multiset& a, int k);

}  // namespace pflab

#endif

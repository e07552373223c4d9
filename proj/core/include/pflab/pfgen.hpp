#ifndef PFLAB_PFGEN_HPP
#define PFLAB_PFGEN_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pflab/rational.hpp"
#include "pflab/sequence.hpp"

namespace pflab {

// Thrown when a generator's exact post-verification fails (the caller is
// expected to resample); distinct from precondition violations.
struct GeneratorRejection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
    enum class Class { pf2, pf_r_cosbound, pf_r_sector, pf_inf_roots, q3, geometric, ones };

    Class cls = Class::pf2;
    int n = 4;
    int r = 3;  // for the pf_r classes
    std::uint64_t seed = 0;
    Rational delta_min = make_rational(1, 16);
    long denominator_bound = 64;
    bool strict = false;  // strict log-concavity required

    static const char* class_name(Class c);
    static Class class_from_name(const std::string& name);
};

struct MinorWitness {
    std::vector<int> rows;  // 0-based indices into the Toeplitz window
    std::vector<int> cols;
    Rational value;  // < 0
};

struct MinorCheckResult {
    int order_checked = 0;
    bool ok = false;
    std::optional<MinorWitness> witness;  // present iff !ok
};

// f_k = f_0^{k+1} delta_1^k delta_2^{k-1} ... delta_k; rejects f0 <= 0 or
// any delta outside (0, 1].  len(deltas) = n, output length n+1.
Sequence gen_pf2(int n, const Rational& f0, const std::vector<Rational>& deltas);

// Exact inverse of gen_pf2 over the positive prefix: delta_1 = f_1/f_0^2,
// delta_k = f_{k-2} f_k / f_{k-1}^2 for k >= 2.
std::vector<Rational> recover_pf2_deltas(const Sequence& f);

// Ascending coefficients of prod (x + a_i); all roots must be positive.
Sequence gen_pf_inf(const std::vector<Rational>& roots);

// Katkova-Vishnyakova: deltas bounded by kv_delta_bound(r) give a PF_r
// sequence via the pf2 recipe.
Sequence gen_pf_r_cosbound(int n, int r, const Rational& f0,
                           const std::vector<Rational>& deltas);

// Rational lower bound on 1/(4 cos^2(pi/(r+1))); exact for r in {2, 3, 5},
// else certified to 30 decimal digits and rounded down.
Rational kv_delta_bound(int r);

// One conjugate root pair for the sector generator; the angle is given as a
// fraction of pi, so the sector bound angle < pi/(r+1) is an exact rational
// comparison.
struct SectorPair {
    Rational modulus;       // rho > 0
    Rational angle_pi_frac; // angle = angle_pi_frac * pi, in [0, 1/(r+1))
};

// Schoenberg sector: coefficients of prod (x + a_i) * prod (x^2 +
// 2 rho cos(angle) x + rho^2), with cos evaluated in high precision and the
// coefficients rationalized to denominator <= max_den.  The result is
// re-verified with check_pf_r; a GeneratorRejection is thrown if the
// rationalized sequence fails.
Sequence gen_pf_r_sector(int r, const std::vector<Rational>& real_roots,
                         const std::vector<SectorPair>& pairs, long max_den);

// Ostrovskii-Zheltukhina Q3 recipe: f_0, f_1 = f_0 beta, and the
// alpha-recursion evaluated in 256-bit precision, rationalized to
// denominator <= max_den and re-verified as PF_3 (GeneratorRejection on
// failure).  deltas are indexed 2..n (vector of length n-1), each in [0,1],
// no internal zeros.
Sequence gen_q3(int n, const Rational& f0, const Rational& beta,
                const std::vector<Rational>& deltas, long max_den);

// All minors of order <= r of the upper-triangular Toeplitz matrix of f,
// over the index window 0..n+r; exact.  The first negative minor found (in
// (order, rows, cols) lexicographic order) becomes the witness.
MinorCheckResult check_pf_r(const Sequence& f, int r);

// ASW: PF_inf iff the generating polynomial has only real negative zeros.
bool check_pf_inf(const Sequence& f);

// Admissible and f_k^2 >= f_{k-1} f_{k+1} for every interior k (strictly,
// when requested).
bool check_log_concave(const Sequence& f, bool strict);

// g_m = C(2p-1, p) f_m^2 + sum_{j=1}^{p} (-1)^j C(2p, p-j) f_{m-j} f_{m+j},
// zero padding outside 0..n.  Preserves PF_inf (verified in tests).
Sequence grabarek_transform(const Sequence& f, int p);

enum class BrandenVariant { diagonal, offdiagonal };

// diagonal:    g_m = sum_j alpha_j f_{m-j} f_{m+j},   m = 0..n
// offdiagonal: g_m = sum_j alpha_j f_{m-j} f_{m+1+j}, m = 0..n-1
Sequence branden_operator(const Sequence& f, const std::vector<Rational>& alphas,
                          BrandenVariant variant);

// Best rational approximation with denominator <= max_den (continued
// fraction with a semiconvergent cut).
Rational best_rational_approx(const Rational& value, const Integer& max_den);

}  // namespace pflab

#endif

#ifndef PFLAB_DETPOLY_HPP
#define PFLAB_DETPOLY_HPP

#include "pflab/combinatorics.hpp"
#include "pflab/polynomial.hpp"
#include "pflab/sequence.hpp"

namespace pflab {

// Per-k data of the Phi decomposition of P_n.  Phi_k is taken in the
// symmetric-pair normalization
//     Phi_k = 2(x)_k(x)_{n-k} - (x-1)_k(x+1)_{n-k} - (x-1)_{n-k}(x+1)_k
// uniformly for 0 <= k <= n/2 (at k = n/2 the two cross terms coincide),
// so A_k = n(n-1)-4k(n-k) and B_k = n(n-1)-2k(n-k) hold for every k >= 1
// with no middle-index special case; the reconstruction sum weights the
// k = n/2 term by 1/2 instead.
struct PhiDecomposition {
    int n = 0;
    int k = 0;
    Rational a_k;       // A_k
    Rational b_k;       // B_k
    Polynomial l_k;     // -A_k x + B_k (constant -n(n-1) at k = 0)
    Multiset chi_k;     // factor shifts: phi_k = x^[k>=1] * l_k * prod (x+e)
    Polynomial phi_k;
};

// Q_n^{a,b}(x) = sum_k f_k f_{n-k} C(n,k) [(x+a)_k(x+b)_{n-k} - (x+a+b)_k(x)_{n-k}].
// Rejects n < 2, alpha <= 0, beta <= 0, or fewer than n+1 sequence values.
Polynomial build_Q(int n, const Rational& alpha, const Rational& beta, const Sequence& f);

// P_n(x) = Q_n^{1,1}(x-1).
Polynomial build_P(int n, const Sequence& f);

// Rejects k outside [0, n/2] or n < 2.
PhiDecomposition phi(int n, int k);

// P_n rebuilt from the Phi decomposition; must equal build_P exactly.
Polynomial build_P_via_phi(int n, const Sequence& f);

// Coefficient of x^m in P_n by the closed Stirling-number form,
// m in [0, n-2]; p_n(0) = n!(f_1 f_{n-1} - f_0 f_n).
Rational coeff_p(int n, int m, const Sequence& f);

// P_n^r(x): sum over compositions k_1+...+k_r = n of
// multinomial * f_{k_1}...f_{k_r} * det[(x+j-i)_{k_i}]_{i,j=1..r}.
// Rejects r < 2, n < 0, or fewer than n+1 sequence values.
Polynomial build_P_r(int n, int r, const Sequence& f);

// Independent route: z-truncated r x r Toeplitz determinant of the series
// f(x+j-i; z), coefficient of z^n, times n!.
Polynomial series_oracle(int n, int r, const Sequence& f);

// f_k = 1/(c)_k for k = 0..n; rejects c <= 0.
Sequence reciprocal_pochhammer_sequence(const Rational& c, int n);

}  // namespace pflab

#endif

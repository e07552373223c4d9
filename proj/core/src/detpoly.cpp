#include "pflab/detpoly.hpp"

#include <functional>
#include <stdexcept>

namespace pflab {

namespace {

void require_sequence_length(const Sequence& f, int n, const char* who) {
    if (static_cast<int>(f.values.size()) < n + 1)
        throw std::invalid_argument(std::string(who) + ": sequence shorter than n+1");
}

// det of a square Polynomial matrix by cofactor expansion along the first
// row; division-free, fine for r <= 5.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t r = m.size();
    if (r == 1) return m[0][0];
    if (r == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Polynomial det;
    std::vector<std::vector<Polynomial>> minor(r - 1, std::vector<Polynomial>(r - 1));
    for (std::size_t c = 0; c < r; ++c) {
        if (m[0][c].is_zero()) continue;
        for (std::size_t i = 1; i < r; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < r; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Polynomial term = m[0][c] * poly_det(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

Polynomial build_Q(int n, const Rational& alpha, const Rational& beta, const Sequence& f) {
    if (n < 2) throw std::invalid_argument("build_Q: n must be >= 2");
    if (alpha <= 0 || beta <= 0) throw std::invalid_argument("build_Q: alpha and beta must be positive");
    require_sequence_length(f, n, "build_Q");

    Polynomial q;
    const Rational ab = alpha + beta;
    for (int k = 0; k <= n; ++k) {
        Rational weight = f.values[static_cast<std::size_t>(k)] *
                          f.values[static_cast<std::size_t>(n - k)] * binomial(n, k);
        if (weight == 0) continue;
        Polynomial bracket = pochhammer(alpha, k) * pochhammer(beta, n - k) -
                             pochhammer(ab, k) * pochhammer(0, n - k);
        q += weight * bracket;
    }
    return q;
}

Polynomial build_P(int n, const Sequence& f) {
    return build_Q(n, 1, 1, f).shifted_argument(-1);
}

PhiDecomposition phi(int n, int k) {
    if (n < 2) throw std::invalid_argument("phi: n must be >= 2");
    if (k < 0 || 2 * k > n) throw std::invalid_argument("phi: k outside [0, n/2]");

    PhiDecomposition d;
    d.n = n;
    d.k = k;

    const Rational nn1 = Rational(n) * (n - 1);
    std::vector<Rational> chi;
    if (k == 0) {
        d.a_k = nn1;
        d.b_k = nn1;
        d.l_k = Polynomial::constant(-nn1);
        for (int e = 1; e <= n - 2; ++e) chi.emplace_back(e);
    } else {
        d.a_k = nn1 - Rational(4) * k * (n - k);
        d.b_k = nn1 - Rational(2) * k * (n - k);
        d.l_k = Polynomial(std::vector<Rational>{d.b_k, -d.a_k});
        if (k == 1) {
            for (int e = 1; e <= n - 3; ++e) chi.emplace_back(e);
        } else if (k == 2) {
            for (int e = 1; e <= n - 4; ++e) chi.emplace_back(e);
        } else {
            for (int e = 1; e <= k - 2; ++e) {
                chi.emplace_back(e);
                chi.emplace_back(e);
            }
            for (int e = k - 1; e <= n - k - 2; ++e) chi.emplace_back(e);
        }
    }
    d.chi_k = Multiset(std::move(chi));

    d.phi_k = Rational(2) * (pochhammer(0, k) * pochhammer(0, n - k)) -
              pochhammer(-1, k) * pochhammer(1, n - k) -
              pochhammer(-1, n - k) * pochhammer(1, k);
    return d;
}

Polynomial build_P_via_phi(int n, const Sequence& f) {
    if (n < 2) throw std::invalid_argument("build_P_via_phi: n must be >= 2");
    require_sequence_length(f, n, "build_P_via_phi");

    Polynomial p;
    for (int k = 0; 2 * k <= n; ++k) {
        Rational weight = f.values[static_cast<std::size_t>(k)] *
                          f.values[static_cast<std::size_t>(n - k)] * binomial(n, k);
        if (2 * k == n) weight /= 2;  // middle Phi carries both coincident cross terms
        if (weight == 0) continue;
        p += weight * phi(n, k).phi_k;
    }
    return p;
}

Rational coeff_p(int n, int m, const Sequence& f) {
    if (n < 2) throw std::invalid_argument("coeff_p: n must be >= 2");
    if (m < 0 || m > n - 2) throw std::invalid_argument("coeff_p: m outside [0, n-2]");
    require_sequence_length(f, n, "coeff_p");

    const auto& v = f.values;
    auto fv = [&](int i) -> const Rational& { return v[static_cast<std::size_t>(i)]; };

    if (m == 0) return Rational(factorial(static_cast<unsigned long>(n))) * (fv(1) * fv(n - 1) - fv(0) * fv(n));

    const Rational nn1 = Rational(n) * (n - 1);
    Rational acc = -nn1 * stirling_first_unsigned(n - 1, m + 1) * fv(0) * fv(n);
    for (int k = 1; 2 * k <= n; ++k) {
        const Rational a_k = nn1 - Rational(4) * k * (n - k);
        const Rational b_k = nn1 - Rational(2) * k * (n - k);
        Rational inner = 0;
        for (int i = 0; i <= m; ++i) {
            Rational s1 = stirling_first_unsigned(k - 1, i);
            if (s1 == 0) continue;
            inner += s1 * (b_k * stirling_first_unsigned(n - k - 1, m - i + 1) -
                           a_k * stirling_first_unsigned(n - k - 1, m - i));
        }
        Rational weight = fv(k) * fv(n - k) * binomial(n, k);
        if (2 * k == n) weight /= 2;
        acc += weight * inner;
    }
    return acc;
}

Polynomial build_P_r(int n, int r, const Sequence& f) {
    if (r < 2) throw std::invalid_argument("build_P_r: r must be >= 2");
    if (n < 0) throw std::invalid_argument("build_P_r: n must be >= 0");
    require_sequence_length(f, n, "build_P_r");

    // poch[s + r - 1][k] = (x + s)_k for the shifts s = j - i in [-(r-1), r-1].
    std::vector<std::vector<Polynomial>> poch(static_cast<std::size_t>(2 * r - 1));
    for (int s = -(r - 1); s <= r - 1; ++s) {
        auto& row = poch[static_cast<std::size_t>(s + r - 1)];
        row.resize(static_cast<std::size_t>(n) + 1);
        row[0] = Polynomial::constant(1);
        for (int k = 1; k <= n; ++k)
            row[static_cast<std::size_t>(k)] =
                row[static_cast<std::size_t>(k - 1)] * Polynomial(std::vector<Rational>{Rational(s + k - 1), 1});
    }

    Polynomial p;
    std::vector<int> parts(static_cast<std::size_t>(r), 0);
    parts[0] = n;
    std::vector<std::vector<Polynomial>> matrix(static_cast<std::size_t>(r),
                                                std::vector<Polynomial>(static_cast<std::size_t>(r)));
    while (true) {
        Rational weight = multinomial(n, parts);
        for (int i = 0; i < r; ++i) weight *= f.values[static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])];
        if (weight != 0) {
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        poch[static_cast<std::size_t>(j - i + r - 1)]
                            [static_cast<std::size_t>(parts[static_cast<std::size_t>(i)])];
            p += weight * poly_det(matrix);
        }

        // next composition, lexicographically descending from (n,0,...,0):
        // decrement the rightmost positive non-final part and fold the tail
        // into the slot after it.
        int idx = r - 2;
        while (idx >= 0 && parts[static_cast<std::size_t>(idx)] == 0) --idx;
        if (idx < 0) break;
        const int tail = parts[static_cast<std::size_t>(r - 1)];
        parts[static_cast<std::size_t>(idx)] -= 1;
        if (idx + 1 != r - 1) parts[static_cast<std::size_t>(r - 1)] = 0;
        parts[static_cast<std::size_t>(idx + 1)] = tail + 1;
    }
    return p;
}

Polynomial series_oracle(int n, int r, const Sequence& f) {
    if (r < 2) throw std::invalid_argument("series_oracle: r must be >= 2");
    if (n < 0) throw std::invalid_argument("series_oracle: n must be >= 0");
    require_sequence_length(f, n, "series_oracle");

    using TruncSeries = std::vector<Polynomial>;  // index = power of z, 0..n
    const std::size_t len = static_cast<std::size_t>(n) + 1;

    auto series_mul = [&](const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < len; ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    };

    std::function<TruncSeries(const std::vector<std::vector<TruncSeries>>&)> series_det =
        [&](const std::vector<std::vector<TruncSeries>>& m) -> TruncSeries {
        const std::size_t rr = m.size();
        if (rr == 1) return m[0][0];
        TruncSeries det(len);
        std::vector<std::vector<TruncSeries>> minor(rr - 1, std::vector<TruncSeries>(rr - 1));
        for (std::size_t c = 0; c < rr; ++c) {
            for (std::size_t i = 1; i < rr; ++i) {
                std::size_t jj = 0;
                for (std::size_t j = 0; j < rr; ++j) {
                    if (j == c) continue;
                    minor[i - 1][jj++] = m[i][j];
                }
            }
            TruncSeries term = series_mul(m[0][c], series_det(minor));
            for (std::size_t t = 0; t < len; ++t) {
                if (c % 2 == 0)
                    det[t] += term[t];
                else
                    det[t] -= term[t];
            }
        }
        return det;
    };

    std::vector<std::vector<TruncSeries>> matrix(static_cast<std::size_t>(r),
                                                 std::vector<TruncSeries>(static_cast<std::size_t>(r)));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            TruncSeries s(len);
            for (int k = 0; k <= n; ++k)
                s[static_cast<std::size_t>(k)] =
                    (f.values[static_cast<std::size_t>(k)] /
                     Rational(factorial(static_cast<unsigned long>(k)))) *
                    pochhammer(Rational(j - i), k);
            matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(s);
        }
    }

    TruncSeries det = series_det(matrix);
    return Rational(factorial(static_cast<unsigned long>(n))) * det[static_cast<std::size_t>(n)];
}

Sequence reciprocal_pochhammer_sequence(const Rational& c, int n) {
    if (c <= 0) throw std::invalid_argument("reciprocal_pochhammer_sequence: c must be positive");
    if (n < 0) throw std::invalid_argument("reciprocal_pochhammer_sequence: negative n");
    std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
    Rational poch = 1;
    for (int k = 0; k <= n; ++k) {
        values[static_cast<std::size_t>(k)] = 1 / poch;
        poch *= c + k;
    }
    return make_sequence(std::move(values), Provenance::reciprocal_pochhammer(c));
}

}  // namespace pflab

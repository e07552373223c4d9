#include "pflab/pfgen.hpp"

#include <gmp.h>
#include <mpfr.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pflab/combinatorics.hpp"
#include "pflab/polynomial.hpp"
#include "pflab/rootcheck.hpp"

namespace pflab {

namespace {

constexpr mpfr_prec_t kHighPrec = 256;

struct MpfrValue {
    mpfr_t v;
    explicit MpfrValue(mpfr_prec_t prec = kHighPrec) { mpfr_init2(v, prec); }
    MpfrValue(MpfrValue&& other) noexcept {
        mpfr_init2(v, mpfr_get_prec(other.v));
        mpfr_swap(v, other.v);
    }
    ~MpfrValue() { mpfr_clear(v); }
    MpfrValue(const MpfrValue&) = delete;
    MpfrValue& operator=(const MpfrValue&) = delete;
    MpfrValue& operator=(MpfrValue&&) = delete;
};

Rational mpfr_to_exact(const mpfr_t x) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

// f_k = f_0^{k+1} delta_1^k ... delta_k, via the running ratio
// f_k / f_{k-1} = f_0 delta_1 ... delta_k.
std::vector<Rational> fdelta_values(const Rational& f0, const std::vector<Rational>& deltas) {
    std::vector<Rational> values;
    values.reserve(deltas.size() + 1);
    values.push_back(f0);
    Rational ratio = f0;
    for (const Rational& d : deltas) {
        ratio *= d;
        values.push_back(values.back() * ratio);
    }
    return values;
}

// Laplace expansion along the first row; orders stay <= r <= 5 or so.
Integer int_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t k = m.size();
    if (k == 1) return m[0][0];
    if (k == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    Integer det = 0;
    std::vector<std::vector<Integer>> minor(k - 1, std::vector<Integer>(k - 1));
    for (std::size_t c = 0; c < k; ++c) {
        if (m[0][c] == 0) continue;
        for (std::size_t i = 1; i < k; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == c) continue;
                minor[i - 1][jj++] = m[i][j];
            }
        }
        Integer term = m[0][c] * int_det(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

}  // namespace

const char* GeneratorSpec::class_name(Class c) {
    switch (c) {
        case Class::pf2: return "pf2";
        case Class::pf_r_cosbound: return "pf_r_cosbound";
        case Class::pf_r_sector: return "pf_r_sector";
        case Class::pf_inf_roots: return "pf_inf_roots";
        case Class::q3: return "q3";
        case Class::geometric: return "geometric";
        case Class::ones: return "ones";
    }
    return "?";
}

GeneratorSpec::Class GeneratorSpec::class_from_name(const std::string& name) {
    for (Class c : {Class::pf2, Class::pf_r_cosbound, Class::pf_r_sector, Class::pf_inf_roots,
                    Class::q3, Class::geometric, Class::ones})
        if (name == class_name(c)) return c;
    throw std::invalid_argument("unknown generator class '" + name + "'");
}

Sequence gen_pf2(int n, const Rational& f0, const std::vector<Rational>& deltas) {
    if (n < 0) throw std::invalid_argument("gen_pf2: negative n");
    if (f0 <= 0) throw std::invalid_argument("gen_pf2: f0 must be positive");
    if (static_cast<int>(deltas.size()) != n)
        throw std::invalid_argument("gen_pf2: need exactly n deltas");
    for (const Rational& d : deltas)
        if (d <= 0 || d > 1) throw std::invalid_argument("gen_pf2: delta outside (0, 1]");
    return make_sequence(fdelta_values(f0, deltas), Provenance::pf2());
}

std::vector<Rational> recover_pf2_deltas(const Sequence& f) {
    const auto& v = f.values;
    std::vector<Rational> deltas;
    for (std::size_t k = 1; k < v.size(); ++k) {
        if (v[k] == 0) break;
        if (k == 1)
            deltas.push_back(v[1] / (v[0] * v[0]));
        else
            deltas.push_back(v[k - 2] * v[k] / (v[k - 1] * v[k - 1]));
    }
    return deltas;
}

Sequence gen_pf_inf(const std::vector<Rational>& roots) {
    for (const Rational& a : roots)
        if (a <= 0) throw std::invalid_argument("gen_pf_inf: roots must be positive");
    Polynomial p = Polynomial::constant(1);
    for (const Rational& a : roots) p = p * Polynomial(std::vector<Rational>{a, 1});
    return make_sequence(p.coeffs(), Provenance::pf_inf());
}

Rational kv_delta_bound(int r) {
    if (r < 2) throw std::invalid_argument("kv_delta_bound: r must be >= 2");
    if (r == 2) return 1;
    if (r == 3) return make_rational(1, 2);
    if (r == 5) return make_rational(1, 3);

    // Certified lower bound on 1/(4 cos^2(pi/(r+1))): cos is decreasing on
    // [0, pi/2], so a downward-rounded angle and upward-rounded cosine give
    // an upper bound on the cosine, hence a lower bound after inversion.
    MpfrValue angle, c;
    mpfr_const_pi(angle.v, MPFR_RNDD);
    mpfr_div_ui(angle.v, angle.v, static_cast<unsigned long>(r + 1), MPFR_RNDD);
    mpfr_cos(c.v, angle.v, MPFR_RNDU);
    mpfr_sqr(c.v, c.v, MPFR_RNDU);
    mpfr_mul_ui(c.v, c.v, 4, MPFR_RNDU);
    mpfr_ui_div(c.v, 1, c.v, MPFR_RNDD);

    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, 30);
    mpfr_mul_z(c.v, c.v, scale.get_mpz_t(), MPFR_RNDD);
    Integer numerator;
    mpfr_get_z(numerator.get_mpz_t(), c.v, MPFR_RNDD);
    return make_rational(numerator, scale);
}

Sequence gen_pf_r_cosbound(int n, int r, const Rational& f0,
                           const std::vector<Rational>& deltas) {
    if (r < 2) throw std::invalid_argument("gen_pf_r_cosbound: r must be >= 2");
    if (n < 0) throw std::invalid_argument("gen_pf_r_cosbound: negative n");
    if (f0 <= 0) throw std::invalid_argument("gen_pf_r_cosbound: f0 must be positive");
    if (static_cast<int>(deltas.size()) != n)
        throw std::invalid_argument("gen_pf_r_cosbound: need exactly n deltas");
    const Rational bound = kv_delta_bound(r);
    for (const Rational& d : deltas)
        if (d <= 0 || d > bound)
            throw std::invalid_argument("gen_pf_r_cosbound: delta outside (0, " +
                                        rational_to_string(bound) + "]");
    return make_sequence(fdelta_values(f0, deltas), Provenance::pf_r(r));
}

Rational best_rational_approx(const Rational& value, const Integer& max_den) {
    if (max_den < 1) throw std::invalid_argument("best_rational_approx: max_den < 1");
    if (value.get_den() <= max_den) return value;

    // Continued-fraction convergents with a final semiconvergent candidate.
    Integer p_prev = 1, q_prev = 0;
    Integer a0;
    mpz_fdiv_q(a0.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    Integer p_cur = a0, q_cur = 1;
    Rational rem = value - Rational(a0);

    while (rem != 0) {
        Rational x = 1 / rem;
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        rem = x - Rational(a);
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        if (q_next > max_den) {
            Integer t = (max_den - q_prev) / q_cur;
            if (t >= 1) {
                Rational semi = make_rational(p_prev + t * p_cur, q_prev + t * q_cur);
                Rational conv = make_rational(p_cur, q_cur);
                return abs(value - semi) < abs(value - conv) ? semi : conv;
            }
            return make_rational(p_cur, q_cur);
        }
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return make_rational(p_cur, q_cur);
}

Sequence gen_pf_r_sector(int r, const std::vector<Rational>& real_roots,
                         const std::vector<SectorPair>& pairs, long max_den) {
    if (r < 2) throw std::invalid_argument("gen_pf_r_sector: r must be >= 2");
    if (max_den < 1) throw std::invalid_argument("gen_pf_r_sector: max_den < 1");
    for (const Rational& a : real_roots)
        if (a <= 0) throw std::invalid_argument("gen_pf_r_sector: roots must be positive");
    const Rational sector = make_rational(1, r + 1);
    for (const SectorPair& pair : pairs) {
        if (pair.modulus <= 0) throw std::invalid_argument("gen_pf_r_sector: modulus must be positive");
        if (pair.angle_pi_frac < 0 || pair.angle_pi_frac >= sector)
            throw std::invalid_argument("gen_pf_r_sector: angle outside [0, pi/(r+1))");
    }

    Polynomial p = Polynomial::constant(1);
    for (const Rational& a : real_roots) p = p * Polynomial(std::vector<Rational>{a, 1});
    for (const SectorPair& pair : pairs) {
        Rational cos_approx;
        if (pair.angle_pi_frac == 0) {
            cos_approx = 1;
        } else {
            MpfrValue angle, c;
            mpfr_const_pi(angle.v, MPFR_RNDN);
            mpfr_mul_q(angle.v, angle.v, Rational(pair.angle_pi_frac).get_mpq_t(), MPFR_RNDN);
            mpfr_cos(c.v, angle.v, MPFR_RNDN);
            cos_approx = best_rational_approx(mpfr_to_exact(c.v), max_den);
        }
        const Rational& rho = pair.modulus;
        p = p * Polynomial(std::vector<Rational>{rho * rho, 2 * rho * cos_approx, 1});
    }

    Sequence out = make_sequence(p.coeffs(), Provenance::pf_r(r));
    if (!check_pf_r(out, r).ok)
        throw GeneratorRejection("gen_pf_r_sector: rationalized coefficients left PF_" +
                                 std::to_string(r));
    return out;
}

Sequence gen_q3(int n, const Rational& f0, const Rational& beta,
                const std::vector<Rational>& deltas, long max_den) {
    if (n < 0) throw std::invalid_argument("gen_q3: negative n");
    if (f0 <= 0) throw std::invalid_argument("gen_q3: f0 must be positive");
    if (beta < 0) throw std::invalid_argument("gen_q3: beta must be nonnegative");
    if (max_den < 1) throw std::invalid_argument("gen_q3: max_den < 1");
    if (static_cast<int>(deltas.size()) != std::max(n - 1, 0))
        throw std::invalid_argument("gen_q3: need deltas for indices 2..n");
    bool seen_zero = false;
    for (const Rational& d : deltas) {
        if (d < 0 || d > 1) throw std::invalid_argument("gen_q3: delta outside [0, 1]");
        if (d == 0)
            seen_zero = true;
        else if (seen_zero)
            throw std::invalid_argument("gen_q3: internal zero in deltas");
    }

    std::vector<Rational> values(static_cast<std::size_t>(n) + 1, Rational(0));
    values[0] = f0;
    if (n >= 1) values[1] = f0 * beta;

    if (beta > 0 && n >= 2) {
        // alpha_2 = 1 + d_2, alpha_j = 1 + d_j sqrt(alpha_{j-1});
        // f_k = f0 beta^k prod_j d_j^{k-j+1} / prod_j sqrt(alpha_j)^{k-j+2}.
        std::vector<MpfrValue> sqrt_alpha;
        for (int j = 2; j <= n; ++j) {
            MpfrValue alpha;
            if (j == 2) {
                mpfr_set_q(alpha.v, Rational(1 + deltas[0]).get_mpq_t(), MPFR_RNDN);
            } else {
                mpfr_mul_q(alpha.v, sqrt_alpha.back().v,
                           Rational(deltas[static_cast<std::size_t>(j - 2)]).get_mpq_t(),
                           MPFR_RNDN);
                mpfr_add_ui(alpha.v, alpha.v, 1, MPFR_RNDN);
            }
            sqrt_alpha.emplace_back();
            mpfr_sqrt(sqrt_alpha.back().v, alpha.v, MPFR_RNDN);
        }

        MpfrValue fk, term;
        for (int k = 2; k <= n; ++k) {
            mpfr_set_q(fk.v, Rational(f0).get_mpq_t(), MPFR_RNDN);
            MpfrValue beta_pow;
            mpfr_set_q(beta_pow.v, Rational(beta).get_mpq_t(), MPFR_RNDN);
            mpfr_pow_ui(beta_pow.v, beta_pow.v, static_cast<unsigned long>(k), MPFR_RNDN);
            mpfr_mul(fk.v, fk.v, beta_pow.v, MPFR_RNDN);
            for (int j = 2; j <= k; ++j) {
                const Rational& d = deltas[static_cast<std::size_t>(j - 2)];
                mpfr_set_q(term.v, Rational(d).get_mpq_t(), MPFR_RNDN);
                mpfr_pow_ui(term.v, term.v, static_cast<unsigned long>(k - j + 1), MPFR_RNDN);
                mpfr_mul(fk.v, fk.v, term.v, MPFR_RNDN);
                mpfr_pow_ui(term.v, sqrt_alpha[static_cast<std::size_t>(j - 2)].v,
                            static_cast<unsigned long>(k - j + 2), MPFR_RNDN);
                mpfr_div(fk.v, fk.v, term.v, MPFR_RNDN);
            }
            Rational approx = best_rational_approx(mpfr_to_exact(fk.v), max_den);
            values[static_cast<std::size_t>(k)] = approx < 0 ? Rational(0) : approx;
        }
    }

    Sequence out = make_sequence(std::move(values), Provenance::q3());
    if (!sequence_is_admissible(out))
        throw GeneratorRejection("gen_q3: rationalization produced an internal zero");
    if (!check_pf_r(out, 3).ok)
        throw GeneratorRejection("gen_q3: rationalized sequence failed the PF_3 minors");
    return out;
}

MinorCheckResult check_pf_r(const Sequence& f, int r) {
    if (r < 1) throw std::invalid_argument("check_pf_r: r must be >= 1");
    const int n = f.n();
    if (n < 0) throw std::invalid_argument("check_pf_r: empty sequence");

    // Clear denominators once: f_k = g_k / scale with scale > 0, so minor
    // signs are decided on integers and the witness value recovers exactly.
    Integer scale = 1;
    for (const Rational& v : f.values) {
        Integer den = v.get_den();
        Integer g;
        mpz_lcm(g.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        scale = g;
    }
    std::vector<Integer> g(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational scaled = f.values[static_cast<std::size_t>(k)] * Rational(scale);
        g[static_cast<std::size_t>(k)] = scaled.get_num();  // denominator is 1
    }
    auto entry = [&](int row, int col) -> Integer {
        const int d = col - row;
        if (d < 0 || d > n) return 0;
        return g[static_cast<std::size_t>(d)];
    };

    const int w = n + r;  // window indices 0..w; beyond this every minor is
                          // zero or a translate of one already enumerated
    MinorCheckResult result;
    result.order_checked = r;
    result.ok = true;

    std::vector<int> rows, cols;
    std::vector<std::vector<Integer>> m;

    std::function<bool(int)> pick_col = [&](int t) -> bool {
        const int order = static_cast<int>(rows.size());
        if (t == order) {
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        entry(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            Integer det = int_det(m);
            if (det < 0) {
                result.ok = false;
                result.witness = MinorWitness{
                    rows, cols,
                    Rational(det) / rational_pow(Rational(scale), static_cast<unsigned long>(order))};
                return true;
            }
            return false;
        }
        const int row = rows[static_cast<std::size_t>(t)];
        int lo = std::max(row, t > 0 ? cols[static_cast<std::size_t>(t - 1)] + 1 : 0);
        int hi = std::min(row + n, w);
        for (int j = lo; j <= hi; ++j) {
            cols.push_back(j);
            if (pick_col(t + 1)) return true;
            cols.pop_back();
        }
        return false;
    };

    std::function<bool(int, int)> pick_row = [&](int t, int order) -> bool {
        if (t == order) {
            cols.clear();
            return pick_col(0);
        }
        // first row pinned at 0: every minor is a translate of one with
        // row_1 = 0, and minors with col_t < row_t or col_t > row_t + n
        // vanish identically
        const int lo = (t == 0) ? 0 : rows[static_cast<std::size_t>(t - 1)] + 1;
        const int hi = (t == 0) ? 0 : w;
        for (int i = lo; i <= hi; ++i) {
            rows.push_back(i);
            if (pick_row(t + 1, order)) return true;
            rows.pop_back();
        }
        return false;
    };

    for (int order = 1; order <= r; ++order) {
        rows.clear();
        m.assign(static_cast<std::size_t>(order), std::vector<Integer>(static_cast<std::size_t>(order)));
        if (pick_row(0, order)) return result;
    }
    return result;
}

bool check_pf_inf(const Sequence& f) {
    if (f.values.empty()) throw std::invalid_argument("check_pf_inf: empty sequence");
    Polynomial gen(f.values);
    if (gen.is_zero()) return false;
    return real_rooted_negative(gen).holds;
}

bool check_log_concave(const Sequence& f, bool strict) {
    if (!sequence_is_admissible(f)) return false;
    const auto& v = f.values;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        const Rational lhs = v[k] * v[k];
        const Rational rhs = v[k - 1] * v[k + 1];
        if (strict ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
    return true;
}

Sequence grabarek_transform(const Sequence& f, int p) {
    if (p < 1) throw std::invalid_argument("grabarek_transform: p must be >= 1");
    const int n = f.n();
    auto fv = [&](int i) -> Rational {
        if (i < 0 || i > n) return 0;
        return f.values[static_cast<std::size_t>(i)];
    };
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1);
    const Rational lead = binomial(2 * p - 1, p);
    for (int m = 0; m <= n; ++m) {
        Rational acc = lead * fv(m) * fv(m);
        for (int j = 1; j <= p; ++j) {
            Rational term = binomial(2 * p, p - j) * fv(m - j) * fv(m + j);
            if (j % 2 == 1)
                acc -= term;
            else
                acc += term;
        }
        out[static_cast<std::size_t>(m)] = acc;
    }
    return make_sequence(std::move(out), Provenance::raw());
}

Sequence branden_operator(const Sequence& f, const std::vector<Rational>& alphas,
                          BrandenVariant variant) {
    const int n = f.n();
    if (n < 0) throw std::invalid_argument("branden_operator: empty sequence");
    auto fv = [&](int i) -> Rational {
        if (i < 0 || i > n) return 0;
        return f.values[static_cast<std::size_t>(i)];
    };
    const int out_len = variant == BrandenVariant::diagonal ? n + 1 : n;
    std::vector<Rational> out(static_cast<std::size_t>(std::max(out_len, 0)));
    for (int m = 0; m < out_len; ++m) {
        Rational acc = 0;
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            const int jj = static_cast<int>(j);
            if (variant == BrandenVariant::diagonal)
                acc += alphas[j] * fv(m - jj) * fv(m + jj);
            else
                acc += alphas[j] * fv(m - jj) * fv(m + 1 + jj);
        }
        out[static_cast<std::size_t>(m)] = acc;
    }
    return make_sequence(std::move(out), Provenance::raw());
}

}  // namespace pflab

#include "pflab/rootcheck.hpp"

#include <stdexcept>

namespace pflab {

namespace {

StabilityVerdict pass(VerdictKind kind) {
    return {kind, true, std::nullopt};
}

StabilityVerdict fail(VerdictKind kind, std::string code, long index, std::string detail) {
    return {kind, false, VerdictWitness{std::move(code), index, std::move(detail)}};
}

// Sign of p at an (extended) point.
int sign_at(const Polynomial& p, const Endpoint& e) {
    if (p.is_zero()) return 0;
    switch (e.kind) {
        case Endpoint::Kind::finite:
            return sign(p.eval(e.value));
        case Endpoint::Kind::pos_inf:
            return sign(p.leading_coeff());
        case Endpoint::Kind::neg_inf: {
            int s = sign(p.leading_coeff());
            return (*p.degree() % 2 == 0) ? s : -s;
        }
    }
    return 0;
}

std::vector<Polynomial> sturm_chain(const Polynomial& p) {
    std::vector<Polynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const Polynomial& a = chain[chain.size() - 2];
        const Polynomial& b = chain.back();
        if (b.degree().value_or(0) == 0) break;
        chain.push_back(-poly_divmod(a, b).remainder);
    }
    if (chain.back().is_zero()) chain.pop_back();
    return chain;
}

int sign_variations(const std::vector<Polynomial>& chain, const Endpoint& e) {
    std::vector<Rational> signs;
    signs.reserve(chain.size());
    for (const auto& q : chain) signs.emplace_back(sign_at(q, e));
    return sign_changes(signs);
}

}  // namespace

const char* verdict_kind_name(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::all_coeffs_positive: return "all_coeffs_positive";
        case VerdictKind::hurwitz_stable: return "hurwitz_stable";
        case VerdictKind::real_rooted_negative: return "real_rooted_negative";
    }
    return "?";
}

StabilityVerdict coeffs_positive(const Polynomial& p, std::optional<int> expected_degree) {
    const VerdictKind kind = VerdictKind::all_coeffs_positive;
    if (expected_degree) {
        if (p.degree() != expected_degree) {
            long actual = p.is_zero() ? -1 : static_cast<long>(*p.degree());
            return fail(kind, "degree_mismatch", actual,
                        "expected degree " + std::to_string(*expected_degree));
        }
    }
    if (p.is_zero()) return fail(kind, "zero_polynomial", -1, "no positive coefficients");
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (p.coeffs()[i] <= 0)
            return fail(kind, "nonpositive_coefficient", static_cast<long>(i),
                        rational_to_string(p.coeffs()[i]) + " at x^" + std::to_string(i));
    }
    return pass(kind);
}

StabilityVerdict hurwitz_stable(const Polynomial& p) {
    const VerdictKind kind = VerdictKind::hurwitz_stable;
    if (p.is_zero()) throw std::invalid_argument("hurwitz_stable: zero polynomial");
    const int deg = *p.degree();
    if (deg == 0) return pass(kind);

    // descending coefficients a_0..a_n with a_0 > 0
    std::vector<Rational> a(p.coeffs().rbegin(), p.coeffs().rend());
    if (a[0] < 0)
        for (auto& c : a) c = -c;

    auto coeff = [&](long idx) -> Rational {
        if (idx < 0 || idx > deg) return 0;
        return a[static_cast<std::size_t>(idx)];
    };

    // Leading principal minors of the Hurwitz matrix H[i][j] = a_{2j-i}
    // (1-based), by rational Gaussian elimination on each leading block.
    for (int order = 1; order <= deg; ++order) {
        std::vector<std::vector<Rational>> h(static_cast<std::size_t>(order),
                                             std::vector<Rational>(static_cast<std::size_t>(order)));
        for (int i = 1; i <= order; ++i)
            for (int j = 1; j <= order; ++j)
                h[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    coeff(2L * j - i);

        Rational det = 1;
        bool singular = false;
        for (int col = 0; col < order && !singular; ++col) {
            int pivot = -1;
            for (int row = col; row < order; ++row) {
                if (h[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] != 0) {
                    pivot = row;
                    break;
                }
            }
            if (pivot < 0) {
                singular = true;
                break;
            }
            if (pivot != col) {
                std::swap(h[static_cast<std::size_t>(pivot)], h[static_cast<std::size_t>(col)]);
                det = -det;
            }
            const Rational pv = h[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
            det *= pv;
            for (int row = col + 1; row < order; ++row) {
                Rational factor = h[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] / pv;
                if (factor == 0) continue;
                for (int j = col; j < order; ++j)
                    h[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -=
                        factor * h[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
        if (singular) det = 0;
        if (det <= 0)
            return fail(kind, "hurwitz_minor", order,
                        "leading principal minor " + std::to_string(order) + " = " +
                            rational_to_string(det));
    }
    return pass(kind);
}

StabilityVerdict real_rooted_negative(const Polynomial& p) {
    const VerdictKind kind = VerdictKind::real_rooted_negative;
    if (p.is_zero()) throw std::invalid_argument("real_rooted_negative: zero polynomial");
    const Polynomial q = squarefree_part(p);
    const int deg = *q.degree();
    if (deg > 0) {
        const int real_roots = sturm_count(q, Endpoint::neg_inf(), Endpoint::pos_inf());
        if (real_roots != deg)
            return fail(kind, "real_root_shortfall", real_roots,
                        std::to_string(real_roots) + " real roots, squarefree degree " +
                            std::to_string(deg));
    }
    if (p.coeff(0) == 0) return fail(kind, "nonnegative_root", 0, "root at x = 0");
    if (deg > 0) {
        const int nonneg = sturm_count(q, Endpoint::at(0), Endpoint::pos_inf());
        if (nonneg != 0)
            return fail(kind, "nonnegative_root", nonneg,
                        std::to_string(nonneg) + " roots in (0, inf)");
    }
    return pass(kind);
}

int sturm_count(const Polynomial& p, const Endpoint& a, const Endpoint& b) {
    if (p.is_zero()) throw std::invalid_argument("sturm_count: zero polynomial");
    if (poly_gcd(p, p.derivative()).degree().value_or(0) > 0)
        throw std::invalid_argument("sturm_count: polynomial is not squarefree");
    if (*p.degree() == 0) return 0;
    const auto chain = sturm_chain(p);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

int sign_changes(const std::vector<Rational>& seq) {
    int changes = 0;
    int last = 0;
    for (const Rational& v : seq) {
        const int s = sign(v);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Lemma1Result lemma1_sum(const Sequence& f, const std::vector<Rational>& m_weights) {
    const int n = f.n();
    if (n < 0) throw std::invalid_argument("lemma1_sum: empty sequence");
    const std::size_t want = static_cast<std::size_t>(n / 2) + 1;
    if (m_weights.size() != want)
        throw std::invalid_argument("lemma1_sum: need floor(n/2)+1 weights");

    Lemma1Result out;
    out.sum = 0;
    for (int k = 0; 2 * k <= n; ++k)
        out.sum += f.values[static_cast<std::size_t>(k)] *
                   f.values[static_cast<std::size_t>(n - k)] * m_weights[static_cast<std::size_t>(k)];

    out.m_last_positive = m_weights.back() > 0;
    Rational total = 0;
    for (const auto& m : m_weights) total += m;
    out.m_sum_nonneg = total >= 0;
    out.m_one_sign_change = sign_changes(m_weights) == 1;
    out.f_admissible = sequence_is_admissible(f);
    out.f_log_concave = true;
    for (int k = 1; k < n; ++k) {
        const Rational& prev = f.values[static_cast<std::size_t>(k - 1)];
        const Rational& cur = f.values[static_cast<std::size_t>(k)];
        const Rational& next = f.values[static_cast<std::size_t>(k + 1)];
        if (cur * cur < prev * next) {
            out.f_log_concave = false;
            break;
        }
    }
    return out;
}

bool weak_supermajorized(const Multiset& b, const Multiset& a) {
    if (a.size() != b.size())
        throw std::invalid_argument("weak_supermajorized: size mismatch");
    if (!a.all_positive() || !b.all_positive())
        throw std::invalid_argument("weak_supermajorized: elements must be positive");
    Rational sum_a = 0, sum_b = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum_a += a.elements()[i];
        sum_b += b.elements()[i];
        if (sum_a > sum_b) return false;
    }
    return true;
}

bool esp_ratio_decreases(const Multiset& b, const Multiset& a, int k) {
    if (!weak_supermajorized(b, a))
        throw std::invalid_argument("esp_ratio_decreases: B is not weakly supermajorized by A");
    if (k < 1 || static_cast<std::size_t>(k) > a.size())
        throw std::invalid_argument("esp_ratio_decreases: k outside [1, q]");
    const auto ea = elementary_symmetric_all(a);
    const auto eb = elementary_symmetric_all(b);
    const std::size_t kk = static_cast<std::size_t>(k);
    // e_k(A)/e_{k-1}(A) <= e_k(B)/e_{k-1}(B), denominators positive
    return ea[kk] * eb[kk - 1] <= eb[kk] * ea[kk - 1];
}

}  // namespace pflab

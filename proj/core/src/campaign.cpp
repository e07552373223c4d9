#include "pflab/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "pflab/rng.hpp"

namespace pflab {

namespace {

constexpr std::uint64_t kSequenceStream = 101;
constexpr std::uint64_t kAlphaBetaStream = 102;
constexpr std::uint64_t kSampleStream = 103;
constexpr std::uint64_t kShapeStream = 104;

int conjecture_index(Conjecture c) { return static_cast<int>(c); }

bool needs_r(Conjecture c) {
    return c == Conjecture::C4 || c == Conjecture::C5 || c == Conjecture::C6;
}

bool strict_hypothesis(Conjecture c) {
    return c == Conjecture::C1 || c == Conjecture::C2 || c == Conjecture::T1;
}

Target default_target(Conjecture c) {
    switch (c) {
        case Conjecture::C1:
        case Conjecture::C2:
        case Conjecture::TA: return Target::Q;
        case Conjecture::C3:
        case Conjecture::T1: return Target::P;
        case Conjecture::C4:
        case Conjecture::C5:
        case Conjecture::C6: return Target::Pr;
        default: return Target::P;
    }
}

GeneratorSpec::Class default_generator(Conjecture c, long trial_id) {
    switch (c) {
        case Conjecture::C1:
        case Conjecture::C2:
        case Conjecture::T1:
        case Conjecture::TA:
        case Conjecture::L1: return GeneratorSpec::Class::pf2;
        case Conjecture::C3:
        case Conjecture::C6: return GeneratorSpec::Class::pf_inf_roots;
        case Conjecture::C4:
        case Conjecture::C5:
            return trial_id % 2 == 0 ? GeneratorSpec::Class::pf_r_cosbound
                                     : GeneratorSpec::Class::pf_r_sector;
        default: return GeneratorSpec::Class::pf2;
    }
}

Rational log_uniform_root(Rng& rng) {
    const long exponent = rng.uniform_int(-3, 3);
    Rational mantissa = rng.uniform_rational(1, 2, 16);
    if (exponent >= 0) return mantissa * rational_pow(2, static_cast<unsigned long>(exponent));
    return mantissa / rational_pow(2, static_cast<unsigned long>(-exponent));
}

std::vector<Rational> draw_deltas(Rng& rng, const CampaignConfig& cfg, int count,
                                  const Rational& hi, bool strict) {
    std::vector<Rational> deltas;
    deltas.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i)
        deltas.push_back(rng.uniform_rational(cfg.delta_min, hi, cfg.denominator_bound,
                                              false, strict));
    return deltas;
}

// One draw from a generator class; throws GeneratorRejection when the exact
// post-verification fails so the caller can resample.
Sequence draw_once(GeneratorSpec::Class cls, Rng& rng, const CampaignConfig& cfg, int n, int r,
                   bool strict) {
    switch (cls) {
        case GeneratorSpec::Class::pf2: {
            Rational f0 = rng.uniform_rational(make_rational(1, 2), 2, 16);
            return gen_pf2(n, f0, draw_deltas(rng, cfg, n, 1, strict));
        }
        case GeneratorSpec::Class::pf_r_cosbound: {
            Rational f0 = rng.uniform_rational(make_rational(1, 2), 2, 16);
            const Rational bound = kv_delta_bound(r);
            Sequence f = gen_pf_r_cosbound(n, r, f0, draw_deltas(rng, cfg, n, bound, false));
            // finite truncation re-verified rather than trusted
            if (!check_pf_r(f, r).ok)
                throw GeneratorRejection("cosbound truncation failed the PF minors");
            return f;
        }
        case GeneratorSpec::Class::pf_r_sector: {
            const int pair_count = static_cast<int>(rng.uniform_int(1, std::max(1L, static_cast<long>(n / 2))));
            const int real_count = std::max(n - 2 * pair_count, 0);
            std::vector<Rational> real_roots;
            for (int i = 0; i < real_count; ++i) real_roots.push_back(log_uniform_root(rng));
            std::vector<SectorPair> pairs;
            const Rational sector = make_rational(1, r + 1);
            for (int i = 0; i < pair_count; ++i) {
                SectorPair pair;
                pair.modulus = log_uniform_root(rng);
                pair.angle_pi_frac =
                    rng.uniform_rational(0, sector, cfg.denominator_bound * (r + 1), false, true);
                pairs.push_back(pair);
            }
            return gen_pf_r_sector(r, real_roots, pairs, cfg.rationalize_den);
        }
        case GeneratorSpec::Class::pf_inf_roots: {
            std::vector<Rational> roots;
            for (int i = 0; i < n; ++i) roots.push_back(log_uniform_root(rng));
            return gen_pf_inf(roots);
        }
        case GeneratorSpec::Class::q3: {
            Rational f0 = rng.uniform_rational(make_rational(1, 2), 2, 16);
            Rational beta = rng.uniform_rational(make_rational(1, 2), 2, 16);
            std::vector<Rational> deltas =
                draw_deltas(rng, cfg, std::max(n - 1, 0), 1, false);
            return gen_q3(n, f0, beta, deltas, cfg.rationalize_den);
        }
        case GeneratorSpec::Class::geometric: {
            Rational f0 = rng.uniform_rational(make_rational(1, 2), 2, 16);
            Rational q = rng.uniform_rational(0, 2, cfg.denominator_bound, true, false);
            return geometric_sequence(f0, q, n);
        }
        case GeneratorSpec::Class::ones:
            return ones_sequence(n);
    }
    throw std::logic_error("draw_once: unhandled generator class");
}

Sequence draw_sequence(GeneratorSpec::Class cls, Rng& rng, const CampaignConfig& cfg, int n,
                       int r, bool strict, long& rejections) {
    for (int attempt = 0; attempt < cfg.rejection_cap; ++attempt) {
        try {
            return draw_once(cls, rng, cfg, n, r, strict);
        } catch (const GeneratorRejection&) {
            ++rejections;
        }
    }
    throw GeneratorRejection("generator exhausted after " + std::to_string(cfg.rejection_cap) +
                             " attempts");
}

StabilityVerdict zero_poly_failure(VerdictKind kind) {
    return {kind, false, VerdictWitness{"zero_polynomial", -1, "polynomial is identically zero"}};
}

// Stodola cross-implications; a violation is an analyzer bug, not a finding.
void check_verdict_consistency(const Polynomial& p, const StabilityVerdict& verdict) {
    if (!verdict.holds || p.is_zero()) return;
    Polynomial normalized = p.leading_coeff() < 0 ? -p : p;
    if (verdict.kind == VerdictKind::real_rooted_negative) {
        if (!hurwitz_stable(normalized).holds)
            throw std::logic_error("consistency: real negative roots but not Hurwitz stable");
        if (!coeffs_positive(normalized).holds)
            throw std::logic_error("consistency: real negative roots but nonpositive coefficient");
    } else if (verdict.kind == VerdictKind::hurwitz_stable) {
        if (!coeffs_positive(normalized).holds)
            throw std::logic_error("consistency: Hurwitz stable but nonpositive coefficient");
    }
}

void run_lemma1_trial(const CampaignConfig& cfg, Rng& rng, TrialRecord& record) {
    const int n = static_cast<int>(rng.uniform_int(cfg.n_min, cfg.n_max));
    record.n = n;
    long rejections = 0;
    Rng seq_rng(cfg.seed, {kSequenceStream, static_cast<std::uint64_t>(conjecture_index(record.conjecture)),
                           static_cast<std::uint64_t>(record.trial_id)});
    record.sequence = draw_sequence(GeneratorSpec::Class::pf2, seq_rng, cfg, n, 0, false, rejections);

    const int len = n / 2 + 1;
    std::vector<Rational> m(static_cast<std::size_t>(len));
    const int negatives = static_cast<int>(rng.uniform_int(1, len - 1));
    Rational neg_sum = 0, pos_sum = 0;
    for (int i = 0; i < len; ++i) {
        Rational magnitude = rng.uniform_rational(make_rational(1, 8), 4, 32);
        if (i < negatives) {
            m[static_cast<std::size_t>(i)] = -magnitude;
            neg_sum += magnitude;
        } else {
            m[static_cast<std::size_t>(i)] = magnitude;
            pos_sum += magnitude;
        }
    }
    if (pos_sum < neg_sum) {
        // rescale the positive block so the total lands exactly at zero,
        // which also exercises the equality clause
        const Rational factor = neg_sum / pos_sum;
        for (int i = negatives; i < len; ++i) m[static_cast<std::size_t>(i)] *= factor;
    }
    record.lemma_weights = m;

    const Lemma1Result result = lemma1_sum(record.sequence, m);
    if (!result.applicable()) {
        record.not_applicable = true;
        record.note = "lemma 1 hypotheses not satisfied by the sampled (f, M)";
        return;
    }
    if (result.sum > 0) {
        record.verdict = {VerdictKind::all_coeffs_positive, true, std::nullopt};
        return;
    }
    if (result.sum < 0) {
        record.verdict = {VerdictKind::all_coeffs_positive, false,
                          VerdictWitness{"lemma1_negative_sum", -1, rational_to_string(result.sum)}};
        return;
    }
    // equality must pin the geometric case with a zero weight total
    bool geometric = true;
    const auto& v = record.sequence.values;
    for (std::size_t k = 2; k < v.size(); ++k)
        if (v[k] * v[k - 2] != v[k - 1] * v[k - 1]) geometric = false;
    Rational m_total = 0;
    for (const auto& w : m) m_total += w;
    if (geometric && m_total == 0) {
        record.verdict = {VerdictKind::all_coeffs_positive, true, std::nullopt};
        record.note = "equality case: geometric f with zero weight sum";
    } else {
        record.verdict = {VerdictKind::all_coeffs_positive, false,
                          VerdictWitness{"lemma1_equality_violation", -1,
                                         "sum is zero without the geometric equality case"}};
    }
}

void run_lemma2_trial(const CampaignConfig& cfg, Rng& rng, TrialRecord& record) {
    const int q = static_cast<int>(rng.uniform_int(2, 8));
    record.n = q;
    std::vector<Rational> a(static_cast<std::size_t>(q));
    for (auto& x : a) x = rng.uniform_rational(make_rational(1, 4), 4, 32);
    std::sort(a.begin(), a.end());
    std::vector<Rational> b(static_cast<std::size_t>(q));
    Rational bump = 0;
    for (int i = 0; i < q; ++i) {
        bump += rng.uniform_rational(0, 1, 16);
        b[static_cast<std::size_t>(i)] = a[static_cast<std::size_t>(i)] + bump;
    }
    record.multiset_a = a;
    record.multiset_b = b;

    const Multiset ma(a), mb(b);
    for (int k = 1; k <= q; ++k) {
        if (!esp_ratio_decreases(mb, ma, k)) {
            record.verdict = {VerdictKind::all_coeffs_positive, false,
                              VerdictWitness{"lemma2_ratio_violation", k,
                                             "e_k/e_{k-1} ratio inequality failed"}};
            return;
        }
    }
    record.verdict = {VerdictKind::all_coeffs_positive, true, std::nullopt};
}

}  // namespace

const char* conjecture_name(Conjecture c) {
    switch (c) {
        case Conjecture::C1: return "C1";
        case Conjecture::C2: return "C2";
        case Conjecture::C3: return "C3";
        case Conjecture::C4: return "C4";
        case Conjecture::C5: return "C5";
        case Conjecture::C6: return "C6";
        case Conjecture::T1: return "T1";
        case Conjecture::TA: return "TA";
        case Conjecture::L1: return "L1";
        case Conjecture::L2: return "L2";
    }
    return "?";
}

Conjecture conjecture_from_name(const std::string& name) {
    for (Conjecture c : {Conjecture::C1, Conjecture::C2, Conjecture::C3, Conjecture::C4,
                         Conjecture::C5, Conjecture::C6, Conjecture::T1, Conjecture::TA,
                         Conjecture::L1, Conjecture::L2})
        if (name == conjecture_name(c)) return c;
    throw std::invalid_argument("unknown conjecture '" + name + "'");
}

const char* target_name(Target t) {
    switch (t) {
        case Target::Q: return "Q";
        case Target::P: return "P";
        case Target::Pr: return "Pr";
    }
    return "?";
}

Target target_from_name(const std::string& name) {
    if (name == "Q") return Target::Q;
    if (name == "P") return Target::P;
    if (name == "Pr") return Target::Pr;
    throw std::invalid_argument("unknown target '" + name + "'");
}

TrialRecord run_trial(const CampaignConfig& cfg, Conjecture conjecture, long trial_id) {
    const auto started = std::chrono::steady_clock::now();
    TrialRecord record;
    record.trial_id = trial_id;
    record.seed = cfg.seed;
    record.conjecture = conjecture;

    Rng rng(cfg.seed, {kShapeStream, static_cast<std::uint64_t>(conjecture_index(conjecture)),
                       static_cast<std::uint64_t>(trial_id)});

    if (conjecture == Conjecture::L1) {
        run_lemma1_trial(cfg, rng, record);
    } else if (conjecture == Conjecture::L2) {
        run_lemma2_trial(cfg, rng, record);
    } else {
        const int n = static_cast<int>(rng.uniform_int(cfg.n_min, cfg.n_max));
        const int r = needs_r(conjecture) ? static_cast<int>(rng.uniform_int(cfg.r_min, cfg.r_max)) : 0;
        record.n = n;
        record.r = r;

        const GeneratorSpec::Class cls =
            cfg.generator_override.value_or(default_generator(conjecture, trial_id));
        const bool strict = strict_hypothesis(conjecture) && !cfg.generator_override;
        const Target target = cfg.target_override.value_or(default_target(conjecture));

        long rejections = 0;
        Rng seq_rng(cfg.seed, {kSequenceStream, static_cast<std::uint64_t>(conjecture_index(conjecture)),
                               static_cast<std::uint64_t>(trial_id)});
        try {
            record.sequence = draw_sequence(cls, seq_rng, cfg, n, r, strict, rejections);
            record.rejections = rejections;
        } catch (const GeneratorRejection& e) {
            record.not_applicable = true;
            record.note = e.what();
            record.rejections = rejections;
            record.elapsed_ms = 0;
            return record;
        }

        if (target == Target::Q) {
            Rng ab_rng(cfg.seed, {kAlphaBetaStream, static_cast<std::uint64_t>(conjecture_index(conjecture)),
                                  static_cast<std::uint64_t>(trial_id)});
            record.alpha = cfg.alpha_fixed
                               ? *cfg.alpha_fixed
                               : ab_rng.uniform_rational(0, cfg.alpha_max, cfg.ab_denominator_bound, true, false);
            record.beta = cfg.beta_fixed
                              ? *cfg.beta_fixed
                              : ab_rng.uniform_rational(0, cfg.alpha_max, cfg.ab_denominator_bound, true, false);
            record.polynomial = build_Q(n, *record.alpha, *record.beta, record.sequence);
        } else if (target == Target::P) {
            record.polynomial = build_P(n, record.sequence);
        } else {
            record.polynomial = build_P_r(n, r, record.sequence);
        }

        const bool degree_vacuous = target == Target::Pr && n < r * (r - 1);
        if (record.polynomial.is_zero() && (degree_vacuous || cfg.generator_override ||
                                            cfg.target_override)) {
            record.not_applicable = true;
            record.note = degree_vacuous
                              ? "degree claim vacuous for n < r(r-1); observed zero polynomial"
                              : "zero polynomial under relaxed hypotheses";
        } else {
            switch (conjecture) {
                case Conjecture::C1:
                case Conjecture::T1:
                    record.verdict = coeffs_positive(record.polynomial, n - 2);
                    break;
                case Conjecture::C2:
                    record.verdict = record.polynomial.is_zero()
                                         ? zero_poly_failure(VerdictKind::hurwitz_stable)
                                         : hurwitz_stable(record.polynomial);
                    break;
                case Conjecture::C3:
                    record.verdict = record.polynomial.is_zero()
                                         ? zero_poly_failure(VerdictKind::real_rooted_negative)
                                         : real_rooted_negative(record.polynomial);
                    break;
                case Conjecture::C4:
                    if (degree_vacuous) {
                        record.not_applicable = true;
                        record.note = "degree claim vacuous for n < r(r-1); observed degree " +
                                      (record.polynomial.is_zero()
                                           ? std::string("none (zero polynomial)")
                                           : std::to_string(*record.polynomial.degree()));
                    } else {
                        record.verdict = coeffs_positive(record.polynomial, n - r * (r - 1));
                    }
                    break;
                case Conjecture::C5:
                    record.verdict = record.polynomial.is_zero()
                                         ? zero_poly_failure(VerdictKind::hurwitz_stable)
                                         : hurwitz_stable(record.polynomial);
                    break;
                case Conjecture::C6:
                    record.verdict = record.polynomial.is_zero()
                                         ? zero_poly_failure(VerdictKind::real_rooted_negative)
                                         : real_rooted_negative(record.polynomial);
                    break;
                case Conjecture::TA: {
                    Rng x_rng(cfg.seed, {kSampleStream, static_cast<std::uint64_t>(conjecture_index(conjecture)),
                                         static_cast<std::uint64_t>(trial_id)});
                    record.verdict = {VerdictKind::all_coeffs_positive, true, std::nullopt};
                    for (int i = 0; i < 20; ++i) {
                        Rational x = x_rng.uniform_rational(0, 20, 64);
                        record.lemma_weights.push_back(x);
                        Rational value = record.polynomial.eval(x);
                        if (value < 0) {
                            record.verdict = {VerdictKind::all_coeffs_positive, false,
                                              VerdictWitness{"negative_value_at_sample", i,
                                                             "Q(" + rational_to_string(x) + ") = " +
                                                                 rational_to_string(value)}};
                            break;
                        }
                    }
                    break;
                }
                default:
                    throw std::logic_error("run_trial: unhandled conjecture");
            }
            check_verdict_consistency(record.polynomial, record.verdict);
        }
    }

    const auto finished = std::chrono::steady_clock::now();
    record.elapsed_ms = cfg.timing
        ? std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count()
        : 0;
    return record;
}

StabilityVerdict replay_trial(const TrialRecord& record) {
    switch (record.conjecture) {
        case Conjecture::L1: {
            const Lemma1Result result = lemma1_sum(record.sequence, record.lemma_weights);
            bool ok = result.applicable() && result.sum >= 0;
            if (ok && result.sum == 0) {
                bool geometric = true;
                const auto& v = record.sequence.values;
                for (std::size_t k = 2; k < v.size(); ++k)
                    if (v[k] * v[k - 2] != v[k - 1] * v[k - 1]) geometric = false;
                Rational total = 0;
                for (const auto& w : record.lemma_weights) total += w;
                ok = geometric && total == 0;
            }
            return {VerdictKind::all_coeffs_positive, ok,
                    ok ? std::nullopt
                       : std::optional<VerdictWitness>(VerdictWitness{"lemma1_replay", -1, ""})};
        }
        case Conjecture::L2: {
            const Multiset ma(record.multiset_a), mb(record.multiset_b);
            for (std::size_t k = 1; k <= ma.size(); ++k)
                if (!esp_ratio_decreases(mb, ma, static_cast<int>(k)))
                    return {VerdictKind::all_coeffs_positive, false,
                            VerdictWitness{"lemma2_ratio_violation", static_cast<long>(k), ""}};
            return {VerdictKind::all_coeffs_positive, true, std::nullopt};
        }
        default: break;
    }

    Polynomial poly;
    if (record.alpha && record.beta)
        poly = build_Q(record.n, *record.alpha, *record.beta, record.sequence);
    else if (record.r >= 2)
        poly = build_P_r(record.n, record.r, record.sequence);
    else
        poly = build_P(record.n, record.sequence);

    switch (record.conjecture) {
        case Conjecture::C1:
        case Conjecture::T1:
            return coeffs_positive(poly, record.n - 2);
        case Conjecture::C2:
        case Conjecture::C5:
            return poly.is_zero() ? zero_poly_failure(VerdictKind::hurwitz_stable)
                                  : hurwitz_stable(poly);
        case Conjecture::C3:
        case Conjecture::C6:
            return poly.is_zero() ? zero_poly_failure(VerdictKind::real_rooted_negative)
                                  : real_rooted_negative(poly);
        case Conjecture::C4:
            return coeffs_positive(poly, record.n - record.r * (record.r - 1));
        case Conjecture::TA: {
            for (std::size_t i = 0; i < record.lemma_weights.size(); ++i) {
                const Rational& x = record.lemma_weights[i];
                Rational value = poly.eval(x);
                if (value < 0)
                    return {VerdictKind::all_coeffs_positive, false,
                            VerdictWitness{"negative_value_at_sample", static_cast<long>(i),
                                           "Q(" + rational_to_string(x) + ") = " +
                                               rational_to_string(value)}};
            }
            return {VerdictKind::all_coeffs_positive, true, std::nullopt};
        }
        default:
            throw std::logic_error("replay_trial: unhandled conjecture");
    }
}

namespace {

bool sequence_matches_provenance(const Sequence& f, Conjecture conjecture) {
    if (!sequence_is_admissible(f)) return false;
    switch (f.provenance.kind) {
        case Provenance::Kind::pf2:
            return check_log_concave(f, strict_hypothesis(conjecture));
        case Provenance::Kind::pf_r:
            return check_pf_r(f, f.provenance.r).ok;
        case Provenance::Kind::pf_inf:
            return check_pf_inf(f);
        case Provenance::Kind::q3:
            return check_pf_r(f, 3).ok;
        case Provenance::Kind::geometric: {
            const auto& v = f.values;
            for (std::size_t k = 2; k < v.size(); ++k)
                if (v[k] * v[k - 2] != v[k - 1] * v[k - 1]) return false;
            return true;
        }
        case Provenance::Kind::ones:
            for (const auto& v : f.values)
                if (v != 1) return false;
            return true;
        default:
            return true;
    }
}

}  // namespace

TrialRecord shrink(const TrialRecord& record, const CampaignConfig& cfg) {
    if (record.verdict.holds)
        throw std::invalid_argument("shrink: record does not fail");
    if (record.conjecture == Conjecture::L1 || record.conjecture == Conjecture::L2)
        return record;

    const bool originally_zero =
        record.verdict.witness && record.verdict.witness->code == "zero_polynomial";

    auto still_fails = [&](TrialRecord& candidate) -> bool {
        // a Pr-target record must not shrink into the n < r(r-1) region where
        // the degree claim is vacuous
        if (needs_r(candidate.conjecture) && candidate.r >= 2 &&
            candidate.n < candidate.r * (candidate.r - 1))
            return false;
        if (!sequence_matches_provenance(candidate.sequence, candidate.conjecture)) return false;
        try {
            StabilityVerdict verdict = replay_trial(candidate);
            if (verdict.holds) return false;
            if (!originally_zero && verdict.witness && verdict.witness->code == "zero_polynomial")
                return false;
            candidate.verdict = verdict;
            return true;
        } catch (const std::exception&) {
            return false;
        }
    };

    TrialRecord best = record;
    const int min_n = 2;
    bool improved = true;
    int steps = 0;
    while (improved && steps < 200) {
        improved = false;

        // 1. shorter instance: drop the trailing term and decrease n
        if (best.n > min_n) {
            TrialRecord candidate = best;
            candidate.n = best.n - 1;
            candidate.sequence.values.resize(static_cast<std::size_t>(candidate.n) + 1);
            if (sequence_is_admissible(candidate.sequence) && still_fails(candidate)) {
                best = candidate;
                improved = true;
                ++steps;
                continue;
            }
        }

        // 2. simpler sequence values (coordinate descent on denominators)
        for (std::size_t k = 0; k < best.sequence.values.size() && !improved; ++k) {
            const Rational current = best.sequence.values[k];
            for (long den : {1L, 2L, 4L, 8L, 16L, 64L, 256L}) {
                if (current.get_den() <= den) break;
                TrialRecord candidate = best;
                candidate.sequence.values[k] = best_rational_approx(current, den);
                if (candidate.sequence.values[k] == current) continue;
                if (still_fails(candidate)) {
                    best = candidate;
                    improved = true;
                    ++steps;
                    break;
                }
            }
        }
        if (improved) continue;

        // 3. simpler alpha/beta
        for (int which = 0; which < 2 && !improved; ++which) {
            auto& slot = which == 0 ? best.alpha : best.beta;
            if (!slot) continue;
            for (long den : {1L, 2L, 4L, 8L}) {
                if (slot->get_den() <= den) break;
                TrialRecord candidate = best;
                Rational simple = best_rational_approx(*slot, den);
                if (simple <= 0 || simple == *slot) continue;
                (which == 0 ? candidate.alpha : candidate.beta) = simple;
                if (still_fails(candidate)) {
                    best = candidate;
                    improved = true;
                    ++steps;
                    break;
                }
            }
        }
    }

    if (best.n != record.n || best.sequence.values != record.sequence.values ||
        best.alpha != record.alpha || best.beta != record.beta)
        best.note = "shrunk from n=" + std::to_string(record.n) +
                    (best.note.empty() ? "" : "; " + best.note);
    return best;
}

bool CampaignReport::all_hold() const {
    return counterexamples.empty();
}

namespace {

void validate_config(const CampaignConfig& cfg) {
    if (cfg.trials < 0) throw std::invalid_argument("config: negative trial count");
    if (cfg.n_min < 2 || cfg.n_max < cfg.n_min)
        throw std::invalid_argument("config: need 2 <= n <= n_max");
    if (cfg.r_min < 2 || cfg.r_max < cfg.r_min)
        throw std::invalid_argument("config: need 2 <= r <= r_max");
    if (cfg.threads < 1) throw std::invalid_argument("config: threads must be >= 1");
    if (cfg.rejection_cap < 1) throw std::invalid_argument("config: rejection cap must be >= 1");
    if (cfg.delta_min <= 0 || cfg.delta_min >= 1)
        throw std::invalid_argument("config: delta_min outside (0, 1)");
    if (cfg.denominator_bound < 4 || cfg.ab_denominator_bound < 4 || cfg.rationalize_den < 4)
        throw std::invalid_argument("config: denominator bounds must be >= 4");
    if (cfg.alpha_max <= 0) throw std::invalid_argument("config: alpha_max must be positive");
    if (cfg.alpha_fixed && *cfg.alpha_fixed <= 0)
        throw std::invalid_argument("config: alpha must be positive");
    if (cfg.beta_fixed && *cfg.beta_fixed <= 0)
        throw std::invalid_argument("config: beta must be positive");
    if (cfg.conjectures.empty()) throw std::invalid_argument("config: no conjectures selected");
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg) {
    validate_config(cfg);
    const auto started = std::chrono::steady_clock::now();
    CampaignReport report;
    report.config = cfg;
    report.caveat =
        "conjecture trials sample finitely many hypothesis instances; a clean run is "
        "supporting evidence, not proof, and finding no counterexample under relaxed "
        "hypotheses is not evidence that none exists";

    for (Conjecture conjecture : cfg.conjectures) {
        std::vector<TrialRecord> records(static_cast<std::size_t>(cfg.trials));
        std::atomic<long> next{0};
        std::exception_ptr first_error;
        std::mutex error_mutex;

        auto worker = [&]() {
            while (true) {
                const long t = next.fetch_add(1);
                if (t >= cfg.trials) break;
                try {
                    records[static_cast<std::size_t>(t)] = run_trial(cfg, conjecture, t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    break;
                }
            }
        };

        const int thread_count = std::max(cfg.threads, 1);
        if (thread_count == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(thread_count));
            for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        }
        if (first_error) std::rethrow_exception(first_error);

        ConjectureTotals totals;
        for (TrialRecord& rec : records) {
            ++totals.trials;
            if (rec.not_applicable) {
                ++totals.not_applicable;
            } else if (rec.verdict.holds) {
                ++totals.holds;
            } else {
                ++totals.fails;
                report.counterexamples.push_back(shrink(rec, cfg));
            }
            report.generator_rejections += rec.rejections;
        }
        report.totals[conjecture_name(conjecture)] = totals;
    }

    const auto finished = std::chrono::steady_clock::now();
    report.wall_ms = cfg.timing
        ? std::chrono::duration_cast<std::chrono::milliseconds>(finished - started).count()
        : 0;
    return report;
}

}  // namespace pflab

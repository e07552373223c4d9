#ifndef PFLAB_CAMPAIGN_HPP
#define PFLAB_CAMPAIGN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pflab/detpoly.hpp"
#include "pflab/pfgen.hpp"
#include "pflab/polynomial.hpp"
#include "pflab/rootcheck.hpp"
#include "pflab/sequence.hpp"

namespace pflab {

enum class Conjecture { C1, C2, C3, C4, C5, C6, T1, TA, L1, L2 };

const char* conjecture_name(Conjecture c);
Conjecture conjecture_from_name(const std::string& name);

// Which polynomial a trial builds.
enum class Target { Q, P, Pr };

const char* target_name(Target t);
Target target_from_name(const std::string& name);

struct CampaignConfig {
    std::vector<Conjecture> conjectures{Conjecture::C1};
    long trials = 500;
    int n_min = 3;
    int n_max = 10;
    int r_min = 2;
    int r_max = 4;
    std::uint64_t seed = 1;
    int threads = 1;
    bool timing = true;
    int rejection_cap = 64;

    // sampling knobs
    Rational delta_min = make_rational(1, 16);
    long denominator_bound = 64;         // delta / root grids
    long rationalize_den = 1000000000;   // sector and q3 rationalization
    Rational alpha_max = 5;              // alpha, beta drawn from (0, alpha_max]
    long ab_denominator_bound = 64;

    // overrides, mainly for counterexample search with relaxed hypotheses
    std::optional<GeneratorSpec::Class> generator_override;
    std::optional<Target> target_override;
    std::optional<Rational> alpha_fixed;
    std::optional<Rational> beta_fixed;
};

struct TrialRecord {
    long trial_id = 0;
    std::uint64_t seed = 0;  // derived per-trial stream seed
    Conjecture conjecture = Conjecture::C1;
    int n = 0;
    int r = 0;
    std::optional<Rational> alpha;
    std::optional<Rational> beta;
    Sequence sequence;
    Polynomial polynomial;
    StabilityVerdict verdict{VerdictKind::all_coeffs_positive, true, std::nullopt};
    bool not_applicable = false;
    std::string note;
    long rejections = 0;  // generator resamples consumed by this trial
    long elapsed_ms = 0;

    // only for the lemma trials
    std::vector<Rational> lemma_weights;   // L1: the M_k
    std::vector<Rational> multiset_a;      // L2
    std::vector<Rational> multiset_b;      // L2
};

struct ConjectureTotals {
    long trials = 0;
    long holds = 0;
    long fails = 0;
    long not_applicable = 0;
};

struct CampaignReport {
    std::string schema_version = "1";
    CampaignConfig config;
    std::map<std::string, ConjectureTotals> totals;  // keyed by conjecture name
    std::vector<TrialRecord> counterexamples;        // shrunk failing trials
    long generator_rejections = 0;
    long wall_ms = 0;
    std::string caveat;

    bool all_hold() const;
    // 0 = all hold, 10 = counterexample found
    int exit_code() const { return all_hold() ? 0 : 10; }
};

// Runs every conjecture in the config; trials are independent and the report
// is identical for any thread count (timing fields aside).
CampaignReport run_campaign(const CampaignConfig& config);

// Executes a single trial (deterministic in (config, conjecture, trial_id)).
TrialRecord run_trial(const CampaignConfig& config, Conjecture conjecture, long trial_id);

// Rebuilds the polynomial from the record's stored inputs and re-applies the
// conjecture's analyzer; used to confirm persisted counterexamples.
StabilityVerdict replay_trial(const TrialRecord& record);

// Greedy shrink: decrease n, drop trailing terms, simplify sequence values
// and alpha/beta to smaller denominators, keeping the failure and the
// hypothesis class of the record's provenance.  Rejects records that hold.
TrialRecord shrink(const TrialRecord& record, const CampaignConfig& config);

// Fixed identities from the worked examples; any mismatch is reported as a
// failing record.  A failure here means an implementation bug, never a
// finding.
CampaignReport regression_suite();

}  // namespace pflab

#endif

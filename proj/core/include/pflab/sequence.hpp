#ifndef PFLAB_SEQUENCE_HPP
#define PFLAB_SEQUENCE_HPP

#include <string>
#include <vector>

#include "pflab/rational.hpp"

namespace pflab {

// Where a sequence came from; pf_r carries the order, reciprocal_pochhammer
// the parameter c.
struct Provenance {
    enum class Kind { raw, pf2, pf_r, pf_inf, q3, geometric, ones, reciprocal_pochhammer };

    Kind kind = Kind::raw;
    int r = 0;
    Rational c = 0;

    static Provenance raw() { return {Kind::raw, 0, 0}; }
    static Provenance pf2() { return {Kind::pf2, 0, 0}; }
    static Provenance pf_r(int order) { return {Kind::pf_r, order, 0}; }
    static Provenance pf_inf() { return {Kind::pf_inf, 0, 0}; }
    static Provenance q3() { return {Kind::q3, 0, 0}; }
    static Provenance geometric() { return {Kind::geometric, 0, 0}; }
    static Provenance ones() { return {Kind::ones, 0, 0}; }
    static Provenance reciprocal_pochhammer(const Rational& c) {
        return {Kind::reciprocal_pochhammer, 0, c};
    }

    std::string to_string() const;
    static Provenance from_string(const std::string& text);

    friend bool operator==(const Provenance& a, const Provenance& b) = default;
};

// Finite sequence f_0..f_n with provenance.  Values are stored as given;
// admissibility (nonnegative, no internal zeros, not all zero) is a check,
// not a constructor invariant, because the Grabarek/Branden transforms may
// legitimately produce sequences that violate it.
struct Sequence {
    std::vector<Rational> values;
    Provenance provenance = Provenance::raw();

    int n() const { return static_cast<int>(values.size()) - 1; }

    friend bool operator==(const Sequence& a, const Sequence& b) = default;
};

Sequence make_sequence(std::vector<Rational> values, Provenance provenance = Provenance::raw());

// Nonnegative, not all zero, and no internal zeros (a zero entry followed by
// a nonzero one).
bool sequence_is_admissible(const Sequence& f);

// f_k = f_0 * q^k.
Sequence geometric_sequence(const Rational& f0, const Rational& q, int n);

Sequence ones_sequence(int n);

std::string sequence_to_string(const Sequence& f);

}  // namespace pflab

#endif

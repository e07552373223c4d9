#include "pflab/sequence.hpp"

#include <sstream>
#include <stdexcept>

namespace pflab {

std::string Provenance::to_string() const {
    switch (kind) {
        case Kind::raw: return "raw";
        case Kind::pf2: return "pf2";
        case Kind::pf_r: return "pf_r(" + std::to_string(r) + ")";
        case Kind::pf_inf: return "pf_inf";
        case Kind::q3: return "q3";
        case Kind::geometric: return "geometric";
        case Kind::ones: return "ones";
        case Kind::reciprocal_pochhammer:
            return "reciprocal_pochhammer(" + rational_to_string(c) + ")";
    }
    return "raw";
}

Provenance Provenance::from_string(const std::string& text) {
    if (text == "raw") return raw();
    if (text == "pf2") return pf2();
    if (text == "pf_inf") return pf_inf();
    if (text == "q3") return q3();
    if (text == "geometric") return geometric();
    if (text == "ones") return ones();
    auto args_of = [&](const std::string& name) -> std::string {
        if (text.rfind(name + "(", 0) == 0 && text.back() == ')')
            return text.substr(name.size() + 1, text.size() - name.size() - 2);
        return {};
    };
    if (auto a = args_of("pf_r"); !a.empty()) return pf_r(std::stoi(a));
    if (auto a = args_of("reciprocal_pochhammer"); !a.empty())
        return reciprocal_pochhammer(rational_from_string(a));
    throw std::invalid_argument("provenance: cannot parse '" + text + "'");
}

Sequence make_sequence(std::vector<Rational> values, Provenance provenance) {
    return Sequence{std::move(values), provenance};
}

bool sequence_is_admissible(const Sequence& f) {
    if (f.values.empty()) return false;
    bool any_nonzero = false;
    bool seen_zero = false;
    for (const Rational& v : f.values) {
        if (v < 0) return false;
        if (v == 0) {
            seen_zero = true;
        } else {
            if (seen_zero) return false;  // internal zero
            any_nonzero = true;
        }
    }
    return any_nonzero;
}

Sequence geometric_sequence(const Rational& f0, const Rational& q, int n) {
    if (n < 0) throw std::invalid_argument("geometric_sequence: negative n");
    std::vector<Rational> values(static_cast<std::size_t>(n) + 1);
    Rational v = f0;
    for (int k = 0; k <= n; ++k) {
        values[static_cast<std::size_t>(k)] = v;
        v *= q;
    }
    return make_sequence(std::move(values), Provenance::geometric());
}

Sequence ones_sequence(int n) {
    if (n < 0) throw std::invalid_argument("ones_sequence: negative n");
    return make_sequence(std::vector<Rational>(static_cast<std::size_t>(n) + 1, Rational(1)),
                         Provenance::ones());
}

std::string sequence_to_string(const Sequence& f) {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (i) out << ", ";
        out << rational_to_string(f.values[i]);
    }
    out << ") [" << f.provenance.to_string() << "]";
    return out.str();
}

}  // namespace pflab

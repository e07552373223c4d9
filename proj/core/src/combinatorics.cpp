#include "pflab/combinatorics.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace pflab {

Multiset::Multiset(std::vector<Rational> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

bool Multiset::all_positive() const {
    return std::all_of(elements_.begin(), elements_.end(), [](const Rational& e) { return e > 0; });
}

Polynomial pochhammer(const Rational& shift, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer: negative length");
    Polynomial result = Polynomial::constant(1);
    for (int i = 0; i < k; ++i)
        result = result * Polynomial(std::vector<Rational>{shift + i, 1});
    return result;
}

Rational pochhammer_value(const Rational& base, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer_value: negative length");
    Rational acc = 1;
    for (int i = 0; i < k; ++i) acc *= base + i;
    return acc;
}

Rational binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

Rational multinomial(int n, const std::vector<int>& parts) {
    if (n < 0) throw std::invalid_argument("multinomial: negative n");
    long sum = 0;
    for (int p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    Integer value = factorial(static_cast<unsigned long>(n));
    for (int p : parts) value /= factorial(static_cast<unsigned long>(p));
    return Rational(value);
}

namespace {

// Triangular table of S^p_j for p <= rows-1, grown on demand under a lock.
class StirlingTable {
public:
    Integer get(int p, int j) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(rows_.size()) <= p) grow();
        return rows_[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)];
    }

private:
    void grow() {
        const std::size_t p = rows_.size();
        std::vector<Integer> row(p + 1);
        if (p == 0) {
            row[0] = 1;
        } else {
            row[0] = 0;
            const auto& prev = rows_[p - 1];
            for (std::size_t j = 1; j <= p; ++j) {
                Integer up = (j < p) ? prev[j] : Integer(0);
                row[j] = prev[j - 1] + Integer(static_cast<long>(p - 1)) * up;
            }
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<Integer>> rows_;
};

}  // namespace

Rational stirling_first_unsigned(int p, int j) {
    if (p < 0 || j < 0) throw std::invalid_argument("stirling_first_unsigned: negative argument");
    if (j > p) return 0;
    static StirlingTable table;
    return Rational(table.get(p, j));
}

std::vector<Rational> elementary_symmetric_all(const Multiset& vals) {
    std::vector<Rational> e{Rational(1)};
    e.reserve(vals.size() + 1);
    for (const Rational& a : vals.elements()) {
        e.push_back(0);
        for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += a * e[k - 1];
    }
    return e;
}

}  // namespace pflab

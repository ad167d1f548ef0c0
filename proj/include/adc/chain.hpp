#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "adc/common.hpp"

namespace adc {

/// A sparse integer vector supported on basis elements of one fixed degree.
/// Terms are keyed by basis insertion index, kept sorted, and never store a
/// zero coefficient.
class ChainElement {
public:
    ChainElement() = default;
    explicit ChainElement(int degree) : degree_(degree) {}

    static ChainElement basis(int degree, int index, Coeff coeff = 1) {
        ChainElement x(degree);
        if (coeff != 0) x.terms_.emplace_back(index, coeff);
        return x;
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<int, Coeff>>& terms() const { return terms_; }

    Coeff coeff(int index) const {
        for (const auto& [i, c] : terms_)
            if (i == index) return c;
        return 0;
    }

    void add_term(int index, Coeff coeff) {
        if (coeff == 0) return;
        auto it = terms_.begin();
        while (it != terms_.end() && it->first < index) ++it;
        if (it != terms_.end() && it->first == index) {
            it->second = checked_add(it->second, coeff);
            if (it->second == 0) terms_.erase(it);
        } else {
            terms_.insert(it, {index, coeff});
        }
    }

    ChainElement& operator+=(const ChainElement& other) {
        for (const auto& [i, c] : other.terms_) add_term(i, c);
        return *this;
    }
    ChainElement& operator-=(const ChainElement& other) {
        for (const auto& [i, c] : other.terms_) add_term(i, checked_neg(c));
        return *this;
    }
    friend ChainElement operator+(ChainElement a, const ChainElement& b) { return a += b; }
    friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }

    ChainElement scaled(Coeff k) const {
        ChainElement r(degree_);
        if (k == 0) return r;
        for (const auto& [i, c] : terms_) r.terms_.emplace_back(i, checked_mul(c, k));
        return r;
    }

    /// Positive and negated-negative parts: *this == first - second,
    /// supports disjoint.
    std::pair<ChainElement, ChainElement> decompose() const {
        ChainElement plus(degree_), minus(degree_);
        for (const auto& [i, c] : terms_) {
            if (c > 0)
                plus.terms_.emplace_back(i, c);
            else
                minus.terms_.emplace_back(i, checked_neg(c));
        }
        return {plus, minus};
    }

    bool is_nonnegative() const {
        for (const auto& [i, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(terms_.size());
        for (const auto& [i, c] : terms_) s.push_back(i);
        return s;
    }

    friend bool operator==(const ChainElement& a, const ChainElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend auto operator<=>(const ChainElement& a, const ChainElement& b) = default;

private:
    int degree_ = 0;
    std::vector<std::pair<int, Coeff>> terms_;  // sorted by basis index
};

}  // namespace adc

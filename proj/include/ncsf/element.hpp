#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "ncsf/composition.hpp"
#include "ncsf/rational.hpp"

namespace ncsf {

/// An element of the free associative algebra on the generators Psi_1,
/// Psi_2, ...: a finitely supported linear combination of generator words
/// (a word is stored as the composition of its indices) with exact
/// rational coefficients. Zero coefficients are never stored. The empty
/// word is the multiplicative unit.
class Element {
public:
    using TermMap = std::map<Composition, Rational, DescLex>;

    Element() = default;

    static Element zero() { return Element(); }

    static Element one() { return monomial(Composition(), Rational(1)); }

    /// The generator Psi_n.
    static Element generator(int n) {
        if (n < 1) throw std::invalid_argument("Element::generator: n must be >= 1");
        return monomial(Composition({n}), Rational(1));
    }

    /// A single scaled generator word c * Psi_{i1} Psi_{i2} ...
    static Element monomial(const Composition& word, const Rational& c) {
        Element e;
        if (!c.is_zero()) e.terms_[word] = c;
        return e;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Degree of a term is the weight of its index word. Returns true and
    /// sets *degree when all terms share one weight (zero is homogeneous of
    /// every degree; *degree is set to -1).
    bool is_homogeneous(int* degree = nullptr) const {
        if (terms_.empty()) {
            if (degree) *degree = -1;
            return true;
        }
        int d = terms_.begin()->first.weight();
        for (const auto& [word, c] : terms_)
            if (word.weight() != d) return false;
        if (degree) *degree = d;
        return true;
    }

    Element homogeneous_component(int n) const {
        Element e;
        for (const auto& [word, c] : terms_)
            if (word.weight() == n) e.terms_[word] = c;
        return e;
    }

    std::vector<int> degrees() const {
        std::vector<int> ds;
        for (const auto& [word, c] : terms_) ds.push_back(word.weight());
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    Rational coefficient(const Composition& word) const {
        auto it = terms_.find(word);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Element& operator+=(const Element& o) {
        for (const auto& [word, c] : o.terms_) add_term(word, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [word, c] : o.terms_) add_term(word, -c);
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    friend Element operator*(const Element& a, const Element& b) {
        Element out;
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_)
                out.add_term(concatenate(wa, wb), ca * cb);
        return out;
    }

    friend Element operator*(const Rational& c, const Element& e) {
        Element out;
        if (c.is_zero()) return out;
        for (const auto& [word, k] : e.terms_) out.terms_[word] = c * k;
        return out;
    }
    friend Element operator*(const Element& e, const Rational& c) { return c * e; }
    friend Element operator/(const Element& e, const Rational& c) {
        return Rational(1) / c * e;
    }

    Element operator-() const { return Rational(-1) * *this; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// "1/2*Psi[1,1] - 1/2*Psi[2]" style: terms in descending lex order on
    /// index words, every coefficient printed explicitly, the unit term as a
    /// bare rational.
    std::string str(const std::string& label = "Psi") const;

private:
    void add_term(const Composition& word, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(word);
        if (it == terms_.end()) {
            terms_[word] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    TermMap terms_;
};

/// Shared rendering for any composition-indexed linear combination.
template <typename Map>
std::string linear_combination_str(const Map& terms, const std::string& label) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [word, coeff] : terms) {
        Rational c(coeff);
        bool neg = c < Rational(0);
        Rational a = neg ? -c : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (word.empty())
            out += a.str();
        else
            out += a.str() + "*" + label + word.str();
    }
    return out;
}

inline std::string Element::str(const std::string& label) const {
    return linear_combination_str(terms_, label);
}

}  // namespace ncsf

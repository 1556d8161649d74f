#pragma once

#include <map>
#include <string>
#include <vector>

#include "ncsf/words.hpp"

namespace ncsf {

/// Expansion of a product in a quotient basis: composition K of weight
/// |I|+|J| mapped to its nonnegative integer coefficient.
using QuotientExpansion = std::map<Composition, long long, DescLex>;

inline std::string quotient_expansion_str(const QuotientExpansion& e,
                                          const std::string& label) {
    if (e.empty()) return "0";
    std::string out;
    for (const auto& [K, c] : e) {
        if (!out.empty()) out += " + ";
        out += std::to_string(c) + "*" + label + K.str();
    }
    return out;
}

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Structure constant of the G-quotient: split K at weight |I| into
/// (K', K''); zero unless K' is coarser than I and K'' is finer than J,
/// else C(|I| + l(J) - l(I), l(K) - l(I)).
inline long long c_coefficient(const Composition& I, const Composition& J,
                               const Composition& K) {
    if (I.empty() || J.empty() || K.empty())
        throw std::invalid_argument("c_coefficient: compositions must be nonempty");
    if (K.weight() != I.weight() + J.weight())
        throw std::invalid_argument("c_coefficient: |K| must equal |I| + |J|");
    WeightSplit s = split_at_weight(K, I.weight());
    if (!is_finer(I, s.left) || !is_finer(s.right, J)) return 0;
    return binomial(I.weight() + J.length() - I.length(), K.length() - I.length());
}

/// Structure constant of the W-quotient: zero unless K' is coarser than I
/// and K'' equals J, else C(l(K), l(I)).
inline long long d_coefficient(const Composition& I, const Composition& J,
                               const Composition& K) {
    if (I.empty() || J.empty() || K.empty())
        throw std::invalid_argument("d_coefficient: compositions must be nonempty");
    if (K.weight() != I.weight() + J.weight())
        throw std::invalid_argument("d_coefficient: |K| must equal |I| + |J|");
    WeightSplit s = split_at_weight(K, I.weight());
    if (!is_finer(I, s.left) || s.right != J) return 0;
    return binomial(K.length(), I.length());
}

/// The closed formulas never enumerate words, only the compositions of
/// |I|+|J|, so their default cap is twice the enumeration cap.
inline constexpr int kDefaultProductCap = 2 * kDefaultDegreeCap;

inline QuotientExpansion t_product(const Composition& I, const Composition& J,
                                   int cap = kDefaultProductCap) {
    if (I.empty() || J.empty())
        throw std::invalid_argument("t_product: compositions must be nonempty");
    QuotientExpansion out;
    for (const Composition& K : compositions_of(I.weight() + J.weight(), cap)) {
        long long c = c_coefficient(I, J, K);
        if (c != 0) out[K] = c;
    }
    return out;
}

inline QuotientExpansion u_product(const Composition& I, const Composition& J,
                                   int cap = kDefaultProductCap) {
    if (I.empty() || J.empty())
        throw std::invalid_argument("u_product: compositions must be nonempty");
    QuotientExpansion out;
    for (const Composition& K : compositions_of(I.weight() + J.weight(), cap)) {
        long long d = d_coefficient(I, J, K);
        if (d != 0) out[K] = d;
    }
    return out;
}

/// Lexicographically least permutation with the given G-composition. Every
/// composition is attained (checked by enumeration).
inline Permutation min_permutation_with_gc(const Composition& I,
                                           int cap = kDefaultDegreeCap) {
    Permutation found = Permutation::identity(I.weight());
    bool ok = false;
    for_each_permutation(I.weight(), [&](const Permutation& p) {
        if (!ok && genocchi_composition(p) == I) {
            found = p;
            ok = true;
        }
    }, cap);
    if (!ok) throw std::logic_error("min_permutation_with_gc: no representative");
    return found;
}

/// Lexicographically least packed word with the given W-composition (the
/// unique nondecreasing one).
inline PackedWord min_packed_word_with_wc(const Composition& I,
                                          int cap = kDefaultDegreeCap) {
    PackedWord found({});
    bool ok = false;
    for_each_packed_word(I.weight(), [&](const PackedWord& u) {
        if (!ok && word_composition(u) == I) {
            found = u;
            ok = true;
        }
    }, cap);
    if (!ok) throw std::logic_error("min_packed_word_with_wc: no representative");
    return found;
}

/// Product in the G-quotient computed from representatives: shuffle the
/// canonical representatives and tally the G-compositions of the result.
inline QuotientExpansion brute_t_product(const Composition& I, const Composition& J,
                                         int cap = kDefaultDegreeCap) {
    // only the representative searches enumerate words, so the cap binds
    // the factor weights
    if (std::max(I.weight(), J.weight()) > cap)
        throw resource_limit_error("brute_t_product: factor degree exceeds cap");
    Permutation sigma = min_permutation_with_gc(I, cap);
    Permutation tau = min_permutation_with_gc(J, cap);
    QuotientExpansion out;
    for (const Permutation& mu : shifted_shuffle(sigma, tau))
        ++out[genocchi_composition(mu)];
    return out;
}

/// Product in the W-quotient from representatives, via the convolution.
inline QuotientExpansion brute_u_product(const Composition& I, const Composition& J,
                                         int cap = kDefaultDegreeCap) {
    if (std::max(I.weight(), J.weight()) > cap)
        throw resource_limit_error("brute_u_product: factor degree exceeds cap");
    PackedWord u = min_packed_word_with_wc(I, cap);
    PackedWord v = min_packed_word_with_wc(J, cap);
    QuotientExpansion out;
    for (const PackedWord& w : convolution(u, v)) ++out[word_composition(w)];
    return out;
}

struct IdealReport {
    bool ok = true;
    long long checked_products = 0;
    std::vector<std::string> violations;
};

namespace detail {

inline std::string expansion_key(const QuotientExpansion& e) {
    std::string s;
    for (const auto& [K, c] : e) s += K.str() + ":" + std::to_string(c) + ";";
    return s;
}

}  // namespace detail

/// Certifies that the statistic multiset of a shuffle/convolution depends
/// only on the classes of the factors: for each degree pair (m, n) with
/// m + n <= n_max, every member of a class must produce the same expansion
/// against every fixed factor, on both sides.
inline IdealReport certify_ideal(int n_max, int cap = kDefaultDegreeCap) {
    IdealReport report;
    if (n_max > cap) throw resource_limit_error("certify_ideal: degree exceeds cap");

    auto check = [&](const std::string& side, const std::string& fixed,
                     const Composition& cls, const std::string& member,
                     const QuotientExpansion& got,
                     std::map<std::string, std::pair<std::string, QuotientExpansion>>&
                         seen) {
        ++report.checked_products;
        std::string key = side + "|" + fixed + "|" + cls.str();
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen[key] = {member, got};
        } else if (detail::expansion_key(it->second.second) !=
                   detail::expansion_key(got)) {
            report.ok = false;
            report.violations.push_back(side + " class " + cls.str() + " vs " + fixed +
                                        ": " + it->second.first + " and " + member +
                                        " disagree");
        }
    };

    for (int m = 1; m < n_max; ++m) {
        for (int n = 1; m + n <= n_max; ++n) {
            {
                std::map<std::string, std::pair<std::string, QuotientExpansion>> seen;
                std::vector<Permutation> sm = permutations_of(m, cap);
                std::vector<Permutation> sn = permutations_of(n, cap);
                for (const Permutation& sigma : sm) {
                    Composition cls = genocchi_composition(sigma);
                    for (const Permutation& tau : sn) {
                        QuotientExpansion e;
                        for (const Permutation& mu : shifted_shuffle(sigma, tau))
                            ++e[genocchi_composition(mu)];
                        // left: sigma's class varies, tau fixed on the right
                        check("GC-left", "tau=" + tau.str(), cls, sigma.str(), e, seen);
                        // right: tau's class varies, sigma fixed on the left
                        check("GC-right", "sigma=" + sigma.str(),
                              genocchi_composition(tau), tau.str(), e, seen);
                    }
                }
            }
            {
                std::map<std::string, std::pair<std::string, QuotientExpansion>> seen;
                std::vector<PackedWord> pm = packed_words_of(m, cap);
                std::vector<PackedWord> pn = packed_words_of(n, cap);
                for (const PackedWord& u : pm) {
                    Composition cls = word_composition(u);
                    for (const PackedWord& v : pn) {
                        QuotientExpansion e;
                        for (const PackedWord& w : convolution(u, v))
                            ++e[word_composition(w)];
                        check("WC-left", "v=" + v.str(), cls, u.str(), e, seen);
                        check("WC-right", "u=" + u.str(), word_composition(v), v.str(),
                              e, seen);
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace ncsf

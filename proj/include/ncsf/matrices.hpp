#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ncsf/words.hpp"

namespace ncsf {

enum class MatrixPair { RL, RPsi };

inline const char* pair_name(MatrixPair p) {
    return p == MatrixPair::RL ? "RL" : "RPsi";
}

/// Internal storage follows the theorem statements: entry[i][j] counts the
/// objects with recoil/descent composition order[i] and statistic value
/// order[j]. The printed tables index rows by the statistic instead; the
/// serializers transpose under the "paper" layout.
struct TransitionMatrix {
    int degree = 0;
    MatrixPair pair = MatrixPair::RL;
    std::vector<Composition> order;
    std::vector<std::vector<long long>> entry;
    // witness words per cell, aligned with entry; filled on request
    std::vector<std::vector<std::vector<Letters>>> witnesses;
    bool has_witnesses = false;

    long long total() const {
        long long t = 0;
        for (const auto& row : entry)
            for (long long e : row) t += e;
        return t;
    }
};

/// Number of permutations with recoil composition I and G-composition J.
inline long long g_coefficient(const Composition& I, const Composition& J,
                               int cap = kDefaultDegreeCap) {
    if (I.weight() != J.weight())
        throw std::invalid_argument("g_coefficient: weights of I and J differ");
    long long count = 0;
    for_each_permutation(I.weight(), [&](const Permutation& p) {
        if (recoil_composition(p) == I && genocchi_composition(p) == J) ++count;
    }, cap);
    return count;
}

/// Number of packed words with descent composition I and W-composition J.
inline long long k_coefficient(const Composition& I, const Composition& J,
                               int cap = kDefaultDegreeCap) {
    if (I.weight() != J.weight())
        throw std::invalid_argument("k_coefficient: weights of I and J differ");
    long long count = 0;
    for_each_packed_word(I.weight(), [&](const PackedWord& u) {
        if (descent_composition(u) == I && word_composition(u) == J) ++count;
    }, cap);
    return count;
}

/// Tallies the full matrix in a single enumeration pass over S_n or PW_n.
inline TransitionMatrix transition_matrix(MatrixPair pair, int n,
                                          bool with_witnesses = false,
                                          int cap = kDefaultDegreeCap) {
    TransitionMatrix m;
    m.degree = n;
    m.pair = pair;
    m.order = compositions_of(n, cap);
    size_t dim = m.order.size();
    m.entry.assign(dim, std::vector<long long>(dim, 0));
    if (with_witnesses) {
        m.witnesses.assign(dim, std::vector<std::vector<Letters>>(dim));
        m.has_witnesses = true;
    }
    std::map<Composition, size_t, DescLex> index;
    for (size_t i = 0; i < dim; ++i) index[m.order[i]] = i;

    auto tally = [&](const Composition& I, const Composition& J, const Letters& w) {
        size_t i = index.at(I), j = index.at(J);
        ++m.entry[i][j];
        if (with_witnesses) m.witnesses[i][j].push_back(w);
    };
    if (pair == MatrixPair::RL) {
        for_each_permutation(n, [&](const Permutation& p) {
            tally(recoil_composition(p), genocchi_composition(p), p.letters());
        }, cap);
    } else {
        for_each_packed_word(n, [&](const PackedWord& u) {
            tally(descent_composition(u), word_composition(u), u.letters());
        }, cap);
    }
    return m;
}

// ---------------------------------------------------------------------------
// serialization

enum class MatrixLayout { paper, theorem };

inline const char* layout_name(MatrixLayout l) {
    return l == MatrixLayout::paper ? "paper" : "theorem";
}

namespace detail {

inline long long layout_entry(const TransitionMatrix& m, MatrixLayout layout,
                              size_t r, size_t c) {
    return layout == MatrixLayout::paper ? m.entry[c][r] : m.entry[r][c];
}

inline const std::vector<Letters>& layout_witnesses(const TransitionMatrix& m,
                                                    MatrixLayout layout, size_t r,
                                                    size_t c) {
    return layout == MatrixLayout::paper ? m.witnesses[c][r] : m.witnesses[r][c];
}

}  // namespace detail

/// Plain-text grid in the typography of the printed tables: zeros rendered
/// as ".", columns right-aligned, single spaces between them.
inline std::string matrix_text(const TransitionMatrix& m,
                               MatrixLayout layout = MatrixLayout::paper) {
    size_t dim = m.order.size();
    size_t width = 1;
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            long long e = detail::layout_entry(m, layout, r, c);
            if (e != 0) width = std::max(width, std::to_string(e).size());
        }
    std::string out;
    for (size_t r = 0; r < dim; ++r) {
        for (size_t c = 0; c < dim; ++c) {
            long long e = detail::layout_entry(m, layout, r, c);
            std::string cell = e == 0 ? "." : std::to_string(e);
            if (c) out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        out += '\n';
    }
    return out;
}

/// Per-cell witness listing, one labeled row block per nonempty cell.
inline std::string matrix_witness_text(const TransitionMatrix& m,
                                       MatrixLayout layout = MatrixLayout::paper) {
    size_t dim = m.order.size();
    std::string out;
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            const std::vector<Letters>& ws = detail::layout_witnesses(m, layout, r, c);
            if (ws.empty()) continue;
            out += m.order[r].str() + " x " + m.order[c].str() + ":";
            for (const Letters& w : ws) out += " " + word_str(w);
            out += '\n';
        }
    return out;
}

inline std::string matrix_csv(const TransitionMatrix& m,
                              MatrixLayout layout = MatrixLayout::paper) {
    size_t dim = m.order.size();
    std::string out;
    for (size_t c = 0; c < dim; ++c) out += ",\"" + m.order[c].str() + "\"";
    out += '\n';
    for (size_t r = 0; r < dim; ++r) {
        out += "\"" + m.order[r].str() + "\"";
        for (size_t c = 0; c < dim; ++c)
            out += "," + std::to_string(detail::layout_entry(m, layout, r, c));
        out += '\n';
    }
    return out;
}

/// Structured record {degree, pair, layout, order, entries[, witnesses]}
/// with entries in row-major order of the chosen layout.
inline nlohmann::json matrix_json(const TransitionMatrix& m,
                                  MatrixLayout layout = MatrixLayout::paper) {
    nlohmann::json j;
    j["degree"] = m.degree;
    j["pair"] = pair_name(m.pair);
    j["layout"] = layout_name(layout);
    std::vector<std::string> order;
    for (const Composition& I : m.order) order.push_back(I.str());
    j["order"] = order;
    std::vector<long long> entries;
    size_t dim = m.order.size();
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c)
            entries.push_back(detail::layout_entry(m, layout, r, c));
    j["entries"] = entries;
    if (m.has_witnesses) {
        nlohmann::json rows = nlohmann::json::array();
        for (size_t r = 0; r < dim; ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (size_t c = 0; c < dim; ++c) {
                nlohmann::json cell = nlohmann::json::array();
                for (const Letters& w : detail::layout_witnesses(m, layout, r, c))
                    cell.push_back(word_str(w));
                row.push_back(cell);
            }
            rows.push_back(row);
        }
        j["witnesses"] = rows;
    }
    return j;
}

// ---------------------------------------------------------------------------
// integer sequences

inline long long factorial(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

/// Fubini numbers a(0..n_max): a(n) = sum_{k=1}^{n} C(n,k) a(n-k).
inline std::vector<long long> ordered_bell_numbers(int n_max) {
    std::vector<std::vector<long long>> binom(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        binom[static_cast<size_t>(n)].assign(static_cast<size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            binom[static_cast<size_t>(n)][static_cast<size_t>(k)] =
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(k - 1)] +
                binom[static_cast<size_t>(n - 1)][static_cast<size_t>(k)];
    }
    std::vector<long long> a(static_cast<size_t>(n_max) + 1, 0);
    a[0] = 1;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            a[static_cast<size_t>(n)] +=
                binom[static_cast<size_t>(n)][static_cast<size_t>(k)] *
                a[static_cast<size_t>(n - k)];
    return a;
}

/// Unsigned Genocchi numbers a(1..count) from the Seidel triangle: odd rows
/// extend by prefix sums, even rows rewrite by suffix sums; a(m) is the last
/// entry of row 2m-1.
inline std::vector<long long> genocchi_numbers(int count) {
    std::vector<long long> out;
    std::vector<long long> row = {1};  // row 1
    out.push_back(1);
    for (int m = 2; m <= count; ++m) {
        // even row: suffix sums, same length
        std::vector<long long> even(row.size());
        long long acc = 0;
        for (size_t k = row.size(); k-- > 0;) {
            acc += row[k];
            even[k] = acc;
        }
        // odd row: prefix sums, one entry longer
        std::vector<long long> odd(even.size() + 1);
        acc = 0;
        for (size_t k = 0; k < even.size(); ++k) {
            acc += even[k];
            odd[k] = acc;
        }
        odd.back() = acc;
        out.push_back(odd.back());
        row = std::move(odd);
    }
    return out;
}

/// The composition (2,2,...,2) for even n, (2,...,2,1) for odd n; its
/// G-class size realizes the Genocchi sequence.
inline Composition genocchi_row_composition(int n) {
    if (n < 2) throw std::invalid_argument("genocchi_row_composition: need n >= 2");
    std::vector<int> parts(static_cast<size_t>(n / 2), 2);
    if (n % 2) parts.push_back(1);
    return Composition(std::move(parts));
}

struct SequenceCheck {
    int degree = 0;
    long long rl_total = 0;
    long long rl_expected = 0;  // n!
    long long rpsi_total = 0;
    long long rpsi_expected = 0;  // ordered Bell
    Composition genocchi_row;
    long long genocchi_class_size = 0;  // only for degree >= 2
    long long genocchi_expected = 0;
    bool ok = false;
};

/// Totals of both matrix families plus the Genocchi row-class sizes, each
/// compared against an internally computed reference sequence.
inline std::vector<SequenceCheck> sequence_checks(int n_max, int cap = kDefaultDegreeCap) {
    std::vector<long long> bell = ordered_bell_numbers(n_max);
    std::vector<long long> genocchi = genocchi_numbers(n_max / 2 + 2);
    std::vector<SequenceCheck> out;
    for (int n = 1; n <= n_max; ++n) {
        SequenceCheck c;
        c.degree = n;
        c.rl_expected = factorial(n);
        c.rpsi_expected = bell[static_cast<size_t>(n)];
        TransitionMatrix rl = transition_matrix(MatrixPair::RL, n, false, cap);
        c.rl_total = rl.total();
        c.rpsi_total = transition_matrix(MatrixPair::RPsi, n, false, cap).total();
        c.ok = c.rl_total == c.rl_expected && c.rpsi_total == c.rpsi_expected;
        if (n >= 2) {
            c.genocchi_row = genocchi_row_composition(n);
            // row sum over J of entry[.][J] at the fixed statistic value:
            // the size of that G-class
            std::map<Composition, size_t, DescLex> index;
            for (size_t i = 0; i < rl.order.size(); ++i) index[rl.order[i]] = i;
            size_t j = index.at(c.genocchi_row);
            for (size_t i = 0; i < rl.order.size(); ++i)
                c.genocchi_class_size += rl.entry[i][j];
            c.genocchi_expected = genocchi[static_cast<size_t>((n + 1) / 2)];
            c.ok = c.ok && c.genocchi_class_size == c.genocchi_expected;
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace ncsf

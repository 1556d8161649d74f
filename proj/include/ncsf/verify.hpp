#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ncsf/bases.hpp"
#include "ncsf/matrices.hpp"
#include "ncsf/quotients.hpp"

namespace ncsf {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
    void merge(const VerifyReport& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
    bool all_pass() const {
        for (const CheckResult& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::string str() const {
        std::string out;
        for (const CheckResult& c : checks) {
            out += c.pass ? "[PASS] " : "[FAIL] ";
            out += c.name;
            if (!c.detail.empty()) out += ": " + c.detail;
            out += '\n';
        }
        for (const std::string& n : notes) out += "[NOTE] " + n + '\n';
        return out;
    }
};

// ---------------------------------------------------------------------------
// reference data transcribed from the published tables

namespace reference {

inline const std::string kM3RL =
    "1 . . .\n"
    ". 2 1 .\n"
    ". . 1 .\n"
    ". . . 1\n";

inline const std::string kM4RL =
    "1 . . . . . . .\n"
    ". 3 2 . 1 1 . .\n"
    ". . 2 . 1 . . .\n"
    ". . 1 3 . 2 1 .\n"
    ". . . . 1 . . .\n"
    ". . . . . 2 1 .\n"
    ". . . . . . 1 .\n"
    ". . . . . . . 1\n";

inline const std::string kM3RPsi =
    "1 . . .\n"
    "1 2 1 .\n"
    "1 . 1 .\n"
    "1 2 2 1\n";

inline const std::string kM4RPsi =
    "1 . . . . . . .\n"
    "1 3 2 . 1 1 . .\n"
    "1 . 2 . 1 . . .\n"
    "1 3 5 3 2 3 1 .\n"
    "1 . . . 1 . . .\n"
    "1 3 2 . 2 3 1 .\n"
    "1 . 2 . 2 . 1 .\n"
    "1 3 5 3 3 5 3 1\n";

struct WitnessCell {
    const char* statistic;  // row label of the filled table (GC or WC value)
    const char* other;      // column label (recoil or descent composition)
    std::vector<const char*> words;
};

/// Filled table for S3: rows GC, columns recoil.
inline const std::vector<WitnessCell> kWitnessesS3 = {
    {"[3]", "[3]", {"123"}},
    {"[2,1]", "[2,1]", {"132", "312"}},
    {"[2,1]", "[1,2]", {"231"}},
    {"[1,2]", "[1,2]", {"213"}},
    {"[1,1,1]", "[1,1,1]", {"321"}},
};

/// Filled table for S4: rows GC, columns recoil.
inline const std::vector<WitnessCell> kWitnessesS4 = {
    {"[4]", "[4]", {"1234"}},
    {"[3,1]", "[3,1]", {"1243", "1423", "4123"}},
    {"[3,1]", "[2,2]", {"1342", "3412"}},
    {"[3,1]", "[1,3]", {"2341"}},
    {"[3,1]", "[1,2,1]", {"2413"}},
    {"[2,2]", "[2,2]", {"1324", "3124"}},
    {"[2,2]", "[1,3]", {"2314"}},
    {"[2,1,1]", "[2,2]", {"3142"}},
    {"[2,1,1]", "[2,1,1]", {"1432", "4132", "4312"}},
    {"[2,1,1]", "[1,2,1]", {"2431", "4231"}},
    {"[2,1,1]", "[1,1,2]", {"3241"}},
    {"[1,3]", "[1,3]", {"2134"}},
    {"[1,2,1]", "[1,2,1]", {"2143", "4213"}},
    {"[1,2,1]", "[1,1,2]", {"3421"}},
    {"[1,1,2]", "[1,1,2]", {"3214"}},
    {"[1,1,1,1]", "[1,1,1,1]", {"4321"}},
};

/// Filled table for PW3: rows WC, columns descent composition.
inline const std::vector<WitnessCell> kWitnessesPW3 = {
    {"[3]", "[3]", {"111"}},
    {"[2,1]", "[3]", {"112"}},
    {"[2,1]", "[2,1]", {"121", "221"}},
    {"[2,1]", "[1,2]", {"212"}},
    {"[1,2]", "[3]", {"122"}},
    {"[1,2]", "[1,2]", {"211"}},
    {"[1,1,1]", "[3]", {"123"}},
    {"[1,1,1]", "[2,1]", {"132", "231"}},
    {"[1,1,1]", "[1,2]", {"312", "213"}},
    {"[1,1,1]", "[1,1,1]", {"321"}},
};

inline const std::set<std::string> kShuffleExampleWords = {
    "372685194", "376825194", "376829514", "736825194", "736829514", "768392514"};

inline const std::set<std::string> kConvolutionExampleWords = {
    "112241333", "113341222", "112231444", "223341222"};

}  // namespace reference

// ---------------------------------------------------------------------------
// suites

/// Recomputed transition matrices against the published 3x3 and 4x4 grids,
/// byte for byte; optionally also against golden files in a directory.
inline VerifyReport verify_tables(const std::string& golden_dir = "") {
    VerifyReport report;
    struct Row {
        MatrixPair pair;
        int n;
        const std::string* expected;
        const char* file;
    };
    const std::vector<Row> rows = {
        {MatrixPair::RL, 3, &reference::kM3RL, "M3_RL.txt"},
        {MatrixPair::RL, 4, &reference::kM4RL, "M4_RL.txt"},
        {MatrixPair::RPsi, 3, &reference::kM3RPsi, "M3_RPsi.txt"},
        {MatrixPair::RPsi, 4, &reference::kM4RPsi, "M4_RPsi.txt"},
    };
    for (const Row& r : rows) {
        std::string got = matrix_text(transition_matrix(r.pair, r.n));
        std::string name = std::string("matrix ") + pair_name(r.pair) + " " +
                           std::to_string(r.n) + " (paper layout)";
        if (got == *r.expected) {
            report.add(name, true);
        } else {
            report.add(name, false, "computed grid differs:\n" + got);
        }
        if (!golden_dir.empty()) {
            std::ifstream in(golden_dir + "/" + r.file, std::ios::binary);
            if (!in) {
                report.add(std::string("golden ") + r.file, false, "file not found");
                continue;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            report.add(std::string("golden ") + r.file, buf.str() == got,
                       buf.str() == got ? "" : "byte mismatch");
        }
    }
    return report;
}

namespace detail {

inline VerifyReport check_witness_table(const std::string& label, MatrixPair pair,
                                        int n,
                                        const std::vector<reference::WitnessCell>& ref) {
    VerifyReport report;
    TransitionMatrix m = transition_matrix(pair, n, true);
    std::map<Composition, size_t, DescLex> index;
    for (size_t i = 0; i < m.order.size(); ++i) index[m.order[i]] = i;

    std::map<std::pair<std::string, std::string>, std::set<std::string>> expected;
    for (const reference::WitnessCell& cell : ref) {
        auto& s = expected[{cell.statistic, cell.other}];
        for (const char* w : cell.words) s.insert(w);
    }
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < m.order.size() && ok; ++i)
        for (size_t j = 0; j < m.order.size() && ok; ++j) {
            // rows of the filled tables are the statistic values: cell (j, i)
            std::set<std::string> got;
            for (const Letters& w : m.witnesses[i][j]) got.insert(word_str(w));
            auto it = expected.find({m.order[j].str(), m.order[i].str()});
            const std::set<std::string> want =
                it == expected.end() ? std::set<std::string>{} : it->second;
            if (got != want) {
                ok = false;
                detail = "cell (" + m.order[j].str() + ", " + m.order[i].str() +
                         ") differs";
            }
        }
    report.add("witness table " + label, ok, detail);
    return report;
}

}  // namespace detail

/// The filled matrices for S3, S4 and PW3 cell by cell, and the two worked
/// product examples word for word.
inline VerifyReport verify_witnesses() {
    VerifyReport report;
    report.merge(detail::check_witness_table("S3", MatrixPair::RL, 3,
                                             reference::kWitnessesS3));
    report.merge(detail::check_witness_table("S4", MatrixPair::RL, 4,
                                             reference::kWitnessesS4));
    report.merge(detail::check_witness_table("PW3", MatrixPair::RPsi, 3,
                                             reference::kWitnessesPW3));

    std::set<std::string> hits;
    for (const Permutation& mu : shifted_shuffle(Permutation(parse_word("32514")),
                                                 Permutation(parse_word("2134"))))
        if (genocchi_composition(mu) == Composition({4, 2, 1, 1, 1}))
            hits.insert(mu.str());
    report.add("shuffle example 32514 * 2134 at [4,2,1,1,1]",
               hits == reference::kShuffleExampleWords,
               "expected the six listed permutations");

    hits.clear();
    for (const PackedWord& w : convolution(PackedWord(parse_word("11223")),
                                           PackedWord(parse_word("1222"))))
        if (word_composition(w) == Composition({4, 1, 1, 3})) hits.insert(w.str());
    report.add("convolution example 11223 * 1222 at [4,1,1,3]",
               hits == reference::kConvolutionExampleWords,
               "expected the four listed words");
    return report;
}

/// Matrix totals (n! and ordered Bell) and the Genocchi row classes against
/// the internally computed sequences.
inline VerifyReport verify_sequences(int max_degree = 7, int cap = kDefaultDegreeCap) {
    VerifyReport report;
    for (const SequenceCheck& c : sequence_checks(max_degree, cap)) {
        std::string name = "mass n=" + std::to_string(c.degree);
        report.add(name, c.rl_total == c.rl_expected && c.rpsi_total == c.rpsi_expected,
                   "RL " + std::to_string(c.rl_total) + "/" +
                       std::to_string(c.rl_expected) + ", RPsi " +
                       std::to_string(c.rpsi_total) + "/" +
                       std::to_string(c.rpsi_expected));
        if (c.degree >= 2)
            report.add("genocchi row " + c.genocchi_row.str(),
                       c.genocchi_class_size == c.genocchi_expected,
                       std::to_string(c.genocchi_class_size) + "/" +
                           std::to_string(c.genocchi_expected));
    }
    return report;
}

/// The two-path check: every ribbon expanded in L (resp. PsiMonomial) by the
/// exact linear solver must match the enumeration counts, with every
/// coordinate a nonnegative integer; plus the column identity
/// psi_monomial(1^r) = ribbon_R(1^r).
inline VerifyReport verify_oracle(int expansion_max = 6, int eq2_max = 7,
                                  int cap = kDefaultDegreeCap) {
    VerifyReport report;
    for (int n = 1; n <= expansion_max; ++n) {
        TransitionMatrix g = transition_matrix(MatrixPair::RL, n, false, cap);
        TransitionMatrix k = transition_matrix(MatrixPair::RPsi, n, false, cap);
        std::map<Composition, size_t, DescLex> index;
        for (size_t i = 0; i < g.order.size(); ++i) index[g.order[i]] = i;
        bool ok = true;
        std::string detail;
        for (const Composition& I : g.order) {
            Element r = ribbon_R(I);
            auto in_l = expand_in_basis(r, BasisId::L, cap);
            auto in_psi = expand_in_basis(r, BasisId::PsiMonomial, cap);
            size_t i = index.at(I);
            for (const Composition& J : g.order) {
                size_t j = index.at(J);
                Rational gl = in_l.count(J) ? in_l.at(J) : Rational(0);
                Rational kp = in_psi.count(J) ? in_psi.at(J) : Rational(0);
                if (!gl.is_nonnegative_integer() || !kp.is_nonnegative_integer()) {
                    ok = false;
                    detail = "non-integral coordinate at I=" + I.str();
                    break;
                }
                if (gl != Rational(g.entry[i][j]) || kp != Rational(k.entry[i][j])) {
                    ok = false;
                    detail = "expansion of R" + I.str() + " disagrees with counts at J=" +
                             J.str();
                    break;
                }
            }
            if (!ok) break;
        }
        report.add("two-path expansion n=" + std::to_string(n), ok, detail);
    }
    for (int r = 1; r <= eq2_max; ++r) {
        Composition ones(std::vector<int>(r, 1));
        report.add("psi_monomial(1^" + std::to_string(r) + ") = ribbon",
                   psi_monomial(ones) == ribbon_R(ones));
    }
    return report;
}

/// Closed-formula structure constants against the representative products,
/// the worked W-coefficient (with the erratum note), and the compatibility
/// of the quotient products with the ambient basis products.
inline VerifyReport verify_products(int t_max = 7, int u_max = 6, int phi_max = 6,
                                    int cap = kDefaultDegreeCap) {
    VerifyReport report;
    bool t_ok = true, u_ok = true;
    std::string t_detail, u_detail;
    for (int m = 1; m < t_max; ++m)
        for (int n = 1; m + n <= t_max; ++n)
            for (const Composition& I : compositions_of(m, cap))
                for (const Composition& J : compositions_of(n, cap)) {
                    if (t_product(I, J) != brute_t_product(I, J, cap)) {
                        t_ok = false;
                        t_detail = "I=" + I.str() + " J=" + J.str();
                    }
                    if (m + n <= u_max &&
                        u_product(I, J) != brute_u_product(I, J, cap)) {
                        u_ok = false;
                        u_detail = "I=" + I.str() + " J=" + J.str();
                    }
                }
    report.add("t_product = brute_t_product through degree " + std::to_string(t_max),
               t_ok, t_detail);
    report.add("u_product = brute_u_product through degree " + std::to_string(u_max),
               u_ok, u_detail);

    long long d = d_coefficient(Composition({2, 2, 1}), Composition({1, 3}),
                                Composition({4, 1, 1, 3}));
    long long brute = brute_u_product(Composition({2, 2, 1}), Composition({1, 3}), cap)
                          .at(Composition({4, 1, 1, 3}));
    report.add("W-coefficient at K=[4,1,1,3]", d == 4 && brute == 4,
               "formula " + std::to_string(d) + ", representatives " +
                   std::to_string(brute));
    report.notes.push_back(
        "the worked example's text computes binom(4,2)=6 for K=[4,1,1,3] but lists "
        "four words; the formula binom(l(K),l(I))=binom(4,3)=4 matches the list, so "
        "the stated 6 is treated as an erratum");

    bool phi_ok = true;
    std::string phi_detail;
    for (int m = 1; m < phi_max; ++m)
        for (int n = 1; m + n <= phi_max; ++n)
            for (const Composition& I : compositions_of(m, cap))
                for (const Composition& J : compositions_of(n, cap)) {
                    auto in_l = expand_in_basis(L_basis(I) * L_basis(J), BasisId::L, cap);
                    QuotientExpansion t = t_product(I, J);
                    auto in_psi = expand_in_basis(psi_monomial(I) * psi_monomial(J),
                                                  BasisId::PsiMonomial, cap);
                    QuotientExpansion u = u_product(I, J);
                    bool match = in_l.size() == t.size() && in_psi.size() == u.size();
                    if (match)
                        for (const auto& [K, c] : t)
                            if (in_l.at(K) != Rational(c)) match = false;
                    if (match)
                        for (const auto& [K, c] : u)
                            if (in_psi.at(K) != Rational(c)) match = false;
                    if (!match) {
                        phi_ok = false;
                        phi_detail = "I=" + I.str() + " J=" + J.str();
                    }
                }
    report.add("quotient products match ambient basis products through degree " +
                   std::to_string(phi_max),
               phi_ok, phi_detail);
    return report;
}

/// Representative independence of the statistic multisets on both sides.
inline VerifyReport verify_ideal(int max_degree = 5, int cap = kDefaultDegreeCap) {
    VerifyReport report;
    IdealReport r = certify_ideal(max_degree, cap);
    std::string detail = std::to_string(r.checked_products) + " products checked";
    for (const std::string& v : r.violations) detail += "; " + v;
    report.add("ideal certification through degree " + std::to_string(max_degree),
               r.ok, detail);
    return report;
}

inline VerifyReport verify_all(int max_degree = 6, const std::string& golden_dir = "",
                               int cap = kDefaultDegreeCap) {
    VerifyReport report;
    report.merge(verify_tables(golden_dir));
    report.merge(verify_witnesses());
    report.merge(verify_sequences(max_degree, cap));
    report.merge(verify_oracle(max_degree, std::min(max_degree, 7), cap));
    report.merge(verify_products(max_degree, max_degree, max_degree, cap));
    report.merge(verify_ideal(max_degree, cap));
    return report;
}

}  // namespace ncsf

#include <catch2/catch_amalgamated.hpp>

#include "ncsf/matrices.hpp"

using namespace ncsf;

namespace {

const std::string kM3RL =
    "1 . . .\n"
    ". 2 1 .\n"
    ". . 1 .\n"
    ". . . 1\n";

const std::string kM4RL =
    "1 . . . . . . .\n"
    ". 3 2 . 1 1 . .\n"
    ". . 2 . 1 . . .\n"
    ". . 1 3 . 2 1 .\n"
    ". . . . 1 . . .\n"
    ". . . . . 2 1 .\n"
    ". . . . . . 1 .\n"
    ". . . . . . . 1\n";

const std::string kM3RPsi =
    "1 . . .\n"
    "1 2 1 .\n"
    "1 . 1 .\n"
    "1 2 2 1\n";

const std::string kM4RPsi =
    "1 . . . . . . .\n"
    "1 3 2 . 1 1 . .\n"
    "1 . 2 . 1 . . .\n"
    "1 3 5 3 2 3 1 .\n"
    "1 . . . 1 . . .\n"
    "1 3 2 . 2 3 1 .\n"
    "1 . 2 . 2 . 1 .\n"
    "1 3 5 3 3 5 3 1\n";

size_t index_of(const TransitionMatrix& m, const Composition& I) {
    for (size_t i = 0; i < m.order.size(); ++i)
        if (m.order[i] == I) return i;
    throw std::logic_error("composition not in order");
}

}  // namespace

TEST_CASE("g_coefficient", "[matrices]") {
    CHECK(g_coefficient(Composition({2, 1}), Composition({2, 1})) == 2);
    CHECK(g_coefficient(Composition({1, 2}), Composition({2, 1})) == 1);
    CHECK(g_coefficient(Composition({4}), Composition({4})) == 1);
    CHECK_THROWS_AS(g_coefficient(Composition({2}), Composition({3})),
                    std::invalid_argument);
}

TEST_CASE("k_coefficient", "[matrices]") {
    CHECK(k_coefficient(Composition({2, 1}), Composition({2, 1})) == 2);
    CHECK(k_coefficient(Composition({3}), Composition({2, 1})) == 1);
    CHECK(k_coefficient(Composition({2, 2}), Composition({2, 1, 1})) == 5);
    CHECK_THROWS_AS(k_coefficient(Composition({2}), Composition({1, 1, 1})),
                    std::invalid_argument);
}

TEST_CASE("transition matrices reproduce the printed tables", "[matrices]") {
    CHECK(matrix_text(transition_matrix(MatrixPair::RL, 3)) == kM3RL);
    CHECK(matrix_text(transition_matrix(MatrixPair::RL, 4)) == kM4RL);
    CHECK(matrix_text(transition_matrix(MatrixPair::RPsi, 3)) == kM3RPsi);
    CHECK(matrix_text(transition_matrix(MatrixPair::RPsi, 4)) == kM4RPsi);
}

TEST_CASE("layouts are transposes of each other", "[matrices]") {
    TransitionMatrix m = transition_matrix(MatrixPair::RL, 4);
    size_t dim = m.order.size();
    std::vector<long long> paper = matrix_json(m, MatrixLayout::paper)["entries"];
    std::vector<long long> theorem = matrix_json(m, MatrixLayout::theorem)["entries"];
    CHECK(paper != theorem);  // M4(R,L) is not symmetric
    for (size_t r = 0; r < dim; ++r)
        for (size_t c = 0; c < dim; ++c) {
            CHECK(paper[r * dim + c] == theorem[c * dim + r]);
            CHECK(theorem[r * dim + c] == m.entry[r][c]);
        }
}

TEST_CASE("matrix agrees with per-cell coefficient counts", "[matrices]") {
    TransitionMatrix m = transition_matrix(MatrixPair::RL, 4);
    CHECK(m.entry[index_of(m, Composition({2, 2}))][index_of(m, Composition({3, 1}))] ==
          g_coefficient(Composition({2, 2}), Composition({3, 1})));
    TransitionMatrix k = transition_matrix(MatrixPair::RPsi, 4);
    CHECK(k.entry[index_of(k, Composition({2, 2}))]
                 [index_of(k, Composition({2, 1, 1}))] == 5);
}

TEST_CASE("witness cells match the filled tables", "[matrices]") {
    TransitionMatrix m = transition_matrix(MatrixPair::RL, 4, true);
    auto cell = [&](const Composition& rec, const Composition& gc) {
        std::set<std::string> out;
        for (const Letters& w : m.witnesses[index_of(m, rec)][index_of(m, gc)])
            out.insert(word_str(w));
        return out;
    };
    CHECK(cell(Composition({3, 1}), Composition({3, 1})) ==
          std::set<std::string>{"1243", "1423", "4123"});
    CHECK(cell(Composition({2, 2}), Composition({2, 1, 1})) ==
          std::set<std::string>{"3142"});
    CHECK(cell(Composition({1, 2, 1}), Composition({2, 1, 1})) ==
          std::set<std::string>{"2431", "4231"});
    CHECK(cell(Composition({4}), Composition({3, 1})).empty());

    TransitionMatrix w3 = transition_matrix(MatrixPair::RPsi, 3, true);
    std::set<std::string> c;
    for (const Letters& x :
         w3.witnesses[index_of(w3, Composition({1, 2}))][index_of(w3, Composition({1, 1, 1}))])
        c.insert(word_str(x));
    CHECK(c == std::set<std::string>{"312", "213"});
}

TEST_CASE("row sums count the recoil fibers", "[matrices]") {
    for (int n = 2; n <= 5; ++n) {
        TransitionMatrix m = transition_matrix(MatrixPair::RL, n);
        std::map<Composition, long long> fiber;
        for_each_permutation(n, [&](const Permutation& p) { ++fiber[recoil_composition(p)]; });
        for (size_t i = 0; i < m.order.size(); ++i) {
            long long sum = 0;
            for (long long e : m.entry[i]) sum += e;
            CHECK(sum == fiber[m.order[i]]);
        }
    }
}

TEST_CASE("entries are nonnegative", "[matrices]") {
    for (int n = 1; n <= 5; ++n)
        for (MatrixPair p : {MatrixPair::RL, MatrixPair::RPsi})
            for (const auto& row : transition_matrix(p, n).entry)
                for (long long e : row) CHECK(e >= 0);
}

TEST_CASE("RPsi factors through the refinement matrix", "[matrices]") {
    for (int n = 2; n <= 6; ++n) {
        TransitionMatrix g = transition_matrix(MatrixPair::RL, n);
        TransitionMatrix k = transition_matrix(MatrixPair::RPsi, n);
        size_t dim = g.order.size();
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                long long sum = 0;
                for (size_t l = 0; l < dim; ++l)
                    if (is_finer(g.order[j], g.order[l])) sum += g.entry[i][l];
                CHECK(sum == k.entry[i][j]);
            }
    }
}

TEST_CASE("serialization formats", "[matrices]") {
    TransitionMatrix m = transition_matrix(MatrixPair::RL, 3, true);
    std::string csv = matrix_csv(m);
    CHECK(csv.substr(0, csv.find('\n')) == ",\"[3]\",\"[2,1]\",\"[1,2]\",\"[1,1,1]\"");
    CHECK(csv.find("\"[2,1]\",0,2,1,0") != std::string::npos);

    nlohmann::json j = matrix_json(m);
    CHECK(j["degree"] == 3);
    CHECK(j["pair"] == "RL");
    CHECK(j["layout"] == "paper");
    CHECK(j["order"].size() == 4);
    CHECK(j["entries"].size() == 16);
    CHECK(j["entries"][5] == 2);  // paper row (2,1), col (2,1)
    CHECK(j["witnesses"][1][2] == nlohmann::json::array({"231"}));

    std::string wt = matrix_witness_text(m);
    CHECK(wt.find("[2,1] x [2,1]: 132 312") != std::string::npos);

    // wider entries still align
    TransitionMatrix m6 = transition_matrix(MatrixPair::RPsi, 6);
    std::string text = matrix_text(m6);
    std::vector<size_t> lengths;
    size_t start = 0;
    for (size_t pos = text.find('\n'); pos != std::string::npos;
         pos = text.find('\n', start)) {
        lengths.push_back(pos - start);
        start = pos + 1;
    }
    CHECK(start == text.size());  // ends with a newline
    REQUIRE(lengths.size() == 32);
    for (size_t l : lengths) CHECK(l == lengths.front());
}

TEST_CASE("factorials and ordered Bell numbers", "[matrices]") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(7) == 5040);
    CHECK(ordered_bell_numbers(8) ==
          std::vector<long long>{1, 1, 3, 13, 75, 541, 4683, 47293, 545835});
}

TEST_CASE("Seidel triangle Genocchi numbers", "[matrices]") {
    CHECK(genocchi_numbers(6) == std::vector<long long>{1, 1, 3, 17, 155, 2073});
}

TEST_CASE("genocchi_row_composition", "[matrices]") {
    CHECK(genocchi_row_composition(2) == Composition({2}));
    CHECK(genocchi_row_composition(5) == Composition({2, 2, 1}));
    CHECK(genocchi_row_composition(6) == Composition({2, 2, 2}));
    CHECK_THROWS_AS(genocchi_row_composition(1), std::invalid_argument);
}

TEST_CASE("sequence checks at small degrees", "[matrices]") {
    std::vector<SequenceCheck> checks = sequence_checks(5);
    REQUIRE(checks.size() == 5);
    for (const SequenceCheck& c : checks) CHECK(c.ok);
    CHECK(checks[2].rl_total == 6);
    CHECK(checks[2].rpsi_total == 13);
    CHECK(checks[2].genocchi_class_size == 3);
    CHECK(checks[3].rl_total == 24);
    CHECK(checks[3].rpsi_total == 75);
    CHECK(checks[3].genocchi_class_size == 3);
    CHECK(checks[4].genocchi_row == Composition({2, 2, 1}));
    CHECK(checks[4].genocchi_class_size == 17);
}

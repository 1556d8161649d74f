#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncsf {

/// Exhaustive enumeration sizes explode past this degree (8! = 40320
/// permutations, 545835 packed words); callers must opt in explicitly to
/// go higher.
inline constexpr int kDefaultDegreeCap = 8;

class resource_limit_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A composition: a finite sequence of positive integer parts. Serves as
/// the index for every basis in the library. The empty composition is
/// allowed as the internal identity for products; enumeration and matrix
/// surfaces never produce it.
class Composition {
public:
    Composition() = default;

    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1) throw std::invalid_argument("Composition: parts must be >= 1");
    }

    Composition(std::initializer_list<int> parts)
        : Composition(std::vector<int>(parts)) {}

    /// Parses the bracket syntax used everywhere: "[2,2,1]". Spaces after
    /// commas are tolerated.
    static Composition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    bool empty() const { return parts_.empty(); }

    /// Strict partial sums {i1, i1+i2, ..., i1+...+i_{r-1}}, a subset of
    /// {1..n-1}. Empty iff the composition has at most one part.
    std::vector<int> descent_set() const {
        std::vector<int> d;
        int acc = 0;
        for (size_t i = 0; i + 1 < parts_.size(); ++i) {
            acc += parts_[i];
            d.push_back(acc);
        }
        return d;
    }

    /// Inverse of descent_set: the composition of n whose descent set is s.
    static Composition from_descents(std::vector<int> s, int n) {
        if (n < 1) throw std::invalid_argument("from_descents: n must be >= 1");
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        for (int d : s)
            if (d < 1 || d >= n)
                throw std::invalid_argument("from_descents: descent outside {1..n-1}");
        std::vector<int> parts;
        int prev = 0;
        for (int d : s) {
            parts.push_back(d - prev);
            prev = d;
        }
        parts.push_back(n - prev);
        return Composition(std::move(parts));
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Composition& a, const Composition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Composition& a, const Composition& b) {
        return !(a == b);
    }
    /// Ascending lexicographic; containers that need the table order use
    /// DescLex instead.
    friend bool operator<(const Composition& a, const Composition& b) {
        return std::lexicographical_compare(a.parts_.begin(), a.parts_.end(),
                                            b.parts_.begin(), b.parts_.end());
    }

private:
    std::vector<int> parts_;
};

/// Descending lexicographic order on part sequences: the order of the
/// printed tables ((4), (3,1), (2,2), (2,1,1), (1,3), ...) and of every
/// serialized expansion.
struct DescLex {
    bool operator()(const Composition& a, const Composition& b) const { return b < a; }
};

inline Composition Composition::parse(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[')
        throw std::invalid_argument("Composition: expected '['");
    ++i;
    std::vector<int> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        for (;;) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) throw std::invalid_argument("Composition: expected integer part");
            parts.push_back(std::stoi(std::string(text.substr(start, i - start))));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw std::invalid_argument("Composition: expected ',' or ']'");
        }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("Composition: trailing characters");
    return Composition(std::move(parts));
}

/// True iff j refines i: equal weights and every descent of i is a descent
/// of j (i is obtained from j by merging adjacent parts). Reflexive.
inline bool is_finer(const Composition& j, const Composition& i) {
    if (i.weight() != j.weight()) return false;
    std::vector<int> di = i.descent_set();
    std::vector<int> dj = j.descent_set();
    return std::includes(dj.begin(), dj.end(), di.begin(), di.end());
}

inline Composition concatenate(const Composition& a, const Composition& b) {
    std::vector<int> parts = a.parts();
    parts.insert(parts.end(), b.parts().begin(), b.parts().end());
    return Composition(std::move(parts));
}

/// Concatenation with the boundary parts merged: (..., a_r + b_1, ...).
inline Composition near_concatenate(const Composition& a, const Composition& b) {
    if (a.empty() || b.empty())
        throw std::domain_error("near_concatenate: undefined on the empty composition");
    std::vector<int> parts = a.parts();
    parts.back() += b.parts().front();
    parts.insert(parts.end(), b.parts().begin() + 1, b.parts().end());
    return Composition(std::move(parts));
}

enum class SplitKind { concat, near_concat };

struct WeightSplit {
    Composition left;
    Composition right;
    SplitKind kind;
};

/// The unique decomposition K = K'.K'' or K = K' |> K'' with |K'| = m.
/// kind is concat exactly when m is a prefix sum of K.
inline WeightSplit split_at_weight(const Composition& k, int m) {
    int n = k.weight();
    if (m <= 0 || m >= n)
        throw std::out_of_range("split_at_weight: need 0 < m < |K|");
    const std::vector<int>& p = k.parts();
    std::vector<int> left, right;
    int acc = 0;
    size_t t = 0;
    while (acc + p[t] <= m) {
        left.push_back(p[t]);
        acc += p[t];
        ++t;
        if (acc == m) break;
    }
    if (acc == m) {
        right.assign(p.begin() + t, p.end());
        return {Composition(std::move(left)), Composition(std::move(right)),
                SplitKind::concat};
    }
    // m falls strictly inside part t: split that part across the boundary.
    left.push_back(m - acc);
    right.push_back(acc + p[t] - m);
    right.insert(right.end(), p.begin() + t + 1, p.end());
    return {Composition(std::move(left)), Composition(std::move(right)),
            SplitKind::near_concat};
}

/// All 2^{n-1} compositions of n in descending lexicographic order, the
/// order the printed tables use.
inline std::vector<Composition> compositions_of(int n, int cap = kDefaultDegreeCap) {
    if (n < 1) throw std::invalid_argument("compositions_of: n must be >= 1");
    if (n > cap)
        throw resource_limit_error("compositions_of: degree " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(cap));
    std::vector<Composition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int first = rest; first >= 1; --first) {
            parts.push_back(first);
            self(self, rest - first);
            parts.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

}  // namespace ncsf

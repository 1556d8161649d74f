#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ncsf/composition.hpp"

namespace ncsf {

/// Letters of a word. Text syntax: plain digits when every letter is <= 9
/// ("32514"), bracket form "[10,2,3]" otherwise.
using Letters = std::vector<int>;

inline std::string word_str(const Letters& w) {
    bool digits = std::all_of(w.begin(), w.end(), [](int c) { return c <= 9; });
    if (digits && !w.empty()) {
        std::string s;
        for (int c : w) s += static_cast<char>('0' + c);
        return s;
    }
    std::string s = "[";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + "]";
}

inline Letters parse_word(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("word: empty input");
    if (text.front() == '[') {
        Composition c = Composition::parse(text);  // same bracket syntax
        return c.parts();
    }
    Letters w;
    for (char ch : text) {
        if (ch < '1' || ch > '9')
            throw std::invalid_argument("word: expected digits 1-9 or bracket form");
        w.push_back(ch - '0');
    }
    return w;
}

/// A word whose letters are exactly {1..n}, each once.
class Permutation {
public:
    explicit Permutation(Letters letters) : letters_(std::move(letters)) {
        int n = static_cast<int>(letters_.size());
        std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
        for (int c : letters_) {
            if (c < 1 || c > n || seen[static_cast<size_t>(c)])
                throw std::invalid_argument("Permutation: letters must be a bijection on {1..n}");
            seen[static_cast<size_t>(c)] = true;
        }
    }

    static Permutation identity(int n) {
        Letters w(static_cast<size_t>(n));
        std::iota(w.begin(), w.end(), 1);
        return Permutation(std::move(w));
    }

    const Letters& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    std::string str() const { return word_str(letters_); }

    Permutation inverse() const {
        Letters inv(letters_.size());
        for (size_t pos = 0; pos < letters_.size(); ++pos)
            inv[static_cast<size_t>(letters_[pos] - 1)] = static_cast<int>(pos) + 1;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.letters_ < b.letters_;
    }

private:
    Letters letters_;
};

/// A word whose letters form an initial interval {1..m}: pack(u) = u.
class PackedWord {
public:
    explicit PackedWord(Letters letters) : letters_(std::move(letters)) {
        int m = 0;
        for (int c : letters_) {
            if (c < 1) throw std::invalid_argument("PackedWord: letters must be >= 1");
            m = std::max(m, c);
        }
        std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
        for (int c : letters_) seen[static_cast<size_t>(c)] = true;
        for (int c = 1; c <= m; ++c)
            if (!seen[static_cast<size_t>(c)])
                throw std::invalid_argument("PackedWord: letters must cover {1..max}");
    }

    const Letters& letters() const { return letters_; }
    int size() const { return static_cast<int>(letters_.size()); }
    int max_letter() const {
        return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
    }
    std::string str() const { return word_str(letters_); }

    friend bool operator==(const PackedWord& a, const PackedWord& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator<(const PackedWord& a, const PackedWord& b) {
        return a.letters_ < b.letters_;
    }

private:
    Letters letters_;
};

/// Std(w): occurrences of the smallest letter are numbered 1,2,... left to
/// right, then occurrences of the next letter, and so on. Idempotent on
/// permutations.
inline Permutation standardize(const Letters& w) {
    if (w.empty()) throw std::invalid_argument("standardize: empty word");
    std::vector<int> idx(w.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return w[static_cast<size_t>(a)] < w[static_cast<size_t>(b)]; });
    Letters out(w.size());
    for (size_t rank = 0; rank < idx.size(); ++rank)
        out[static_cast<size_t>(idx[rank])] = static_cast<int>(rank) + 1;
    return Permutation(std::move(out));
}

/// pack(w): order-preserving relabeling of the distinct letters onto
/// {1..m}. Idempotent.
inline PackedWord pack(const Letters& w) {
    if (w.empty()) throw std::invalid_argument("pack: empty word");
    Letters sorted = w;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Letters out;
    out.reserve(w.size());
    for (int c : w) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        out.push_back(static_cast<int>(it - sorted.begin()) + 1);
    }
    return PackedWord(std::move(out));
}

/// Composition of |w| whose descent set is {i : w_i > w_{i+1}} (strict
/// descents only).
inline Composition descent_composition(const Letters& w) {
    if (w.empty()) throw std::invalid_argument("descent_composition: empty word");
    std::vector<int> d;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) d.push_back(static_cast<int>(i) + 1);
    return Composition::from_descents(std::move(d), static_cast<int>(w.size()));
}

inline Composition descent_composition(const Permutation& p) {
    return descent_composition(p.letters());
}
inline Composition descent_composition(const PackedWord& u) {
    return descent_composition(u.letters());
}

/// Descent composition of the inverse permutation.
inline Composition recoil_composition(const Permutation& p) {
    return descent_composition(p.inverse().letters());
}

/// The G-composition: GDes(sigma) is the set of VALUES i in {2..n} that are
/// immediately followed by a smaller letter (a value in the last position is
/// never a G-descent); the result is the composition of n with descent set
/// {d-1 : d in GDes}.
inline Composition genocchi_composition(const Permutation& p) {
    const Letters& w = p.letters();
    int n = p.size();
    std::vector<int> descents;
    for (size_t j = 0; j + 1 < w.size(); ++j)
        if (w[j] >= 2 && w[j + 1] < w[j]) descents.push_back(w[j] - 1);
    return Composition::from_descents(std::move(descents), n);
}

/// The W-composition: descent set given by the positions of the last
/// occurrence of each letter, the final position excluded.
inline Composition word_composition(const PackedWord& u) {
    const Letters& w = u.letters();
    int n = u.size();
    std::vector<int> last(static_cast<size_t>(u.max_letter()) + 1, 0);
    for (size_t i = 0; i < w.size(); ++i)
        last[static_cast<size_t>(w[i])] = static_cast<int>(i) + 1;
    std::vector<int> descents;
    for (int c = 1; c <= u.max_letter(); ++c)
        if (last[static_cast<size_t>(c)] != n) descents.push_back(last[static_cast<size_t>(c)]);
    return Composition::from_descents(std::move(descents), n);
}

/// All interleavings of sigma with tau shifted up by |sigma|; the result
/// has C(m+n, m) elements, all distinct permutations of m+n.
inline std::vector<Permutation> shifted_shuffle(const Permutation& sigma,
                                                const Permutation& tau) {
    const Letters& a = sigma.letters();
    Letters b = tau.letters();
    for (int& c : b) c += sigma.size();
    std::vector<Permutation> out;
    Letters buf;
    buf.reserve(a.size() + b.size());
    auto rec = [&](auto&& self, size_t i, size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            out.emplace_back(buf);
            return;
        }
        if (i < a.size()) {
            buf.push_back(a[i]);
            self(self, i + 1, j);
            buf.pop_back();
        }
        if (j < b.size()) {
            buf.push_back(b[j]);
            self(self, i, j + 1);
            buf.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

namespace detail {

/// Relabels a packed word through the increasing bijection {1..m} -> target.
inline Letters relabel(const Letters& w, const std::vector<int>& target) {
    Letters out;
    out.reserve(w.size());
    for (int c : w) out.push_back(target[static_cast<size_t>(c - 1)]);
    return out;
}

inline void subsets_of_size(int universe_max, int k,
                            const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == k) {
            fn(cur);
            return;
        }
        int need = k - static_cast<int>(cur.size());
        for (int v = next; v + need - 1 <= universe_max; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
}

}  // namespace detail

/// The convolution of two packed words: all packed words w = w'.w'' with
/// |w'| = |u|, pack(w') = u and pack(w'') = v. Sorted lexicographically.
inline std::vector<PackedWord> convolution(const PackedWord& u, const PackedWord& v) {
    if (u.size() == 0 && v.size() == 0) return {};
    if (u.size() == 0) return {v};
    if (v.size() == 0) return {u};
    int p = u.max_letter();
    int q = v.max_letter();
    std::vector<PackedWord> out;
    for (int m = std::max(p, q); m <= p + q; ++m) {
        // Choose the letter set of the prefix; the suffix must take the
        // complement plus `overlap` further letters from the prefix set.
        int overlap = q - (m - p);
        if (overlap < 0 || overlap > p) continue;
        detail::subsets_of_size(m, p, [&](const std::vector<int>& aset) {
            std::vector<int> comp;
            for (int c = 1; c <= m; ++c)
                if (!std::binary_search(aset.begin(), aset.end(), c)) comp.push_back(c);
            detail::subsets_of_size(p, overlap, [&](const std::vector<int>& pick) {
                std::vector<int> bset = comp;
                for (int i : pick) bset.push_back(aset[static_cast<size_t>(i - 1)]);
                std::sort(bset.begin(), bset.end());
                Letters w = detail::relabel(u.letters(), aset);
                Letters tail = detail::relabel(v.letters(), bset);
                w.insert(w.end(), tail.begin(), tail.end());
                out.emplace_back(std::move(w));
            });
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Streams all permutations of {1..n} in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                                 int cap = kDefaultDegreeCap) {
    if (n < 1) throw std::invalid_argument("for_each_permutation: n must be >= 1");
    if (n > cap)
        throw resource_limit_error("for_each_permutation: degree " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(cap));
    Letters w(static_cast<size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    do {
        fn(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
}

/// Streams all packed words of length n in lexicographic order. A partial
/// word is extended by letter c only when the letters of {1..max} still
/// missing afterwards fit in the remaining positions.
inline void for_each_packed_word(int n, const std::function<void(const PackedWord&)>& fn,
                                 int cap = kDefaultDegreeCap) {
    if (n < 1) throw std::invalid_argument("for_each_packed_word: n must be >= 1");
    if (n > cap)
        throw resource_limit_error("for_each_packed_word: degree " + std::to_string(n) +
                                   " exceeds cap " + std::to_string(cap));
    Letters w;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    auto rec = [&](auto&& self, int maxused, int missing) -> void {
        int rest = n - static_cast<int>(w.size());
        if (rest == 0) {
            fn(PackedWord(w));
            return;
        }
        for (int c = 1; c <= std::min(n, maxused + rest); ++c) {
            bool fresh = !used[static_cast<size_t>(c)];
            int nmax = std::max(maxused, c);
            int nmissing = missing + (nmax - maxused) - (fresh ? 1 : 0);
            if (nmissing > rest - 1) continue;
            used[static_cast<size_t>(c)] = true;
            w.push_back(c);
            self(self, nmax, nmissing);
            w.pop_back();
            used[static_cast<size_t>(c)] = fresh ? false : true;
        }
    };
    rec(rec, 0, 0);
}

inline std::vector<Permutation> permutations_of(int n, int cap = kDefaultDegreeCap) {
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
    return out;
}

inline std::vector<PackedWord> packed_words_of(int n, int cap = kDefaultDegreeCap) {
    std::vector<PackedWord> out;
    for_each_packed_word(n, [&](const PackedWord& u) { out.push_back(u); }, cap);
    return out;
}

}  // namespace ncsf

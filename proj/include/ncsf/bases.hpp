#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "ncsf/element.hpp"

namespace ncsf {

enum class BasisId { PsiMonomial, L, R, S, Sproduct };

inline const char* basis_name(BasisId b) {
    switch (b) {
        case BasisId::PsiMonomial: return "Psi";
        case BasisId::L: return "L";
        case BasisId::R: return "R";
        case BasisId::S: return "S";
        case BasisId::Sproduct: return "S";
    }
    return "?";
}

/// Complete functions from the oriented Newton recursion
/// n S_n = sum_{k=0}^{n-1} S_k Psi_{n-k}, S_0 = 1.
inline Element complete_S(int n) {
    if (n < 0) throw std::invalid_argument("complete_S: n must be >= 0");
    std::vector<Element> s;
    s.push_back(Element::one());
    for (int m = 1; m <= n; ++m) {
        Element acc;
        for (int k = 0; k < m; ++k) acc += s[static_cast<size_t>(k)] * Element::generator(m - k);
        s.push_back(acc / Rational(m));
    }
    return s[static_cast<size_t>(n)];
}

/// S^I = S_{i1} S_{i2} ... S_{ir}; the empty composition gives 1.
inline Element product_S(const Composition& I) {
    Element out = Element::one();
    for (int p : I.parts()) out = out * complete_S(p);
    return out;
}

namespace detail {

/// Applies fn to every coarsening of I (every J with I finer than J),
/// i.e. to the compositions built from the subsets of I's descent set.
template <typename Fn>
void for_each_coarsening(const Composition& I, Fn&& fn) {
    std::vector<int> d = I.descent_set();
    int n = I.weight();
    size_t count = size_t{1} << d.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<int> keep;
        for (size_t b = 0; b < d.size(); ++b)
            if (mask & (size_t{1} << b)) keep.push_back(d[b]);
        fn(Composition::from_descents(std::move(keep), n));
    }
}

/// Applies fn to every refinement of I (every J finer than I), i.e. to the
/// compositions whose descent set contains I's.
template <typename Fn>
void for_each_refinement(const Composition& I, Fn&& fn) {
    std::vector<int> base = I.descent_set();
    int n = I.weight();
    std::vector<int> extra;
    for (int pos = 1; pos <= n - 1; ++pos)
        if (!std::binary_search(base.begin(), base.end(), pos)) extra.push_back(pos);
    size_t count = size_t{1} << extra.size();
    for (size_t mask = 0; mask < count; ++mask) {
        std::vector<int> s = base;
        for (size_t b = 0; b < extra.size(); ++b)
            if (mask & (size_t{1} << b)) s.push_back(extra[b]);
        fn(Composition::from_descents(std::move(s), n));
    }
}

}  // namespace detail

/// Ribbon basis via the alternating sum over coarsenings:
/// R_I = sum_{J coarser-or-equal I} (-1)^{l(I) - l(J)} S^J.
inline Element ribbon_R(const Composition& I) {
    if (I.empty()) throw std::invalid_argument("ribbon_R: empty composition");
    Element out;
    int li = I.length();
    detail::for_each_coarsening(I, [&](const Composition& J) {
        Element term = product_S(J);
        if ((li - J.length()) % 2 != 0) term = -term;
        out += term;
    });
    return out;
}

/// Monomial basis from the generalized Newton relations: for I of length r,
/// r Psi_I = sum_{s=1}^{r} (-1)^{s-1} Psi_{i1+...+is} Psi_{(i_{s+1},...,ir)},
/// with Psi of the empty composition equal to 1.
inline Element psi_monomial(const Composition& I) {
    if (I.empty()) throw std::invalid_argument("psi_monomial: empty composition");
    const std::vector<int>& parts = I.parts();
    auto rec = [&](auto&& self, size_t from) -> Element {
        size_t r = parts.size() - from;
        if (r == 0) return Element::one();
        if (r == 1) return Element::generator(parts[from]);
        Element acc;
        int head = 0;
        for (size_t s = 1; s <= r; ++s) {
            head += parts[from + s - 1];
            Element term = Element::generator(head) * self(self, from + s);
            if (s % 2 == 0) term = -term;
            acc += term;
        }
        return acc / Rational(static_cast<long long>(r));
    };
    return rec(rec, 0);
}

/// L_I = sum of Psi_J over all J finer than or equal to I.
inline Element L_basis(const Composition& I) {
    if (I.empty()) throw std::invalid_argument("L_basis: empty composition");
    Element out;
    detail::for_each_refinement(I, [&](const Composition& J) { out += psi_monomial(J); });
    return out;
}

inline Element basis_element(BasisId b, const Composition& I) {
    switch (b) {
        case BasisId::PsiMonomial: return psi_monomial(I);
        case BasisId::L: return L_basis(I);
        case BasisId::R: return ribbon_R(I);
        case BasisId::S:
        case BasisId::Sproduct: return product_S(I);
    }
    throw std::logic_error("basis_element: unknown basis");
}

/// Coordinates of a homogeneous element in the PsiMonomial, L, or Sproduct
/// basis, obtained by exact Gaussian elimination on the degree-n coordinate
/// matrix. Reconstruction through basis_element returns the input exactly.
inline std::map<Composition, Rational, DescLex> expand_in_basis(
    const Element& x, BasisId b, int cap = kDefaultDegreeCap) {
    if (b != BasisId::PsiMonomial && b != BasisId::L && b != BasisId::Sproduct)
        throw std::invalid_argument("expand_in_basis: basis must be PsiMonomial, L or Sproduct");
    std::map<Composition, Rational, DescLex> out;
    if (x.is_zero()) return out;
    int n = 0;
    if (!x.is_homogeneous(&n))
        throw std::invalid_argument("expand_in_basis: element is not homogeneous");
    if (n < 1)
        throw std::invalid_argument("expand_in_basis: degree must be >= 1");
    std::vector<Composition> order = compositions_of(n, cap);
    size_t dim = order.size();
    std::map<Composition, size_t, DescLex> row_of;
    for (size_t i = 0; i < dim; ++i) row_of[order[i]] = i;

    // Augmented system (B | v): column j holds the generator-word
    // coordinates of the j-th basis element.
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim + 1));
    for (size_t j = 0; j < dim; ++j) {
        Element e = basis_element(b, order[j]);
        for (const auto& [word, c] : e.terms()) a[row_of.at(word)][j] = c;
    }
    for (const auto& [word, c] : x.terms()) a[row_of.at(word)][dim] = c;

    for (size_t col = 0; col < dim; ++col) {
        size_t pivot = col;
        while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
        if (pivot == dim)
            throw std::logic_error("expand_in_basis: singular basis matrix");
        std::swap(a[col], a[pivot]);
        Rational inv = Rational(1) / a[col][col];
        for (size_t j = col; j <= dim; ++j) a[col][j] *= inv;
        for (size_t i = 0; i < dim; ++i) {
            if (i == col || a[i][col].is_zero()) continue;
            Rational f = a[i][col];
            for (size_t j = col; j <= dim; ++j) a[i][j] -= f * a[col][j];
        }
    }
    for (size_t i = 0; i < dim; ++i)
        if (!a[i][dim].is_zero()) out[order[i]] = a[i][dim];
    return out;
}

}  // namespace ncsf

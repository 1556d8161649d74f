#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ncsf/bases.hpp"
#include "ncsf/quotients.hpp"

namespace ncsf {

/// Syntax error with a 1-based source position.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& msg, int line, int column)
        : std::invalid_argument(msg + " at " + std::to_string(line) + ":" +
                                std::to_string(column)),
          line_(line),
          column_(column) {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// Well-formed input that violates a typing rule (mixed algebras,
/// nonpositive parts, incompatible expansion target).
class SemanticError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class AtomBasis { S, R, L, Psi, T, U };

/// T and U atoms index quotient algebras and may not be mixed with the
/// ambient S/R/L/Psi atoms (or with each other).
enum class ExprFamily { ambient, quotient_t, quotient_u };

struct Expr {
    enum class Kind { constant, atom, add, sub, mul };
    Kind kind = Kind::constant;
    Rational value;        // constant
    AtomBasis basis{};     // atom
    Composition index;     // atom
    std::unique_ptr<Expr> lhs, rhs;
};

struct ParsedExpr {
    std::unique_ptr<Expr> root;
    // empty when the expression is constants only, and then compatible
    // with every expansion target
    std::optional<ExprFamily> family;
};

namespace detail {

class ExprParser {
public:
    explicit ExprParser(std::string_view src) : src_(src) {
        if (src_.size() > 64 * 1024)
            throw std::invalid_argument("expression exceeds 64 KiB");
    }

    ParsedExpr parse() {
        ParsedExpr out;
        out.root = parse_sum(out);
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected character");
        return out;
    }

private:
    // sum := ['-'] term (('+'|'-') term)*; the optional leading sign keeps
    // printed expansions with a negative head term parseable
    std::unique_ptr<Expr> parse_sum(ParsedExpr& ctx) {
        skip_ws();
        bool negate = false;
        if (peek() == '-') {
            ++pos_;
            negate = true;
        }
        std::unique_ptr<Expr> node = parse_term(ctx);
        if (negate) {
            auto neg = std::make_unique<Expr>();
            neg->kind = Expr::Kind::mul;
            neg->lhs = std::make_unique<Expr>();
            neg->lhs->kind = Expr::Kind::constant;
            neg->lhs->value = Rational(-1);
            neg->rhs = std::move(node);
            node = std::move(neg);
        }
        skip_ws();
        while (peek() == '+' || peek() == '-') {
            char op = src_[pos_++];
            auto bin = std::make_unique<Expr>();
            bin->kind = op == '+' ? Expr::Kind::add : Expr::Kind::sub;
            bin->lhs = std::move(node);
            bin->rhs = parse_term(ctx);
            node = std::move(bin);
            skip_ws();
        }
        return node;
    }

    std::unique_ptr<Expr> parse_term(ParsedExpr& ctx) {
        std::unique_ptr<Expr> node = parse_factor(ctx);
        skip_ws();
        while (peek() == '*') {
            ++pos_;
            auto mul = std::make_unique<Expr>();
            mul->kind = Expr::Kind::mul;
            mul->lhs = std::move(node);
            mul->rhs = parse_factor(ctx);
            node = std::move(mul);
            skip_ws();
        }
        return node;
    }

    std::unique_ptr<Expr> parse_factor(ParsedExpr& ctx) {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            auto node = parse_sum(ctx);
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return node;
        }
        if (c >= '0' && c <= '9') return parse_rational();
        if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return parse_atom(ctx);
        fail("expected a rational, a basis atom, or '('");
        return nullptr;  // unreachable
    }

    std::unique_ptr<Expr> parse_rational() {
        long long num = parse_int("integer");
        long long den = 1;
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            size_t at = pos_;
            den = parse_int("denominator");
            if (den == 0) fail_at("zero denominator", at);
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::constant;
        node->value = Rational(num, den);
        return node;
    }

    std::unique_ptr<Expr> parse_atom(ParsedExpr& ctx) {
        size_t start = pos_;
        while (pos_ < src_.size() &&
               ((src_[pos_] >= 'A' && src_[pos_] <= 'Z') ||
                (src_[pos_] >= 'a' && src_[pos_] <= 'z')))
            ++pos_;
        std::string_view name = src_.substr(start, pos_ - start);
        AtomBasis basis;
        if (name == "S") basis = AtomBasis::S;
        else if (name == "R") basis = AtomBasis::R;
        else if (name == "L") basis = AtomBasis::L;
        else if (name == "Psi") basis = AtomBasis::Psi;
        else if (name == "T") basis = AtomBasis::T;
        else if (name == "U") basis = AtomBasis::U;
        else fail_at("unknown basis '" + std::string(name) + "'", start);

        ExprFamily fam = basis == AtomBasis::T   ? ExprFamily::quotient_t
                         : basis == AtomBasis::U ? ExprFamily::quotient_u
                                                 : ExprFamily::ambient;
        if (ctx.family && *ctx.family != fam)
            throw SemanticError("atom " + std::string(name) +
                                " cannot be mixed with the preceding atoms: T/U live "
                                "in their quotients, not in the ambient algebra");
        ctx.family = fam;

        skip_ws();
        if (peek() != '[') fail("expected '[' after basis name");
        ++pos_;
        std::vector<int> parts;
        for (;;) {
            skip_ws();
            size_t at = pos_;
            long long part = parse_int("part");
            if (part < 1)
                throw SemanticError("part " + std::to_string(part) +
                                    " at position " + std::to_string(at + 1) +
                                    " must be positive");
            parts.push_back(static_cast<int>(part));
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ']') {
                ++pos_;
                break;
            }
            fail("expected ',' or ']'");
        }
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::atom;
        node->basis = basis;
        node->index = Composition(parts);
        return node;
    }

    long long parse_int(const char* what) {
        skip_ws();
        size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] >= '0' && src_[pos_] <= '9') ++pos_;
        if (pos_ == start) fail(std::string("expected ") + what);
        if (pos_ - start > 12) fail_at("integer too large", start);
        return std::stoll(std::string(src_.substr(start, pos_ - start)));
    }

    char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < src_.size() &&
               (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                src_[pos_] == '\r'))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) { fail_at(msg, pos_); }

    [[noreturn]] void fail_at(const std::string& msg, size_t at) {
        int line = 1, column = 1;
        for (size_t i = 0; i < at && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(msg, line, column);
    }

    std::string_view src_;
    size_t pos_ = 0;
};

}  // namespace detail

inline ParsedExpr parse_expression(std::string_view text) {
    return detail::ExprParser(text).parse();
}

// ---------------------------------------------------------------------------
// evaluation

enum class EvalTarget { Psi, L, S, T, U };

inline EvalTarget parse_target(std::string_view name) {
    if (name == "Psi") return EvalTarget::Psi;
    if (name == "L") return EvalTarget::L;
    if (name == "S") return EvalTarget::S;
    if (name == "T") return EvalTarget::T;
    if (name == "U") return EvalTarget::U;
    throw SemanticError("unknown target basis '" + std::string(name) +
                        "' (expected Psi, L, S, T or U)");
}

inline const char* target_name(EvalTarget t) {
    switch (t) {
        case EvalTarget::Psi: return "Psi";
        case EvalTarget::L: return "L";
        case EvalTarget::S: return "S";
        case EvalTarget::T: return "T";
        case EvalTarget::U: return "U";
    }
    return "?";
}

using Expansion = std::map<Composition, Rational, DescLex>;

namespace detail {

inline Element evaluate_ambient(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::constant:
            return Element::monomial(Composition(), e.value);
        case Expr::Kind::atom:
            switch (e.basis) {
                case AtomBasis::S: return product_S(e.index);
                case AtomBasis::R: return ribbon_R(e.index);
                case AtomBasis::L: return L_basis(e.index);
                case AtomBasis::Psi: return psi_monomial(e.index);
                default: throw std::logic_error("quotient atom in ambient evaluation");
            }
        case Expr::Kind::add: return evaluate_ambient(*e.lhs) + evaluate_ambient(*e.rhs);
        case Expr::Kind::sub: return evaluate_ambient(*e.lhs) - evaluate_ambient(*e.rhs);
        case Expr::Kind::mul: return evaluate_ambient(*e.lhs) * evaluate_ambient(*e.rhs);
    }
    throw std::logic_error("unreachable");
}

inline void strip_zeros(Expansion& m) {
    for (auto it = m.begin(); it != m.end();)
        it = it->second.is_zero() ? m.erase(it) : std::next(it);
}

inline Expansion quotient_mul(const Expansion& a, const Expansion& b, bool is_t,
                              int cap) {
    Expansion out;
    for (const auto& [i, c] : a)
        for (const auto& [j, d] : b) {
            Rational f = c * d;
            if (i.empty() || j.empty()) {
                out[i.empty() ? j : i] += f;
                continue;
            }
            for (const auto& [k, n] : is_t ? t_product(i, j, cap) : u_product(i, j, cap))
                out[k] += f * Rational(n);
        }
    strip_zeros(out);
    return out;
}

inline Expansion evaluate_quotient(const Expr& e, bool is_t, int cap) {
    Expansion out;
    switch (e.kind) {
        case Expr::Kind::constant:
            if (!e.value.is_zero()) out[Composition()] = e.value;
            return out;
        case Expr::Kind::atom:
            out[e.index] = Rational(1);
            return out;
        case Expr::Kind::add:
        case Expr::Kind::sub: {
            out = evaluate_quotient(*e.lhs, is_t, cap);
            for (const auto& [k, c] : evaluate_quotient(*e.rhs, is_t, cap))
                out[k] += e.kind == Expr::Kind::add ? c : -c;
            strip_zeros(out);
            return out;
        }
        case Expr::Kind::mul:
            return quotient_mul(evaluate_quotient(*e.lhs, is_t, cap),
                                evaluate_quotient(*e.rhs, is_t, cap), is_t, cap);
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

/// Exact expansion of a parsed expression in the target basis, as a
/// composition -> coefficient map (the unit term keyed by the empty
/// composition). Throws SemanticError for an incompatible target and
/// resource_limit_error past the degree cap.
inline Expansion evaluate_expansion(const ParsedExpr& e, EvalTarget target,
                                    int cap = kDefaultDegreeCap) {
    bool quotient_target = target == EvalTarget::T || target == EvalTarget::U;
    if (e.family) {
        if (*e.family == ExprFamily::quotient_t && target != EvalTarget::T)
            throw SemanticError("a T expression can only be expanded in the T basis");
        if (*e.family == ExprFamily::quotient_u && target != EvalTarget::U)
            throw SemanticError("a U expression can only be expanded in the U basis");
        if (*e.family == ExprFamily::ambient && quotient_target)
            throw SemanticError(
                "an ambient expression cannot be expanded in a quotient basis");
    }
    if (quotient_target)
        return detail::evaluate_quotient(*e.root, target == EvalTarget::T,
                                         2 * cap);

    Element x = detail::evaluate_ambient(*e.root);
    BasisId basis = target == EvalTarget::Psi ? BasisId::PsiMonomial
                    : target == EvalTarget::L ? BasisId::L
                                              : BasisId::Sproduct;
    Expansion out;
    for (int n : x.degrees()) {
        if (n == 0) {
            out[Composition()] = x.coefficient(Composition());
            continue;
        }
        if (n > cap)
            throw resource_limit_error("expand: degree " + std::to_string(n) +
                                       " exceeds cap " + std::to_string(cap));
        for (const auto& [j, c] : expand_in_basis(x.homogeneous_component(n), basis, cap))
            out[j] = c;
    }
    return out;
}

inline std::string evaluate(const ParsedExpr& e, EvalTarget target,
                            int cap = kDefaultDegreeCap) {
    return linear_combination_str(evaluate_expansion(e, target, cap),
                                  target_name(target));
}

inline nlohmann::json evaluate_json(const ParsedExpr& e, EvalTarget target,
                                    int cap = kDefaultDegreeCap) {
    nlohmann::json j;
    j["basis"] = target_name(target);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : evaluate_expansion(e, target, cap))
        terms.push_back({{"index", k.str()}, {"coefficient", c.str()}});
    j["terms"] = terms;
    return j;
}

}  // namespace ncsf

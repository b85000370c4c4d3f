#pragma once

// Ordinals below epsilon_0 in Cantor normal form.
//
// A term is a finite sum w^e1*c1 + ... + w^en*cn with e1 > ... > en and
// every coefficient positive. Zero is the empty sum. Terms are immutable
// and share structure, so copies are cheap.

#include "subrec/base_function.hpp"
#include "subrec/errors.hpp"
#include "subrec/nat.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace subrec {

struct Monomial;

class Ordinal {
public:
    Ordinal() = default;

    static Ordinal finite(const Nat& n);
    static Ordinal omega();
    /// w^exponent * coefficient; coefficient must be positive.
    static Ordinal omega_power(Ordinal exponent, Nat coefficient = 1);
    /// Validates the CNF invariants and throws std::invalid_argument on violation.
    static Ordinal from_monomials(std::vector<Monomial> monomials);
    /// No validation; the caller guarantees the CNF invariants.
    static Ordinal from_monomials_unchecked(std::vector<Monomial> monomials) { return Ordinal(std::move(monomials)); }

    bool is_zero() const { return !terms_ || terms_->empty(); }
    bool is_finite() const;
    std::span<const Monomial> monomials() const;
    const Monomial& last() const;
    std::size_t size() const { return terms_ ? terms_->size() : 0; }

    friend bool operator==(const Ordinal& a, const Ordinal& b);
    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

private:
    explicit Ordinal(std::vector<Monomial> monomials);

    std::shared_ptr<const std::vector<Monomial>> terms_;
};

struct Monomial {
    Ordinal exponent;
    Nat coefficient;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// The limit epsilon_0. Only legal as a hierarchy index, never inside a term.
struct EpsilonZero {
    friend bool operator==(EpsilonZero, EpsilonZero) { return true; }
};

using OrdinalIndex = std::variant<Ordinal, EpsilonZero>;

// ---------------------------------------------------------------------------
// Construction

inline Ordinal::Ordinal(std::vector<Monomial> monomials)
    : terms_(monomials.empty() ? nullptr : std::make_shared<const std::vector<Monomial>>(std::move(monomials))) {}

inline Ordinal Ordinal::finite(const Nat& n) {
    if (n.is_zero()) return {};
    return Ordinal({Monomial{Ordinal{}, n}});
}

inline Ordinal Ordinal::omega() { return omega_power(finite(1)); }

inline Ordinal Ordinal::omega_power(Ordinal exponent, Nat coefficient) {
    if (coefficient.is_zero()) throw std::invalid_argument("coefficient must be positive");
    return Ordinal({Monomial{std::move(exponent), std::move(coefficient)}});
}

inline Ordinal Ordinal::from_monomials(std::vector<Monomial> monomials) {
    for (std::size_t i = 0; i < monomials.size(); ++i) {
        if (monomials[i].coefficient.is_zero()) throw std::invalid_argument("coefficient must be positive");
        if (i > 0 && !(monomials[i].exponent < monomials[i - 1].exponent))
            throw std::invalid_argument("exponents must strictly decrease");
    }
    return Ordinal(std::move(monomials));
}

inline std::span<const Monomial> Ordinal::monomials() const {
    if (!terms_) return {};
    return {terms_->data(), terms_->size()};
}

inline const Monomial& Ordinal::last() const { return terms_->back(); }

inline bool Ordinal::is_finite() const { return is_zero() || (size() == 1 && last().exponent.is_zero()); }

// ---------------------------------------------------------------------------
// Comparison: lexicographic on (exponent, coefficient) pairs.

inline bool operator==(const Ordinal& a, const Ordinal& b) {
    if (a.terms_ == b.terms_) return true;
    if (a.size() != b.size()) return false;
    auto x = a.monomials();
    auto y = b.monomials();
    return std::equal(x.begin(), x.end(), y.begin());
}

inline std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    if (a.terms_ == b.terms_) return std::strong_ordering::equal;
    auto x = a.monomials();
    auto y = b.monomials();
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (auto c = x[i].exponent <=> y[i].exponent; c != 0) return c;
        if (auto c = x[i].coefficient <=> y[i].coefficient; c != 0) return c;
    }
    return x.size() <=> y.size();
}

inline std::strong_ordering compare(const Ordinal& a, const Ordinal& b) { return a <=> b; }

// ---------------------------------------------------------------------------
// Classification

struct IsZero {};
struct IsSuccessor {
    Ordinal predecessor;
};
/// limit = prefix + w^exponent
struct IsLimit {
    Ordinal prefix;
    Ordinal exponent;
};
using Classification = std::variant<IsZero, IsSuccessor, IsLimit>;

namespace detail {

/// a with its last monomial's coefficient lowered by one.
inline Ordinal drop_last_copy(const Ordinal& a) {
    auto m = a.monomials();
    std::vector<Monomial> out(m.begin(), m.end());
    if (out.back().coefficient == Nat(1)) {
        out.pop_back();
    } else {
        out.back().coefficient -= 1;
    }
    return Ordinal::from_monomials_unchecked(std::move(out));
}

/// prefix + w^exponent * coefficient, where exponent does not exceed the
/// last exponent of prefix.
inline Ordinal append(const Ordinal& prefix, Ordinal exponent, Nat coefficient) {
    auto m = prefix.monomials();
    std::vector<Monomial> out(m.begin(), m.end());
    if (!out.empty() && out.back().exponent == exponent) {
        out.back().coefficient += coefficient;
    } else {
        out.push_back(Monomial{std::move(exponent), std::move(coefficient)});
    }
    return Ordinal::from_monomials_unchecked(std::move(out));
}

}  // namespace detail

inline bool is_successor(const Ordinal& a) { return !a.is_zero() && a.last().exponent.is_zero(); }
inline bool is_limit(const Ordinal& a) { return !a.is_zero() && !a.last().exponent.is_zero(); }

inline Classification classify(const Ordinal& a) {
    if (a.is_zero()) return IsZero{};
    if (a.last().exponent.is_zero()) return IsSuccessor{detail::drop_last_copy(a)};
    return IsLimit{detail::drop_last_copy(a), a.last().exponent};
}

// ---------------------------------------------------------------------------
// Sums

/// Ordinal sum; summands of a below the leading exponent of b are absorbed.
inline Ordinal add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const Monomial& lead = b.monomials().front();
    std::vector<Monomial> out;
    for (const Monomial& m : a.monomials()) {
        if (m.exponent < lead.exponent) break;
        out.push_back(m);
    }
    auto rest = b.monomials();
    std::size_t i = 0;
    if (!out.empty() && out.back().exponent == lead.exponent) {
        out.back().coefficient += lead.coefficient;
        i = 1;
    }
    out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(i), rest.end());
    return Ordinal::from_monomials_unchecked(std::move(out));
}

/// Natural (Hessenberg) sum: merges the monomials of both operands,
/// adding coefficients of equal exponents. Commutative, never absorbs.
inline Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
    auto x = a.monomials();
    auto y = b.monomials();
    std::vector<Monomial> out;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].exponent > y[j].exponent)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].exponent > x[i].exponent) {
            out.push_back(y[j++]);
        } else {
            out.push_back(Monomial{x[i].exponent, x[i].coefficient + y[j].coefficient});
            ++i;
            ++j;
        }
    }
    return Ordinal::from_monomials_unchecked(std::move(out));
}

// ---------------------------------------------------------------------------
// Fundamental sequences

namespace detail {

inline constexpr std::uint64_t kMaxTowerHeight = 100'000;

/// w^w^...^w with `height` omegas; height 0 is 1.
inline Ordinal omega_tower(const Nat& height) {
    auto h = height.to_u64();
    if (!h || *h > kMaxTowerHeight) throw std::length_error("epsilon_0 fundamental sequence index too large");
    Ordinal t = Ordinal::finite(1);
    for (std::uint64_t i = 0; i < *h; ++i) t = Ordinal::omega_power(t);
    return t;
}

template <class Width>
Ordinal fund_seq_with(const Ordinal& lambda, const Nat& x, const Width& width);

inline void drop_last_in_place(std::vector<Monomial>& t) {
    if (t.back().coefficient == Nat(1)) {
        t.pop_back();
    } else {
        t.back().coefficient -= 1;
    }
}

/// Replaces a term ending in a limit monomial by its x-th fundamental
/// sequence member, touching only the tail.
template <class Width>
void unfold_in_place(std::vector<Monomial>& t, const Nat& x, const Width& width) {
    Ordinal beta = t.back().exponent;
    drop_last_in_place(t);
    if (is_successor(beta)) {
        Nat c = width(x);
        if (c.is_zero()) throw InvalidBase("fundamental sequence would use a zero coefficient");
        t.push_back(Monomial{drop_last_copy(beta), std::move(c)});
    } else {
        t.push_back(Monomial{fund_seq_with(beta, x, width), 1});
    }
}

/// (g + w^b)(x) with `width` copies at successor exponents.
template <class Width>
Ordinal fund_seq_with(const Ordinal& lambda, const Nat& x, const Width& width) {
    if (!is_limit(lambda)) throw NotLimit("fundamental sequence requested for a non-limit ordinal");
    auto m = lambda.monomials();
    std::vector<Monomial> t(m.begin(), m.end());
    unfold_in_place(t, x, width);
    return Ordinal::from_monomials_unchecked(std::move(t));
}

inline Nat standard_width(const Nat& v) { return v + 1; }

/// P_x with a callback per fundamental-sequence unfolding.
template <class OnUnfold>
Ordinal predecessor_with(const Ordinal& a, const Nat& x, OnUnfold&& on_unfold) {
    if (a.is_zero()) throw ZeroHasNoPredecessor();
    auto m = a.monomials();
    std::vector<Monomial> t(m.begin(), m.end());
    while (!t.back().exponent.is_zero()) {
        on_unfold();
        unfold_in_place(t, x, standard_width);
    }
    drop_last_in_place(t);
    return Ordinal::from_monomials_unchecked(std::move(t));
}

}  // namespace detail

/// Standard fundamental sequence: (g + w^(b+1))(x) = g + w^b*(x+1) and
/// (g + w^l)(x) = g + w^(l(x)); eps0(x) is a tower of x+1 omegas.
inline Ordinal fund_seq(const OrdinalIndex& index, const Nat& x) {
    if (std::holds_alternative<EpsilonZero>(index)) return detail::omega_tower(x + 1);
    return detail::fund_seq_with(std::get<Ordinal>(index), x, detail::standard_width);
}

inline Ordinal fund_seq(const Ordinal& lambda, const Nat& x) { return fund_seq(OrdinalIndex{lambda}, x); }

/// Fundamental sequence where successor exponents contribute s(x) copies.
/// eps0(x)_s is a tower of s(x) omegas.
inline Ordinal fund_seq_custom(const BaseFunction& s, const OrdinalIndex& index, const Nat& x) {
    if (std::holds_alternative<EpsilonZero>(index)) {
        Nat height = apply_base(s, x);
        if (height.is_zero()) throw InvalidBase("fundamental sequence would use an empty tower");
        return detail::omega_tower(height);
    }
    return detail::fund_seq_with(std::get<Ordinal>(index), x, [&s](const Nat& v) { return apply_base(s, v); });
}

/// P_x(a): step down limits through their x-th fundamental-sequence member
/// until a successor is found, then take its immediate predecessor.
inline Ordinal predecessor(const Ordinal& a, const Nat& x) {
    return detail::predecessor_with(a, x, [] {});
}

/// One step of the pointwise ordering at x: predecessor for successors,
/// fund_seq for limits.
inline Ordinal down_step(const Ordinal& a, const Nat& x) {
    if (a.is_zero()) throw ZeroHasNoPredecessor();
    if (is_successor(a)) return detail::drop_last_copy(a);
    return fund_seq(a, x);
}

// ---------------------------------------------------------------------------
// Measures

/// Largest coefficient anywhere in the term tree.
inline Nat norm(const Ordinal& a) {
    Nat best = 0;
    for (const Monomial& m : a.monomials()) {
        best = max(best, m.coefficient);
        best = max(best, norm(m.exponent));
    }
    return best;
}

/// |0| = 0, |w^e| = 1 + |e|, |a + b| = |a| + |b|, coefficients expanded.
/// Bits needed to write a term down: every coefficient in binary plus one
/// bit per monomial, through all exponents.
inline std::uint64_t encoded_bits(const Ordinal& a);

inline std::uint64_t encoded_bits(const Monomial& m) {
    return m.coefficient.bit_length() + 1 + encoded_bits(m.exponent);
}

inline std::uint64_t encoded_bits(const Ordinal& a) {
    std::uint64_t total = 0;
    for (const Monomial& m : a.monomials()) total += encoded_bits(m);
    return total;
}

inline Nat term_size(const Ordinal& a) {
    Nat total = 0;
    for (const Monomial& m : a.monomials()) total += m.coefficient * (term_size(m.exponent) + 1);
    return total;
}

/// Exponent nesting depth; finite ordinals have height 0.
inline std::size_t height(const Ordinal& a) {
    std::size_t h = 0;
    for (const Monomial& m : a.monomials())
        if (!m.exponent.is_zero()) h = std::max(h, 1 + height(m.exponent));
    return h;
}

// ---------------------------------------------------------------------------
// Pointwise ordering

/// b <=_x a: b is reached from a by repeated down_step at x.
///
/// Down-steps only rewrite the last monomial, so the chain from
/// d + w^e*c + r (r < w^e) passes through d + w^e before anything smaller.
/// The loop uses that to jump over the stretch of the chain that cannot
/// meet b, which keeps it proportional to the term sizes instead of the
/// chain length.
inline bool pointwise_le(const Ordinal& b, const Ordinal& a, const Nat& x) {
    Ordinal hi = a;
    Ordinal lo = b;
    for (;;) {
        auto c = hi <=> lo;
        if (c == 0) return true;
        if (c < 0) return false;
        // Strip the common prefix.
        auto h = hi.monomials();
        auto l = lo.monomials();
        std::size_t i = 0;
        while (i < h.size() && i < l.size() && h[i] == l[i]) ++i;
        // hi > lo, so hi has a monomial at position i.
        Ordinal exponent = h[i].exponent;
        std::vector<Monomial> rest;
        if (i < l.size() && l[i].exponent == exponent) {
            // Same exponent, larger coefficient in hi: cancel the shared copies.
            rest.assign(l.begin() + static_cast<std::ptrdiff_t>(i) + 1, l.end());
        } else {
            rest.assign(l.begin() + static_cast<std::ptrdiff_t>(i), l.end());
        }
        lo = Ordinal::from_monomials_unchecked(std::move(rest));
        // lo < w^exponent; descend from w^exponent by one step.
        hi = down_step(Ordinal::omega_power(exponent), x);
    }
}

// ---------------------------------------------------------------------------
// Enumeration

/// Every CNF term with norm <= max_norm, height <= max_height and at most
/// max_summands monomials at each nesting level, in increasing order.
inline std::vector<Ordinal> enumerate_ordinals(const Nat& max_norm, std::size_t max_height,
                                               std::size_t max_summands = std::numeric_limits<std::size_t>::max()) {
    auto norm_limit = max_norm.to_u64();
    if (!norm_limit || *norm_limit == 0) throw std::invalid_argument("max_norm must be between 1 and 2^64-1");
    std::vector<Ordinal> level;
    for (std::uint64_t n = 0; n <= *norm_limit; ++n) level.push_back(Ordinal::finite(n));
    if (max_summands == 0) return {Ordinal{}};
    for (std::size_t h = 1; h <= max_height; ++h) {
        // Exponents come from the previous level in decreasing order.
        std::vector<Ordinal> exps(level.rbegin(), level.rend());
        std::vector<Ordinal> next;
        std::vector<Monomial> stack;
        auto rec = [&](auto&& self, std::size_t from) -> void {
            next.push_back(Ordinal::from_monomials_unchecked(stack));
            if (stack.size() == max_summands) return;
            for (std::size_t k = from; k < exps.size(); ++k) {
                for (std::uint64_t c = 1; c <= *norm_limit; ++c) {
                    stack.push_back(Monomial{exps[k], c});
                    self(self, k + 1);
                    stack.pop_back();
                }
            }
        };
        rec(rec, 0);
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

}  // namespace subrec

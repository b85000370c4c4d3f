#pragma once

// Test-only helpers and oracles. Nothing here calls into the code paths
// it is used to check.

#include "subrec/nat.hpp"
#include "subrec/ordinal.hpp"
#include "subrec/ordinal_text.hpp"

#include <string_view>
#include <vector>

namespace subrec::testing {

inline Ordinal O(std::string_view text) { return parse_ordinal(text); }

/// Replace w by x+1 everywhere in the normal form. For x+1 larger than
/// every coefficient this is an order embedding (hereditary base-(x+1)
/// notation), which makes it an independent oracle for ordinal order.
inline Nat substitute(const Ordinal& a, std::uint64_t x) {
    Nat total = 0;
    for (const Monomial& m : a.monomials()) {
        Nat power = 1;
        Nat e = substitute(m.exponent, x);
        for (Nat i = 0; i < e; ++i) power = power * Nat(x + 1);
        total += power * m.coefficient;
    }
    return total;
}

/// Exponents of the coefficient-free expansion w^e1 + w^e2 + ... in order.
inline std::vector<Ordinal> expand(const Ordinal& a) {
    std::vector<Ordinal> out;
    for (const Monomial& m : a.monomials())
        for (Nat i = 0; i < m.coefficient; ++i) out.push_back(m.exponent);
    return out;
}

/// Rebuilds a term from non-increasing exponents, one copy each.
inline Ordinal collapse(const std::vector<Ordinal>& exps) {
    std::vector<Monomial> out;
    for (const Ordinal& e : exps) {
        if (!out.empty() && out.back().exponent == e) {
            out.back().coefficient += 1;
        } else {
            out.push_back({e, 1});
        }
    }
    return Ordinal::from_monomials(std::move(out));
}

/// The literal down-step chain from a at x, until it is <= b or hits 0.
inline bool pointwise_le_by_chain(const Ordinal& b, Ordinal a, const Nat& x, std::size_t cap = 1'000'000) {
    for (std::size_t i = 0; i < cap; ++i) {
        if (a == b) return true;
        if (a < b) return false;
        if (is_successor(a)) {
            auto mons = a.monomials();
            std::vector<Monomial> v(mons.begin(), mons.end());
            if (v.back().coefficient == Nat(1)) v.pop_back(); else v.back().coefficient -= 1;
            a = Ordinal::from_monomials(std::move(v));
        } else {
            a = fund_seq(a, x);
        }
    }
    throw std::runtime_error("chain cap reached");
}

}  // namespace subrec::testing

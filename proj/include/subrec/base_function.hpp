#pragma once

// Closed family of base functions used by relativized hierarchies and by
// non-standard fundamental sequences.

#include "subrec/budget.hpp"
#include "subrec/errors.hpp"
#include "subrec/nat.hpp"

#include <string>
#include <string_view>

namespace subrec {

class BaseFunction {
public:
    enum class Kind { Successor, Affine, Exp2 };

    /// x + 1
    static BaseFunction successor() { return BaseFunction(Kind::Successor, 1, 1); }
    /// a*x + b
    static BaseFunction affine(Nat a, Nat b) { return BaseFunction(Kind::Affine, std::move(a), std::move(b)); }
    /// 2^x
    static BaseFunction exp2() { return BaseFunction(Kind::Exp2, 0, 0); }

    /// Accepts "succ", "exp2" and "affine:A:B".
    static BaseFunction parse(std::string_view text) {
        if (text == "succ") return successor();
        if (text == "exp2") return exp2();
        if (text.starts_with("affine:")) {
            auto rest = text.substr(7);
            auto colon = rest.find(':');
            if (colon != std::string_view::npos) {
                try {
                    return affine(Nat::parse(rest.substr(0, colon)), Nat::parse(rest.substr(colon + 1)));
                } catch (const std::invalid_argument&) {
                }
            }
        }
        throw std::invalid_argument("unknown base function '" + std::string(text) +
                                    "' (expected succ, exp2 or affine:A:B)");
    }

    Kind kind() const { return kind_; }
    const Nat& slope() const { return a_; }
    const Nat& offset() const { return b_; }

    bool strictly_increasing() const { return kind_ != Kind::Affine || !a_.is_zero(); }
    /// h(x) > x for every x.
    bool strictly_expansive() const { return kind_ != Kind::Affine || (!a_.is_zero() && !b_.is_zero()); }

    std::string name() const {
        switch (kind_) {
            case Kind::Successor: return "succ";
            case Kind::Exp2: return "exp2";
            case Kind::Affine: return "affine:" + a_.str() + ":" + b_.str();
        }
        return {};
    }

    friend bool operator==(const BaseFunction&, const BaseFunction&) = default;

private:
    BaseFunction(Kind k, Nat a, Nat b) : kind_(k), a_(std::move(a)), b_(std::move(b)) {}

    Kind kind_;
    Nat a_;
    Nat b_;
};

/// h(x), unbudgeted. Exp2 on a huge argument will exhaust memory; evaluators
/// use the metered overload.
inline Nat apply_base(const BaseFunction& h, const Nat& x) {
    switch (h.kind()) {
        case BaseFunction::Kind::Successor: return x + 1;
        case BaseFunction::Kind::Affine: return h.slope() * x + h.offset();
        case BaseFunction::Kind::Exp2: {
            auto e = x.to_u64();
            if (!e) throw std::length_error("2^x: exponent too large");
            return Nat(1) << *e;
        }
    }
    return x;
}

/// h(x) with the result size checked against the meter (no step charged).
inline Nat apply_base(const BaseFunction& h, const Nat& x, const Meter& meter) {
    if (h.kind() == BaseFunction::Kind::Exp2) {
        meter.require_bits(x + 1);
        return apply_base(h, x);
    }
    if (h.kind() == BaseFunction::Kind::Affine) meter.require_bits(h.slope().bit_length() + x.bit_length() + 1);
    return meter.fits(apply_base(h, x));
}

/// The k-fold iterate h^k(x). Charges k steps up front, then computes the
/// iterate in closed form where one exists.
inline Nat iterate_base(const BaseFunction& h, const Nat& k, Nat x, Meter& meter) {
    meter.charge(k);
    if (k.is_zero()) return x;
    switch (h.kind()) {
        case BaseFunction::Kind::Successor: return meter.fits(x + k);
        case BaseFunction::Kind::Affine: {
            const Nat& a = h.slope();
            const Nat& b = h.offset();
            if (a.is_zero()) return b;
            if (a == Nat(1)) return meter.fits(x + b * k);
            if (x.is_zero() && b.is_zero()) return Nat(0);
            // a^k grows by at least bit_length(a)-1 bits per iteration.
            meter.require_bits(k * Nat(a.bit_length() - 1));
            Nat ak = pow(a, *k.to_u64());
            meter.require_bits(ak.bit_length() + x.bit_length() + b.bit_length());
            return meter.fits(ak * x + b * ((ak - 1) / (a - 1)));
        }
        case BaseFunction::Kind::Exp2: {
            for (Nat i = 0; i < k; ++i) x = apply_base(h, x, meter);
            return x;
        }
    }
    return x;
}

}  // namespace subrec

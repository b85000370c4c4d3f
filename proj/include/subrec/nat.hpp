#pragma once

// Arbitrary-precision natural numbers.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace subrec {

/// Nonnegative integer of unbounded size. Subtraction below zero throws
/// std::domain_error instead of wrapping.
class Nat {
public:
    using Repr = boost::multiprecision::cpp_int;

    Nat() = default;
    Nat(std::uint64_t v) : v_(v) {}  // NOLINT: implicit on purpose, Nat n = 3
    Nat(int v) : v_(v) {             // NOLINT
        if (v < 0) throw std::domain_error("Nat: negative value");
    }

    static Nat from_repr(Repr r) {
        if (r < 0) throw std::domain_error("Nat: negative value");
        Nat n;
        n.v_ = std::move(r);
        return n;
    }

    /// Parses [0-9]+ (leading zeros tolerated). Throws std::invalid_argument.
    static Nat parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty number");
        Repr r = 0;
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("not a natural number: " + std::string(text));
            r = r * 10 + (ch - '0');
        }
        return from_repr(std::move(r));
    }

    const Repr& repr() const { return v_; }

    bool is_zero() const { return v_.is_zero(); }

    /// Number of bits in the binary representation; 0 for zero.
    std::uint64_t bit_length() const {
        return v_.is_zero() ? 0 : static_cast<std::uint64_t>(boost::multiprecision::msb(v_)) + 1;
    }

    std::optional<std::uint64_t> to_u64() const {
        if (v_ > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
        return static_cast<std::uint64_t>(v_);
    }

    std::string str() const { return v_.str(); }

    Nat& operator+=(const Nat& o) { v_ += o.v_; return *this; }
    Nat& operator-=(const Nat& o) {
        if (v_ < o.v_) throw std::domain_error("Nat: subtraction below zero");
        v_ -= o.v_;
        return *this;
    }
    Nat& operator*=(const Nat& o) { v_ *= o.v_; return *this; }
    Nat& operator<<=(std::uint64_t k) { v_ <<= k; return *this; }
    Nat& operator++() { ++v_; return *this; }

    friend Nat operator+(Nat a, const Nat& b) { return a += b; }
    friend Nat operator-(Nat a, const Nat& b) { return a -= b; }
    friend Nat operator*(Nat a, const Nat& b) { return a *= b; }
    friend Nat operator<<(Nat a, std::uint64_t k) { return a <<= k; }
    friend Nat operator/(const Nat& a, const Nat& b) { return from_repr(a.v_ / b.v_); }

    friend bool operator==(const Nat& a, const Nat& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Nat& a, const Nat& b) {
        int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Nat& n) { return os << n.v_; }

private:
    Repr v_;
};

inline Nat pow(const Nat& base, std::uint64_t exp) {
    return Nat::from_repr(boost::multiprecision::pow(base.repr(), static_cast<unsigned>(exp)));
}

inline Nat max(const Nat& a, const Nat& b) { return a < b ? b : a; }

}  // namespace subrec

template <>
struct std::hash<subrec::Nat> {
    std::size_t operator()(const subrec::Nat& n) const noexcept {
        return boost::multiprecision::hash_value(n.repr());
    }
};

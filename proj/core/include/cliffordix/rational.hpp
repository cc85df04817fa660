#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>

#include "cliffordix/errors.hpp"

namespace cliffordix {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow: add");
    return r;
}

inline Int sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow: sub");
    return r;
}

inline Int mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow: mul");
    return r;
}

inline Int neg(Int a) { return sub(0, a); }

} // namespace checked

// Mathematical floor of a/b, b > 0. Brackets in the bound formulas are
// floors, not truncations, so -1/5 -> -1.
inline Int floor_div(Int a, Int b) {
    if (b <= 0) throw DomainError("floor_div: divisor must be positive");
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int ceil_div(Int a, Int b) {
    if (b <= 0) throw DomainError("ceil_div: divisor must be positive");
    return floor_div(a - 1, b) + 1;
}

// Exact fraction over checked 64-bit integers, always in lowest terms with
// a positive denominator. Value type for every slope and Clifford quantity.
class Rational {
public:
    constexpr Rational() = default;

    Rational(Int value) : num_(value) {} // NOLINT: implicit by design

    Rational(Int num, Int den) {
        if (den == 0) throw DomainError("Rational: zero denominator");
        if (den < 0) {
            num = checked::neg(num);
            den = checked::neg(den);
        }
        Int g = std::gcd(num < 0 ? checked::neg(num) : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        num_ = num;
        den_ = den;
    }

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
                        checked::mul(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
                        checked::mul(a.den_, b.den_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DomainError("Rational: division by zero");
        return Rational(checked::mul(a.num_, b.den_), checked::mul(a.den_, b.num_));
    }
    Rational operator-() const {
        Rational r;
        r.num_ = checked::neg(num_);
        r.den_ = den_;
        return r;
    }

    // Cross multiplication in 128 bits; cannot overflow for 64-bit operands.
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
        __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    Int floor() const { return floor_div(num_, den_); }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Inverse of str(); accepts "k" and "p/q".
    static std::optional<Rational> parse(std::string_view s) {
        auto read_int = [](std::string_view t, Int& out) -> bool {
            if (t.empty()) return false;
            std::size_t i = 0;
            bool negative = t[0] == '-';
            if (negative) i = 1;
            if (i == t.size()) return false;
            Int v = 0;
            for (; i < t.size(); ++i) {
                if (t[i] < '0' || t[i] > '9') return false;
                v = checked::add(checked::mul(v, 10), t[i] - '0');
            }
            out = negative ? checked::neg(v) : v;
            return true;
        };
        auto slash = s.find('/');
        Int num = 0;
        Int den = 1;
        if (slash == std::string_view::npos) {
            if (!read_int(s, num)) return std::nullopt;
        } else {
            if (!read_int(s.substr(0, slash), num)) return std::nullopt;
            if (!read_int(s.substr(slash + 1), den)) return std::nullopt;
            if (den == 0) return std::nullopt;
        }
        return Rational(num, den);
    }

private:
    Int num_ = 0;
    Int den_ = 1;
};

inline Rational rat_min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational rat_max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

} // namespace cliffordix

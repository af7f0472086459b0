#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "sweedler/field.hpp"

namespace sweedler {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator.
///
/// Values that fit in a machine word pair live inline (num_/den_); anything
/// larger is promoted to a shared immutable GMP rational. Results are demoted
/// back whenever they fit again, so the inline representation is canonical
/// for small values and equality can compare words directly.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    /// num/den reduced to lowest terms. Throws on den == 0.
    static Rational fraction(long long num, long long den);

    /// Parses "p" or "p/q" with arbitrarily many digits.
    static Rational parse(const std::string& text);

    bool is_zero() const;
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    int sign() const;

    Rational operator-() const;
    Rational inverse() const;  // throws error on zero

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    bool is_small() const { return !big_; }
    long long small_num() const { return num_; }
    long long small_den() const { return den_; }

private:
    struct Big;  // wraps mpq_class; kept out of the public header

    long long num_;
    long long den_;
    std::shared_ptr<const Big> big_;

    static Rational make_big(Big&& value);
    static Rational reduce128(__int128 num, __int128 den);
    static Rational add_slow(const Rational& a, const Rational& b, bool negate_b);
    static Rational mul_slow(const Rational& a, const Rational& b);
    static bool eq_slow(const Rational& a, const Rational& b);
};

}  // namespace sweedler

#pragma once

#include <cstdint>
#include <string>

#include "sweedler/field.hpp"
#include "sweedler/rational.hpp"

namespace sweedler {

/// An element of the ground field: a rational, or a residue mod a prime.
///
/// Every scalar carries its field (as the modulus word; 0 means Q), and all
/// arithmetic insists both operands agree. Serialized form is "p/q" for
/// rationals and "r mod p" for prime fields.
class Scalar {
public:
    Scalar() : mod_(0), res_(0) {}  // rational zero

    static Scalar zero(const Field& f) { return integer(f, 0); }
    static Scalar one(const Field& f) { return integer(f, 1); }
    static Scalar integer(const Field& f, long long n);
    static Scalar rational(Rational r);
    static Scalar residue(const Field& f, std::uint64_t r);

    /// Parses the serialized form for the given field.
    static Scalar parse(const Field& f, const std::string& text);

    Field field() const;
    bool is_zero() const { return mod_ ? res_ == 0 : rat_.is_zero(); }
    bool is_one() const { return mod_ ? res_ == 1 % mod_ : rat_.is_one(); }

    Scalar operator-() const;
    Scalar inverse() const;  // throws error on zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

    const Rational& rational_value() const;
    std::uint64_t residue_value() const;

private:
    std::uint64_t mod_;  // 0 = rationals
    std::uint64_t res_;  // residue when mod_ != 0
    Rational rat_;       // value when mod_ == 0

    static void require_same_field(const Scalar& a, const Scalar& b);
};

}  // namespace sweedler

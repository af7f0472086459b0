#include "sweedler/scalar.hpp"

namespace sweedler {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

Scalar Scalar::integer(const Field& f, long long n) {
    Scalar s;
    if (f.is_rationals()) {
        s.mod_ = 0;
        s.rat_ = Rational(n);
        return s;
    }
    s.mod_ = f.modulus();
    long long r = n % static_cast<long long>(s.mod_);
    if (r < 0) r += static_cast<long long>(s.mod_);
    s.res_ = static_cast<std::uint64_t>(r);
    return s;
}

Scalar Scalar::rational(Rational r) {
    Scalar s;
    s.mod_ = 0;
    s.rat_ = std::move(r);
    return s;
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    if (!f.is_prime()) throw field_mismatch("residue scalar requires a prime field");
    Scalar s;
    s.mod_ = f.modulus();
    s.res_ = r % s.mod_;
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    if (f.is_rationals()) {
        if (text.find(" mod ") != std::string::npos)
            throw parse_error("prime-field scalar '" + text + "' in a rational context");
        return rational(Rational::parse(text));
    }
    const std::size_t at = text.find(" mod ");
    if (at == std::string::npos)
        throw parse_error("expected '<r> mod <p>' scalar, got '" + text + "'");
    const std::string res_text = text.substr(0, at);
    const std::string mod_text = text.substr(at + 5);
    try {
        const std::uint64_t p = std::stoull(mod_text);
        if (p != f.modulus())
            throw field_mismatch("scalar '" + text + "' does not live in " + f.str());
        const long long r = std::stoll(res_text);
        return integer(f, r);
    } catch (const std::invalid_argument&) {
        throw parse_error("bad prime-field scalar '" + text + "'");
    } catch (const std::out_of_range&) {
        throw parse_error("prime-field scalar out of range '" + text + "'");
    }
}

Field Scalar::field() const {
    return mod_ == 0 ? Field::rationals() : Field{mod_};
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.mod_ != b.mod_)
        throw field_mismatch("scalar arithmetic across fields " + a.field().str() + " and " + b.field().str());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (mod_) {
        s.res_ = res_ == 0 ? 0 : mod_ - res_;
    } else {
        s.rat_ = -rat_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw error("inverse of zero in " + field().str());
    Scalar s = *this;
    if (mod_) {
        s.res_ = powmod(res_, mod_ - 2, mod_);
    } else {
        s.rat_ = rat_.inverse();
    }
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar s = a;
    if (a.mod_) {
        s.res_ = a.res_ + b.res_;  // mod < 2^61, no overflow
        if (s.res_ >= a.mod_) s.res_ -= a.mod_;
    } else {
        s.rat_ = a.rat_ + b.rat_;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar s = a;
    if (a.mod_) {
        s.res_ = a.res_ >= b.res_ ? a.res_ - b.res_ : a.res_ + a.mod_ - b.res_;
    } else {
        s.rat_ = a.rat_ - b.rat_;
    }
    return s;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    Scalar s = a;
    if (a.mod_) {
        s.res_ = mulmod(a.res_, b.res_, a.mod_);
    } else {
        s.rat_ = a.rat_ * b.rat_;
    }
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.mod_) return a.res_ == b.res_;
    return a.rat_ == b.rat_;
}

std::string Scalar::str() const {
    if (mod_) return std::to_string(res_) + " mod " + std::to_string(mod_);
    return rat_.str();
}

const Rational& Scalar::rational_value() const {
    if (mod_) throw field_mismatch("rational_value on a prime-field scalar");
    return rat_;
}

std::uint64_t Scalar::residue_value() const {
    if (!mod_) throw field_mismatch("residue_value on a rational scalar");
    return res_;
}

}  // namespace sweedler

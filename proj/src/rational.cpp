#include "sweedler/rational.hpp"

#include <gmpxx.h>

#include <climits>

namespace sweedler {

static_assert(sizeof(long) == 8, "LP64 assumed for the GMP long bridge");

struct Rational::Big {
    mpq_class q;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 x) { return x < 0 ? static_cast<u128>(-x) : static_cast<u128>(x); }

u128 gcd128(u128 a, u128 b) {
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long gcd64(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Keep |x| <= INT64_MAX so negation can never overflow.
bool fits_small(i128 x) { return x <= LLONG_MAX && x >= -static_cast<i128>(LLONG_MAX); }

mpq_class to_mpq(long long num, long long den) {
    mpq_class q(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    return q;  // inputs are already canonical
}

bool valid_integer_text(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

}  // namespace

Rational Rational::make_big(Big&& value) {
    // Demote when the canonical mpq fits the inline representation again.
    mpq_class& q = value.q;
    if (mpz_fits_slong_p(q.get_num().get_mpz_t()) && mpz_fits_slong_p(q.get_den().get_mpz_t())) {
        long n = mpz_get_si(q.get_num().get_mpz_t());
        long d = mpz_get_si(q.get_den().get_mpz_t());
        if (n != LONG_MIN) {
            Rational r;
            r.num_ = n;
            r.den_ = d;
            return r;
        }
    }
    Rational r;
    r.num_ = 0;
    r.den_ = 1;
    r.big_ = std::make_shared<const Big>(std::move(value));
    return r;
}

Rational Rational::fraction(long long num, long long den) {
    if (den == 0) throw error("rational with zero denominator");
    return reduce128(num, den);
}

Rational Rational::reduce128(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    u128 g = gcd128(abs128(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits_small(n) && fits_small(d)) {
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }
    // Rebuild through GMP; split each i128 into high/low halves.
    auto to_mpz = [](i128 v) {
        bool neg = v < 0;
        u128 u = abs128(v);
        mpz_class hi(static_cast<unsigned long>(u >> 64));
        mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffull));
        mpz_class out = (hi << 64) + lo;
        return neg ? mpz_class(-out) : out;
    };
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    Big b{std::move(q)};
    return make_big(std::move(b));
}

Rational Rational::parse(const std::string& text) {
    const std::size_t slash = text.find('/');
    const std::string num_text = text.substr(0, slash);
    if (!valid_integer_text(num_text))
        throw parse_error("bad rational '" + text + "'");
    if (slash == std::string::npos) {
        mpq_class q(mpz_class(num_text, 10));
        Big b{std::move(q)};
        return make_big(std::move(b));
    }
    const std::string den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text) || den_text[0] == '-')
        throw parse_error("bad rational '" + text + "'");
    mpz_class den(den_text, 10);
    if (den == 0) throw parse_error("zero denominator in '" + text + "'");
    mpq_class q(mpz_class(num_text, 10), den);
    q.canonicalize();
    Big b{std::move(q)};
    return make_big(std::move(b));
}

bool Rational::is_zero() const { return !big_ && num_ == 0; }

int Rational::sign() const {
    if (big_) return mpq_sgn(big_->q.get_mpq_t());
    return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational Rational::operator-() const {
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Big b{mpq_class(-big_->q)};
    return make_big(std::move(b));
}

Rational Rational::inverse() const {
    if (is_zero()) throw error("inverse of zero");
    if (!big_) {
        Rational r;
        if (num_ > 0) {
            r.num_ = den_;
            r.den_ = num_;
        } else {
            r.num_ = -den_;
            r.den_ = -num_;
        }
        return r;
    }
    Big b{mpq_class(1 / big_->q)};
    return make_big(std::move(b));
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
        const i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::reduce128(n, d);
    }
    return Rational::add_slow(a, b, false);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 n = static_cast<i128>(a.num_) * b.den_ - static_cast<i128>(b.num_) * a.den_;
        const i128 d = static_cast<i128>(a.den_) * b.den_;
        return Rational::reduce128(n, d);
    }
    return Rational::add_slow(a, b, true);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        const long long g1 = gcd64(a.num_, b.den_);
        const long long g2 = gcd64(b.num_, a.den_);
        const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        return Rational::reduce128(n, d);
    }
    return Rational::mul_slow(a, b);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw error("division by zero");
    return a * b.inverse();
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    return Rational::eq_slow(a, b);
}

Rational Rational::add_slow(const Rational& a, const Rational& b, bool negate_b) {
    mpq_class qa = a.big_ ? a.big_->q : to_mpq(a.num_, a.den_);
    mpq_class qb = b.big_ ? b.big_->q : to_mpq(b.num_, b.den_);
    Big out{negate_b ? mpq_class(qa - qb) : mpq_class(qa + qb)};
    return make_big(std::move(out));
}

Rational Rational::mul_slow(const Rational& a, const Rational& b) {
    mpq_class qa = a.big_ ? a.big_->q : to_mpq(a.num_, a.den_);
    mpq_class qb = b.big_ ? b.big_->q : to_mpq(b.num_, b.den_);
    Big out{mpq_class(qa * qb)};
    return make_big(std::move(out));
}

bool Rational::eq_slow(const Rational& a, const Rational& b) {
    // A promoted value never fits inline, so mixed representations differ.
    if (static_cast<bool>(a.big_) != static_cast<bool>(b.big_)) return false;
    return mpq_cmp(a.big_->q.get_mpq_t(), b.big_->q.get_mpq_t()) == 0;
}

std::string Rational::str() const {
    if (big_) return big_->q.get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace sweedler

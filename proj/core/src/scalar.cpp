#include "mhforge/scalar.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "mhforge/error.hpp"

namespace mhf {

namespace {

using i128 = __int128;
constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v > kMin && v <= kMax; }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_small(const mpz_class& z, std::int64_t& out) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
    long v = z.get_si();
    if (v == kMin) return false;
    out = v;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : num_(n), den_(1) {
    if (n == kMin) *this = from_big(mpq_class(mpz_class(to_mpz(n))));
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw MathError("rational with zero denominator");
    *this = from_wide(n, d);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational Rational::from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    if (d != 1) {
        i128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
    }
    Rational r;
    if (fits(n) && fits(d)) {
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    return from_big(std::move(q));
}

Rational Rational::from_big(mpq_class q) {
    q.canonicalize();
    Rational r;
    std::int64_t n = 0, d = 1;
    if (mpz_small(q.get_num(), n) && mpz_small(q.get_den(), d)) {
        r.num_ = n;
        r.den_ = d;
        return r;
    }
    r.big_ = std::make_shared<const mpq_class>(std::move(q));
    return r;
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw InputError("empty rational literal");
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw InputError("bad rational literal '" + s + "'");
    mpq_class q;
    if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
    if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
    return from_big(std::move(q));
}

Rational Rational::operator-() const {
    if (big_) return from_big(-*big_);
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            i128 s = static_cast<i128>(a.num_) + b.num_;
            if (fits(s)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(s);
                return r;
            }
        }
        return Rational::from_wide(static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_,
                                   static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_mpq() + b.to_mpq());
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) return Rational();
        if (a.den_ == 1 && b.den_ == 1) {
            i128 p = static_cast<i128>(a.num_) * b.num_;
            if (fits(p)) {
                Rational r;
                r.num_ = static_cast<std::int64_t>(p);
                return r;
            }
        }
        return Rational::from_wide(static_cast<i128>(a.num_) * b.num_, static_cast<i128>(a.den_) * b.den_);
    }
    return Rational::from_big(a.to_mpq() * b.to_mpq());
}

Rational Rational::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    if (big_) return from_big(1 / *big_);
    return from_wide(den_, num_);
}

Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms: a big value never equals a small one
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
    return a.to_mpq() < b.to_mpq();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ + b.re_);
    return {a.re_ + b.re_, a.im_ + b.im_};
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.im_.is_zero() && b.im_.is_zero()) return Scalar(a.re_ * b.re_);
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
}

Scalar& Scalar::operator+=(const Scalar& b) {
    re_ += b.re_;
    if (!im_.is_zero() || !b.im_.is_zero()) im_ += b.im_;
    return *this;
}

Scalar Scalar::inverse() const {
    if (im_.is_zero()) return Scalar(re_.inverse());
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

std::string Scalar::str() const {
    if (im_.is_zero()) return re_.str();
    std::string imag;
    if (im_.is_one())
        imag = "i";
    else if (im_ == Rational(-1))
        imag = "-i";
    else
        imag = im_.str() + "i";
    if (re_.is_zero()) return imag;
    if (imag[0] != '-') imag = "+" + imag;
    return re_.str() + imag;
}

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw InputError("empty scalar literal");
    if (s.back() != 'i') return Scalar(Rational::parse(s));
    s.pop_back();
    // split at the last sign that is not at position 0 and not after '/'
    std::size_t cut = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;)
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != '/') {
            cut = k;
            break;
        }
    std::string re_part = cut == std::string::npos ? "" : s.substr(0, cut);
    std::string im_part = cut == std::string::npos ? s : s.substr(cut);
    Rational im;
    if (im_part.empty() || im_part == "+")
        im = Rational(1);
    else if (im_part == "-")
        im = Rational(-1);
    else
        im = Rational::parse(im_part);
    Rational re = re_part.empty() ? Rational() : Rational::parse(re_part);
    return {re, im};
}

}  // namespace mhf

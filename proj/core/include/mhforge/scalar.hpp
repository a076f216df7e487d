#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mhf {

// Exact rational.  Values that fit in int64 stay inline; anything larger
// moves to a shared GMP rational and is demoted again when it shrinks.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(implicit)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    std::string str() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& b) { return *this = *this + b; }
    Rational& operator-=(const Rational& b) { return *this = *this - b; }
    Rational& operator*=(const Rational& b) { return *this = *this * b; }
    Rational& operator/=(const Rational& b) { return *this = *this / b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator<(const Rational& a, const Rational& b);

    Rational inverse() const;

private:
    static Rational from_wide(__int128 n, __int128 d);
    static Rational from_big(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

// Element of Q or Q(i).  Plain rationals are gaussian rationals with zero
// imaginary part; the field tag lives on the algebra, not on each scalar.
class Scalar {
public:
    Scalar() = default;
    Scalar(std::int64_t n) : re_(n) {}  // NOLINT(implicit)
    Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return {Rational(0), Rational(1)}; }
    // Accepts "3", "-2/5", "1/2+3/4i", "-i", "2i", "1-i".
    static Scalar parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Scalar conj() const { return {re_, -im_}; }
    Scalar inverse() const;
    std::string str() const;

    Scalar operator-() const { return {-re_, -im_}; }
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b) { return *this += -b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

private:
    Rational re_;
    Rational im_;
};

}  // namespace mhf

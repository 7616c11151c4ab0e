#pragma once

// Exact integers, reduced rationals and signed unimodular 2x2 matrices.

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hardy {

using Integer = mpz_class;

// Raised when an input violates one of the parity conventions
// (c + d odd for S, d odd for S4, ...). The message names the rule.
class ParityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

int sign(const Integer &v);
bool is_even(const Integer &v);
bool is_odd(const Integer &v);
Integer gcd(const Integer &a, const Integer &b);
// Floor division and the matching non-negative remainder (for d > 0).
Integer floor_div(const Integer &n, const Integer &d);
Integer floor_mod(const Integer &n, const Integer &d);
// Inverse of a modulo m, in [0, m). Throws if gcd(a, m) != 1.
Integer mod_inverse(const Integer &a, const Integer &m);
std::optional<std::int64_t> to_int64(const Integer &v);
Integer parse_integer(std::string_view text);

// A fraction kept in lowest terms with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const Integer &n) : num_(n), den_(1) {}
    Rational(Integer n, Integer d);

    // Accepts "p/q" or "n", with an optional sign in front of p.
    static Rational parse(std::string_view text);

    const Integer &num() const { return num_; }
    const Integer &den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return hardy::sign(num_); }
    Integer floor() const { return floor_div(num_, den_); }
    // Nearest integer, halves rounded up.
    Integer round_half_up() const;
    Rational abs() const;
    Rational inverse() const;
    double to_double() const;
    std::string str() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

private:
    struct Unchecked {};
    Rational(Integer n, Integer d, Unchecked) : num_(std::move(n)), den_(std::move(d)) {}

    Integer num_;
    Integer den_;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

// A point of P^1(Q): a rational or the cusp at infinity.
class Cusp {
public:
    Cusp(const Rational &v) : value_(v) {}
    Cusp(long v) : value_(Rational(v)) {}
    static Cusp infinity() { return Cusp(); }

    bool is_infinity() const { return !value_.has_value(); }
    const Rational &value() const;
    std::string str() const;

    friend bool operator==(const Cusp &, const Cusp &) = default;

private:
    Cusp() = default;
    std::optional<Rational> value_;
};

enum class GroupTag { SL2, Theta, Gamma02 };

std::string_view to_string(GroupTag tag);
GroupTag parse_group_tag(std::string_view text);

class GroupSet {
public:
    GroupSet() = default;
    void insert(GroupTag t) { bits_ |= bit(t); }
    bool contains(GroupTag t) const { return (bits_ & bit(t)) != 0; }
    friend bool operator==(const GroupSet &, const GroupSet &) = default;

private:
    static unsigned bit(GroupTag t) { return 1u << static_cast<unsigned>(t); }
    unsigned bits_ = 0;
};

// (a b; c d) with ad - bc = 1. The determinant is checked on construction.
class Mat2 {
public:
    Mat2(Integer a, Integer b, Integer c, Integer d);

    static Mat2 identity();
    static Mat2 T(const Integer &k = 1);   // (1 k; 0 1)
    static Mat2 S();                       // (0 -1; 1 0)
    static Mat2 V(const Integer &k = 1);   // (1 0; k 1)

    const Integer &a() const { return a_; }
    const Integer &b() const { return b_; }
    const Integer &c() const { return c_; }
    const Integer &d() const { return d_; }

    Mat2 inverse() const;
    Mat2 operator-() const;
    Mat2 pow(long e) const;
    std::string str() const;

    friend bool operator==(const Mat2 &, const Mat2 &) = default;

private:
    Integer a_, b_, c_, d_;
};

Mat2 mat_mul(const Mat2 &x, const Mat2 &y);
inline Mat2 operator*(const Mat2 &x, const Mat2 &y) { return mat_mul(x, y); }
std::ostream &operator<<(std::ostream &os, const Mat2 &m);

// (a x + b) / (c x + d); A.infinity = a / c.
Cusp mobius_apply(const Mat2 &m, const Cusp &x);

GroupSet group_membership(const Mat2 &m);
bool in_group(const Mat2 &m, GroupTag tag);

} // namespace hardy

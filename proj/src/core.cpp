#include "hardy/core.hpp"

#include <charconv>
#include <sstream>

namespace hardy {

int sign(const Integer &v)
{
    return sgn(v);
}

bool is_even(const Integer &v)
{
    return mpz_even_p(v.get_mpz_t()) != 0;
}

bool is_odd(const Integer &v)
{
    return !is_even(v);
}

Integer gcd(const Integer &a, const Integer &b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer floor_div(const Integer &n, const Integer &d)
{
    if (d == 0) {
        throw std::domain_error("division by zero");
    }
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    return q;
}

Integer floor_mod(const Integer &n, const Integer &d)
{
    return n - d * floor_div(n, d);
}

Integer mod_inverse(const Integer &a, const Integer &m)
{
    if (m <= 0) {
        throw std::domain_error("modulus must be positive");
    }
    if (m == 1) {
        return 0;
    }
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        throw std::domain_error("no inverse: arguments are not coprime");
    }
    return r;
}

std::optional<std::int64_t> to_int64(const Integer &v)
{
    if (!v.fits_slong_p()) {
        return std::nullopt;
    }
    return static_cast<std::int64_t>(v.get_si());
}

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        start = 1;
    }
    if (start >= s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
        throw std::invalid_argument("malformed integer: '" + s + "'");
    }
    if (s[0] == '+') {
        s.erase(0, 1);
    }
    return Integer(s, 10);
}

Rational::Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d))
{
    if (den_ == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    auto den = text.substr(slash + 1);
    if (!den.empty() && (den[0] == '+' || den[0] == '-')) {
        throw std::invalid_argument("malformed rational: sign belongs on the numerator");
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Integer Rational::round_half_up() const
{
    return floor_div(2 * num_ + den_, 2 * den_);
}

Rational Rational::abs() const
{
    return Rational(hardy::sign(num_) < 0 ? Integer(-num_) : num_, den_, Unchecked{});
}

Rational Rational::inverse() const
{
    return Rational(den_, num_);
}

double Rational::to_double() const
{
    mpq_class q(num_, den_);
    return q.get_d();
}

std::string Rational::str() const
{
    if (den_ == 1) {
        return num_.get_str();
    }
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::operator-() const
{
    return Rational(-num_, den_, Unchecked{});
}

Rational &Rational::operator+=(const Rational &o)
{
    *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    *this = Rational(num_ * o.num_, den_ * o.den_);
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.num_ == 0) {
        throw std::domain_error("division by zero rational");
    }
    *this = Rational(num_ * o.den_, den_ * o.num_);
    return *this;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    int c = cmp(a.num_ * b.den_, b.num_ * a.den_);
    if (c < 0) {
        return std::strong_ordering::less;
    }
    if (c > 0) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.str();
}

const Rational &Cusp::value() const
{
    if (!value_) {
        throw std::domain_error("the cusp at infinity has no rational value");
    }
    return *value_;
}

std::string Cusp::str() const
{
    return value_ ? value_->str() : std::string("inf");
}

std::string_view to_string(GroupTag tag)
{
    switch (tag) {
    case GroupTag::SL2:
        return "sl2";
    case GroupTag::Theta:
        return "theta";
    case GroupTag::Gamma02:
        return "gamma02";
    }
    return "?";
}

GroupTag parse_group_tag(std::string_view text)
{
    if (text == "sl2") {
        return GroupTag::SL2;
    }
    if (text == "theta") {
        return GroupTag::Theta;
    }
    if (text == "gamma02") {
        return GroupTag::Gamma02;
    }
    throw std::invalid_argument("unknown group '" + std::string(text) + "' (expected sl2, theta or gamma02)");
}

Mat2::Mat2(Integer a, Integer b, Integer c, Integer d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
{
    if (a_ * d_ - b_ * c_ != 1) {
        throw std::domain_error("matrix " + str() + " does not have determinant 1");
    }
}

Mat2 Mat2::identity()
{
    return Mat2(1, 0, 0, 1);
}

Mat2 Mat2::T(const Integer &k)
{
    return Mat2(1, k, 0, 1);
}

Mat2 Mat2::S()
{
    return Mat2(0, -1, 1, 0);
}

Mat2 Mat2::V(const Integer &k)
{
    return Mat2(1, 0, k, 1);
}

Mat2 Mat2::inverse() const
{
    return Mat2(d_, -b_, -c_, a_);
}

Mat2 Mat2::operator-() const
{
    return Mat2(-a_, -b_, -c_, -d_);
}

Mat2 Mat2::pow(long e) const
{
    Mat2 base = e < 0 ? inverse() : *this;
    unsigned long n = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1 : static_cast<unsigned long>(e);
    Mat2 result = identity();
    while (n > 0) {
        if (n & 1) {
            result = result * base;
        }
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::string Mat2::str() const
{
    std::ostringstream os;
    os << "(" << a_ << " " << b_ << "; " << c_ << " " << d_ << ")";
    return os.str();
}

Mat2 mat_mul(const Mat2 &x, const Mat2 &y)
{
    return Mat2(x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
                x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d());
}

std::ostream &operator<<(std::ostream &os, const Mat2 &m)
{
    return os << m.str();
}

Cusp mobius_apply(const Mat2 &m, const Cusp &x)
{
    Integer num;
    Integer den;
    if (x.is_infinity()) {
        num = m.a();
        den = m.c();
    } else {
        const Rational &v = x.value();
        num = m.a() * v.num() + m.b() * v.den();
        den = m.c() * v.num() + m.d() * v.den();
    }
    if (den == 0) {
        return Cusp::infinity();
    }
    return Cusp(Rational(num, den));
}

GroupSet group_membership(const Mat2 &m)
{
    GroupSet s;
    s.insert(GroupTag::SL2);
    if (is_even(m.a() - m.d()) && is_even(m.b() - m.c())) {
        s.insert(GroupTag::Theta);
    }
    if (is_even(m.b())) {
        s.insert(GroupTag::Gamma02);
    }
    return s;
}

bool in_group(const Mat2 &m, GroupTag tag)
{
    return group_membership(m).contains(tag);
}

} // namespace hardy

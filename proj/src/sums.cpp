#include "hardy/sums.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace hardy {

namespace {

void require_coprime(const Integer &d, const Integer &c, const char *what)
{
    if (c <= 0) {
        throw std::domain_error(std::string(what) + "(d, c) requires c > 0");
    }
    if (gcd(d, c) != 1) {
        throw std::domain_error(std::string(what) + "(d, c) requires gcd(d, c) = 1");
    }
}

void require_s_args(const Integer &d, const Integer &c)
{
    require_coprime(d, c, "S");
    if (is_even(c + d)) {
        throw ParityError("S(d, c) requires c + d odd (got d = " + d.get_str() + ", c = " + c.get_str() + ")");
    }
}

void require_s4_args(const Integer &d, const Integer &c)
{
    require_coprime(d, c, "S4");
    if (is_even(d)) {
        throw ParityError("S4(d, c) requires d odd (got d = " + d.get_str() + ")");
    }
}

// c and d reduced modulo 2c, as machine integers, for the O(c) loops.
std::pair<std::int64_t, std::int64_t> small_args(const Integer &d, const Integer &c)
{
    constexpr std::int64_t limit = std::int64_t{1} << 31;
    auto cc = to_int64(c);
    if (!cc || *cc > limit) {
        throw std::domain_error("c = " + c.get_str() + " is too large for direct summation");
    }
    Integer dm = floor_mod(d, 2 * c);
    return {dm.get_si(), *cc};
}

// d shifted by a multiple of 2c into (-c, c].
Integer centered(const Integer &d, const Integer &c)
{
    Integer dm = floor_mod(d, 2 * c);
    if (dm > c) {
        dm -= 2 * c;
    }
    return dm;
}

} // namespace

Integer hardy_s_direct(const Integer &d, const Integer &c)
{
    require_s_args(d, c);
    auto [dm, cc] = small_args(d, c);
    std::int64_t total = 0;
    for (std::int64_t k = 1; k < cc; ++k) {
        std::int64_t e = k + 1 + (dm * k) / cc;
        total += (e % 2 == 0) ? 1 : -1;
    }
    return Integer(static_cast<long>(total));
}

Integer hardy_s4_direct(const Integer &d, const Integer &c)
{
    require_s4_args(d, c);
    auto [dm, cc] = small_args(d, c);
    std::int64_t total = 0;
    for (std::int64_t k = 1; k < cc; ++k) {
        total += ((dm * k) / cc % 2 == 0) ? 1 : -1;
    }
    return Integer(static_cast<long>(total));
}

Integer hardy_s_formula(const ContinuedFraction &theta)
{
    Integer s = 0;
    for (const auto &q : theta.quotients) {
        s -= sign(q);
    }
    return s;
}

Integer hardy_s4_formula(const ContinuedFraction &gamma02)
{
    Integer s = 0;
    for (std::size_t k = 1; k <= gamma02.quotients.size(); ++k) {
        const Integer &a = gamma02.quotients[k - 1];
        if (k % 2 == 1) {
            s += a;
            s -= sign(a);
        } else {
            s += sign(a);
        }
    }
    return s;
}

Integer hardy_s_from_cfe(const Integer &d, const Integer &c)
{
    require_s_args(d, c);
    return hardy_s_formula(expand_theta(Rational(centered(d, c), c)));
}

Integer hardy_s4_from_cfe(const Integer &d, const Integer &c)
{
    require_s4_args(d, c);
    return hardy_s4_formula(expand_gamma02(Rational(centered(d, c), c)));
}

JointSums hardy_joint(const Integer &d, const Integer &c)
{
    require_coprime(d, c, "S + S4");
    if (is_odd(c) || is_even(d)) {
        throw ParityError("S(d, c) + S4(d, c) requires c even and d odd");
    }
    ContinuedFraction cf = expand_theta(Rational(centered(d, c), c));
    if (cf.length() % 2 == 0) {
        throw std::logic_error("theta-type expansion of " + d.get_str() + "/" + c.get_str() + " has even length");
    }
    JointSums out;
    out.s = hardy_s_formula(cf);
    out.total = 0;
    for (std::size_t k = 1; k <= cf.length(); k += 2) {
        out.total -= cf.quotients[k - 1]; // -2 c_k with quotient 2 c_k
    }
    out.s4 = out.total - out.s;
    return out;
}

Integer joint_direct_sum(const Integer &d, const Integer &c)
{
    require_coprime(d, c, "S + S4");
    auto [dm, cc] = small_args(d, c);
    std::int64_t total = 0;
    for (std::int64_t k = 1; k < cc; k += 2) {
        total += ((dm * k) / cc % 2 == 0) ? 1 : -1;
    }
    return Integer(static_cast<long>(2 * total));
}

namespace {

Integer s_extended(const Integer &d, const Integer &c)
{
    if (c < 0) {
        return -hardy_s_from_cfe(d, -c);
    }
    return hardy_s_from_cfe(d, c);
}

} // namespace

bool check_s_reciprocity(const Integer &d, const Integer &c)
{
    if (c == 0 || d == 0) {
        throw std::domain_error("reciprocity needs c, d nonzero");
    }
    return s_extended(d, c) + s_extended(c, d) == sign(c) * sign(d);
}

S4ReciprocityTerms s4_reciprocity_terms(const Integer &c, const Integer &d)
{
    if (!(c > d && d > 0) || is_even(c) || is_even(d) || gcd(c, d) != 1) {
        throw std::domain_error("S4 reciprocity needs c > d > 0 odd and coprime");
    }
    S4ReciprocityTerms t;
    t.lhs = hardy_s4_from_cfe(d, c) + hardy_s4_from_cfe(c, d);
    t.expansion = expand_all_even(Rational(c, d));
    t.rhs = t.expansion.head - 1;
    for (const auto &q : t.expansion.quotients) {
        t.rhs += q;
    }
    return t;
}

bool check_s4_reciprocity(const Integer &c, const Integer &d)
{
    auto t = s4_reciprocity_terms(c, d);
    return t.lhs == t.rhs;
}

Rational dedekind_recursive(const Integer &d, const Integer &c, ReciprocityForm form)
{
    require_coprime(d, c, "s");
    const Integer scale = form == ReciprocityForm::Standard ? 12 : 1;
    Rational acc;
    int sgn = 1;
    Integer num = floor_mod(d, c);
    Integer den = c;
    while (den != 1) {
        // s(num, den) = -s(den, num) + (den^2 + num^2 + 1)/(scale den num) - 1/4
        Rational term = Rational(den * den + num * num + 1, scale * den * num) - Rational(1, 4);
        acc += sgn == 1 ? term : -term;
        sgn = -sgn;
        Integer next = floor_mod(den, num);
        den = num;
        num = next;
    }
    return acc;
}

Rational dedekind_hickerson(const Integer &d, const Integer &c)
{
    require_coprime(d, c, "s");
    if (!(d > 0 && d < c)) {
        throw std::domain_error("the partial-quotient formula for s(d, c) needs 0 < d < c");
    }
    Integer a = mod_inverse(d, c);
    ContinuedFraction cf = expand_classical_odd(Rational(d, c));
    Integer alt = 0;
    for (std::size_t k = 1; k <= cf.length(); ++k) {
        if (k % 2 == 0) {
            alt += cf.quotients[k - 1];
        } else {
            alt -= cf.quotients[k - 1];
        }
    }
    return Rational(-1, 4) + (Rational(a + d, c) - Rational(alt)) / Rational(12);
}

namespace {

template <typename F>
F cotangent_sum(long d, long c)
{
    const F pi = std::numbers::pi_v<F>;
    F total = 0;
    for (long k = 1; k < c; ++k) {
        F u = pi * static_cast<F>(k) / static_cast<F>(c);
        F v = pi * static_cast<F>((static_cast<long long>(k) * d) % c) / static_cast<F>(c);
        total += (std::cos(u) / std::sin(u)) * (std::cos(v) / std::sin(v));
    }
    return total / (4 * static_cast<F>(c));
}

} // namespace

double dedekind_cotangent_numeric(long d, long c, FloatPrecision precision)
{
    require_coprime(Integer(d), Integer(c), "s");
    if (precision == FloatPrecision::Double) {
        return cotangent_sum<double>(d, c);
    }
    return static_cast<double>(cotangent_sum<long double>(d, c));
}

Parity hardy_parity(const Integer &d, const Integer &c)
{
    return parity_of(hardy_s_from_cfe(d, c));
}

} // namespace hardy

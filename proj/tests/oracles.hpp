#pragma once

// Slow, independent reference implementations. Nothing here calls the
// library's expansion or sum code; only the exact Rational type is shared.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "hardy/core.hpp"

namespace oracle {

using hardy::Integer;
using hardy::Rational;

inline long long fdiv(long long a, long long b)
{
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

// Defining sums, straight from the formulas, for any sign of d.
inline long hardy_s(long long d, long long c)
{
    long long t = 0;
    for (long long k = 1; k < c; ++k) {
        long long e = k + 1 + fdiv(d * k, c);
        t += (e % 2 == 0) ? 1 : -1;
    }
    return t;
}

inline long hardy_s4(long long d, long long c)
{
    long long t = 0;
    for (long long k = 1; k < c; ++k) {
        t += (fdiv(d * k, c) % 2 == 0) ? 1 : -1;
    }
    return t;
}

inline long joint_odd_k(long long d, long long c)
{
    long long t = 0;
    for (long long k = 1; k < c; k += 2) {
        t += (fdiv(d * k, c) % 2 == 0) ? 1 : -1;
    }
    return 2 * t;
}

// ((x)) = x - floor(x) - 1/2, and 0 at integers.
inline Rational sawtooth(const Rational &x)
{
    if (x.is_integer()) {
        return Rational(0);
    }
    return x - Rational(x.floor()) - Rational(1, 2);
}

// s(d, c) = sum_{k mod c} ((k/c)) ((dk/c)), exact.
inline Rational dedekind(long long d, long long c)
{
    Rational t;
    for (long long k = 1; k < c; ++k) {
        t += sawtooth(Rational(Integer(static_cast<long>(k)), Integer(static_cast<long>(c)))) *
             sawtooth(Rational(Integer(static_cast<long>(d * k)), Integer(static_cast<long>(c))));
    }
    return t;
}

inline long double dedekind_cot(long long d, long long c)
{
    const long double pi = std::numbers::pi_v<long double>;
    long double t = 0;
    for (long long k = 1; k < c; ++k) {
        long double u = pi * k / c;
        long double v = pi * ((k * d) % c) / c;
        t += (std::cos(u) / std::sin(u)) * (std::cos(v) / std::sin(v));
    }
    return t / (4 * c);
}

// h - 1/(q1 - 1/(... - 1/qn)), evaluated from the back.
inline std::optional<Rational> eval_negative(const Integer &head, const std::vector<Integer> &q)
{
    if (q.empty()) {
        return Rational(head);
    }
    Rational tail(q.back());
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        if (tail.is_zero()) {
            return std::nullopt;
        }
        tail = Rational(q[i]) - tail.inverse();
    }
    if (tail.is_zero()) {
        return std::nullopt;
    }
    return Rational(head) - tail.inverse();
}

// h + 1/(q1 + 1/(... + 1/qn)).
inline std::optional<Rational> eval_positive(const Integer &head, const std::vector<Integer> &q)
{
    if (q.empty()) {
        return Rational(head);
    }
    Rational tail(q.back());
    for (std::size_t i = q.size() - 1; i-- > 0;) {
        if (tail.is_zero()) {
            return std::nullopt;
        }
        tail = Rational(q[i]) + tail.inverse();
    }
    if (tail.is_zero()) {
        return std::nullopt;
    }
    return Rational(head) + tail.inverse();
}

// Every list of nonzero even quotients, length 1..depth, |q| <= bound,
// whose negative fraction with zero head evaluates to x.
inline std::vector<std::vector<Integer>> theta_expansions(const Rational &x, int depth, int bound)
{
    std::vector<std::vector<Integer>> found;
    std::vector<Integer> cur;
    auto rec = [&](auto &&self) -> void {
        if (!cur.empty()) {
            auto v = eval_negative(0, cur);
            if (v && *v == x) {
                found.push_back(cur);
            }
        }
        if (static_cast<int>(cur.size()) == depth) {
            return;
        }
        for (int q = -bound; q <= bound; q += 2) {
            if (q == 0) {
                continue;
            }
            cur.push_back(q);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return found;
}

// Odd-length [0; a1, ..., an] with a2, a4, ... even, |a1|, |a3|, ..., |a_{n-2}| > 1,
// all |a_k| <= bound, evaluating to x.
inline std::vector<std::vector<Integer>> gamma02_expansions(const Rational &x, int depth, int bound)
{
    std::vector<std::vector<Integer>> found;
    std::vector<Integer> cur;
    auto rec = [&](auto &&self) -> void {
        const std::size_t n = cur.size();
        if (n % 2 == 1) {
            auto v = eval_positive(0, cur);
            if (v && *v == x) {
                found.push_back(cur);
            }
        }
        if (static_cast<int>(n) == depth) {
            return;
        }
        // The previous odd-position quotient may only be +-1 if it was last.
        if (n % 2 == 1 && abs(cur.back()) <= 1) {
            return;
        }
        const bool even_pos = (n + 1) % 2 == 0;
        for (int q = -bound; q <= bound; ++q) {
            if (q == 0 || (even_pos && q % 2 != 0)) {
                continue;
            }
            cur.push_back(q);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return found;
}

} // namespace oracle

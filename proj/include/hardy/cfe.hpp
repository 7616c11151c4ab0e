#pragma once

// Continued fraction expansions attached to SL2(Z), the theta group and
// Gamma^0(2), their convergents, and the generator words they encode.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hardy/core.hpp"

namespace hardy {

enum class CfKind {
    // [a0; a1, ..., an] = a0 + 1/(a1 + 1/(... + 1/an)), a_k >= 1.
    Classical,
    // [[h; q1, ..., qn]] = h - 1/(q1 - 1/(... - 1/qn)), h and all q_k even.
    ThetaNeg,
    // [h; q1, ..., qn], h and q2, q4, ... even, |q1|, |q3|, ..., |q_{n-2}| > 1, n odd.
    Gamma02Pos,
};

std::string_view to_string(CfKind kind);

struct ContinuedFraction {
    CfKind kind = CfKind::Classical;
    Integer head = 0;
    std::vector<Integer> quotients;

    std::size_t length() const { return quotients.size(); }
    friend bool operator==(const ContinuedFraction &, const ContinuedFraction &) = default;
};

// Throws std::domain_error naming the first violated structural rule.
void validate(const ContinuedFraction &cf);
bool is_valid(const ContinuedFraction &cf);

// Exact value. A zero intermediate denominator is reported as a malformed
// expansion; the structural rules are not otherwise enforced here.
Rational eval_cf(const ContinuedFraction &cf);

// Unique [[2c0; 2c1, ..., 2cn]] with d/c as value. Needs c + d odd.
ContinuedFraction expand_theta(const Rational &x);

// Deterministic expansion [2a0; a1, 2a2, ..., an] of odd length. Needs the
// numerator odd. Every quotient except possibly the last one is even.
ContinuedFraction expand_gamma02(const Rational &x);

// Euclidean expansion with floor head and quotients >= 1, rewritten so
// the number of quotients after the head is odd (or zero for integers).
ContinuedFraction expand_classical(const Rational &x);

// As expand_classical, restricted to 0 < x < 1.
ContinuedFraction expand_classical_odd(const Rational &x);

// c/d = [2a0; 2a1, ..., 2a_{n-1}, a_n], n odd, for c, d odd and coprime.
// Throws std::logic_error if the expansion does not come out in that shape.
ContinuedFraction expand_all_even(const Rational &x);

// Rewrites [a0; ..., a_{2k}] to an odd quotient count without changing the
// value: (.., a) -> (.., a - 1, 1) when a != 1, (.., b, 1) -> (.., b + 1).
ContinuedFraction normalize_odd_length(const ContinuedFraction &cf);

// Partial fractions p_k / q_k of [[2c1, ..., 2cn]], k = 1..n, normalized
// so that p_1 / q_1 = -1 / (2c1) and p_k = 2c_k p_{k-1} - p_{k-2}
// starting from (p_0, q_0) = (0, 1), (p_{-1}, q_{-1}) = (1, 0).
// Consecutive pairs satisfy p_{k-1} q_k - p_k q_{k-1} = 1.
struct Convergents {
    std::vector<std::pair<Integer, Integer>> pairs;

    const std::pair<Integer, Integer> &at(std::size_t k) const { return pairs.at(k - 1); }
    Rational value(std::size_t k) const;
};

Convergents convergents(const ContinuedFraction &cf);

// The same recurrence for an arbitrary list of nonzero negative-fraction
// quotients (not necessarily even).
Convergents negative_convergents(const std::vector<Integer> &quotients);

enum class Parity { Even, Odd };
std::string_view to_string(Parity p);
Parity parity_of(const Integer &v);

// n mod 2. Only needs the even-position quotients to be even.
Parity parity_of_length(const ContinuedFraction &cf);

enum class Generator { T, T2, S, V };

struct Letter {
    Generator gen;
    Integer exponent;
    friend bool operator==(const Letter &, const Letter &) = default;
};

struct GeneratorWord {
    int sign = 1;
    std::vector<Letter> letters;

    friend bool operator==(const GeneratorWord &, const GeneratorWord &) = default;
};

Mat2 letter_matrix(const Letter &l);
Mat2 evaluate(const GeneratorWord &w);
std::string to_string(const GeneratorWord &w);

// T^{2c0} S T^{2c1} S ... for ThetaNeg, T^{2a0} V^{a1} T^{2a2} ... V^{an}
// for Gamma02Pos, T^{a0} V^{a1} ... V^{an} for Classical (an integer n as
// T^{n-1} V). The word always maps infinity to the value. Zero exponents
// are dropped.
GeneratorWord cf_to_word(const ContinuedFraction &cf);

// Word in the generators of `tag` (T2/S, T2/V or T/V with S for -I) that
// multiplies out to m exactly. A residual -I is spelled out with letters
// (S^2, or T2 V^-1 T2 V^-1), so the returned sign is always +1.
GeneratorWord word_from_matrix(const Mat2 &m, GroupTag tag);

// Text format: [[q1,q2]] / [[h;q1,q2]] for ThetaNeg, [q1,q2] / [h;q1,q2]
// for Gamma02Pos, [a0;a1,a2] for Classical.
std::string format_cf(const ContinuedFraction &cf);

// Same, with runs of six or more equal quotients shown as q,...(r-2),q.
// Display only; parse_cf rejects it.
std::string format_cf_compressed(const ContinuedFraction &cf);

// Rejects text that does not describe a valid expansion of that kind.
ContinuedFraction parse_cf(std::string_view text, CfKind kind);
// Kind from the brackets: [[...]] ThetaNeg, [h;...] Classical, else Gamma02Pos.
ContinuedFraction parse_cf(std::string_view text);

} // namespace hardy

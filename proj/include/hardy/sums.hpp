#pragma once

// Hardy sums S(d, c), S4(d, c) and Dedekind sums s(d, c): defining sums,
// partial-quotient formulas and reciprocity checks.

#include "hardy/cfe.hpp"
#include "hardy/core.hpp"

namespace hardy {

// S(d, c) = sum_{k=1}^{c-1} (-1)^{k + 1 + floor(dk/c)}; needs c + d odd.
Integer hardy_s_direct(const Integer &d, const Integer &c);

// S4(d, c) = sum_{k=1}^{c-1} (-1)^{floor(dk/c)}; needs d odd.
Integer hardy_s4_direct(const Integer &d, const Integer &c);

// -sum sign(c_k) over the theta-type expansion of d/c.
Integer hardy_s_from_cfe(const Integer &d, const Integer &c);

// (a1 + a3 + ... + an) + sum (-1)^k sign(a_k) over a gamma02-type expansion.
Integer hardy_s4_from_cfe(const Integer &d, const Integer &c);

// The two partial-quotient formulas applied to a given expansion. Only the
// quotients enter; the head is ignored.
Integer hardy_s_formula(const ContinuedFraction &theta);
Integer hardy_s4_formula(const ContinuedFraction &gamma02);

struct JointSums {
    Integer s;
    Integer s4;
    Integer total; // S + S4 = -2(c1 + c3 + ... + cn)
};

// For c even, d odd: all three values from the theta-type expansion.
JointSums hardy_joint(const Integer &d, const Integer &c);

// 2 * sum over odd k < c of (-1)^{floor(dk/c)}, by direct summation.
Integer joint_direct_sum(const Integer &d, const Integer &c);

// S(d, c) + S(c, d) == sign(cd), with S(d, -c) = -S(d, c).
bool check_s_reciprocity(const Integer &d, const Integer &c);

struct S4ReciprocityTerms {
    Integer lhs;             // S4(d, c) + S4(c, d)
    Integer rhs;             // 2a0 + 2a1 + ... + 2a_{n-1} + a_n - 1
    ContinuedFraction expansion; // of c/d
};

// For c > d > 0 odd and coprime.
S4ReciprocityTerms s4_reciprocity_terms(const Integer &c, const Integer &d);
bool check_s4_reciprocity(const Integer &c, const Integer &d);

// Unscaled drops the 1/12 in front of (c^2 + d^2 + 1)/(cd); it exists so
// the consistency checks can show that variant is wrong.
enum class ReciprocityForm { Standard, Unscaled };

Rational dedekind_recursive(const Integer &d, const Integer &c,
                            ReciprocityForm form = ReciprocityForm::Standard);

// -1/4 + ((a + d)/c - sum (-1)^k a_k) / 12, ad = 1 mod c, from the
// odd-length classical expansion of d/c. Needs 0 < d < c.
Rational dedekind_hickerson(const Integer &d, const Integer &c);

enum class FloatPrecision { Double, Extended };

// (1/4c) sum_{k=1}^{c-1} cot(pi k/c) cot(pi k d/c).
double dedekind_cotangent_numeric(long d, long c, FloatPrecision precision = FloatPrecision::Extended);

// Parity of S(d, c).
Parity hardy_parity(const Integer &d, const Integer &c);

} // namespace hardy

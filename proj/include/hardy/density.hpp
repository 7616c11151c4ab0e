#pragma once

// Explicit fractions d/c close to a rational target with prescribed Hardy
// sum values, built by appending partial quotients to a theta-type
// expansion of the target.

#include <optional>

#include "hardy/cfe.hpp"
#include "hardy/core.hpp"

namespace hardy {

struct DensityRequest {
    Rational x;
    Rational epsilon;
    Integer m = 0;  // target S (construct_s) or S4 (construct_s4)
    Integer m1 = 0; // target S + S4, even (construct_joint)
    Integer m2 = 1; // target S4, odd (construct_joint)
};

struct DensityWitness {
    Integer d;
    Integer c;
    std::optional<Integer> s;
    std::optional<Integer> s4;
    ContinuedFraction expansion;
    Rational distance; // |x - d/c|

    Rational value() const { return Rational(d, c); }
};

// c + d odd, S(d, c) = m, |x - d/c| < epsilon.
DensityWitness construct_s(const DensityRequest &req);

// c even, d odd, S + S4 = m1, S4 = m2, |x - d/c| < epsilon.
DensityWitness construct_joint(const DensityRequest &req);

// d odd, S4(d, c) = m, |x - d/c| < epsilon.
DensityWitness construct_s4(const DensityRequest &req);

} // namespace hardy

#include "hardy/density.hpp"

#include "hardy/sums.hpp"

namespace hardy {

namespace {

void require_positive(const Rational &eps)
{
    if (eps <= Rational(0)) {
        throw std::domain_error("epsilon must be positive");
    }
}

[[noreturn]] void broken(const std::string &what)
{
    throw std::logic_error("density construction: " + what);
}

// Target moved by an even integer into [-1, 1).
struct Frame {
    Integer shift;
    Rational x;
};

Frame make_frame(const Rational &x)
{
    Integer shift = 2 * (x / Rational(2)).round_half_up();
    return {shift, x - Rational(shift)};
}

// Negative continued fraction [[q1, ..., qn]] together with its last two
// convergents (p_{n-1}, q_{n-1}) and (p_n, q_n).
class Builder {
public:
    explicit Builder(const std::vector<Integer> &quotients)
    {
        for (const auto &q : quotients) {
            append(q);
        }
    }

    void append(const Integer &quotient)
    {
        Integer p = quotient * p_ - p_prev_;
        Integer q = quotient * q_ - q_prev_;
        p_prev_ = std::move(p_);
        q_prev_ = std::move(q_);
        p_ = std::move(p);
        q_ = std::move(q);
        quotients_.push_back(quotient);
    }

    // Appends and returns the distance between the old and new values.
    Rational append_checked(const Integer &quotient, const Rational &budget)
    {
        Rational before = value();
        append(quotient);
        Rational step = (value() - before).abs();
        if (step >= budget) {
            broken("appended quotient " + quotient.get_str() + " moved the value by " + step.str() +
                   ", over the budget " + budget.str());
        }
        return step;
    }

    Rational value() const { return Rational(p_, q_); }
    Integer q_abs() const { return abs(q_); }
    Integer q_prev_abs() const { return abs(q_prev_); }
    const std::vector<Integer> &quotients() const { return quotients_; }
    Integer s_value() const
    {
        Integer s = 0;
        for (const auto &q : quotients_) {
            s -= sign(q);
        }
        return s;
    }
    // -(q1 + q3 + ...) = -2(c1 + c3 + ...)
    Integer joint_value() const
    {
        Integer t = 0;
        for (std::size_t k = 0; k < quotients_.size(); k += 2) {
            t -= quotients_[k];
        }
        return t;
    }

private:
    std::vector<Integer> quotients_;
    Integer p_prev_ = 1, q_prev_ = 0;
    Integer p_ = 0, q_ = 1;
};

// Smallest c >= 1 with scale * (2c|q_n| - |q_{n-1}|) > 1 / budget.
Integer minimal_half_quotient(const Builder &b, const Integer &scale, const Rational &budget)
{
    // c > (1 / (budget * scale) + |q_{n-1}|) / (2 |q_n|)
    Rational bound = (Rational(1) / (budget * Rational(scale)) + Rational(b.q_prev_abs())) /
                     Rational(2 * b.q_abs());
    Integer c = bound.floor() + 1;
    return c < 1 ? Integer(1) : c;
}

// Quotients of a theta-admissible rational within `budget` of x in [-1, 1).
// Admissible x expands finitely. Otherwise the same algorithm never stops
// (x is not a cusp of the theta group), so run it until the first
// convergent that is close enough; at the ties y = -1/r odd the quotient of
// larger magnitude is taken.
std::vector<Integer> admissible_seed(const Rational &x, const Rational &budget)
{
    if (is_odd(x.num() + x.den())) {
        return expand_theta(x).quotients;
    }
    Builder b({});
    Rational r = x;
    while ((x - b.value()).abs() >= budget) {
        Rational y = -r.inverse();
        Integer q = y.is_integer() && is_odd(y.num()) ? Integer(y.num() + sign(y.num()))
                                                      : Integer(2 * (y / Rational(2)).round_half_up());
        b.append(q);
        r = y - Rational(q);
        if (r.is_zero()) {
            broken("non-admissible seed expanded finitely");
        }
    }
    return b.quotients();
}

// S = m within eps of x (x in [-1, 1)), expansion with zero head.
Builder build_s(const Rational &x, const Rational &eps, const Integer &m)
{
    Builder b(admissible_seed(x, eps / Rational(2)));
    const Integer big_m = b.s_value() - m;
    if (big_m != 0) {
        const Integer count = abs(big_m);
        const int dir = sign(big_m);
        const Rational budget = eps / Rational(2 * count);
        for (Integer i = 0; i < count; ++i) {
            Integer c = minimal_half_quotient(b, b.q_abs(), budget);
            b.append_checked(dir * 2 * c, budget);
        }
    }
    if (b.s_value() != m) {
        broken("S came out as " + b.s_value().get_str() + " instead of " + m.get_str());
    }
    if ((x - b.value()).abs() >= eps) {
        broken("S witness is not within epsilon");
    }
    if (is_odd(m) && b.quotients().size() % 2 == 0) {
        broken("odd S with even expansion length");
    }
    return b;
}

// S + S4 = m1 and S4 = m2 within eps of x (x in [-1, 1)).
Builder build_joint(const Rational &x, const Rational &eps, const Integer &m1, const Integer &m2)
{
    const Rational third = eps / Rational(3);
    Builder b = build_s(x, third, m1 - m2);
    if (b.quotients().size() % 2 == 0) {
        broken("expansion for odd S has even length");
    }
    const Integer s_before = b.s_value();
    const Integer big_m = (b.joint_value() - m1) / 2;
    if (big_m != 0) {
        Integer c = minimal_half_quotient(b, 1, third);
        b.append_checked(-sign(big_m) * 2 * c, third);
        b.append_checked(2 * big_m, third);
    }
    if (b.s_value() != s_before) {
        broken("S changed while adjusting S + S4");
    }
    if (b.joint_value() != m1) {
        broken("S + S4 came out as " + b.joint_value().get_str() + " instead of " + m1.get_str());
    }
    if ((x - b.value()).abs() >= eps) {
        broken("joint witness is not within epsilon");
    }
    return b;
}

// [[h; q1, ..., qn]] = [h; -q1, q2, -q3, ...]
ContinuedFraction to_gamma02(const Integer &head, const std::vector<Integer> &theta_quotients)
{
    ContinuedFraction cf{CfKind::Gamma02Pos, head, theta_quotients};
    for (std::size_t k = 0; k < cf.quotients.size(); k += 2) {
        cf.quotients[k] = -cf.quotients[k];
    }
    return cf;
}

DensityWitness finish(const Rational &x, const Frame &frame, const Builder &b)
{
    Rational v = b.value() + Rational(frame.shift);
    DensityWitness w;
    w.d = v.num();
    w.c = v.den();
    w.distance = (x - v).abs();
    w.expansion = ContinuedFraction{CfKind::ThetaNeg, frame.shift, b.quotients()};
    return w;
}

} // namespace

DensityWitness construct_s(const DensityRequest &req)
{
    require_positive(req.epsilon);
    Frame frame = make_frame(req.x);
    Builder b = build_s(frame.x, req.epsilon, req.m);
    DensityWitness w = finish(req.x, frame, b);
    w.s = req.m;
    if (hardy_s_from_cfe(w.d, w.c) != req.m) {
        broken("S(" + w.d.get_str() + ", " + w.c.get_str() + ") does not re-evaluate to the target");
    }
    return w;
}

DensityWitness construct_joint(const DensityRequest &req)
{
    require_positive(req.epsilon);
    if (is_odd(req.m1) || is_even(req.m2)) {
        throw ParityError("joint targets need S + S4 even and S4 odd");
    }
    Frame frame = make_frame(req.x);
    Builder b = build_joint(frame.x, req.epsilon, req.m1, req.m2);
    DensityWitness w = finish(req.x, frame, b);
    w.s = req.m1 - req.m2;
    w.s4 = req.m2;
    JointSums check = hardy_joint(w.d, w.c);
    if (check.total != req.m1 || check.s4 != req.m2) {
        broken("joint sums of " + w.value().str() + " do not re-evaluate to the targets");
    }
    return w;
}

DensityWitness construct_s4(const DensityRequest &req)
{
    require_positive(req.epsilon);
    const Integer &m = req.m;

    if (is_odd(req.x.num()) && hardy_s4_from_cfe(req.x.num(), req.x.den()) == m) {
        DensityWitness w;
        w.d = req.x.num();
        w.c = req.x.den();
        w.s4 = m;
        w.expansion = expand_gamma02(req.x);
        w.distance = Rational(0);
        return w;
    }

    Frame frame = make_frame(req.x);
    Builder b = is_odd(m) ? build_joint(frame.x, req.epsilon, m + 1, m)
                          : build_joint(frame.x, req.epsilon / Rational(3), m + 2, m + 1);
    if (is_even(m)) {
        // [[..., -2c, -1]] = [..., -2c, 1]: S4 moves by -1 + 1 - 1.
        const Rational third = req.epsilon / Rational(3);
        Integer c = minimal_half_quotient(b, 1, third);
        b.append_checked(-2 * c, third);
        b.append_checked(-1, third);
        if ((frame.x - b.value()).abs() >= req.epsilon) {
            broken("S4 witness is not within epsilon");
        }
    }
    DensityWitness w = finish(req.x, frame, b);
    w.s4 = m;
    w.expansion = to_gamma02(frame.shift, b.quotients());
    validate(w.expansion);
    if (hardy_s4_formula(w.expansion) != m) {
        broken("expansion formula gives S4 = " + hardy_s4_formula(w.expansion).get_str());
    }
    if (hardy_s4_from_cfe(w.d, w.c) != m) {
        broken("S4(" + w.d.get_str() + ", " + w.c.get_str() + ") does not re-evaluate to the target");
    }
    return w;
}

} // namespace hardy

#include "doctest.h"
#include "hardy/density.hpp"
#include "hardy/sums.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

Rational q(const char *s)
{
    return Rational::parse(s);
}

DensityRequest req(const char *x, const char *eps, long m)
{
    DensityRequest r;
    r.x = q(x);
    r.epsilon = q(eps);
    r.m = m;
    return r;
}

DensityRequest joint(const char *x, const char *eps, long m1, long m2)
{
    DensityRequest r;
    r.x = q(x);
    r.epsilon = q(eps);
    r.m1 = m1;
    r.m2 = m2;
    return r;
}

void check_small(const DensityWitness &w)
{
    if (w.c <= 100000) {
        long d = w.d.get_si(), c = w.c.get_si();
        if (w.s) {
            CHECK(oracle::hardy_s(d, c) == w.s->get_si());
        }
        if (w.s4) {
            CHECK(oracle::hardy_s4(d, c) == w.s4->get_si());
        }
    } else {
        if (w.s) {
            CHECK(hardy_s_from_cfe(w.d, w.c) == *w.s);
        }
        if (w.s4) {
            CHECK(hardy_s4_from_cfe(w.d, w.c) == *w.s4);
        }
    }
    CHECK(eval_cf(w.expansion) == w.value());
    CHECK(is_valid(w.expansion));
}

} // namespace

TEST_CASE("construct_s")
{
    auto w = construct_s(req("1/2", "1/10", 3));
    CHECK(*w.s == 3);
    CHECK(w.distance < q("1/10"));
    CHECK(w.value() == q("23/44"));
    CHECK(format_cf(w.expansion) == "[[-2,-12,-2]]");
    check_small(w);
    // 35/64 is another valid witness
    CHECK(hardy_s_direct(35, 64) == 3);

    auto same = construct_s(req("1/2", "1/10", 1));
    CHECK(same.value() == q("1/2"));
    CHECK(same.distance == Rational(0));

    auto neg = construct_s(req("-1/2", "1/10", -3));
    CHECK(neg.value() == q("-23/44"));
    check_small(neg);

    CHECK_THROWS_AS(construct_s(req("1/2", "0", 3)), std::domain_error);
}

TEST_CASE("construct_s from targets with c + d even")
{
    for (const char *x : {"1/3", "-1/3", "1", "-1", "5/3", "7/9", "3"}) {
        for (long m = -4; m <= 4; ++m) {
            auto w = construct_s(req(x, "1/50", m));
            CHECK(w.distance < q("1/50"));
            check_small(w);
            if (m % 2 != 0) {
                CHECK(w.expansion.length() % 2 == 1);
            }
        }
    }
}

TEST_CASE("construct_joint")
{
    auto a = construct_joint(joint("1/2", "1/2", 2, 1));
    CHECK(a.value() == q("1/2"));
    CHECK(*a.s == 1);
    CHECK(*a.s4 == 1);

    auto b = construct_joint(joint("7/10", "1/100", 6, 3));
    CHECK(b.value() == q("7/10"));

    auto c = construct_joint(joint("1/2", "1/4", 0, 1));
    CHECK(c.distance < q("1/4"));
    auto sums = hardy_joint(c.d, c.c);
    CHECK(sums.total == 0);
    CHECK(sums.s4 == 1);
    CHECK(joint_direct_sum(c.d, c.c) == 0);
    check_small(c);

    CHECK_THROWS_AS(construct_joint(joint("1/2", "1/4", 1, 1)), ParityError);
    CHECK_THROWS_AS(construct_joint(joint("1/2", "1/4", 2, 2)), ParityError);
}

TEST_CASE("construct_s4")
{
    auto a = construct_s4(req("3/7", "1/10", 2));
    CHECK(a.value() == q("3/7"));
    auto b = construct_s4(req("3/5", "1/10", 0));
    CHECK(b.value() == q("3/5"));

    auto c = construct_s4(req("0", "1/10", -4));
    CHECK(*c.s4 == -4);
    CHECK(c.distance < q("1/10"));
    CHECK(c.expansion.kind == CfKind::Gamma02Pos);
    check_small(c);
}

TEST_CASE("density sweep against the defining sums")
{
    const char *xs[] = {"0", "1/2", "-1/2", "2/3", "-3/4", "1/5", "9/7", "-1"};
    for (const char *x : xs) {
        for (long m = -6; m <= 6; ++m) {
            auto s = construct_s(req(x, "1/20", m));
            CHECK(s.distance < q("1/20"));
            check_small(s);

            auto s4 = construct_s4(req(x, "1/20", m));
            CHECK(s4.distance < q("1/20"));
            check_small(s4);

            if (m % 2 != 0) {
                auto j = construct_joint(joint(x, "1/20", m + 3, m));
                CHECK(j.distance < q("1/20"));
                CHECK(j.c % 2 == 0);
                if (j.c <= 100000) {
                    CHECK(oracle::joint_odd_k(j.d.get_si(), j.c.get_si()) == m + 3);
                }
                check_small(j);
            }
        }
    }
}

TEST_CASE("large shifts keep the sign bookkeeping right")
{
    for (long m : {-40L, 37L}) {
        auto w = construct_s(req("1/3", "1/100", m));
        CHECK(*w.s == m);
        CHECK(hardy_s_from_cfe(w.d, w.c) == m);
        CHECK(w.distance < q("1/100"));
    }
}

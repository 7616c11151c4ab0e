#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "hardy/cfe.hpp"
#include "oracles.hpp"

using namespace hardy;

namespace {

Rational q(const char *s)
{
    return Rational::parse(s);
}

ContinuedFraction theta(std::vector<Integer> qs, Integer head = 0)
{
    return {CfKind::ThetaNeg, head, std::move(qs)};
}

ContinuedFraction g02(std::vector<Integer> qs, Integer head = 0)
{
    return {CfKind::Gamma02Pos, head, std::move(qs)};
}

std::vector<Integer> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

} // namespace

TEST_CASE("evaluation of the three flavours")
{
    CHECK(eval_cf(theta(ints({-2, 2, 2}))) == q("3/8"));
    CHECK(eval_cf(g02(ints({3, -2, -1}))) == q("3/8"));
    CHECK(eval_cf(theta(ints({-2, -2, -4}))) == q("7/10"));
    CHECK(eval_cf(theta(ints({-2, -6, -6}))) == q("35/64"));
    CHECK(eval_cf({CfKind::Classical, 0, ints({2, 2, 1})}) == q("3/7"));
    CHECK(eval_cf(theta({}, 4)) == Rational(4));
    // 1/(1 + 1/(-1)) divides by zero
    CHECK_THROWS_AS(eval_cf({CfKind::Classical, 0, ints({1, -1})}), std::domain_error);
}

TEST_CASE("structural validation")
{
    CHECK(is_valid(theta(ints({-2, 2}))));
    CHECK_FALSE(is_valid(theta(ints({-2, 3}))));
    CHECK_FALSE(is_valid(theta(ints({2}), 1)));
    CHECK(is_valid(g02(ints({3, -2, -1}))));
    CHECK_FALSE(is_valid(g02(ints({3, -2}))));       // even length
    CHECK_FALSE(is_valid(g02(ints({3, -3, 1}))));    // odd at an even position
    CHECK_FALSE(is_valid(g02(ints({1, 2, 3}))));     // |a1| = 1 before the end
    CHECK(is_valid(g02(ints({-1}))));
    CHECK_FALSE(is_valid({CfKind::Classical, 0, ints({2, 0, 1})}));
}

TEST_CASE("theta-type expansions")
{
    CHECK(expand_theta(q("1/2")) == theta(ints({-2})));
    CHECK(expand_theta(q("2/7")) == theta(ints({-4, -2})));
    CHECK(expand_theta(q("2/5")) == theta(ints({-2, 2})));
    CHECK(expand_theta(q("3/8")) == theta(ints({-2, 2, 2})));
    CHECK(expand_theta(q("35/64")) == theta(ints({-2, -6, -6})));
    CHECK(expand_theta(q("9/4")) == theta(ints({-4}), 2));
    CHECK(expand_theta(Rational(0)) == theta({}));
    CHECK_THROWS_AS(expand_theta(q("1/3")), ParityError);
}

TEST_CASE("gamma02-type expansions")
{
    CHECK(expand_gamma02(q("1/3")) == g02(ints({3})));
    CHECK(expand_gamma02(q("3/5")) == g02(ints({2, -2, -1})));
    CHECK(expand_gamma02(q("3/8")) == g02(ints({2, 2, -2})));
    CHECK(expand_gamma02(q("3/7")) == g02(ints({2, 2, 1})));
    CHECK(expand_gamma02(q("1/1")).length() == 1);
    CHECK_THROWS_AS(expand_gamma02(q("2/5")), ParityError);
}

TEST_CASE("classical odd-length expansions")
{
    CHECK(expand_classical_odd(q("3/7")).quotients == ints({2, 2, 1}));
    // [0; 1, 1] is even-length; the odd forms are [0; 2] and [0; 3].
    CHECK(expand_classical_odd(q("1/2")).quotients == ints({2}));
    CHECK(expand_classical_odd(q("1/3")).quotients == ints({3}));
    CHECK(expand_classical_odd(q("2/3")).quotients == ints({1, 1, 1}));
    CHECK_THROWS_AS(expand_classical_odd(q("3/2")), std::domain_error);
    CHECK_THROWS_AS(expand_classical_odd(Rational(0)), std::domain_error);
    for (long c = 2; c <= 60; ++c) {
        for (long d = 1; d < c; ++d) {
            if (gcd(Integer(d), Integer(c)) != 1) {
                continue;
            }
            auto cf = expand_classical_odd(Rational(Integer(d), Integer(c)));
            CHECK(cf.length() % 2 == 1);
            CHECK(eval_cf(cf) == Rational(Integer(d), Integer(c)));
            for (const auto &a : cf.quotients) {
                CHECK(a >= 1);
            }
        }
    }
}

TEST_CASE("convergents of theta-type expansions")
{
    auto c1 = convergents(theta(ints({-2})));
    CHECK(c1.at(1) == std::pair<Integer, Integer>(-1, -2));
    CHECK(c1.value(1) == q("1/2"));

    auto c2 = convergents(theta(ints({-2, 2})));
    CHECK(c2.at(2) == std::pair<Integer, Integer>(-2, -5));
    CHECK(c2.value(2) == q("2/5"));

    auto c3 = convergents(theta(ints({-2, -6, -6})));
    CHECK(c3.value(3) == q("35/64"));
    CHECK_THROWS_AS(convergents(theta(ints({2}), 2)), std::domain_error);
    CHECK_THROWS_AS(convergents(g02(ints({3}))), std::domain_error);
}

TEST_CASE("generator words")
{
    auto w = cf_to_word(theta(ints({-2})));
    CHECK(to_string(w) == "S T2^-1 S");
    Mat2 m = evaluate(w);
    CHECK(Rational(m.a(), m.c()) == q("1/2"));

    auto v = cf_to_word(g02(ints({3})));
    CHECK(to_string(v) == "V^3");
    CHECK(mobius_apply(evaluate(v), Cusp::infinity()) == Cusp(q("1/3")));

    Mat2 k = evaluate(cf_to_word({CfKind::Classical, 0, ints({2, 2, 1})}));
    CHECK(k.a() == 3);
    CHECK(k.c() == 7);

    CHECK(to_string(word_from_matrix(Mat2::S(), GroupTag::Theta)) == "S");
    CHECK(to_string(word_from_matrix(Mat2(2, -1, 1, 0), GroupTag::Theta)) == "T2 S");
    CHECK(to_string(word_from_matrix(-Mat2::identity(), GroupTag::Theta)) == "S^2");
    CHECK(to_string(word_from_matrix(Mat2::V(), GroupTag::SL2)) == "V");
    CHECK(to_string(cf_to_word({CfKind::Classical, 3, {}})) == "T^2 V");
    CHECK(evaluate(word_from_matrix(-Mat2::identity(), GroupTag::Gamma02)) == -Mat2::identity());
    CHECK_THROWS_AS(word_from_matrix(Mat2::T(), GroupTag::Theta), std::domain_error);
}

TEST_CASE("word_from_matrix round trips on random group elements")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> e(-3, 3);
    const std::vector<std::pair<GroupTag, std::vector<Mat2>>> groups{
        {GroupTag::Theta, {Mat2::T(2), Mat2::S()}},
        {GroupTag::Gamma02, {Mat2::T(2), Mat2::V()}},
        {GroupTag::SL2, {Mat2::T(), Mat2::S()}},
    };
    for (const auto &[tag, gens] : groups) {
        for (int i = 0; i < 500; ++i) {
            Mat2 m = Mat2::identity();
            for (int j = 0; j < 6; ++j) {
                m = m * gens[j % 2].pow(e(rng));
            }
            GeneratorWord w = word_from_matrix(m, tag);
            CHECK(evaluate(w) == m);
        }
    }
}

TEST_CASE("parity of length")
{
    CHECK(parity_of_length(g02(ints({3}))) == Parity::Odd);
    CHECK(parity_of_length(g02({}, 4)) == Parity::Even);
    CHECK(parity_of_length(g02(ints({2, -2, -1}))) == Parity::Odd);
    CHECK_THROWS(parity_of_length(g02(ints({2, 3, 1}))));
}

TEST_CASE("text format round trips")
{
    CHECK(format_cf(theta(ints({-4, -2}))) == "[[-4,-2]]");
    CHECK(format_cf(theta(ints({4}), 2)) == "[[2;4]]");
    CHECK(format_cf(g02(ints({2, -2, -1}))) == "[2,-2,-1]");
    CHECK(format_cf({CfKind::Classical, 0, ints({2, 2, 1})}) == "[0;2,2,1]");
    CHECK(format_cf_compressed(theta(ints({-2, -2, -2, -2, -2, -2, -2, -2}))) == "[[-2,...(6),-2]]");
    CHECK(format_cf_compressed(theta(ints({-2, -2, -2}))) == "[[-2,-2,-2]]");
    for (const char *text : {"[[-2,2,2]]", "[[2;4]]", "[3,-2,-1]", "[0;2,2,1]", "[-2;3]"}) {
        CHECK(format_cf(parse_cf(text)) == text);
    }
    CHECK(parse_cf("[[-2,2,2]]").kind == CfKind::ThetaNeg);
    CHECK(parse_cf("[0;2,2,1]").kind == CfKind::Classical);
    CHECK(parse_cf("[3]").kind == CfKind::Gamma02Pos);
    CHECK_THROWS(parse_cf("[[-2,...(6),-2]]"));
    CHECK_THROWS(parse_cf("[[-2,3]]"));
    CHECK_THROWS(parse_cf("[1,2"));
}

TEST_CASE("round trips for every small fraction")
{
    for (long c = 1; c <= 500; ++c) {
        for (long d = -c; d <= c; ++d) {
            if (gcd(Integer(d), Integer(c)) != 1) {
                continue;
            }
            Rational x{Integer(d), Integer(c)};
            if ((c + d) % 2 != 0) {
                auto cf = expand_theta(x);
                REQUIRE(is_valid(cf));
                REQUIRE(eval_cf(cf) == x);
            }
            if (d % 2 != 0) {
                auto cf = expand_gamma02(x);
                REQUIRE(is_valid(cf));
                REQUIRE(eval_cf(cf) == x);
            }
        }
    }
}

TEST_CASE("theta expansions are the only ones within the search box")
{
    // value -> all lists with depth <= 4, |q| <= 8
    std::map<std::pair<Integer, Integer>, std::vector<std::vector<Integer>>> box;
    std::vector<Integer> cur;
    auto rec = [&](auto &&self) -> void {
        if (!cur.empty()) {
            if (auto v = oracle::eval_negative(0, cur)) {
                box[{v->num(), v->den()}].push_back(cur);
            }
        }
        if (cur.size() == 4) {
            return;
        }
        for (long k = -8; k <= 8; k += 2) {
            if (k != 0) {
                cur.push_back(k);
                self(self);
                cur.pop_back();
            }
        }
    };
    rec(rec);
    for (const auto &[key, lists] : box) {
        REQUIRE(lists.size() == 1);
        CHECK(expand_theta(Rational(key.first, key.second)).quotients == lists.front());
    }
}

TEST_CASE("gamma02 alternatives all evaluate back")
{
    for (const char *s : {"3/8", "3/5", "5/8", "1/4", "7/9"}) {
        Rational x = q(s);
        auto alts = oracle::gamma02_expansions(x, 5, 7);
        REQUIRE_FALSE(alts.empty());
        for (const auto &a : alts) {
            CHECK(is_valid(g02(a)));
        }
    }
    // 3/8 = [3, -2, -1] as well as the computed [2, 2, -2]
    auto alts = oracle::gamma02_expansions(q("3/8"), 3, 4);
    CHECK(std::find(alts.begin(), alts.end(), ints({3, -2, -1})) != alts.end());
    CHECK(std::find(alts.begin(), alts.end(), ints({2, 2, -2})) != alts.end());
}

TEST_CASE("theta and gamma02 forms of the same all-even list agree")
{
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<int> half(-5, 5), len(0, 5);
    for (int i = 0; i < 3000; ++i) {
        int n = 2 * len(rng) + 1;
        std::vector<Integer> th;
        for (int k = 0; k < n; ++k) {
            int c = 0;
            while (c == 0) {
                c = half(rng);
            }
            th.push_back(2 * c);
        }
        Integer head = 2 * half(rng);
        std::vector<Integer> g = th;
        for (std::size_t k = 0; k < g.size(); k += 2) {
            g[k] = -g[k];
        }
        CHECK(eval_cf(theta(th, head)) == eval_cf(g02(g, head)));
    }
}

TEST_CASE("a convergent is within 1/|q_k| of any continuation")
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> half(-5, 5), len(1, 10);
    for (int i = 0; i < 3000; ++i) {
        int n = len(rng);
        std::vector<Integer> th;
        for (int k = 0; k < n; ++k) {
            int c = 0;
            while (c == 0) {
                c = half(rng);
            }
            th.push_back(2 * c);
        }
        auto conv = negative_convergents(th);
        Rational full = eval_cf(theta(th));
        for (int k = 1; k < n; ++k) {
            Rational gap = (full - conv.value(k)).abs();
            CHECK(gap <= Rational(Integer(1), abs(conv.at(k).second)));
        }
    }
}

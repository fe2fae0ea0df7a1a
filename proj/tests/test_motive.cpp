/* Copyright (C) 2026 The pmotive Authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <doctest.h>

#include <random>

#include <pmotive/motive.hpp>

using namespace pmotive;

namespace {

const LaurentL L = LaurentL::lefschetz();

MotiveExpr fermat(long m, long n, long e) { return MotiveExpr::fermat(m, n, e); }
MotiveExpr mu(long k) { return MotiveExpr::mu_roots(k); }
MotiveExpr pt() { return MotiveExpr::point(); }

} // namespace

TEST_CASE("generator normalization")
{
    CHECK(Generator::mu_roots(1) == Generator::point());
    CHECK(Generator::mu_roots(1).is_point());
    CHECK_THROWS_AS(Generator::mu_roots(0), std::invalid_argument);
    CHECK_THROWS_AS(Generator::fermat(2, 4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Generator::fermat(1, 3, 1), std::invalid_argument);
}

TEST_CASE("generator ordering")
{
    CHECK(Generator::point() < Generator::mu_roots(2));
    CHECK(Generator::mu_roots(3) < Generator::mu_roots(6));
    CHECK(Generator::mu_roots(100) < Generator::fermat(2, 3, 1));
    CHECK(Generator::fermat(2, 3, 6) < Generator::fermat(2, 13, 3));
    CHECK(Generator::fermat(2, 13, 3) < Generator::fermat(3, 79, 1));
    CHECK(Generator::fermat(2, 3, 1) < Generator::fermat(2, 3, 2));
}

TEST_CASE("add and scale")
{
    const MotiveExpr x = fermat(2, 3, 6) - scale(mu(6), L);
    CHECK(add(x, MotiveExpr()) == x);
    CHECK(scale(mu(6), L).coefficient(Generator::mu_roots(6)) == L);
    CHECK(add(mu(1), pt()) == scale(pt(), 2));
    CHECK((x - x).is_zero());
    CHECK(scale(x, 0).is_zero());
    CHECK(scale(x, LaurentL::monomial(-1)).coefficient(Generator::mu_roots(6)) == LaurentL(-1));
}

TEST_CASE("base_case_motive")
{
    CHECK(base_case_motive(2, 3, 6) == fermat(2, 3, 6) - scale(mu(6), L) + mu(6));
    CHECK(base_case_motive(2, 3, 1) == fermat(2, 3, 1) - scale(pt(), L) + pt());
    CHECK(base_case_motive(3, 79, 1) == fermat(3, 79, 1) - scale(pt(), L) + pt());
}

TEST_CASE("motivic_milnor_fiber")
{
    SUBCASE("three-level example")
    {
        const MotiveExpr expected = fermat(2, 3, 6) + fermat(2, 13, 3) + fermat(3, 79, 1) -
                                    scale(mu(6), L) - scale(mu(3), L) - scale(pt(), L) + pt();
        const MotiveExpr s = motivic_milnor_fiber(decompose(parse_exponents("3/2,7/4,11/6")));
        CHECK(s == expected);
        CHECK(to_latex(s) == "[(y^2-x^3)^6-1] + [(y^2-x^{13})^3-1] + [y^3-x^{79}-1] - "
                             "[\\mu_6]\\mathbb{L} - [\\mu_3]\\mathbb{L} - \\mathbb{L} + 1");
        CHECK(to_text(s) ==
              "[(y^2-x^3)^6-1] + [(y^2-x^13)^3-1] + [y^3-x^79-1] - [mu_6]L - [mu_3]L - L + 1");
    }
    SUBCASE("smooth branch") { CHECK(motivic_milnor_fiber(ExponentTower()) == pt()); }
    SUBCASE("single level")
    {
        CHECK(motivic_milnor_fiber(decompose(parse_exponents("5/2"))) ==
              fermat(2, 5, 1) - scale(pt(), L) + pt());
    }
}

TEST_CASE("single recursion step")
{
    CHECK(theorem1_step(pt(), 2, 5, 1) == fermat(2, 5, 1) - scale(pt(), L) + pt());
    CHECK(theorem1_step(MotiveExpr(), 2, 3, 1) == fermat(2, 3, 1) - scale(pt(), L));

    // Level 1 of the three-level example from the level-2 result.
    const ExponentTower tower = decompose(parse_exponents("3/2,7/4,11/6"));
    const MotiveExpr level2 = motivic_milnor_fiber(decompose(parse_exponents("13/2,20/3")));
    CHECK(theorem1_step(level2, 2, 3, 6) == motivic_milnor_fiber(tower));
}

TEST_CASE("rendering of edge shapes")
{
    CHECK(to_text(MotiveExpr()) == "0");
    CHECK(to_text(pt()) == "1");
    CHECK(to_text(-scale(pt(), 3)) == "-3");
    CHECK(to_text(scale(mu(12), LaurentL::monomial(-1, 2))) == "2[mu_12]L^-1");
    CHECK(to_latex(scale(mu(12), LaurentL::monomial(2))) == "[\\mu_{12}]\\mathbb{L}^2");
}

TEST_CASE("module axioms on random expressions")
{
    std::mt19937 rng(7);
    auto random_laurent = [&] {
        LaurentL l;
        for (int i = 0; i < 3; ++i)
            l += LaurentL::monomial(static_cast<long>(rng() % 5) - 2,
                                    static_cast<long>(rng() % 7) - 3);
        return l;
    };
    auto random_expr = [&] {
        MotiveExpr x;
        for (int i = 0; i < 4; ++i) {
            switch (rng() % 3) {
            case 0: x.add_term(Generator::point(), random_laurent()); break;
            case 1: x.add_term(Generator::mu_roots(1 + rng() % 6), random_laurent()); break;
            default: x.add_term(Generator::fermat(2, 2 * (rng() % 5) + 1, 1 + rng() % 3),
                                random_laurent());
            }
        }
        return x;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const MotiveExpr a = random_expr(), b = random_expr(), c = random_expr();
        const LaurentL p = random_laurent(), q = random_laurent();
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(scale(a + b, p) == scale(a, p) + scale(b, p));
        CHECK(scale(a, p + q) == scale(a, p) + scale(a, q));
        CHECK(scale(scale(a, p), q) == scale(a, p * q));
        // Normalization idempotent: rebuilding term by term changes nothing.
        MotiveExpr rebuilt;
        for (const auto& [g, coeff] : a.terms())
            rebuilt.add_term(g, coeff);
        CHECK(rebuilt == a);
        for (const auto& [g, coeff] : a.terms()) {
            CHECK_FALSE(coeff.is_zero());
            if (const auto* m = g.as_mu_roots())
                CHECK(m->k >= 2);
        }
    }
}

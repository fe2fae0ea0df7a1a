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

// Randomized invariants over generated exponent lists.

#include <doctest.h>

#include <random>

#include <pmotive/report.hpp>

#include "support/corpus.hpp"

using namespace pmotive;

namespace {

const std::vector<ExponentList>& sample()
{
    static const auto lists = corpus::random_exponent_lists(60, 99);
    return lists;
}

} // namespace

TEST_CASE("tower invariants hold on random inputs")
{
    for (const auto& exps : sample()) {
        CAPTURE(to_string(exps));
        const ExponentTower tower = decompose(exps);
        REQUIRE(tower.size() == exps.size());

        Integer den_lcm = 1;
        for (const auto& mu : exps)
            den_lcm = lcm(den_lcm, Integer(mu.get_den()));
        CHECK(tower[0].data.d == den_lcm);

        Integer product_m = 1;
        for (std::size_t k = 0; k < tower.size(); ++k) {
            const LevelData& ld = tower[k].data;
            product_m *= ld.m;
            CHECK(gcd(ld.m, ld.n) == 1);
            CHECK(ld.d == ld.m * ld.dprime);
            CHECK(tower[k].exponents.size() == exps.size() - k);
            if (k + 1 < tower.size()) {
                CHECK(tower[k + 1].data.d == ld.dprime);
                CHECK(tower[k + 1].exponents == derive(tower[k].exponents));
                for (const auto& mu : tower[k + 1].exponents)
                    CHECK(mu > ld.m * ld.n);
            } else {
                CHECK(ld.dprime == 1);
            }
        }
        CHECK(product_m == den_lcm);
    }
}

TEST_CASE("every verification check passes on random inputs")
{
    for (const auto& exps : sample()) {
        CAPTURE(to_string(exps));
        const RunReport r = build_report(exps, true);
        for (const auto& c : r.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("motive has one Fermat class per level with coefficient 1")
{
    for (const auto& exps : sample()) {
        const MotiveExpr s = motivic_milnor_fiber(decompose(exps));
        std::size_t fermat_terms = 0;
        for (const auto& [g, c] : s.terms())
            if (g.as_fermat()) {
                ++fermat_terms;
                CHECK(c == LaurentL(1));
            }
        CHECK(fermat_terms == exps.size());
    }
}

TEST_CASE("expand commutes with substitution")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const long m = 2 + rng() % 5;
        long n = m + 1 + rng() % 7;
        while (std::gcd(m, n) != 1)
            ++n;
        const long k = 1 + rng() % 5;
        const CycloProduct h = charpoly_torus(m, n);
        CHECK(expand(substitute(h, k)) == expand(h).compose_power(k));
    }
}

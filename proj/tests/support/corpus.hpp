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

// Random valid exponent lists: at most 4 exponents, denominators <= 9,
// numerators <= 60, bounded Milnor number. Deterministic for a given seed.

#ifndef PMOTIVE_TESTS_CORPUS_HPP
#define PMOTIVE_TESTS_CORPUS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <pmotive/puiseux.hpp>

namespace corpus {

constexpr long max_den = 9;
constexpr long max_num = 60;
constexpr std::size_t max_levels = 4;
// Towers whose Milnor number sum d'(m-1)(n-1) exceeds this are redrawn; mixed
// coprime denominators otherwise push single cases past 10^7 spectral numbers.
constexpr long max_milnor = 20000;

inline long milnor_estimate(const pmotive::ExponentList& exps)
{
    pmotive::Integer total = 0;
    for (const auto& level : pmotive::decompose(exps))
        total += level.data.dprime * (level.data.m - 1) * (level.data.n - 1);
    return total.fits_slong_p() ? total.get_si() : max_milnor + 1;
}

inline std::vector<pmotive::ExponentList> random_exponent_lists(std::size_t count,
                                                                std::uint64_t seed = 20261018)
{
    std::mt19937_64 rng(seed);
    std::vector<pmotive::ExponentList> out;
    out.reserve(count);
    while (out.size() < count) {
        // Level counts cycle 1..max_levels so deep towers are as common as shallow ones.
        const std::size_t want = 1 + out.size() % max_levels;
        std::vector<pmotive::Rational> exps;
        long running_lcm = 1;
        bool failed = false;
        for (std::size_t i = 0; i < want && !failed; ++i) {
            std::vector<pmotive::Rational> choices;
            for (long q = 2; q <= max_den; ++q) {
                if (std::lcm(running_lcm, q) == running_lcm)
                    continue;
                for (long p = 1; p <= max_num; ++p) {
                    if (std::gcd(p, q) != 1)
                        continue;
                    pmotive::Rational mu(p, q);
                    if (mu <= (exps.empty() ? pmotive::Rational(1) : exps.back()))
                        continue;
                    choices.push_back(mu);
                }
            }
            if (choices.empty()) {
                failed = true;
                break;
            }
            // Bias toward small exponents so long towers stay possible.
            std::size_t idx = rng() % choices.size();
            std::sort(choices.begin(), choices.end());
            idx = std::min(idx, rng() % choices.size());
            exps.push_back(choices[idx]);
            running_lcm = std::lcm(running_lcm, exps.back().get_den().get_si());
        }
        if (failed)
            continue;
        auto list = pmotive::ExponentList::validate(std::move(exps));
        if (milnor_estimate(list) > max_milnor)
            continue;
        out.push_back(std::move(list));
    }
    return out;
}

} // namespace corpus

#endif

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

#include <pmotive/report.hpp>

using namespace pmotive;

TEST_CASE("report for the three-level example")
{
    const RunReport r = build_report(parse_exponents("3/2,7/4,11/6"), true);
    CHECK(r.milnor_number == 204);
    CHECK(r.checks.size() == 8);
    for (const auto& c : r.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(r.all_checks_pass());

    const Json j = to_json(r);
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items())
        keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"exponents", "levels", "motive", "spectrum",
                                           "milnor_number", "charpoly_factored",
                                           "charpoly_expanded", "checks"});
    CHECK(j["exponents"].dump() == "[[3,2],[7,4],[11,6]]");
    CHECK(j["levels"][0].dump() == R"({"m":2,"n":3,"d":12,"dprime":6})");
    CHECK(j["motive"][0].dump() == R"({"gen":{"type":"point"},"coeff":[[0,1],[1,-1]]})");
    CHECK(j["motive"][1].dump() == R"({"gen":{"type":"mu","k":3},"coeff":[[1,-1]]})");
    CHECK(j["motive"][3].dump() ==
          R"({"gen":{"type":"fermat","m":2,"n":3,"e":6},"coeff":[[0,1]]})");
    CHECK(j["spectrum"][0].dump() == "[5,36,1]");
    CHECK(j["spectrum"].size() == 204);
    CHECK(j["milnor_number"] == 204);
    CHECK(j["charpoly_expanded"].size() == 205);
}

TEST_CASE("JSON output round-trips byte for byte")
{
    for (const char* text : {"", "5/2", "3/2,7/4,11/6", "4/3,17/12,41/24"}) {
        const std::string first = to_json(build_report(parse_exponents(text), true)).dump(2);
        CHECK(Json::parse(first).dump(2) == first);
    }
}

TEST_CASE("spectrum JSON is sorted by value")
{
    const Json j = to_json(build_report(parse_exponents("4/3,17/12,41/24"), false));
    Rational prev = 0;
    for (const auto& entry : j["spectrum"]) {
        const Rational cur = make_rational(entry[0].get<long>(), entry[1].get<long>());
        CHECK(prev < cur);
        prev = cur;
    }
    CHECK(j["checks"].empty());
}

TEST_CASE("smooth branch report")
{
    const RunReport r = build_report(ExponentList(), true);
    CHECK(r.milnor_number == 0);
    CHECK(r.spectrum.empty());
    CHECK(r.all_checks_pass());
    CHECK(r.charpoly_expanded == DensePoly::constant(1));
}

TEST_CASE("text and latex output")
{
    const RunReport r = build_report(parse_exponents("5/2"), true);
    const std::string text = to_text(r);
    CHECK(text.find("milnor number: 4") != std::string::npos);
    CHECK(text.find("spectrum (4): 7/10 9/10 11/10 13/10") != std::string::npos);
    CHECK(text.find("motive: [y^2-x^5-1] - L + 1") != std::string::npos);
    CHECK(text.find("[pass] spectrum_path_equivalence") != std::string::npos);

    const std::string latex = to_latex(r);
    CHECK(latex.find("S(f) = [y^2-x^5-1] - \\mathbb{L} + 1") != std::string::npos);
    CHECK(latex.find("\\mathbf{H}(t) = \\frac{(t-1)(t^{10}-1)}{(t^{2}-1)(t^{5}-1)}") !=
          std::string::npos);
}

TEST_CASE("verification detects a corrupted report")
{
    RunReport r = build_report(parse_exponents("3/2,7/4,11/6"), false);
    r.spectrum.add_term(make_rational(1, 7), 1);
    r.motive += MotiveExpr::mu_roots(5);
    r.charpoly *= CycloProduct::factor(7);
    const auto checks = verify_report(r);
    std::map<std::string, bool> by_name;
    for (const auto& c : checks)
        by_name[c.name] = c.pass;
    CHECK_FALSE(by_name["spectrum_path_equivalence"]);
    CHECK_FALSE(by_name["spectrum_reflection_symmetry"]);
    CHECK_FALSE(by_name["spectrum_cardinality_equals_milnor"]);
    CHECK_FALSE(by_name["eigenvalue_residue_consistency"]);
    CHECK_FALSE(by_name["expand_degree_consistency"]);
    CHECK_FALSE(by_name["recursion_composition"]);
    CHECK(by_name["tower_invariants"]);
}

TEST_CASE("residue multiplicities")
{
    SpectrumElem s;
    s.add_term(make_rational(1, 3), 1);
    s.add_term(make_rational(4, 3), 2);
    s.add_term(make_rational(1, 2), 1);
    const auto res = residue_multiplicities(s);
    CHECK(res.at(make_rational(1, 3)) == 3);
    CHECK(res.at(make_rational(1, 2)) == 1);
    CHECK(residue_mismatch(torus_knot_spectrum(3, 5), charpoly_torus(3, 5)).empty());
    CHECK_FALSE(residue_mismatch(torus_knot_spectrum(3, 5), charpoly_torus(3, 7)).empty());
}

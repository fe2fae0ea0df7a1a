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

#ifndef PMOTIVE_REPORT_HPP
#define PMOTIVE_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <pmotive/monodromy.hpp>
#include <pmotive/motive.hpp>
#include <pmotive/puiseux.hpp>
#include <pmotive/spectrum.hpp>

namespace pmotive {

using Json = nlohmann::ordered_json;

struct Check {
    std::string name;
    bool pass;
    std::string detail; // empty on success
};

/// Everything computed for one branch.
struct RunReport {
    ExponentList exponents;
    ExponentTower tower;
    MotiveExpr motive;
    SpectrumElem spectrum;
    Integer milnor_number;
    CycloProduct charpoly;
    DensePoly charpoly_expanded;
    std::vector<Check> checks;

    bool all_checks_pass() const;
};

/// Runs the whole pipeline; with verify set, also runs every cross-check.
RunReport build_report(const ExponentList& exps, bool verify);

/// Cross-checks on an already assembled report (path equivalence, symmetry,
/// support, cardinality, eigenvalue residues, expansion degree, folded recursion).
std::vector<Check> verify_report(const RunReport& r);

/// Sum of spectral multiplicities per residue class alpha mod 1.
std::map<Rational, Integer> residue_multiplicities(const SpectrumElem& s);

/// Compares spectral residues with root multiplicities of h over every
/// p/q with q dividing some cyclotomic order of h. Returns the first mismatch, or "".
std::string residue_mismatch(const SpectrumElem& s, const CycloProduct& h);

Json to_json(const Generator& g);
Json to_json(const MotiveExpr& s);
Json to_json(const SpectrumElem& s);
Json to_json(const CycloProduct& h);
Json to_json(const DensePoly& p);
Json to_json(const RunReport& r);

std::string to_text(const RunReport& r);
std::string to_latex(const RunReport& r);

} // namespace pmotive

#endif

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

#include <pmotive/report.hpp>

#include <set>
#include <sstream>

namespace pmotive {

bool RunReport::all_checks_pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

RunReport build_report(const ExponentList& exps, bool verify)
{
    RunReport r;
    r.exponents = exps;
    r.tower = decompose(exps);
    r.motive = motivic_milnor_fiber(r.tower);
    r.spectrum = spectrum_via_process(r.tower);
    r.charpoly = monodromy_recursion(r.tower);
    r.milnor_number = milnor_number(r.charpoly);
    r.charpoly_expanded = expand(r.charpoly);
    if (verify)
        r.checks = verify_report(r);
    return r;
}

// ---- verification ----------------------------------------------------------

std::map<Rational, Integer> residue_multiplicities(const SpectrumElem& s)
{
    std::map<Rational, Integer> out;
    for (const auto& [alpha, c] : s.terms()) {
        Integer fl;
        mpz_fdiv_q(fl.get_mpz_t(), alpha.get_num().get_mpz_t(), alpha.get_den().get_mpz_t());
        Rational frac = alpha - fl;
        out[frac] += c;
    }
    return out;
}

namespace {

std::set<Integer> divisors_of_orders(const CycloProduct& h)
{
    std::set<Integer> qs;
    for (const auto& [a, e] : h.factors()) {
        for (Integer q = 1; q * q <= a; ++q) {
            if (a % q == 0) {
                qs.insert(q);
                qs.insert(a / q);
            }
        }
    }
    return qs;
}

Check make_check(std::string name, bool pass, std::string detail = {})
{
    return Check{std::move(name), pass, pass ? std::string() : std::move(detail)};
}

} // namespace

std::string residue_mismatch(const SpectrumElem& s, const CycloProduct& h)
{
    const auto residues = residue_multiplicities(s);
    const auto qs = divisors_of_orders(h);
    for (const auto& [r, mult] : residues)
        if (mult != 0 && !qs.count(r.get_den()))
            return "spectral residue " + to_string(r) + " has no matching cyclotomic order";
    for (const auto& q : qs) {
        // every primitive q-th root of unity has the same multiplicity
        const Integer from_h = root_multiplicity(h, q == 1 ? 0 : 1, q);
        for (Integer p = 0; p < q; ++p) {
            if (gcd(p, q) != 1)
                continue;
            const Rational r = make_rational(p, q);
            auto it = residues.find(r);
            const Integer from_spectrum = it == residues.end() ? Integer(0) : it->second;
            if (from_spectrum != from_h)
                return "residue " + to_string(r) + ": spectrum " + from_spectrum.get_str() +
                       ", characteristic polynomial " + from_h.get_str();
        }
    }
    return {};
}

std::vector<Check> verify_report(const RunReport& r)
{
    std::vector<Check> checks;

    {
        bool ok = true;
        std::string detail;
        Integer product_m = 1;
        for (std::size_t k = 0; k < r.tower.size(); ++k) {
            const LevelData& ld = r.tower[k].data;
            product_m *= ld.m;
            if (ld.d != ld.m * ld.dprime || gcd(ld.m, ld.n) != 1) {
                ok = false;
                detail = "level " + std::to_string(k + 1) + " has inconsistent m, n, d, d'";
            }
            if (k + 1 < r.tower.size() && r.tower[k + 1].data.d != ld.dprime) {
                ok = false;
                detail = "level " + std::to_string(k + 2) + " d differs from previous d'";
            }
            if (r.tower[k].exponents.size() != r.exponents.size() - k) {
                ok = false;
                detail = "exponent count does not drop by one per level";
            }
        }
        if (!r.tower.empty() && product_m != r.tower[0].data.d) {
            ok = false;
            detail = "product of m over levels differs from d";
        }
        checks.push_back(make_check("tower_invariants", ok, detail));
    }

    {
        const SpectrumElem via_motive = spectrum_via_motive(r.motive);
        checks.push_back(make_check("spectrum_path_equivalence", via_motive == r.spectrum,
                                    "process: " + to_text(r.spectrum) +
                                        " motive: " + to_text(via_motive)));
    }

    {
        std::string detail;
        for (const auto& [alpha, c] : r.spectrum.terms())
            if (r.spectrum.multiplicity(Rational(2 - alpha)) != c) {
                detail = "multiplicity of " + to_string(alpha) + " differs from its reflection";
                break;
            }
        checks.push_back(make_check("spectrum_reflection_symmetry", detail.empty(), detail));
    }

    {
        std::string detail;
        for (const auto& [alpha, c] : r.spectrum.terms()) {
            if (c < 1)
                detail = "non-positive multiplicity at " + to_string(alpha);
            else if (alpha <= 0 || alpha >= 2 || alpha == 1)
                detail = "spectral number " + to_string(alpha) + " outside (0,1) u (1,2)";
            if (!detail.empty())
                break;
        }
        checks.push_back(make_check("spectrum_support", detail.empty(), detail));
    }

    {
        Integer level_sum = 0;
        for (const auto& level : r.tower)
            level_sum += level.data.dprime * (level.data.m - 1) * (level.data.n - 1);
        const Integer total = r.spectrum.total_multiplicity();
        checks.push_back(make_check("spectrum_cardinality_equals_milnor",
                                    total == r.milnor_number && total == level_sum,
                                    "spectrum " + total.get_str() + ", milnor " +
                                        r.milnor_number.get_str() + ", level sum " +
                                        level_sum.get_str()));
    }

    {
        const std::string mismatch = residue_mismatch(r.spectrum, r.charpoly);
        checks.push_back(make_check("eigenvalue_residue_consistency", mismatch.empty(), mismatch));
    }

    {
        bool ok = false;
        std::string detail;
        try {
            const DensePoly p = expand(r.charpoly);
            ok = Integer(p.degree()) == r.milnor_number && p == r.charpoly_expanded &&
                 root_multiplicity(r.charpoly, 0, 1) == 0;
            detail = "expanded degree " + std::to_string(p.degree()) + ", milnor " +
                     r.milnor_number.get_str();
        } catch (const NonExactDivision& e) {
            detail = e.what();
        }
        checks.push_back(make_check("expand_degree_consistency", ok, detail));
    }

    {
        MotiveExpr folded = MotiveExpr::point();
        for (auto it = r.tower.levels().rbegin(); it != r.tower.levels().rend(); ++it)
            folded = theorem1_step(folded, it->data.m, it->data.n, it->data.dprime);
        checks.push_back(make_check("recursion_composition", folded == r.motive,
                                    "folded: " + to_text(folded)));
    }

    return checks;
}

// ---- serialization ---------------------------------------------------------

namespace {

Json number(const Integer& z) { return Json(to_int64(z)); }

} // namespace

Json to_json(const Generator& g)
{
    Json j = Json::object();
    if (g.is_point()) {
        j["type"] = "point";
    } else if (const auto* mu = g.as_mu_roots()) {
        j["type"] = "mu";
        j["k"] = number(mu->k);
    } else if (const auto* f = g.as_fermat()) {
        j["type"] = "fermat";
        j["m"] = number(f->m);
        j["n"] = number(f->n);
        j["e"] = number(f->e);
    }
    return j;
}

Json to_json(const MotiveExpr& s)
{
    Json arr = Json::array();
    for (const auto& [g, coeff] : s.terms()) {
        Json c = Json::array();
        for (const auto& [p, v] : coeff.terms())
            c.push_back(Json::array({p, number(v)}));
        Json entry = Json::object();
        entry["gen"] = to_json(g);
        entry["coeff"] = std::move(c);
        arr.push_back(std::move(entry));
    }
    return arr;
}

Json to_json(const SpectrumElem& s)
{
    Json arr = Json::array();
    for (const auto& [alpha, c] : s.terms())
        arr.push_back(Json::array({number(alpha.get_num()), number(alpha.get_den()), number(c)}));
    return arr;
}

Json to_json(const CycloProduct& h)
{
    Json arr = Json::array();
    for (const auto& [a, e] : h.factors())
        arr.push_back(Json::array({number(a), number(e)}));
    return arr;
}

Json to_json(const DensePoly& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coefficients())
        arr.push_back(number(c));
    return arr;
}

Json to_json(const RunReport& r)
{
    Json j = Json::object();
    Json exps = Json::array();
    for (const auto& mu : r.exponents)
        exps.push_back(Json::array({number(mu.get_num()), number(mu.get_den())}));
    j["exponents"] = std::move(exps);

    Json levels = Json::array();
    for (const auto& level : r.tower) {
        Json l = Json::object();
        l["m"] = number(level.data.m);
        l["n"] = number(level.data.n);
        l["d"] = number(level.data.d);
        l["dprime"] = number(level.data.dprime);
        levels.push_back(std::move(l));
    }
    j["levels"] = std::move(levels);
    j["motive"] = to_json(r.motive);
    j["spectrum"] = to_json(r.spectrum);
    j["milnor_number"] = number(r.milnor_number);
    j["charpoly_factored"] = to_json(r.charpoly);
    j["charpoly_expanded"] = to_json(r.charpoly_expanded);

    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json entry = Json::object();
        entry["name"] = c.name;
        entry["pass"] = c.pass;
        checks.push_back(std::move(entry));
    }
    j["checks"] = std::move(checks);
    return j;
}

std::string to_text(const RunReport& r)
{
    std::ostringstream out;
    out << "exponents: " << (r.exponents.empty() ? "(smooth)" : to_string(r.exponents)) << '\n';
    out << "levels:\n";
    for (std::size_t k = 0; k < r.tower.size(); ++k) {
        const LevelData& ld = r.tower[k].data;
        out << "  " << k + 1 << ": m=" << ld.m << " n=" << ld.n << " d=" << ld.d
            << " d'=" << ld.dprime << "  [" << to_string(r.tower[k].exponents) << "]\n";
    }
    out << "motive: " << to_text(r.motive) << '\n';
    out << "milnor number: " << r.milnor_number << '\n';
    out << "spectrum (" << r.spectrum.total_multiplicity() << "): " << to_text(r.spectrum) << '\n';
    out << "charpoly: " << to_text(r.charpoly) << '\n';
    out << "charpoly expanded: " << to_text(r.charpoly_expanded) << '\n';
    if (!r.checks.empty()) {
        out << "checks:\n";
        for (const auto& c : r.checks) {
            out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
            if (!c.pass)
                out << ": " << c.detail;
            out << '\n';
        }
    }
    return out.str();
}

std::string to_latex(const RunReport& r)
{
    std::ostringstream out;
    out << "S(f) = " << to_latex(r.motive) << "\n\n";
    out << "\\operatorname{spectrum}(f) = " << to_latex(r.spectrum) << "\n\n";
    out << "\\mu = " << r.milnor_number << "\n\n";

    std::string num, den;
    for (const auto& [a, e] : r.charpoly.factors()) {
        std::string f = a == 1 ? "(t-1)" : "(t^{" + a.get_str() + "}-1)";
        const Integer mag = abs(e);
        if (mag != 1)
            f += "^{" + mag.get_str() + "}";
        (e > 0 ? num : den) += f;
    }
    out << "\\mathbf{H}(t) = ";
    if (num.empty())
        num = "1";
    if (den.empty())
        out << num;
    else
        out << "\\frac{" << num << "}{" << den << "}";
    out << '\n';
    return out.str();
}

} // namespace pmotive

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

#include <pmotive/motive.hpp>

#include <stdexcept>
#include <vector>

namespace pmotive {

Generator Generator::mu_roots(const Integer& k)
{
    if (k < 1)
        throw std::invalid_argument("[mu_k] needs k >= 1, got " + k.get_str());
    if (k == 1)
        return point();
    return Generator(MuRoots{k});
}

Generator Generator::fermat(const Integer& m, const Integer& n, const Integer& e)
{
    if (m < 2 || n < 1 || e < 1)
        throw std::invalid_argument("Fermat class needs m >= 2, n >= 1, e >= 1");
    if (gcd(m, n) != 1)
        throw std::invalid_argument("Fermat class needs gcd(m, n) = 1");
    return Generator(FermatClass{m, n, e});
}

// ---- LaurentL --------------------------------------------------------------

LaurentL::LaurentL(const Integer& c) { add_term(0, c); }

LaurentL LaurentL::monomial(long power, const Integer& c)
{
    LaurentL l;
    l.add_term(power, c);
    return l;
}

Integer LaurentL::coefficient(long power) const
{
    auto it = terms_.find(power);
    return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentL::add_term(long power, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentL& LaurentL::operator+=(const LaurentL& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, c);
    return *this;
}

LaurentL& LaurentL::operator-=(const LaurentL& o)
{
    for (const auto& [p, c] : o.terms_)
        add_term(p, -c);
    return *this;
}

LaurentL LaurentL::operator-() const
{
    LaurentL r;
    for (const auto& [p, c] : terms_)
        r.terms_.emplace(p, -c);
    return r;
}

LaurentL operator*(const LaurentL& a, const LaurentL& b)
{
    LaurentL r;
    for (const auto& [pa, ca] : a.terms_)
        for (const auto& [pb, cb] : b.terms_)
            r.add_term(pa + pb, ca * cb);
    return r;
}

// ---- MotiveExpr ------------------------------------------------------------

LaurentL MotiveExpr::coefficient(const Generator& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? LaurentL() : it->second;
}

void MotiveExpr::add_term(const Generator& g, const LaurentL& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

MotiveExpr& MotiveExpr::operator+=(const MotiveExpr& o)
{
    for (const auto& [g, c] : o.terms_)
        add_term(g, c);
    return *this;
}

MotiveExpr& MotiveExpr::operator-=(const MotiveExpr& o)
{
    for (const auto& [g, c] : o.terms_)
        add_term(g, -c);
    return *this;
}

MotiveExpr MotiveExpr::operator-() const
{
    MotiveExpr r;
    for (const auto& [g, c] : terms_)
        r.terms_.emplace(g, -c);
    return r;
}

MotiveExpr add(const MotiveExpr& a, const MotiveExpr& b) { return a + b; }

MotiveExpr scale(const MotiveExpr& a, const LaurentL& c)
{
    MotiveExpr r;
    for (const auto& [g, coeff] : a.terms())
        r.add_term(g, coeff * c);
    return r;
}

// ---- recursion -------------------------------------------------------------

MotiveExpr base_case_motive(const Integer& m, const Integer& n, const Integer& e)
{
    MotiveExpr s = MotiveExpr::fermat(m, n, e);
    s -= scale(MotiveExpr::mu_roots(e), LaurentL::lefschetz() - 1);
    return s;
}

MotiveExpr theorem1_step(const MotiveExpr& sf_prime, const Integer& m, const Integer& n,
                         const Integer& dprime)
{
    return base_case_motive(m, n, dprime) + sf_prime - MotiveExpr::mu_roots(dprime);
}

MotiveExpr motivic_milnor_fiber(const ExponentTower& tower)
{
    MotiveExpr s = MotiveExpr::point();
    for (const auto& level : tower) {
        const LevelData& ld = level.data;
        s += MotiveExpr::fermat(ld.m, ld.n, ld.dprime);
        s -= scale(MotiveExpr::mu_roots(ld.dprime), LaurentL::lefschetz());
    }
    return s;
}

// ---- rendering -------------------------------------------------------------

namespace {

struct Style {
    bool latex;

    std::string power(const std::string& base, const Integer& exp) const
    {
        const std::string e = exp.get_str();
        if (latex && e.size() > 1)
            return base + "^{" + e + "}";
        return base + "^" + e;
    }

    std::string lefschetz(long p) const
    {
        const char* L = latex ? "\\mathbb{L}" : "L";
        if (p == 0)
            return "";
        if (p == 1)
            return L;
        return power(L, Integer(p));
    }

    std::string generator(const Generator& g) const
    {
        if (const auto* mu = g.as_mu_roots())
            return std::string(latex ? "[\\mu_" : "[mu_") +
                   (latex && mu->k.get_str().size() > 1 ? "{" + mu->k.get_str() + "}"
                                                        : mu->k.get_str()) +
                   "]";
        if (const auto* f = g.as_fermat()) {
            std::string curve = power("y", f->m) + "-" + power("x", f->n);
            if (f->e == 1)
                return "[" + curve + "-1]";
            return "[" + power("(" + curve + ")", f->e) + "-1]";
        }
        return "";
    }
};

std::string render(const MotiveExpr& s, const Style& style)
{
    std::vector<std::pair<Generator, LaurentL>> ordered;
    for (const auto& t : s.terms())
        if (t.first.as_fermat())
            ordered.push_back(t);
    for (auto it = s.terms().rbegin(); it != s.terms().rend(); ++it)
        if (it->first.as_mu_roots())
            ordered.push_back(*it);
    for (const auto& t : s.terms())
        if (t.first.is_point())
            ordered.push_back(t);

    std::string out;
    for (const auto& [g, coeff] : ordered) {
        for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
            const auto& [p, c] = *it;
            const std::string body = style.generator(g) + style.lefschetz(p);
            const Integer mag = abs(c);
            if (out.empty())
                out = c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            if (body.empty())
                out += mag.get_str();
            else
                out += (mag == 1 ? std::string() : mag.get_str()) + body;
        }
    }
    return out.empty() ? "0" : out;
}

} // namespace

std::string to_latex(const MotiveExpr& s) { return render(s, Style{true}); }

std::string to_text(const MotiveExpr& s) { return render(s, Style{false}); }

} // namespace pmotive

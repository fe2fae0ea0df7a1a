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

#include <pmotive/spectrum.hpp>

#include <algorithm>
#include <stdexcept>

namespace pmotive {

SpectrumElem SpectrumElem::monomial(const Rational& alpha, const Integer& c)
{
    SpectrumElem s;
    s.add_term(alpha, c);
    return s;
}

SpectrumElem SpectrumElem::from_terms(std::vector<std::pair<Rational, Integer>> terms)
{
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SpectrumElem s;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Integer c = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first)
            c += terms[j++].second;
        if (c != 0)
            s.terms_.emplace_hint(s.terms_.end(), std::move(terms[i].first), std::move(c));
        i = j;
    }
    return s;
}

Integer SpectrumElem::multiplicity(const Rational& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer SpectrumElem::total_multiplicity() const
{
    Integer total = 0;
    for (const auto& [alpha, c] : terms_)
        total += c;
    return total;
}

void SpectrumElem::add_term(const Rational& alpha, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SpectrumElem& SpectrumElem::operator+=(const SpectrumElem& o)
{
    for (const auto& [alpha, c] : o.terms_)
        add_term(alpha, c);
    return *this;
}

SpectrumElem& SpectrumElem::operator-=(const SpectrumElem& o)
{
    for (const auto& [alpha, c] : o.terms_)
        add_term(alpha, -c);
    return *this;
}

SpectrumElem SpectrumElem::operator-() const
{
    SpectrumElem r;
    for (const auto& [alpha, c] : terms_)
        r.terms_.emplace(alpha, -c);
    return r;
}

SpectrumElem operator*(const SpectrumElem& a, const SpectrumElem& b)
{
    std::vector<std::pair<Rational, Integer>> terms;
    terms.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [x, cx] : a.terms_)
        for (const auto& [y, cy] : b.terms_)
            terms.emplace_back(x + y, cx * cy);
    return SpectrumElem::from_terms(std::move(terms));
}

SpectrumElem SpectrumElem::substitute(const Rational& c) const
{
    if (c <= 0)
        throw std::invalid_argument("substitute needs a positive scale");
    SpectrumElem r;
    for (const auto& [alpha, mult] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), Rational(c * alpha), mult);
    return r;
}

SpectrumElem SpectrumElem::shifted(const Rational& a) const
{
    SpectrumElem r;
    for (const auto& [alpha, mult] : terms_)
        r.terms_.emplace_hint(r.terms_.end(), Rational(alpha + a), mult);
    return r;
}

SpectrumElem SpectrumElem::reflected() const
{
    SpectrumElem r;
    for (const auto& [alpha, mult] : terms_)
        r.terms_.emplace(Rational(2 - alpha), mult);
    return r;
}

SpectrumElem SpectrumElem::restricted(const Rational& lo, const Rational& hi) const
{
    SpectrumElem r;
    for (auto it = terms_.upper_bound(lo); it != terms_.end() && it->first < hi; ++it)
        r.terms_.emplace_hint(r.terms_.end(), it->first, it->second);
    return r;
}

SpectrumElem SpectrumElem::from_scaled(const Integer& den, std::vector<std::pair<Integer, Integer>> terms)
{
    if (den < 1)
        throw std::invalid_argument("common denominator must be positive");
    // Integer numerators compare far faster than rationals.
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SpectrumElem s;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Integer c = std::move(terms[i].second);
        while (j < terms.size() && terms[j].first == terms[i].first)
            c += terms[j++].second;
        if (c != 0)
            s.terms_.emplace_hint(s.terms_.end(), make_rational(terms[i].first, den), std::move(c));
        i = j;
    }
    return s;
}

// ---- building blocks -------------------------------------------------------

namespace {

using ScaledTerms = std::vector<std::pair<Integer, Integer>>;

void require_torus(const Integer& m, const Integer& n)
{
    if (m < 2 || n < 2)
        throw std::invalid_argument("torus knot needs m, n >= 2");
    if (gcd(m, n) != 1)
        throw std::invalid_argument("torus knot needs gcd(m, n) = 1");
}

/// Appends c * sum_{k<e} t^{shift + k/e}, all exponents over den (e | den).
void append_geometric(ScaledTerms& out, const Integer& den, const Integer& e,
                      const Integer& shift_num, const Integer& c)
{
    if (e < 1)
        throw std::invalid_argument("geometric sum needs e >= 1");
    const Integer step = den / e;
    const std::size_t count = to_size(e);
    Integer num = shift_num;
    for (std::size_t k = 0; k < count; ++k, num += step)
        out.emplace_back(num, c);
}

/// Appends c * Sp([(f_1)^e - 1]) with exponents over den (e m n | den).
void append_fermat(ScaledTerms& out, const Integer& den, const Integer& m, const Integer& n,
                   const Integer& e, const Integer& c)
{
    require_torus(m, n);
    if (e < 1)
        throw std::invalid_argument("sp_fermat needs e >= 1");
    const Integer mn = m * n;
    const Integer unit = den / (e * mn); // exponent a/(e m n) has numerator a * unit
    const std::size_t mm = to_size(m), nn = to_size(n), ee = to_size(e);
    // inner = Sp0(t^{1/e}) + t^{1-1/e} Sp1(t^{1/e}) as numerators over e m n
    std::vector<std::pair<Integer, Integer>> inner;
    inner.reserve((mm - 1) * (nn - 1) + 1);
    const Integer high_shift = (e - 1) * mn;
    inner.emplace_back(mn + high_shift, c); // the t term of Sp([f_1 - 1])
    for (std::size_t i = 1; i < mm; ++i)
        for (std::size_t j = 1; j < nn; ++j) {
            Integer a = Integer(i) * n + Integer(j) * m;
            if (a == mn)
                throw std::logic_error("torus knot spectral number equals 1");
            if (a > mn)
                a += high_shift;
            inner.emplace_back(std::move(a), -c);
        }
    for (std::size_t k = 0; k < ee; ++k) {
        const Integer offset = Integer(k) * mn;
        for (const auto& [a, coeff] : inner)
            out.emplace_back((a + offset) * unit, coeff);
    }
}

} // namespace

SpectrumElem torus_knot_spectrum(const Integer& m, const Integer& n)
{
    require_torus(m, n);
    const std::size_t mm = to_size(m), nn = to_size(n);
    const Integer mn = m * n;
    ScaledTerms terms;
    terms.reserve((mm - 1) * (nn - 1));
    for (std::size_t i = 1; i < mm; ++i)
        for (std::size_t j = 1; j < nn; ++j) {
            Integer a = Integer(i) * n + Integer(j) * m;
            if (a == mn)
                throw std::logic_error("torus knot spectral number equals 1");
            terms.emplace_back(std::move(a), 1);
        }
    return SpectrumElem::from_scaled(mn, std::move(terms));
}

SpectrumElem guibert_sp_f1(const Integer& m, const Integer& n)
{
    return SpectrumElem::monomial(1) - torus_knot_spectrum(m, n);
}

std::pair<SpectrumElem, SpectrumElem> split_at_one(const SpectrumElem& s)
{
    std::pair<SpectrumElem, SpectrumElem> parts;
    for (const auto& [alpha, c] : s.terms())
        (alpha < 1 ? parts.first : parts.second).add_term(alpha, c);
    return parts;
}

SpectrumElem sp_mu_L(const Integer& e)
{
    ScaledTerms terms;
    append_geometric(terms, e, e, e, 1);
    return SpectrumElem::from_scaled(e, std::move(terms));
}

SpectrumElem sp_fermat(const Integer& m, const Integer& n, const Integer& e)
{
    const Integer den = e * m * n;
    ScaledTerms terms;
    append_fermat(terms, den, m, n, e, 1);
    return SpectrumElem::from_scaled(den, std::move(terms));
}

SpectrumElem spectrum_via_process(const ExponentTower& tower)
{
    Integer den = 1;
    for (const auto& level : tower)
        den = lcm(den, level.data.m * level.data.n * level.data.dprime);
    ScaledTerms terms;
    for (const auto& level : tower) {
        const LevelData& ld = level.data;
        const Integer mn = ld.m * ld.n;
        const Integer unit = den / (mn * ld.dprime);
        const std::size_t mm = to_size(ld.m), nn = to_size(ld.n), copies = to_size(ld.dprime);
        for (std::size_t i = 1; i < mm; ++i)
            for (std::size_t j = 1; j < nn; ++j) {
                const Integer a = Integer(i) * ld.n + Integer(j) * ld.m;
                if (a >= mn)
                    continue;
                // (s + k)/d' and its reflection 2 - (s + k)/d'
                for (std::size_t k = 0; k < copies; ++k) {
                    Integer v = (a + mn * Integer(k)) * unit;
                    terms.emplace_back(2 * den - v, 1);
                    terms.emplace_back(std::move(v), 1);
                }
            }
    }
    return SpectrumElem::from_scaled(den, std::move(terms));
}

SpectrumElem spectrum_via_motive(const MotiveExpr& s)
{
    // Sp(1) - Sp(S) over a common denominator of all generator images.
    Integer den = 1;
    for (const auto& [g, coeff] : s.terms()) {
        if (const auto* mu = g.as_mu_roots())
            den = lcm(den, mu->k);
        else if (const auto* f = g.as_fermat())
            den = lcm(den, f->e * f->m * f->n);
    }
    ScaledTerms terms;
    terms.emplace_back(0, 1);
    for (const auto& [g, coeff] : s.terms()) {
        for (const auto& [power, c] : coeff.terms()) {
            const Integer neg = -c;
            if (g.is_point()) {
                if (power != 0 && power != 1)
                    throw UnsupportedMotive("point class with L^" + std::to_string(power));
                terms.emplace_back(power == 0 ? Integer(0) : den, neg);
            } else if (const auto* mu = g.as_mu_roots()) {
                if (power != 0 && power != 1)
                    throw UnsupportedMotive("[mu_" + mu->k.get_str() + "] with L^" +
                                            std::to_string(power));
                append_geometric(terms, den, mu->k, power == 0 ? Integer(0) : den, neg);
            } else if (const auto* f = g.as_fermat()) {
                if (power != 0)
                    throw UnsupportedMotive("Fermat class with L^" + std::to_string(power));
                append_fermat(terms, den, f->m, f->n, f->e, neg);
            }
        }
    }
    return SpectrumElem::from_scaled(den, std::move(terms));
}

std::string to_text(const SpectrumElem& s)
{
    std::string out;
    for (const auto& [alpha, c] : s.terms()) {
        if (!out.empty())
            out += ' ';
        out += to_string(alpha);
        if (c != 1)
            out += "^" + c.get_str();
    }
    return out;
}

std::string to_latex(const SpectrumElem& s)
{
    std::string out = "\\{";
    bool first = true;
    for (const auto& [alpha, c] : s.terms()) {
        if (!first)
            out += ", ";
        first = false;
        if (alpha.get_den() == 1)
            out += alpha.get_num().get_str();
        else
            out += "\\tfrac{" + alpha.get_num().get_str() + "}{" + alpha.get_den().get_str() + "}";
        if (c != 1)
            out += "^{(" + c.get_str() + ")}";
    }
    return out + "\\}";
}

} // namespace pmotive

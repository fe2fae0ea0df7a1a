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

#include <pmotive/monodromy.hpp>

#include <stdexcept>

namespace pmotive {

// ---- CycloProduct ----------------------------------------------------------

CycloProduct CycloProduct::factor(const Integer& order, const Integer& exponent)
{
    CycloProduct h;
    h.multiply_factor(order, exponent);
    return h;
}

void CycloProduct::multiply_factor(const Integer& order, const Integer& exponent)
{
    if (order < 1)
        throw std::invalid_argument("cyclotomic order must be positive, got " + order.get_str());
    if (exponent == 0)
        return;
    auto [it, inserted] = factors_.try_emplace(order, exponent);
    if (!inserted) {
        it->second += exponent;
        if (it->second == 0)
            factors_.erase(it);
    }
}

Integer CycloProduct::exponent(const Integer& order) const
{
    auto it = factors_.find(order);
    return it == factors_.end() ? Integer(0) : it->second;
}

Integer CycloProduct::degree() const
{
    Integer deg = 0;
    for (const auto& [a, e] : factors_)
        deg += a * e;
    return deg;
}

CycloProduct& CycloProduct::operator*=(const CycloProduct& o)
{
    for (const auto& [a, e] : o.factors_)
        multiply_factor(a, e);
    return *this;
}

CycloProduct CycloProduct::inverse() const
{
    CycloProduct r;
    for (const auto& [a, e] : factors_)
        r.factors_.emplace(a, -e);
    return r;
}

// ---- DensePoly -------------------------------------------------------------

DensePoly::DensePoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

DensePoly DensePoly::constant(const Integer& c) { return DensePoly(std::vector<Integer>{c}); }

DensePoly DensePoly::binomial(std::size_t a)
{
    if (a == 0)
        throw std::invalid_argument("t^0 - 1 is zero");
    std::vector<Integer> c(a + 1);
    c[0] = -1;
    c[a] = 1;
    return DensePoly(std::move(c));
}

Integer DensePoly::coefficient(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

void DensePoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

void DensePoly::mul_binomial(std::size_t a)
{
    if (a == 0)
        throw std::invalid_argument("t^0 - 1 is zero");
    if (coeffs_.empty())
        return;
    // p * (t^a - 1): new_i = p_{i-a} - p_i
    const std::size_t old_size = coeffs_.size();
    coeffs_.resize(old_size + a);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Integer shifted = i >= a ? coeffs_[i - a] : Integer(0);
        coeffs_[i] = shifted - (i < old_size ? coeffs_[i] : Integer(0));
    }
    trim();
}

void DensePoly::div_binomial(std::size_t a)
{
    if (a == 0)
        throw std::invalid_argument("t^0 - 1 is zero");
    if (coeffs_.empty())
        return;
    if (coeffs_.size() <= a)
        throw NonExactDivision("polynomial of degree " + std::to_string(degree()) +
                               " is not divisible by t^" + std::to_string(a) + " - 1");
    // p = q (t^a - 1) gives p_{j+a} = q_j - q_{j+a}, solved from the top.
    const std::size_t qsize = coeffs_.size() - a;
    std::vector<Integer> q(qsize);
    for (std::size_t j = qsize; j-- > 0;)
        q[j] = coeffs_[j + a] + (j + a < qsize ? q[j + a] : Integer(0));
    // Remaining low coefficients must satisfy p_j = -q_j.
    for (std::size_t j = 0; j < a; ++j) {
        const Integer qj = j < qsize ? q[j] : Integer(0);
        if (coeffs_[j] != -qj)
            throw NonExactDivision("polynomial is not divisible by t^" + std::to_string(a) +
                                   " - 1");
    }
    coeffs_ = std::move(q);
    trim();
}

DensePoly DensePoly::compose_power(std::size_t k) const
{
    if (k == 0)
        throw std::invalid_argument("compose_power needs k >= 1");
    if (coeffs_.empty())
        return {};
    std::vector<Integer> c((coeffs_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        c[i * k] = coeffs_[i];
    return DensePoly(std::move(c));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return DensePoly(std::move(c));
}

std::string to_text(const DensePoly& p)
{
    std::string out;
    for (std::size_t i = p.coefficients().size(); i-- > 0;) {
        const Integer& c = p.coefficients()[i];
        if (c == 0)
            continue;
        const Integer mag = abs(c);
        if (out.empty())
            out = c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
        if (mono.empty())
            out += mag.get_str();
        else
            out += (mag == 1 ? std::string() : mag.get_str()) + mono;
    }
    return out.empty() ? "0" : out;
}

// ---- monodromy -------------------------------------------------------------

CycloProduct charpoly_torus(const Integer& m, const Integer& n)
{
    if (m < 2 || n < 2 || gcd(m, n) != 1)
        throw std::invalid_argument("charpoly_torus needs coprime m, n >= 2");
    CycloProduct h = CycloProduct::factor(m * n);
    h *= CycloProduct::factor(1);
    h *= CycloProduct::factor(m, -1);
    h *= CycloProduct::factor(n, -1);
    return h;
}

CycloProduct substitute(const CycloProduct& h, const Integer& k)
{
    if (k < 1)
        throw std::invalid_argument("substitute needs k >= 1");
    CycloProduct r;
    for (const auto& [a, e] : h.factors())
        r *= CycloProduct::factor(a * k, e);
    return r;
}

CycloProduct unreduced_charpoly(const ExponentTower& tower)
{
    const CycloProduct t_minus_one = CycloProduct::factor(1);
    CycloProduct h = t_minus_one; // smooth branch
    for (auto it = tower.levels().rbegin(); it != tower.levels().rend(); ++it) {
        const LevelData& ld = it->data;
        const CycloProduct truncation = charpoly_torus(ld.m, ld.n) * t_minus_one;
        h = substitute(truncation, ld.dprime) * h * CycloProduct::factor(ld.dprime, -1);
    }
    return h;
}

CycloProduct monodromy_recursion(const ExponentTower& tower)
{
    return unreduced_charpoly(tower) * CycloProduct::factor(1, -1);
}

DensePoly expand(const CycloProduct& h)
{
    DensePoly p = DensePoly::constant(1);
    for (const auto& [a, e] : h.factors())
        for (Integer i = 0; i < e; ++i)
            p.mul_binomial(to_size(a));
    for (const auto& [a, e] : h.factors())
        for (Integer i = 0; i < -e; ++i)
            p.div_binomial(to_size(a));
    return p;
}

Integer milnor_number(const CycloProduct& h)
{
    Integer deg = h.degree();
    if (deg < 0)
        throw std::domain_error("characteristic polynomial has negative degree " + deg.get_str());
    return deg;
}

Integer root_multiplicity(const CycloProduct& h, const Integer& p, const Integer& q)
{
    if (q < 1 || p < 0 || p >= q || gcd(p, q) != 1)
        throw std::invalid_argument("root_multiplicity needs reduced p/q with 0 <= p < q");
    Integer mult = 0;
    for (const auto& [a, e] : h.factors())
        if (a % q == 0)
            mult += e;
    return mult;
}

std::string to_text(const CycloProduct& h)
{
    if (h.is_one())
        return "1";
    std::string out;
    for (const auto& [a, e] : h.factors()) {
        out += a == 1 ? "(t-1)" : "(t^" + a.get_str() + "-1)";
        if (e != 1)
            out += "^" + e.get_str();
    }
    return out;
}

} // namespace pmotive

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

#ifndef PMOTIVE_MONODROMY_HPP
#define PMOTIVE_MONODROMY_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <pmotive/puiseux.hpp>
#include <pmotive/rational.hpp>

namespace pmotive {

/// Formal product prod_a (t^a - 1)^{e_a}; a >= 1, e_a != 0.
class CycloProduct {
public:
    CycloProduct() = default;

    static CycloProduct factor(const Integer& order, const Integer& exponent = 1);

    const std::map<Integer, Integer>& factors() const noexcept { return factors_; }
    bool is_one() const noexcept { return factors_.empty(); }
    Integer exponent(const Integer& order) const;
    /// sum a * e_a
    Integer degree() const;

    CycloProduct& operator*=(const CycloProduct& o);
    friend CycloProduct operator*(CycloProduct a, const CycloProduct& b) { return a *= b; }
    CycloProduct inverse() const;
    friend bool operator==(const CycloProduct& a, const CycloProduct& b)
    {
        return a.factors_ == b.factors_;
    }

private:
    void multiply_factor(const Integer& order, const Integer& exponent);

    std::map<Integer, Integer> factors_;
};

class NonExactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Dense integer polynomial, constant term first. The zero polynomial has no coefficients.
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Integer> coeffs);

    static DensePoly constant(const Integer& c);
    /// t^a - 1
    static DensePoly binomial(std::size_t a);

    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    Integer coefficient(std::size_t i) const;

    /// In place multiplication / exact division by t^a - 1.
    void mul_binomial(std::size_t a);
    void div_binomial(std::size_t a);

    /// t -> t^k
    DensePoly compose_power(std::size_t k) const;

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b);
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Integer> coeffs_;
};

std::string to_text(const DensePoly& p);

/// (t^{mn} - 1)(t - 1) / ((t^m - 1)(t^n - 1)), degree (m-1)(n-1).
CycloProduct charpoly_torus(const Integer& m, const Integer& n);

/// H(t) -> H(t^k)
CycloProduct substitute(const CycloProduct& h, const Integer& k);

/**
 * Characteristic polynomial of the monodromy on the full cohomology of the
 * Milnor fiber (H^0 included), via H(t) = H_1(t^{d'}) H'(t) / (t^{d'} - 1),
 * with t - 1 for a smooth branch.
 */
CycloProduct unreduced_charpoly(const ExponentTower& tower);

/// Characteristic polynomial on reduced cohomology: unreduced_charpoly / (t - 1).
CycloProduct monodromy_recursion(const ExponentTower& tower);

/// Throws NonExactDivision when the product is not a polynomial.
DensePoly expand(const CycloProduct& h);

/// Degree of h; throws std::domain_error when negative.
Integer milnor_number(const CycloProduct& h);

/// Multiplicity of exp(2 pi i p/q) as a root: sum of e_a over q | a.
Integer root_multiplicity(const CycloProduct& h, const Integer& p, const Integer& q);

/// "(t^6-1)(t-1)(t^2-1)^-1(t^3-1)^-1"
std::string to_text(const CycloProduct& h);

} // namespace pmotive

#endif

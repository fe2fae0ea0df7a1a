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

#ifndef PMOTIVE_SPECTRUM_HPP
#define PMOTIVE_SPECTRUM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <pmotive/motive.hpp>
#include <pmotive/puiseux.hpp>
#include <pmotive/rational.hpp>

namespace pmotive {

/**
 * Element sum_alpha c_alpha t^alpha of the group ring Z[t^Q].
 *
 * Exponents are reduced rationals, multiplicities are nonzero integers
 * (negative values occur in intermediate results).
 */
class SpectrumElem {
public:
    SpectrumElem() = default;

    static SpectrumElem monomial(const Rational& alpha, const Integer& c = 1);
    /// Sums duplicate exponents and drops zeros; the input order is irrelevant.
    static SpectrumElem from_terms(std::vector<std::pair<Rational, Integer>> terms);
    /// Same, for exponents num/den sharing one denominator den > 0.
    static SpectrumElem from_scaled(const Integer& den,
                                    std::vector<std::pair<Integer, Integer>> terms);

    const std::map<Rational, Integer>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    Integer multiplicity(const Rational& alpha) const;
    /// Sum of all multiplicities.
    Integer total_multiplicity() const;

    void add_term(const Rational& alpha, const Integer& c);

    SpectrumElem& operator+=(const SpectrumElem& o);
    SpectrumElem& operator-=(const SpectrumElem& o);
    SpectrumElem operator-() const;
    friend SpectrumElem operator+(SpectrumElem a, const SpectrumElem& b) { return a += b; }
    friend SpectrumElem operator-(SpectrumElem a, const SpectrumElem& b) { return a -= b; }
    friend SpectrumElem operator*(const SpectrumElem& a, const SpectrumElem& b);
    friend bool operator==(const SpectrumElem& a, const SpectrumElem& b) { return a.terms_ == b.terms_; }

    /// t -> t^c, i.e. every exponent alpha becomes c * alpha. c > 0.
    SpectrumElem substitute(const Rational& c) const;
    /// Multiplication by t^a.
    SpectrumElem shifted(const Rational& a) const;
    /// alpha -> 2 - alpha.
    SpectrumElem reflected() const;
    /// Terms with lo < alpha < hi.
    SpectrumElem restricted(const Rational& lo, const Rational& hi) const;

private:
    std::map<Rational, Integer> terms_;
};

/// Spectral numbers { i/m + j/n : 0 < i < m, 0 < j < n } of y^m - x^n, each once.
SpectrumElem torus_knot_spectrum(const Integer& m, const Integer& n);

/// Sp([f_1 - 1]) = t - sum t^{i/m + j/n}, kept signed.
SpectrumElem guibert_sp_f1(const Integer& m, const Integer& n);

/// (part with exponents < 1, part with exponents >= 1).
std::pair<SpectrumElem, SpectrumElem> split_at_one(const SpectrumElem& s);

/// Sp([mu_e] L) = sum_{k<e} t^{1 + k/e}.
SpectrumElem sp_mu_L(const Integer& e);

/// Sp([(f_1)^e - 1]) = (sum_{k<e} t^{k/e}) * (Sp0(t^{1/e}) + t^{1-1/e} Sp1(t^{1/e})).
SpectrumElem sp_fermat(const Integer& m, const Integer& n, const Integer& e);

/// Spectrum assembled level by level: keep the torus-knot numbers below 1,
/// map s -> (s + j)/d' for j < d', then add the reflections across 1.
SpectrumElem spectrum_via_process(const ExponentTower& tower);

class UnsupportedMotive : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Sp(1) - Sp(S), applying Sp generator by generator. Only the shapes produced
/// by motivic_milnor_fiber (and [mu_k] without L) are accepted; anything else
/// throws UnsupportedMotive.
SpectrumElem spectrum_via_motive(const MotiveExpr& s);

/// "a b^2 c": ascending exponents, multiplicity as a suffix when > 1 or negative.
std::string to_text(const SpectrumElem& s);
/// "\{\tfrac{5}{36}, ...\}" with multiplicities as superscripts.
std::string to_latex(const SpectrumElem& s);

} // namespace pmotive

#endif

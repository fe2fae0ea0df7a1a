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

#ifndef PMOTIVE_MOTIVE_HPP
#define PMOTIVE_MOTIVE_HPP

#include <map>
#include <string>
#include <variant>

#include <pmotive/puiseux.hpp>
#include <pmotive/rational.hpp>

namespace pmotive {

/// Class of a point, [mu_1].
struct Point {
    friend bool operator==(const Point&, const Point&) { return true; }
    friend bool operator<(const Point&, const Point&) { return false; }
};

/// [mu_k], k-th roots of unity with the cyclic action. k >= 2 once normalized.
struct MuRoots {
    Integer k;
    friend bool operator==(const MuRoots& a, const MuRoots& b) { return a.k == b.k; }
    friend bool operator<(const MuRoots& a, const MuRoots& b) { return a.k < b.k; }
};

/// [(y^m - x^n)^e - 1]: the affine curve (y^m - x^n)^e = 1 with its mu_hat action.
struct FermatClass {
    Integer m;
    Integer n;
    Integer e;
    friend bool operator==(const FermatClass& a, const FermatClass& b)
    {
        return a.m == b.m && a.n == b.n && a.e == b.e;
    }
    friend bool operator<(const FermatClass& a, const FermatClass& b)
    {
        if (a.m != b.m)
            return a.m < b.m;
        if (a.n != b.n)
            return a.n < b.n;
        return a.e < b.e;
    }
};

/**
 * A generator of the free module we use for the monodromic Grothendieck
 * ring. Ordered Point < MuRoots (by k) < FermatClass (by m, n, e).
 */
class Generator {
public:
    using Value = std::variant<Point, MuRoots, FermatClass>;

    static Generator point() { return Generator(Point{}); }
    /// k == 1 collapses to point(); k < 1 throws std::invalid_argument.
    static Generator mu_roots(const Integer& k);
    /// Requires gcd(m, n) == 1, m >= 2, n >= 1, e >= 1.
    static Generator fermat(const Integer& m, const Integer& n, const Integer& e);

    const Value& value() const noexcept { return value_; }
    bool is_point() const noexcept { return std::holds_alternative<Point>(value_); }
    const MuRoots* as_mu_roots() const noexcept { return std::get_if<MuRoots>(&value_); }
    const FermatClass* as_fermat() const noexcept { return std::get_if<FermatClass>(&value_); }

    friend bool operator==(const Generator& a, const Generator& b) { return a.value_ == b.value_; }
    friend bool operator<(const Generator& a, const Generator& b) { return a.value_ < b.value_; }

private:
    explicit Generator(Value v) : value_(std::move(v)) {}

    Value value_;
};

/// Laurent polynomial in the Lefschetz class L with integer coefficients.
class LaurentL {
public:
    LaurentL() = default;
    LaurentL(long c) : LaurentL(Integer(c)) {} // NOLINT: integers embed as constants
    LaurentL(const Integer& c);

    /// c * L^power
    static LaurentL monomial(long power, const Integer& c = 1);
    static LaurentL lefschetz() { return monomial(1); }

    const std::map<long, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Integer coefficient(long power) const;

    LaurentL& operator+=(const LaurentL& o);
    LaurentL& operator-=(const LaurentL& o);
    LaurentL operator-() const;
    friend LaurentL operator+(LaurentL a, const LaurentL& b) { return a += b; }
    friend LaurentL operator-(LaurentL a, const LaurentL& b) { return a -= b; }
    friend LaurentL operator*(const LaurentL& a, const LaurentL& b);
    friend bool operator==(const LaurentL& a, const LaurentL& b) { return a.terms_ == b.terms_; }

private:
    void add_term(long power, const Integer& c);

    std::map<long, Integer> terms_;
};

/// Finite sum of generators with LaurentL coefficients; zero coefficients are never stored.
class MotiveExpr {
public:
    MotiveExpr() = default;
    MotiveExpr(const Generator& g, const LaurentL& c = 1) { add_term(g, c); }

    static MotiveExpr point() { return MotiveExpr(Generator::point()); }
    static MotiveExpr mu_roots(const Integer& k) { return MotiveExpr(Generator::mu_roots(k)); }
    static MotiveExpr fermat(const Integer& m, const Integer& n, const Integer& e)
    {
        return MotiveExpr(Generator::fermat(m, n, e));
    }

    const std::map<Generator, LaurentL>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    LaurentL coefficient(const Generator& g) const;

    void add_term(const Generator& g, const LaurentL& c);

    MotiveExpr& operator+=(const MotiveExpr& o);
    MotiveExpr& operator-=(const MotiveExpr& o);
    MotiveExpr operator-() const;
    friend MotiveExpr operator+(MotiveExpr a, const MotiveExpr& b) { return a += b; }
    friend MotiveExpr operator-(MotiveExpr a, const MotiveExpr& b) { return a -= b; }
    friend bool operator==(const MotiveExpr& a, const MotiveExpr& b) { return a.terms_ == b.terms_; }

private:
    std::map<Generator, LaurentL> terms_;
};

MotiveExpr add(const MotiveExpr& a, const MotiveExpr& b);
MotiveExpr scale(const MotiveExpr& a, const LaurentL& c);

/// S((f_1)^e) = [(f_1)^e - 1] - [mu_e](L - 1) for f_1 = y^m - x^n.
MotiveExpr base_case_motive(const Integer& m, const Integer& n, const Integer& e);

/// S(f) = S((f_1)^{d'}) + S(f') - [mu_{d'}], with S(f') supplied.
MotiveExpr theorem1_step(const MotiveExpr& sf_prime, const Integer& m, const Integer& n,
                         const Integer& dprime);

/// Motivic Milnor fiber from the closed recursion
/// S(f) = [(f_1)^{d'} - 1] - [mu_{d'}] L + S(f'), bottoming out at S(y) = [mu_1].
MotiveExpr motivic_milnor_fiber(const ExponentTower& tower);

/// LaTeX in the customary display order: Fermat classes, then [mu_k] by
/// decreasing k, then the point part, each by decreasing power of L.
std::string to_latex(const MotiveExpr& s);
/// Same layout in plain ASCII ("[mu_6]L", "x^13").
std::string to_text(const MotiveExpr& s);

} // namespace pmotive

#endif

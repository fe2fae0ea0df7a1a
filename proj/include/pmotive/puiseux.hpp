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

#ifndef PMOTIVE_PUISEUX_HPP
#define PMOTIVE_PUISEUX_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <pmotive/rational.hpp>

namespace pmotive {

enum class ExponentError {
    syntax,
    zero_denominator,
    non_increasing,
    integer_exponent,
    non_essential,
    not_singular, // first exponent <= 1
};

const char* to_string(ExponentError kind);

class InvalidExponents : public std::invalid_argument {
public:
    InvalidExponents(ExponentError kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    ExponentError kind() const noexcept { return kind_; }

private:
    ExponentError kind_;
};

/**
 * Essential Puiseux exponents mu_1 < ... < mu_e of an irreducible branch.
 *
 * Every instance is validated: strictly increasing, no integers, each
 * exponent enlarges the running lcm of denominators, and mu_1 > 1. The
 * empty list is a smooth branch.
 */
class ExponentList {
public:
    ExponentList() = default;

    /// Throws InvalidExponents naming the first violated invariant.
    static ExponentList validate(std::vector<Rational> exponents);

    std::span<const Rational> values() const noexcept { return exps_; }
    std::size_t size() const noexcept { return exps_.size(); }
    bool empty() const noexcept { return exps_.empty(); }
    const Rational& operator[](std::size_t i) const { return exps_[i]; }
    auto begin() const noexcept { return exps_.begin(); }
    auto end() const noexcept { return exps_.end(); }

    friend bool operator==(const ExponentList&, const ExponentList&) = default;

private:
    explicit ExponentList(std::vector<Rational> exps) : exps_(std::move(exps)) {}

    std::vector<Rational> exps_;
};

/// Parses "p/q, p/q, ..." (whitespace tolerated, empty text is the smooth branch).
ExponentList parse_exponents(std::string_view text);

std::string to_string(const ExponentList& exps);

/// mu_1 = n/m in lowest terms; d conjugates at this level, dprime = d/m on the derived curve.
struct LevelData {
    Integer m;
    Integer n;
    Integer d;
    Integer dprime;

    friend bool operator==(const LevelData&, const LevelData&) = default;
};

LevelData newton_data(const ExponentList& exps);

/// Exponents of the derived curve: mu'_i = m (mu_{i+1} - mu_1 + n).
ExponentList derive(const ExponentList& exps);

struct TowerLevel {
    LevelData data;
    ExponentList exponents;
};

/// One level per truncation/derivation step, outermost curve first.
class ExponentTower {
public:
    ExponentTower() = default;
    explicit ExponentTower(std::vector<TowerLevel> levels) : levels_(std::move(levels)) {}

    std::span<const TowerLevel> levels() const noexcept { return levels_; }
    std::size_t size() const noexcept { return levels_.size(); }
    bool empty() const noexcept { return levels_.empty(); }
    const TowerLevel& operator[](std::size_t i) const { return levels_[i]; }
    auto begin() const noexcept { return levels_.begin(); }
    auto end() const noexcept { return levels_.end(); }

private:
    std::vector<TowerLevel> levels_;
};

ExponentTower decompose(const ExponentList& exps);

} // namespace pmotive

#endif

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

#include <pmotive/puiseux.hpp>

#include <cctype>
#include <stdexcept>

namespace pmotive {

const char* to_string(ExponentError kind)
{
    switch (kind) {
    case ExponentError::syntax: return "syntax";
    case ExponentError::zero_denominator: return "zero_denominator";
    case ExponentError::non_increasing: return "non_increasing";
    case ExponentError::integer_exponent: return "integer_exponent";
    case ExponentError::non_essential: return "non_essential";
    case ExponentError::not_singular: return "not_singular";
    }
    return "unknown";
}

ExponentList ExponentList::validate(std::vector<Rational> exponents)
{
    Integer running_lcm = 1;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        Rational& mu = exponents[i];
        mu.canonicalize();
        const std::string pos = "exponent " + std::to_string(i + 1) + " (" + to_string(mu) + ")";

        if (i == 0 && mu <= 1)
            throw InvalidExponents(ExponentError::not_singular,
                                   pos + " must exceed 1; swap the roles of x and y so the "
                                         "branch is tangent to the x-axis");
        if (i > 0 && mu <= exponents[i - 1])
            throw InvalidExponents(ExponentError::non_increasing,
                                   pos + " is not larger than its predecessor " +
                                       to_string(exponents[i - 1]));
        if (is_integer(mu))
            throw InvalidExponents(ExponentError::integer_exponent,
                                   pos + " is an integer; essential exponents are never integral");

        Integer next = lcm(running_lcm, mu.get_den());
        if (next == running_lcm)
            throw InvalidExponents(ExponentError::non_essential,
                                   pos + " is not essential: its denominator divides " +
                                       running_lcm.get_str());
        running_lcm = next;
    }
    return ExponentList(std::move(exponents));
}

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool is_signed_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

Rational parse_fraction(std::string_view token)
{
    const auto slash = token.find('/');
    const std::string_view num = trim(token.substr(0, slash));
    const std::string_view den =
        slash == std::string_view::npos ? std::string_view("1") : trim(token.substr(slash + 1));
    if (!is_signed_integer(num) || !is_signed_integer(den))
        throw InvalidExponents(ExponentError::syntax,
                               "cannot parse \"" + std::string(token) + "\" as a fraction p/q");
    Integer q = parse_integer(den);
    if (q == 0)
        throw InvalidExponents(ExponentError::zero_denominator,
                               "zero denominator in \"" + std::string(token) + "\"");
    return make_rational(parse_integer(num), q);
}

} // namespace

ExponentList parse_exponents(std::string_view text)
{
    text = trim(text);
    std::vector<Rational> exps;
    if (text.empty())
        return ExponentList::validate(std::move(exps));

    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        const auto token = trim(text.substr(start, comma == std::string_view::npos
                                                       ? std::string_view::npos
                                                       : comma - start));
        if (token.empty())
            throw InvalidExponents(ExponentError::syntax, "empty entry in exponent list");
        exps.push_back(parse_fraction(token));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return ExponentList::validate(std::move(exps));
}

std::string to_string(const ExponentList& exps)
{
    std::string out;
    for (const auto& mu : exps) {
        if (!out.empty())
            out += ",";
        out += to_string(mu);
    }
    return out;
}

LevelData newton_data(const ExponentList& exps)
{
    if (exps.empty())
        throw std::invalid_argument("newton_data needs at least one exponent");
    LevelData data;
    data.m = exps[0].get_den();
    data.n = exps[0].get_num();
    data.d = 1;
    for (const auto& mu : exps)
        data.d = lcm(data.d, Integer(mu.get_den()));
    data.dprime = data.d / data.m;
    return data;
}

ExponentList derive(const ExponentList& exps)
{
    if (exps.empty())
        throw std::invalid_argument("derive needs at least one exponent");
    const Rational& first = exps[0];
    const Integer m = first.get_den();
    const Integer n = first.get_num();
    const Integer mn = m * n;

    std::vector<Rational> derived;
    derived.reserve(exps.size() - 1);
    for (std::size_t i = 1; i < exps.size(); ++i) {
        Rational mu = m * (exps[i] - first + n);
        mu.canonicalize();
        if (mu <= mn)
            throw std::logic_error("derived exponent " + to_string(mu) + " does not exceed m*n");
        derived.push_back(std::move(mu));
    }

    try {
        return ExponentList::validate(std::move(derived));
    } catch (const InvalidExponents& e) {
        throw std::logic_error(std::string("derived exponents invalid: ") + e.what());
    }
}

ExponentTower decompose(const ExponentList& exps)
{
    std::vector<TowerLevel> levels;
    ExponentList current = exps;
    while (!current.empty()) {
        LevelData data = newton_data(current);
        if (!levels.empty() && levels.back().data.dprime != data.d)
            throw std::logic_error("conjugate count mismatch between tower levels");
        ExponentList next = derive(current);
        levels.push_back({std::move(data), std::move(current)});
        current = std::move(next);
    }
    return ExponentTower(std::move(levels));
}

} // namespace pmotive

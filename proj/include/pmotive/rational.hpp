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

#ifndef PMOTIVE_RATIONAL_HPP
#define PMOTIVE_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace pmotive {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in lowest terms with a positive denominator.
/// Throws std::domain_error when den is zero.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

bool is_integer(const Rational& r);

/// Narrowing conversions that throw std::overflow_error instead of wrapping.
std::int64_t to_int64(const Integer& z);
std::size_t to_size(const Integer& z);

} // namespace pmotive

#endif

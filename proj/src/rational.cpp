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

#include <pmotive/rational.hpp>

#include <limits>
#include <stdexcept>

namespace pmotive {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::int64_t to_int64(const Integer& z)
{
    // mpz_fits_slong_p is enough on LP64, which is all we build for.
    static_assert(sizeof(long) == sizeof(std::int64_t));
    if (!z.fits_slong_p())
        throw std::overflow_error("integer " + z.get_str() + " does not fit in 64 bits");
    return z.get_si();
}

std::size_t to_size(const Integer& z)
{
    if (z < 0 || !z.fits_ulong_p())
        throw std::overflow_error("integer " + z.get_str() + " is not a valid size");
    return z.get_ui();
}

} // namespace pmotive

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gitstab {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& q);

/// Accepts "p" or "p/q" with an optional leading sign.
Rational parse_rational(std::string_view text);

std::int64_t gcd_of(const std::vector<std::int64_t>& values);

/// Rank of a dense rational matrix (rows may have any common length).
std::size_t matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace gitstab

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gitq {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result violated one of the library's own invariants.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parses `a/b` or `a` (optional sign). Decimals, exponents and zero
/// denominators are rejected: every value that enters the library is exact.
Rational parse_rational(std::string_view text);

/// Canonical text form: `a` for integers, `a/b` otherwise (lowest terms).
std::string to_string(const Rational& value);

}  // namespace gitq

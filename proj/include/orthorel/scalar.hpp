#ifndef ORTHOREL_SCALAR_HPP
#define ORTHOREL_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace orthorel {

/// Exact arbitrary-precision rational. Always kept in canonical form.
using Scalar = mpq_class;

/// Parses "p", "-p" or "p/q" (q != 0). Throws ParseError otherwise.
Scalar parse_scalar(std::string_view text);

/// Canonical "p/q" text; integers are written without a denominator.
std::string to_string(const Scalar& value);

double to_double(const Scalar& value);

std::vector<std::string> to_strings(const std::vector<Scalar>& values);
std::vector<Scalar> parse_scalars(const std::vector<std::string>& texts);

}  // namespace orthorel

#endif  // ORTHOREL_SCALAR_HPP

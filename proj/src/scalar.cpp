#include "orthorel/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "orthorel/errors.hpp"

namespace orthorel {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("not a rational number: \"" + std::string(text) + "\"");
  }
  mpz_class p(std::string(num), 10);
  mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (q == 0) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value(negative ? mpz_class(-p) : p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

double to_double(const Scalar& value) { return value.get_d(); }

std::vector<std::string> to_strings(const std::vector<Scalar>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Scalar> parse_scalars(const std::vector<std::string>& texts) {
  std::vector<Scalar> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_scalar(t));
  return out;
}

}  // namespace orthorel

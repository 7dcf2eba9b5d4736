#include "cfgflow/rational.hpp"

#include "cfgflow/error.hpp"

#include <cctype>
#include <vector>

namespace cfgflow {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::OutOfGround: return "OutOfGround";
    case ErrorKind::EmptyGround: return "EmptyGround";
    case ErrorKind::CoverageViolation: return "CoverageViolation";
    case ErrorKind::SizeCap: return "SizeCap";
    case ErrorKind::UnknownAgent: return "UnknownAgent";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NonZeroSum: return "NonZeroSum";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::AxiomViolated: return "AxiomViolated";
    case ErrorKind::NoNonzeroWitness: return "NoNonzeroWitness";
    case ErrorKind::NotPowerSet: return "NotPowerSet";
    case ErrorKind::EmptyProfile: return "EmptyProfile";
    case ErrorKind::InfeasibleCoalition: return "InfeasibleCoalition";
    case ErrorKind::MissingWorth: return "MissingWorth";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

std::string to_string(const Rational& value) {
  // boost renders integers without a denominator and keeps lowest terms.
  return value.str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = slash == std::string_view::npos ? s : s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
    throw Error(ErrorKind::ParseError, "not an exact rational: '" + std::string(text) + "'");
  Integer n{std::string(num.front() == '+' ? num.substr(1) : num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(n, d);
}

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = value * Rational(scale);
  // Round half away from zero.
  Integer num = boost::multiprecision::numerator(scaled);
  Integer den = boost::multiprecision::denominator(scaled);
  const bool negative = num < 0;
  if (negative) num = -num;
  Integer rounded = (2 * num + den) / (2 * den);
  Integer whole = rounded / scale;
  Integer frac = rounded % scale;
  std::string frac_str = frac.str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  while (!frac_str.empty() && frac_str.back() == '0') frac_str.pop_back();
  std::string out = (negative && rounded != 0 ? "-" : "") + whole.str();
  if (!frac_str.empty()) out += "." + frac_str;
  return out;
}

Integer factorial(unsigned n) {
  if (n > 4096) throw Error(ErrorKind::InvalidArgument, "factorial argument too large");
  Integer out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Rational factorial_ratio(unsigned a, unsigned b, unsigned c) {
  return Rational(factorial(a) * factorial(b), factorial(c));
}

}  // namespace cfgflow

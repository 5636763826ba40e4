#include "mcmd/rational.hpp"

#include <cctype>

#include "mcmd/error.hpp"

namespace mcmd {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOutOfRange: return "OUT_OF_RANGE";
    case ErrorCode::kNotSelected: return "NOT_SELECTED";
    case ErrorCode::kNotIdempotent: return "NOT_IDEMPOTENT";
    case ErrorCode::kIdMismatch: return "ID_MISMATCH";
    case ErrorCode::kTooLarge: return "TOO_LARGE";
    case ErrorCode::kNotCollinear: return "NOT_COLLINEAR";
    case ErrorCode::kMalformed: return "MALFORMED";
    case ErrorCode::kDuplicateId: return "DUPLICATE_ID";
    case ErrorCode::kGappedId: return "GAPPED_ID";
    case ErrorCode::kNonPositiveRadius: return "NON_POSITIVE_RADIUS";
    case ErrorCode::kBadRational: return "BAD_RATIONAL";
    case ErrorCode::kInvalidRepresentation: return "INVALID_REPRESENTATION";
    case ErrorCode::kInvalidPose: return "INVALID_POSE";
    case ErrorCode::kUnsatisfied: return "UNSATISFIED";
    case ErrorCode::kVerificationFailed: return "VERIFICATION_FAILED";
    case ErrorCode::kNotMultiple: return "NOT_MULTIPLE";
  }
  return "UNKNOWN";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw Error(ErrorCode::kBadRational,
                "not a rational number: '" + std::string(text) + "'");
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') fail();
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail();
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer num = abs(value.get_num()) * scale * 2 + value.get_den();
  Integer den = value.get_den() * 2;
  Integer scaled = num / den;  // floor(|v|*scale + 1/2)
  const bool negative = value < 0 && scaled != 0;
  Integer whole = scaled / scale;
  Integer frac = scaled % scale;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

Rational sqrt_lower_bound(const Rational& value, const Integer& scale) {
  // floor(sqrt(p/q) * s) = floor(sqrt(p * s^2 / q)) >= floor(sqrt(floor(p*s^2/q)))
  Integer scaled = value.get_num() * scale * scale / value.get_den();
  Integer root = sqrt(scaled);
  Rational r(root, scale);
  r.canonicalize();
  return r;
}

}  // namespace mcmd

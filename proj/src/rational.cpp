#include "ba/rational.hpp"

#include <cctype>

#include "ba/error.hpp"

namespace ba {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotHolomorphic: return "NotHolomorphic";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::NotMinuscule: return "NotMinuscule";
    case ErrorKind::ChainDegreeViolation: return "ChainDegreeViolation";
    case ErrorKind::NonzeroTail: return "NonzeroTail";
    case ErrorKind::NormalizerMismatch: return "NormalizerMismatch";
    case ErrorKind::RecurrenceMismatch: return "RecurrenceMismatch";
    case ErrorKind::NotInRing: return "NotInRing";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Dimension: return "Dimension";
  }
  return "Unknown";
}

namespace algebra {

namespace {
bool valid_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}
}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false))
    throw Error(ErrorKind::Parse, "not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (!n.empty() && n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw Error(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  Rational q(zn, zd);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw Error(ErrorKind::InvalidParams, "expected a machine integer, got " + to_string(q));
  return q.get_num().get_si();
}

}  // namespace algebra
}  // namespace ba

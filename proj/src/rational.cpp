#include "eqvb/rational.hpp"

#include <ostream>

#include "eqvb/error.hpp"

namespace eqvb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDecreasing: return "NotDecreasing";
    case ErrorKind::NotExhaustive: return "NotExhaustive";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Rat::Rat(long num, long den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  const std::string s(text);
  auto valid_int = [](std::string_view part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorKind::Parse, "malformed rational '" + s + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const { return value_.get_str(); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat pow(const Rat& base, long exponent) {
  if (exponent < 0) return pow(Rat(1) / base, -exponent);
  Rat result(1);
  Rat b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace eqvb

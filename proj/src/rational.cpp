#include "motgrp/rational.hpp"

#include <cctype>

#include "motgrp/error.hpp"

namespace motgrp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CongruenceViolation: return "CongruenceViolation";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotTotallyDisconnected: return "NotTotallyDisconnected";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::InvalidValue: return "InvalidValue";
    case ErrorKind::OutOfDomain: return "OutOfDomain";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::SliceMismatch: return "SliceMismatch";
    case ErrorKind::NotBoundaryFixing: return "NotBoundaryFixing";
    case ErrorKind::NotALoop: return "NotALoop";
    case ErrorKind::NotZPreserving: return "NotZPreserving";
    case ErrorKind::NoMotionExists: return "NoMotionExists";
    case ErrorKind::NotAMotion: return "NotAMotion";
    case ErrorKind::StrandMismatch: return "StrandMismatch";
    case ErrorKind::ConfigMismatch: return "ConfigMismatch";
    case ErrorKind::DegenerateProjection: return "DegenerateProjection";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' ||
      den.front() == '+') {
    fail(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

Integer floor(const Rational& value) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational frac(const Rational& value) { return value - Rational(floor(value)); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::string to_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = value * Rational(scale);
  Integer q = floor(scaled);
  const Rational rem = scaled - Rational(q);
  const int half = cmp(rem, make_rational(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  const bool negative = q < 0;
  Integer mag = negative ? Integer(-q) : q;
  std::string body = mag.get_str(10);
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

}  // namespace motgrp

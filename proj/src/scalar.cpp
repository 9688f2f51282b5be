#include "egc/scalar.hpp"

#include <cctype>
#include <ostream>

#include "egc/errors.hpp"

namespace egc {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::invalid_table: return "invalid-table";
    case Errc::invalid_pair: return "invalid-pair";
    case Errc::absent_edge: return "absent-edge";
    case Errc::edge_exists: return "edge-exists";
    case Errc::invalid_zeta: return "invalid-zeta";
    case Errc::infeasible_value: return "infeasible-value";
    case Errc::curl_violation: return "curl-violation";
    case Errc::invalid_weight: return "invalid-weight";
    case Errc::invalid_window: return "invalid-window";
    case Errc::invalid_parameter: return "invalid-parameter";
    case Errc::invalid_distribution: return "invalid-distribution";
    case Errc::inconsistent_input: return "inconsistent-input";
    case Errc::cyclic_order: return "cyclic-order";
    case Errc::too_large: return "too-large";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Scalar::Scalar(long num, long den) {
  if (den == 0) fail(Errc::invalid_parameter, "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Scalar Scalar::from_raw(mpq_class q) {
  Scalar s;
  s.v_ = std::move(q);
  s.v_.canonicalize();
  return s;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) fail(Errc::invalid_parameter, "division by zero");
  v_ /= o.v_;
  return *this;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) fail(Errc::parse_error, "empty rational literal: '" + std::string(text) + "'");

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      fail(Errc::parse_error, "malformed rational: '" + std::string(text) + "'");
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) fail(Errc::parse_error, "zero denominator: '" + std::string(text) + "'");
    value = mpq_class(n) / mpq_class(d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty())
      fail(Errc::parse_error, "malformed decimal: '" + std::string(text) + "'");
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)))
      fail(Errc::parse_error, "malformed decimal: '" + std::string(text) + "'");
    mpz_class digits(std::string(whole) + std::string(frac), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    value = mpq_class(digits) / mpq_class(den);
  } else {
    if (!all_digits(s)) fail(Errc::parse_error, "malformed integer: '" + std::string(text) + "'");
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  if (negative) value = -value;
  value.canonicalize();
  return from_raw(std::move(value));
}

std::string Scalar::str() const { return v_.get_str(); }

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }
Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace egc

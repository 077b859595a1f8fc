// SPDX-License-Identifier: Apache-2.0
#include "qbil/numeric/real.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <string>

#include "qbil/errors.hpp"

namespace qbil {
namespace {

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.bits(), b.bits()); }

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  if (b == std::string_view::npos) return {};
  return std::string(s.substr(b, e - b + 1));
}

void set_decimal(mpfr_ptr dst, const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  char* end = nullptr;
  if (mpfr_strtofr(dst, text.c_str(), &end, 10, MPFR_RNDN); end == text.c_str() || *end != '\0')
    throw ParseError("malformed number '" + text + "'");
}

}  // namespace

Real::Real(mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_zero(v_, 1);
}

Real::Real(long value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_si(v_, value, MPFR_RNDN);
}

Real::Real(double value, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set_d(v_, value, MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(v_, other.bits());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(v_, MPFR_PREC_MIN);
  mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(v_, other.bits());
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(v_, other.v_);
  return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::parse(std::string_view text, mpfr_prec_t bits) {
  const std::string s = trim(text);
  Real out(bits);
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    set_decimal(out.v_, s);
    return out;
  }
  Real den(bits + 32);
  Real num(bits + 32);
  set_decimal(num.v_, trim(s.substr(0, slash)));
  set_decimal(den.v_, trim(s.substr(slash + 1)));
  if (den.is_zero()) throw ParseError("zero denominator in '" + s + "'");
  mpfr_div(out.v_, num.v_, den.v_, MPFR_RNDN);
  return out;
}

void Real::set_bits(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

Real Real::with_bits(mpfr_prec_t bits) const {
  Real r(bits);
  mpfr_set(r.v_, v_, MPFR_RNDN);
  return r;
}

long Real::exponent2() const {
  if (is_zero() || !is_finite()) return LONG_MIN;
  return mpfr_get_exp(v_);
}

std::string Real::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", std::max(digits - 1, 0), v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string Real::str() const {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(bits()) * 0.30103)) + 2;
  return str(digits);
}

Real& Real::operator+=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  if (o.bits() > bits()) mpfr_prec_round(v_, o.bits(), MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator+=(long o) {
  mpfr_add_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(long o) {
  mpfr_sub_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(long o) {
  mpfr_div_si(v_, v_, o, MPFR_RNDN);
  return *this;
}

Real Real::operator-() const {
  Real r(bits());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator+(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator*(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, const Real& b) {
  Real r(joint(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
Real operator/(long a, const Real& b) {
  Real r(b.bits());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const Real& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

#define QBIL_UNARY(name, fn)              \
  Real name(const Real& x) {              \
    Real r(x.bits());                     \
    fn(r.raw(), x.raw(), MPFR_RNDN);      \
    return r;                             \
  }

QBIL_UNARY(abs, mpfr_abs)
QBIL_UNARY(sqrt, mpfr_sqrt)
QBIL_UNARY(exp, mpfr_exp)
QBIL_UNARY(log, mpfr_log)
QBIL_UNARY(log2, mpfr_log2)
QBIL_UNARY(sin, mpfr_sin)
QBIL_UNARY(cos, mpfr_cos)
QBIL_UNARY(sinh, mpfr_sinh)
QBIL_UNARY(cosh, mpfr_cosh)
#undef QBIL_UNARY

Real floor(const Real& x) {
  Real r(x.bits());
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real round(const Real& x) {
  Real r(x.bits());
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r(joint(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(joint(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long n) {
  Real r(x.bits());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real ldexp(const Real& x, long e) {
  Real r(x.bits());
  mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN);
  return r;
}

Real min(const Real& a, const Real& b) { return (b < a) ? b : a; }
Real max(const Real& a, const Real& b) { return (a < b) ? b : a; }

Real pi(mpfr_prec_t bits) {
  Real r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real pow2(long e, mpfr_prec_t bits) {
  Real r(1L, bits);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace qbil

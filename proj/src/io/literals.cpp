// SPDX-License-Identifier: Apache-2.0
#include "qbil/io/literals.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "qbil/errors.hpp"

namespace qbil {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void bad(std::string_view what, std::string_view text) {
  throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'");
}

long to_long(std::string_view s, std::string_view whole) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) bad("integer", whole);
  return v;
}

}  // namespace

Real parse_real(std::string_view text, mpfr_prec_t bits) {
  std::string_view t = trim(text);
  if (t.empty()) bad("number", text);
  try {
    return Real::parse(t, bits);
  } catch (const std::exception&) {
    bad("number", text);
  }
}

Complex parse_complex(std::string_view text, mpfr_prec_t bits) {
  std::string_view t = trim(text);
  if (t.empty()) bad("complex literal", text);
  if (t.back() != 'i') return Complex(parse_real(t, bits), Real(bits));
  std::string_view body = t.substr(0, t.size() - 1);
  // split at the last sign that is not leading and not part of an exponent
  size_t cut = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E' && body[k - 1] != '/') {
      cut = k;
      break;
    }
  }
  std::string_view re = cut == std::string_view::npos ? std::string_view() : body.substr(0, cut);
  std::string_view im = cut == std::string_view::npos ? body : body.substr(cut);
  Real imv(bits);
  if (im.empty() || im == "+")
    imv = Real(1L, bits);
  else if (im == "-")
    imv = Real(-1L, bits);
  else
    imv = parse_real(im.front() == '+' ? im.substr(1) : im, bits);
  Real rev = re.empty() ? Real(bits) : parse_real(re, bits);
  return Complex(rev, imv);
}

mpq_class parse_rational(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) bad("rational", text);
  size_t slash = t.find('/');
  if (slash != std::string_view::npos) {
    mpq_class q;
    try {
      q = mpq_class(std::string(t));
    } catch (const std::exception&) {
      bad("rational", text);
    }
    if (q.get_den() == 0) bad("rational", text);
    q.canonicalize();
    return q;
  }
  bool neg = false;
  std::string_view s = t;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  size_t e = s.find_first_of("eE");
  if (e != std::string_view::npos) {
    exp10 = to_long(s.substr(e + 1).front() == '+' ? s.substr(e + 2) : s.substr(e + 1), text);
    s = s.substr(0, e);
  }
  size_t dot = s.find('.');
  std::string digits(s.substr(0, dot));
  if (dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    digits += frac;
    exp10 -= static_cast<long>(frac.size());
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) bad("rational", text);
  mpz_class num(digits, 10), ten = 10, scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::labs(exp10)));
  mpq_class q = exp10 >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  std::string_view t = trim(text);
  while (!t.empty()) {
    size_t comma = t.find(',');
    std::string item(trim(t.substr(0, comma)));
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      bad("number list", text);
    }
    if (used != item.size()) bad("number list", text);
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    t = t.substr(comma + 1);
  }
  return out;
}

std::pair<long, long> parse_range(std::string_view text) {
  std::string_view t = trim(text);
  size_t dots = t.find("..");
  if (dots == std::string_view::npos) {
    long v = to_long(t, text);
    return {v, v};
  }
  std::pair<long, long> r{to_long(t.substr(0, dots), text), to_long(t.substr(dots + 2), text)};
  if (r.first > r.second) bad("range", text);
  return r;
}

}  // namespace qbil

// SPDX-License-Identifier: Apache-2.0
#include "qbil/formal/laurent.hpp"

#include <algorithm>

#include "qbil/errors.hpp"

namespace qbil {

LaurentSeries LaurentSeries::monomial(const mpq_class& c, long k, long order) {
  LaurentSeries s;
  s.order = order;
  s.val = k;
  if (k <= order) s.coeffs.push_back(c);
  s.normalize();
  return s;
}

mpq_class LaurentSeries::coeff(long k) const {
  if (k < val || k - val >= static_cast<long>(coeffs.size())) return 0;
  return coeffs[static_cast<size_t>(k - val)];
}

void LaurentSeries::normalize() {
  long keep = std::max(0L, order - val + 1);
  if (static_cast<long>(coeffs.size()) > keep) coeffs.resize(static_cast<size_t>(keep));
  size_t lead = 0;
  while (lead < coeffs.size() && coeffs[lead] == 0) ++lead;
  if (lead == coeffs.size()) {
    coeffs.clear();
    val = order + 1;
    return;
  }
  coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(lead));
  val += static_cast<long>(lead);
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string LaurentSeries::str(long max_terms) const {
  if (is_zero()) return "O(p^" + std::to_string(order + 1) + ")";
  std::string out;
  long shown = 0;
  for (size_t i = 0; i < coeffs.size() && shown < max_terms; ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[i].get_str() + ")p^" + std::to_string(val + static_cast<long>(i));
    ++shown;
  }
  return out + " + O(p^" + std::to_string(order + 1) + ")";
}

LaurentSeries ls_neg(const LaurentSeries& x) {
  LaurentSeries r = x;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

LaurentSeries ls_add(const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries r;
  r.order = std::min(x.order, y.order);
  r.val = std::min(x.val, y.val);
  if (r.val > r.order) {
    r.val = r.order + 1;
    return r;
  }
  r.coeffs.assign(static_cast<size_t>(r.order - r.val + 1), 0);
  for (size_t i = 0; i < x.coeffs.size(); ++i) {
    long k = x.val + static_cast<long>(i);
    if (k > r.order) break;
    r.coeffs[static_cast<size_t>(k - r.val)] += x.coeffs[i];
  }
  for (size_t i = 0; i < y.coeffs.size(); ++i) {
    long k = y.val + static_cast<long>(i);
    if (k > r.order) break;
    r.coeffs[static_cast<size_t>(k - r.val)] += y.coeffs[i];
  }
  r.normalize();
  return r;
}

LaurentSeries ls_sub(const LaurentSeries& x, const LaurentSeries& y) { return ls_add(x, ls_neg(y)); }

LaurentSeries ls_mul(const LaurentSeries& x, const LaurentSeries& y) {
  LaurentSeries r;
  r.order = std::min(x.order + y.val, y.order + x.val);
  r.val = x.val + y.val;
  if (x.is_zero() || y.is_zero() || r.val > r.order) {
    r.coeffs.clear();
    r.val = r.order + 1;
    return r;
  }
  const long n = r.order - r.val + 1;
  r.coeffs.assign(static_cast<size_t>(n), 0);
  const long nx = std::min<long>(static_cast<long>(x.coeffs.size()), n);
  const long ny = std::min<long>(static_cast<long>(y.coeffs.size()), n);
  mpq_class t;
  for (long i = 0; i < nx; ++i) {
    if (x.coeffs[static_cast<size_t>(i)] == 0) continue;
    for (long j = 0; j < ny && i + j < n; ++j) {
      t = x.coeffs[static_cast<size_t>(i)] * y.coeffs[static_cast<size_t>(j)];
      r.coeffs[static_cast<size_t>(i + j)] += t;
    }
  }
  r.normalize();
  return r;
}

LaurentSeries ls_scale(const LaurentSeries& x, const mpq_class& c) {
  if (c == 0) return LaurentSeries::monomial(0, 0, x.order);
  LaurentSeries r = x;
  for (auto& v : r.coeffs) v *= c;
  return r;
}

LaurentSeries ls_shift(const LaurentSeries& x, long k) {
  LaurentSeries r = x;
  r.val += k;
  r.order += k;
  return r;
}

LaurentSeries ls_inv(const LaurentSeries& x) {
  if (x.is_zero()) throw NotInvertibleError("series is zero to order " + std::to_string(x.order));
  const long n = x.order - x.val + 1;  // relative precision
  LaurentSeries r;
  r.val = -x.val;
  r.order = r.val + n - 1;
  r.coeffs.assign(static_cast<size_t>(n), 0);
  const mpq_class c0inv = 1 / x.coeffs[0];
  r.coeffs[0] = c0inv;
  mpq_class acc;
  for (long k = 1; k < n; ++k) {
    acc = 0;
    for (long j = 1; j <= k && j < static_cast<long>(x.coeffs.size()); ++j)
      acc += x.coeffs[static_cast<size_t>(j)] * r.coeffs[static_cast<size_t>(k - j)];
    r.coeffs[static_cast<size_t>(k)] = -acc * c0inv;
  }
  r.normalize();
  return r;
}

LaurentSeries ls_div(const LaurentSeries& x, const LaurentSeries& y) { return ls_mul(x, ls_inv(y)); }

Real ls_eval(const LaurentSeries& x, const mpq_class& p, mpfr_prec_t bits) {
  mpq_class sum = 0, pk = 1;
  if (!x.is_zero()) {
    mpq_class base = x.val >= 0 ? p : mpq_class(1 / p);
    for (long i = 0; i < std::abs(x.val); ++i) pk *= base;
  }
  for (const auto& c : x.coeffs) {
    sum += c * pk;
    pk *= p;
  }
  Real r(bits);
  mpfr_set_q(r.raw(), sum.get_mpq_t(), MPFR_RNDN);
  return r;
}

}  // namespace qbil

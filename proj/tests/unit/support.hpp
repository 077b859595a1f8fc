// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>

#include "qbil/numeric/precision.hpp"

namespace qt {

inline qbil::Complex cx(double re, double im, long bits = 256) { return qbil::Complex(re, im, bits); }

inline qbil::Complex cx(const char* re, const char* im, long bits = 256) {
  return {qbil::Real::parse(re, bits), qbil::Real::parse(im, bits)};
}

inline double dist(const qbil::Complex& a, const qbil::Complex& b) { return qbil::abs(a - b).to_double(); }

inline std::complex<double> to_std(const qbil::Complex& z) { return {z.re.to_double(), z.im.to_double()}; }

}  // namespace qt

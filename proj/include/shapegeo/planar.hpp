#pragma once

#include <complex>

namespace shapegeo {

// Planar points and momenta as complex numbers (two reals).
using cplx = std::complex<double>;

inline double dot(cplx a, cplx b) { return a.real() * b.real() + a.imag() * b.imag(); }

// Planar cross product a x b = <i a, b>.
inline double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline double norm2(cplx a) { return std::norm(a); }

} // namespace shapegeo

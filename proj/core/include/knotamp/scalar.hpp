#pragma once

#include <cmath>
#include <complex>

#include "knotamp/laurent_poly.hpp"

namespace knotamp {

using ComplexNum = std::complex<double>;

// One scalar contract, two instantiations: LaurentPoly (exact) and
// ComplexNum (numeric, tolerance compare). No mixed-kind arithmetic.
template <class S>
struct scalar_ops;

template <>
struct scalar_ops<LaurentPoly> {
    static constexpr bool exact = true;
    static LaurentPoly zero() { return LaurentPoly::zero(); }
    static LaurentPoly one() { return LaurentPoly::one(); }
    static LaurentPoly from_int(long v) { return LaurentPoly(v); }
    static bool equal(const LaurentPoly& a, const LaurentPoly& b, double /*tol*/ = 0.0) {
        return a == b;
    }
    static double abs_diff(const LaurentPoly& a, const LaurentPoly& b) {
        return a == b ? 0.0 : 1.0;
    }
    static bool is_zero(const LaurentPoly& a) { return a.is_zero(); }
};

template <>
struct scalar_ops<ComplexNum> {
    static constexpr bool exact = false;
    static ComplexNum zero() { return {0.0, 0.0}; }
    static ComplexNum one() { return {1.0, 0.0}; }
    static ComplexNum from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static bool equal(const ComplexNum& a, const ComplexNum& b, double tol = 1e-9) {
        return std::abs(a - b) <= tol;
    }
    static double abs_diff(const ComplexNum& a, const ComplexNum& b) { return std::abs(a - b); }
    static bool is_zero(const ComplexNum& a) { return a == ComplexNum{0.0, 0.0}; }
};

}  // namespace knotamp

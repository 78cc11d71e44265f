#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

namespace knotamp {

using BigInt = boost::multiprecision::cpp_int;

// Element of Z[i]. Coefficients are arbitrary precision: bracket-style state
// sums double the term count per crossing and the integer coefficients can
// pass 64 bits around twenty crossings.
struct GaussInt {
    BigInt re{0};
    BigInt im{0};

    GaussInt() = default;
    GaussInt(long r) : re(r) {}
    GaussInt(BigInt r, BigInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt unit_i() { return GaussInt(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }

    // i^k for any integer k
    static GaussInt i_power(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return GaussInt(1);
            case 1: return GaussInt(0, 1);
            case 2: return GaussInt(-1);
            default: return GaussInt(0, -1);
        }
    }

    GaussInt conj() const { return GaussInt(re, -im); }

    // norm re^2 + im^2; a Gaussian integer is a unit iff norm == 1
    BigInt norm() const { return re * re + im * im; }
    bool is_unit() const { return norm() == 1; }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re + b.re, a.im + b.im);
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re - b.re, a.im - b.im);
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    GaussInt operator-() const { return GaussInt(-re, -im); }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

    // valid only for units (1, -1, i, -i): inverse is the conjugate
    GaussInt unit_inverse() const { return conj(); }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    std::string str() const;
};

// "0", "1", "-i", "2+3i", "1-i", ...
inline std::string GaussInt::str() const {
    if (im == 0) return re.str();
    std::string s;
    if (re != 0) s += re.str();
    if (im == 1) s += (re != 0 ? "+i" : "i");
    else if (im == -1) s += "-i";
    else {
        std::string t = im.str();
        if (re != 0 && im > 0) s += "+";
        s += t + "i";
    }
    return s;
}

}  // namespace knotamp

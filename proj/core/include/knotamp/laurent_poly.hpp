#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "knotamp/gauss_int.hpp"

namespace knotamp {

// Element of Z[i][A, A^-1], the value ring of every symbolic invariant here.
// Canonical form: sorted exponent -> coefficient map with no zero entries.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) { insert(0, GaussInt(c)); }
    LaurentPoly(GaussInt c) { insert(0, std::move(c)); }

    static LaurentPoly monomial(GaussInt coeff, long exp);
    static LaurentPoly variable() { return monomial(GaussInt(1), 1); }  // A
    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(1); }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // terms in ascending exponent order
    const std::map<long, GaussInt>& terms() const { return terms_; }
    GaussInt coeff(long exp) const;

    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);
    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.terms_ == q.terms_;
    }
    friend bool operator!=(const LaurentPoly& p, const LaurentPoly& q) { return !(p == q); }

    // inverse exists in the ring only for unit monomials (+-1, +-i times A^k)
    std::optional<LaurentPoly> inverse() const;

    // p^k for any integer k; negative k requires an invertible p
    LaurentPoly pow(long k) const;

    // ring involution A -> A^-1, i -> -i (mirror image of a diagram)
    LaurentPoly bar() const;

    // Evaluate at a nonzero complex point (Gaussian coefficients map to re + im*i).
    std::complex<double> eval(std::complex<double> a) const;

    // text form: terms joined by " + ", exponents descending, e.g. "-A^2 + -A^-2"
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

private:
    void insert(long exp, GaussInt c);
    std::map<long, GaussInt> terms_;
};

}  // namespace knotamp

#include "knotamp/laurent_poly.hpp"

#include <cctype>
#include <cmath>

#include "knotamp/error.hpp"

namespace knotamp {

void LaurentPoly::insert(long exp, GaussInt c) {
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::monomial(GaussInt coeff, long exp) {
    LaurentPoly p;
    p.insert(exp, std::move(coeff));
    return p;
}

GaussInt LaurentPoly::coeff(long exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? GaussInt(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    for (const auto& [e, c] : q.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    r += q;
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return p + (-q); }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r;
    for (const auto& [e1, c1] : p.terms_)
        for (const auto& [e2, c2] : q.terms_) r.insert(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

std::optional<LaurentPoly> LaurentPoly::inverse() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [e, c] = *terms_.begin();
    if (!c.is_unit()) return std::nullopt;
    return monomial(c.unit_inverse(), -e);
}

LaurentPoly LaurentPoly::pow(long k) const {
    LaurentPoly base = *this;
    if (k < 0) {
        auto inv = inverse();
        if (!inv) fail_pre("pow: negative power of a non-invertible polynomial");
        base = *inv;
        k = -k;
    }
    LaurentPoly acc = one();
    while (k > 0) {
        if (k & 1) acc *= base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c.conj());
    return r;
}

namespace {

std::complex<double> cpow_int(std::complex<double> a, long k) {
    if (k < 0) {
        a = 1.0 / a;
        k = -k;
    }
    std::complex<double> acc{1.0, 0.0};
    while (k > 0) {
        if (k & 1) acc *= a;
        a *= a;
        k >>= 1;
    }
    return acc;
}

}  // namespace

std::complex<double> LaurentPoly::eval(std::complex<double> a) const {
    if (a == std::complex<double>{0.0, 0.0})
        fail_pre("eval: base 0 (negative exponents undefined)");
    std::complex<double> acc{0.0, 0.0};
    for (const auto& [e, c] : terms_) acc += c.to_complex() * cpow_int(a, e);
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // exponents descending
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string factor;
        if (e == 1) factor = "A";
        else if (e != 0) factor = "A^" + std::to_string(e);

        std::string cs;
        if (c == GaussInt(1)) cs = factor.empty() ? "1" : "";
        else if (c == GaussInt(-1)) cs = factor.empty() ? "-1" : "-";
        else if (c.im != 0 && c.re != 0) cs = "(" + c.str() + ")";
        else cs = c.str();

        if (!cs.empty() && cs != "-" && !factor.empty()) cs += "*";
        out += cs + factor;
    }
    return out;
}

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;
    explicit Scanner(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() { return i < s.size() ? s[i] : '\0'; }
    bool eat(char c) {
        skip_ws();
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }

    BigInt integer() {
        skip_ws();
        size_t start = i;
        if (peek() == '+' || peek() == '-') ++i;
        size_t digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
        if (digits == 0) fail_parse("polynomial: expected integer at offset " + std::to_string(start));
        return BigInt(s.substr(start, i - start));
    }

    long small_integer() {
        BigInt v = integer();
        if (v > 1000000 || v < -1000000) fail_parse("polynomial: exponent out of range");
        return static_cast<long>(v);
    }

    // pure real or pure imaginary: "3", "-2i", "i", "-i"; used outside parens
    // so that "2 + 3i" stays two terms
    GaussInt gauss_simple() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s[i++] == '-');
        skip_ws();
        if (peek() == 'i') {
            ++i;
            return GaussInt(0, neg ? -1 : 1);
        }
        BigInt v = integer();
        if (neg) v = -v;
        if (peek() == 'i') {
            ++i;
            return GaussInt(0, std::move(v));
        }
        return GaussInt(std::move(v));
    }

    // "3", "-2i", "i", "-i", "2+3i", "1-i"
    GaussInt gauss() {
        skip_ws();
        GaussInt g;
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (s[i++] == '-');
        skip_ws();
        if (peek() == 'i') {
            ++i;
            g.im = neg ? -1 : 1;
            return g;
        }
        BigInt v = integer();
        if (neg) v = -v;
        if (peek() == 'i') {
            ++i;
            g.im = v;
            return g;
        }
        g.re = v;
        skip_ws();
        if (peek() == '+' || peek() == '-') {
            bool ineg = (s[i++] == '-');
            skip_ws();
            BigInt w = 1;
            if (std::isdigit(static_cast<unsigned char>(peek()))) w = integer();
            if (!eat('i')) fail_parse("polynomial: expected 'i' in complex coefficient");
            g.im = ineg ? -w : w;
        }
        return g;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Scanner sc(text);
    LaurentPoly out;
    if (sc.done()) fail_parse("polynomial: empty input");
    bool first = true;
    while (!sc.done()) {
        if (!first && !sc.eat('+')) fail_parse("polynomial: expected '+' between terms");
        first = false;
        sc.skip_ws();

        GaussInt c(1);
        bool have_coeff = false;
        if (sc.peek() == '(') {
            sc.eat('(');
            c = sc.gauss();
            if (!sc.eat(')')) fail_parse("polynomial: expected ')'");
            have_coeff = true;
        } else if (sc.peek() != 'A') {
            bool neg = false;
            if (sc.peek() == '-') {
                sc.eat('-');
                sc.skip_ws();
                neg = true;
            }
            if (sc.peek() == 'A') {
                c = GaussInt(neg ? -1 : 1);
                have_coeff = true;
            } else {
                c = sc.gauss_simple();
                if (neg) c = -c;
                have_coeff = true;
            }
        }
        sc.eat('*');
        long e = 0;
        sc.skip_ws();
        if (sc.peek() == 'A') {
            sc.eat('A');
            e = 1;
            if (sc.eat('^')) e = sc.small_integer();
        } else if (!have_coeff) {
            fail_parse("polynomial: expected coefficient or 'A'");
        }
        out.insert(e, c);
    }
    return out;
}

}  // namespace knotamp

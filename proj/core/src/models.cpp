#include "knotamp/models.hpp"

#include <cmath>

#include "knotamp/error.hpp"

namespace knotamp {

template struct TangleModel<LaurentPoly>;
template struct TangleModel<ComplexNum>;

namespace {

template <class S>
S loop_contraction(const Tensor<S>& cup, const Tensor<S>& cap) {
    S acc = scalar_ops<S>::zero();
    for (std::size_t a = 0; a < cup.rows(); ++a)
        for (std::size_t b = 0; b < cup.cols(); ++b) acc = acc + cup.at(a, b) * cap.at(a, b);
    return acc;
}

}  // namespace

template <class S>
std::optional<S> curl_factor(const Tensor<S>& cup, const Tensor<S>& cap, const Tensor<S>& r,
                             std::size_t n, double tol) {
    // kink on one strand: create a pair to the right, cross, annihilate.
    // out[a,a'] = sum_{b,c,b'} cup[b,c] r[(a b),(a' b')] cap[b',c]
    Tensor<S> out(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t ap = 0; ap < n; ++ap) {
            S acc = scalar_ops<S>::zero();
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; ++c)
                    for (std::size_t bp = 0; bp < n; ++bp)
                        acc = acc + cup.at(b, c) * r.at(a * n + b, ap * n + bp) * cap.at(bp, c);
            out.at(a, ap) = acc;
        }
    const S kappa = out.at(0, 0);
    Tensor<S> expect = kappa * Tensor<S>::identity(n);
    if (!out.equal(expect, tol)) return std::nullopt;
    return kappa;
}

template std::optional<LaurentPoly> curl_factor(const ExactTensor&, const ExactTensor&,
                                                const ExactTensor&, std::size_t, double);
template std::optional<ComplexNum> curl_factor(const NumericTensor&, const NumericTensor&,
                                               const NumericTensor&, std::size_t, double);

namespace {

template <class S>
void finish_model(TangleModel<S>& m, double tol = 0.0) {
    m.loop_value = loop_contraction(m.cup, m.cap);
    m.curl_pos = curl_factor(m.cup, m.cap, m.r_pos, m.dim, tol);
    m.curl_neg = curl_factor(m.cup, m.cap, m.r_neg, m.dim, tol);
}

const LaurentPoly kA = LaurentPoly::variable();

LaurentPoly mono(long re, long im, long exp) {
    return LaurentPoly::monomial(GaussInt(BigInt(re), BigInt(im)), exp);
}

// x*Id + y*(cup cap) as a crossing tensor on V (x) V
ExactTensor bracket_crossing(const ExactTensor& m, const LaurentPoly& x, const LaurentPoly& y) {
    const std::size_t n = m.rows();
    ExactTensor r(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    LaurentPoly v = y * m.at(a, b) * m.at(c, d);
                    if (a == c && b == d) v += x;
                    r.at(a * n + b, c * n + d) = v;
                }
    return r;
}

}  // namespace

ExactModel bracket_model() {
    ExactModel m;
    m.name = "bracket";
    m.dim = 2;
    ExactTensor M(2, 2);
    M.at(0, 1) = mono(0, 1, 1);    // iA
    M.at(1, 0) = mono(0, -1, -1);  // -iA^-1
    m.cup = M;
    m.cap = M;
    m.r_pos = bracket_crossing(M, kA, mono(1, 0, -1));
    m.r_neg = bracket_crossing(M, mono(1, 0, -1), kA);
    m.normalization = Normalization::writhe_monomial;
    finish_model(m);
    return m;
}

ExactModel swap_fg_model() {
    ExactModel m;
    m.name = "swapfg";
    m.dim = 3;
    ExactTensor f(3, 3), g(3, 3);
    f.at(0, 2) = f.at(1, 1) = f.at(2, 0) = LaurentPoly::one();
    g.at(0, 0) = g.at(2, 2) = LaurentPoly::one();
    g.at(1, 1) = LaurentPoly(-1);
    ExactTensor fg = kron(f, g);
    ExactTensor s = ExactTensor::swap_gate(3);
    m.cup = ExactTensor::identity(3);
    m.cap = ExactTensor::identity(3);
    m.r_pos = mat_mul(s, fg);
    m.r_neg = mat_mul(fg, s);  // (F (x) G) S, inverse since F^2 = G^2 = I
    m.normalization = Normalization::none;
    finish_model(m);
    return m;
}

namespace {

ExactModel product_model_with_cup(int s_power, const ExactTensor& cup, const char* name) {
    ExactModel m;
    m.name = name;
    m.dim = 2;
    const GaussInt s = GaussInt::i_power(s_power);
    m.cup = cup;
    m.cap = mat_inverse(cup);
    m.r_pos = LaurentPoly(s) * ExactTensor::identity(4);
    m.r_neg = LaurentPoly(s.unit_inverse()) * ExactTensor::identity(4);
    m.normalization = Normalization::writhe_monomial;
    finish_model(m);
    return m;
}

}  // namespace

ExactModel product_model(int s_power) {
    ExactTensor cup(2, 2);
    cup.at(0, 0) = cup.at(0, 1) = cup.at(1, 1) = LaurentPoly::one();
    return product_model_with_cup(s_power, cup, "product");
}

ExactModel product_model_alt(int s_power) {
    ExactTensor cup(2, 2);
    cup.at(0, 0) = cup.at(1, 0) = cup.at(1, 1) = LaurentPoly::one();
    return product_model_with_cup(s_power, cup, "product-alt");
}

ExactModel virtual_model() {
    ExactModel m;
    m.name = "virtual";
    m.dim = 2;
    m.cup = ExactTensor::identity(2);
    m.cap = ExactTensor::identity(2);
    ExactTensor r(4, 4);
    r.at(0, 3) = kA;
    r.at(1, 1) = mono(1, 0, -1);
    r.at(2, 2) = mono(1, 0, -1);
    r.at(3, 0) = kA;
    m.r_pos = r;
    ExactTensor rb(4, 4);
    rb.at(0, 3) = mono(1, 0, -1);
    rb.at(1, 1) = kA;
    rb.at(2, 2) = kA;
    rb.at(3, 0) = mono(1, 0, -1);
    m.r_neg = rb;
    m.virtual_tensor = ExactTensor::swap_gate(2);
    m.normalization = Normalization::writhe_monomial;
    finish_model(m);
    return m;
}

NumericModel to_numeric(const ExactModel& m, ComplexNum a, double tol) {
    NumericModel n;
    n.name = m.name;
    n.dim = m.dim;
    n.cup = tensor_eval(m.cup, a);
    n.cap = tensor_eval(m.cap, a);
    n.r_pos = tensor_eval(m.r_pos, a);
    n.r_neg = tensor_eval(m.r_neg, a);
    if (m.virtual_tensor) n.virtual_tensor = tensor_eval(*m.virtual_tensor, a);
    n.normalization = m.normalization;
    n.loop_value = m.loop_value.eval(a);
    n.curl_pos = m.curl_pos ? std::optional<ComplexNum>(m.curl_pos->eval(a)) : std::nullopt;
    n.curl_neg = m.curl_neg ? std::optional<ComplexNum>(m.curl_neg->eval(a)) : std::nullopt;
    (void)tol;
    return n;
}

NumericModel virtual_model_numeric(ComplexNum a) {
    if (std::abs(std::abs(a) - 1.0) > 1e-9)
        fail_pre("virtual model: numeric A must lie on the unit circle");
    return to_numeric(virtual_model(), a);
}

ExactModel make_model(const std::string& name, int s_power) {
    if (name == "bracket") return bracket_model();
    if (name == "swapfg") return swap_fg_model();
    if (name == "product") return product_model(s_power);
    if (name == "virtual") return virtual_model();
    fail_parse("unknown model '" + name + "' (expected bracket|swapfg|product|virtual)");
}

}  // namespace knotamp

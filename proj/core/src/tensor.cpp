#include "knotamp/tensor.hpp"

namespace knotamp {

template class Tensor<LaurentPoly>;
template class Tensor<ComplexNum>;

namespace {

template <class S>
S det_rec(const Tensor<S>& x, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t m = cols.size();
    if (m == 1) return x.at(row, cols[0]);
    S acc = scalar_ops<S>::zero();
    for (std::size_t k = 0; k < m; ++k) {
        const S& pivot = x.at(row, cols[k]);
        if (scalar_ops<S>::is_zero(pivot)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(m - 1);
        for (std::size_t j = 0; j < m; ++j)
            if (j != k) rest.push_back(cols[j]);
        S minor = det_rec(x, rest, row + 1);
        S term = pivot * minor;
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

template <class S>
S mat_det(const Tensor<S>& x) {
    if (!x.square()) fail_pre("mat_det: square matrix required");
    std::vector<std::size_t> cols(x.rows());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return det_rec(x, cols, 0);
}

template LaurentPoly mat_det(const ExactTensor&);
template ComplexNum mat_det(const NumericTensor&);

namespace {

// adjugate via cofactors; exact path divides by a unit determinant
ExactTensor exact_inverse(const ExactTensor& x) {
    LaurentPoly det = mat_det(x);
    auto det_inv = det.inverse();
    if (!det_inv) fail_pre("mat_inverse: exact determinant is not a unit of Z[i][A,A^-1]");
    const std::size_t n = x.rows();
    ExactTensor inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            // cofactor C_{c,r} (transposed)
            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < n; ++j)
                if (j != r) cols.push_back(j);
            ExactTensor minor(n - 1, n - 1);
            std::size_t mi = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c) continue;
                for (std::size_t j = 0; j < cols.size(); ++j) minor.at(mi, j) = x.at(i, cols[j]);
                ++mi;
            }
            LaurentPoly cof = (n == 1) ? LaurentPoly::one() : mat_det(minor);
            if ((r + c) % 2 == 1) cof = -cof;
            inv.at(r, c) = cof * (*det_inv);
        }
    return inv;
}

NumericTensor numeric_inverse(const NumericTensor& x) {
    const std::size_t n = x.rows();
    NumericTensor a = x;
    NumericTensor inv = NumericTensor::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) < 1e-13) fail_pre("mat_inverse: singular matrix");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        ComplexNum d = a.at(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) /= d;
            inv.at(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            ComplexNum f = a.at(r, col);
            if (f == ComplexNum{0.0, 0.0}) continue;
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) -= f * a.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

}  // namespace

template <>
ExactTensor mat_inverse(const ExactTensor& x) {
    if (!x.square()) fail_pre("mat_inverse: square matrix required");
    return exact_inverse(x);
}

template <>
NumericTensor mat_inverse(const NumericTensor& x) {
    if (!x.square()) fail_pre("mat_inverse: square matrix required");
    return numeric_inverse(x);
}

NumericTensor dagger(const NumericTensor& x) {
    NumericTensor t(x.cols(), x.rows());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c) t.at(c, r) = std::conj(x.at(r, c));
    return t;
}

double unitarity_defect(const NumericTensor& x) {
    if (!x.square()) fail_pre("is_unitary: square matrix required");
    NumericTensor p = mat_mul(dagger(x), x);
    return p.max_diff(NumericTensor::identity(x.rows()));
}

bool is_unitary(const NumericTensor& x, double tol) { return unitarity_defect(x) <= tol; }

NumericTensor tensor_eval(const ExactTensor& t, ComplexNum a) {
    NumericTensor r(t.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) r.at(i, j) = t.at(i, j).eval(a);
    return r;
}

}  // namespace knotamp

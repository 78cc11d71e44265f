#pragma once

#include <cstddef>
#include <vector>

#include "knotamp/error.hpp"
#include "knotamp/scalar.hpp"

namespace knotamp {

// Dense matrix over an abstract scalar, row-major.
//
// Index convention used by every module: a crossing tensor on V (x) V is the
// matrix with row (a*n + b) and column (c*n + d), written R^{ab}_{cd}.
// Diagram time flows top to bottom and the top indices (a, b) are the domain,
// so composing event tensors in time order is ordinary row-by-column
// multiplication: (first . second)^{ab}_{ef} = sum_{cd} first^{ab}_{cd} second^{cd}_{ef}.
template <class S>
class Tensor {
public:
    Tensor() = default;
    Tensor(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, scalar_ops<S>::zero()) {}

    static Tensor identity(std::size_t n) {
        Tensor t(n, n);
        for (std::size_t i = 0; i < n; ++i) t.at(i, i) = scalar_ops<S>::one();
        return t;
    }

    // swap on V (x) V: S e_{ab} = e_{ba}
    static Tensor swap_gate(std::size_t n) {
        Tensor t(n * n, n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) t.at(a * n + b, b * n + a) = scalar_ops<S>::one();
        return t;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_ && rows_ > 0; }

    S& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const S& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<S>& entries() const { return entries_; }
    std::vector<S>& entries() { return entries_; }

    Tensor transpose() const {
        Tensor t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Tensor operator*(const S& s, const Tensor& x) {
        Tensor t = x;
        for (auto& e : t.entries_) e = s * e;
        return t;
    }
    friend Tensor operator+(const Tensor& x, const Tensor& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) fail_pre("tensor add: shape mismatch");
        Tensor t = x;
        for (std::size_t i = 0; i < t.entries_.size(); ++i)
            t.entries_[i] = t.entries_[i] + y.entries_[i];
        return t;
    }
    friend Tensor operator-(const Tensor& x, const Tensor& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) fail_pre("tensor sub: shape mismatch");
        Tensor t = x;
        for (std::size_t i = 0; i < t.entries_.size(); ++i)
            t.entries_[i] = t.entries_[i] - y.entries_[i];
        return t;
    }

    bool equal(const Tensor& other, double tol = 0.0) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) return false;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!scalar_ops<S>::equal(entries_[i], other.entries_[i], tol)) return false;
        return true;
    }

    double max_diff(const Tensor& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_) fail_pre("max_diff: shape mismatch");
        double m = 0.0;
        for (std::size_t i = 0; i < entries_.size(); ++i)
            m = std::max(m, scalar_ops<S>::abs_diff(entries_[i], other.entries_[i]));
        return m;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> entries_;
};

using ExactTensor = Tensor<LaurentPoly>;
using NumericTensor = Tensor<ComplexNum>;

template <class S>
Tensor<S> mat_mul(const Tensor<S>& x, const Tensor<S>& y) {
    if (x.cols() != y.rows()) fail_pre("mat_mul: shape mismatch");
    Tensor<S> t(x.rows(), y.cols());
    for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const S& xv = x.at(r, k);
            if (scalar_ops<S>::is_zero(xv)) continue;
            for (std::size_t c = 0; c < y.cols(); ++c)
                t.at(r, c) = t.at(r, c) + xv * y.at(k, c);
        }
    return t;
}

// block (i, j) of the result equals x[i,j] * y
template <class S>
Tensor<S> kron(const Tensor<S>& x, const Tensor<S>& y) {
    if (!x.square() || !y.square()) fail_pre("kron: square matrices required");
    const std::size_t n = x.rows(), m = y.rows();
    Tensor<S> t(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    t.at(i * m + k, j * m + l) = x.at(i, j) * y.at(k, l);
    return t;
}

template <class S>
S mat_trace(const Tensor<S>& x) {
    if (!x.square()) fail_pre("mat_trace: square matrix required");
    S acc = scalar_ops<S>::zero();
    for (std::size_t i = 0; i < x.rows(); ++i) acc = acc + x.at(i, i);
    return acc;
}

template <class S>
S mat_det2(const Tensor<S>& x) {
    if (x.rows() != 2 || x.cols() != 2) fail_pre("mat_det2: 2x2 matrix required");
    return x.at(0, 0) * x.at(1, 1) - x.at(0, 1) * x.at(1, 0);
}

// determinant by cofactor expansion; sizes here stay <= 9
template <class S>
S mat_det(const Tensor<S>& x);

// exact: determinant must be a unit of the ring; numeric: Gauss-Jordan
template <class S>
Tensor<S> mat_inverse(const Tensor<S>& x);

// (Tr_2 x)[a,c] = sum_b x[(a,b),(c,b)] for x acting on V (x) V with dim(V) = n
template <class S>
Tensor<S> partial_trace_second(const Tensor<S>& x, std::size_t n) {
    if (!x.square() || x.rows() != n * n) fail_pre("partial_trace_second: shape not n^2");
    Tensor<S> t(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            S acc = scalar_ops<S>::zero();
            for (std::size_t b = 0; b < n; ++b) acc = acc + x.at(a * n + b, c * n + b);
            t.at(a, c) = acc;
        }
    return t;
}

// max-entry |x^dagger x - I| <= tol
bool is_unitary(const NumericTensor& x, double tol);
double unitarity_defect(const NumericTensor& x);

NumericTensor dagger(const NumericTensor& x);

// substitute A = a into every entry
NumericTensor tensor_eval(const ExactTensor& t, ComplexNum a);

extern template class Tensor<LaurentPoly>;
extern template class Tensor<ComplexNum>;

}  // namespace knotamp

#pragma once

#include <Eigen/Dense>
#include <complex>

namespace pqm {

using Complex = std::complex<double>;
using MatrixC = Eigen::MatrixXcd;
using VectorC = Eigen::VectorXcd;
using VectorR = Eigen::VectorXd;

inline constexpr Complex kImag{0.0, 1.0};

// Kronecker product with the left factor slowest: (A ⊗ B)(i*p+k, j*q+l) = A(i,j) B(k,l).
template <typename DerivedA, typename DerivedB>
auto kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
    using Scalar = typename Eigen::ScalarBinaryOpTraits<typename DerivedA::Scalar,
                                                        typename DerivedB::Scalar>::ReturnType;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

inline double hermiticity_defect(const MatrixC& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const MatrixC& m, double tol = 1e-12) {
    return m.rows() == m.cols() && hermiticity_defect(m) <= tol;
}

// Tr(A B) without forming the product.
inline Complex trace_product(const MatrixC& a, const MatrixC& b) {
    return (a.array() * b.transpose().array()).sum();
}

// Column-major matrix view of a flat state vector (the vec(ρ) convention used
// by the superoperator construction: vec(A X B) = (Bᵀ ⊗ A) vec(X)).
inline Eigen::Map<const MatrixC> as_matrix(const VectorC& v, Eigen::Index n) {
    return {v.data(), n, n};
}

inline Eigen::Map<MatrixC> as_matrix(VectorC& v, Eigen::Index n) {
    return {v.data(), n, n};
}

inline VectorC vectorize(const MatrixC& m) {
    return Eigen::Map<const VectorC>(m.data(), m.size());
}

// Trace distance (1/2)·Σ|λ_k(A − B)| for Hermitian A, B.
double trace_distance(const MatrixC& a, const MatrixC& b);

// Scaling-and-squaring matrix exponential.
MatrixC matrix_exp(const MatrixC& m);

}  // namespace pqm

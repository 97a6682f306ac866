#include "qd/qcore.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace qd {

namespace {

void require_dim(int dim) {
    if (dim != 2 && dim != 4)
        throw DimensionError("matrix dimension must be 2 or 4, got " + std::to_string(dim));
}

} // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {
    require_dim(dim);
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            out(i, j) = std::conj((*this)(j, i));
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i; j < dim_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw DimensionError("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (size_t k = 0; k < a_.size(); ++k) m = std::max(m, std::abs(a_[k] - other.a_[k]));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionError("operator+=: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    if (dim_ != rhs.dim_) throw DimensionError("operator-=: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("operator*: dimension mismatch");
    const int n = a.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

const ComplexMatrix& pauli(int i) {
    static const auto make = [](int which) {
        ComplexMatrix m(2);
        switch (which) {
        case 1:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case 2:
            m(0, 1) = Complex(0.0, -1.0);
            m(1, 0) = Complex(0.0, 1.0);
            break;
        case 3:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        }
        return m;
    };
    static const ComplexMatrix sx = make(1), sy = make(2), sz = make(3);
    switch (i) {
    case 1: return sx;
    case 2: return sy;
    case 3: return sz;
    default: throw DimensionError("pauli index must be 1, 2 or 3");
    }
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2)
        throw DimensionError("tensor_product: both factors must be 2x2");
    ComplexMatrix out(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep) {
    if (m.dim() != 4) throw DimensionError("partial_trace: input must be 4x4");
    ComplexMatrix out(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                if (keep == Subsystem::A)
                    out(i, j) += m(2 * i + k, 2 * j + k);
                else
                    out(i, j) += m(2 * k + i, 2 * k + j);
            }
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_hermitian(1e-12)) throw ValidationError("density matrix is not Hermitian");
    if (std::abs(m_.trace() - Complex(1.0)) > 1e-12)
        throw ValidationError("density matrix trace differs from 1");
    const auto lams = hermitian_eigenvalues(m_);
    if (lams.back() < -1e-12)
        throw ValidationError("density matrix has eigenvalue " + std::to_string(lams.back()) +
                              " below -1e-12");
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    return DensityMatrix(partial_trace(rho.mat(), keep));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-12)) throw ValidationError("hermitian_eigenvalues: input is not Hermitian");
    const int n = m.dim();
    if (n == 2) {
        // closed form for a 2x2 Hermitian matrix
        const double a = m(0, 0).real();
        const double d = m(1, 1).real();
        const double r = std::hypot((a - d) / 2.0, std::abs(m(0, 1)));
        const double mean = (a + d) / 2.0;
        return {mean + r, mean - r};
    }
    Eigen::Matrix4cd em;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) em(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(em, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw Error("hermitian_eigenvalues: eigensolver failed to converge");
    std::vector<double> lams(solver.eigenvalues().data(), solver.eigenvalues().data() + 4);
    std::sort(lams.begin(), lams.end(), std::greater<>());
    return lams;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lam : hermitian_eigenvalues(rho.mat())) {
        if (lam < 0.0) lam = 0.0; // validated to be >= -1e-12 already
        if (lam > 0.0) s -= lam * std::log2(lam);
    }
    return s;
}

} // namespace qd

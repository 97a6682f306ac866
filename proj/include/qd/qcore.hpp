#pragma once

#include <complex>
#include <vector>

#include "qd/errors.hpp"

namespace qd {

using Complex = std::complex<double>;

/// Dense row-major complex matrix of dimension 2 or 4.
class ComplexMatrix {
public:
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    Complex& operator()(int i, int j) { return a_[i * dim_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[i * dim_ + j]; }

    ComplexMatrix adjoint() const;
    Complex trace() const;
    bool is_hermitian(double tol = 1e-12) const;
    double max_abs_diff(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

private:
    int dim_;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);

/// Pauli operator sigma_i, i in {1, 2, 3}.
const ComplexMatrix& pauli(int i);

enum class Subsystem { A, B };

/// Kronecker product of two 2x2 matrices; block (i,j) = a(i,j) * b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Partial trace of a 4x4 matrix over the discarded qubit.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem keep);

/// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-12.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m);

    const ComplexMatrix& mat() const { return m_; }
    int dim() const { return m_.dim(); }

private:
    ComplexMatrix m_;
};

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// Eigenvalues of a Hermitian matrix, descending, summing to the trace.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// -sum lambda log2 lambda, with 0 log2 0 = 0. Result in bits.
double von_neumann_entropy(const DensityMatrix& rho);

} // namespace qd

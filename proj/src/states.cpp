#include "qd/states.hpp"

#include <cmath>

namespace qd {

std::array<double, 4> bell_eigenvalues(const BellDiagonalState& s) {
    return {(1.0 - s.c1 - s.c2 - s.c3) / 4.0, (1.0 - s.c1 + s.c2 + s.c3) / 4.0,
            (1.0 + s.c1 - s.c2 + s.c3) / 4.0, (1.0 + s.c1 + s.c2 - s.c3) / 4.0};
}

bool validate(double c1, double c2, double c3) {
    if (std::abs(c1) > 1.0 || std::abs(c2) > 1.0 || std::abs(c3) > 1.0) return false;
    for (double lam : bell_eigenvalues({c1, c2, c3}))
        if (lam < -1e-12) return false;
    return true;
}

DensityMatrix to_density_matrix(const BellDiagonalState& s) {
    if (!validate(s.c1, s.c2, s.c3))
        throw ValidationError("invalid Bell-diagonal state (c1, c2, c3)");
    ComplexMatrix m = ComplexMatrix::identity(4);
    const double c[3] = {s.c1, s.c2, s.c3};
    for (int i = 1; i <= 3; ++i)
        m += Complex(c[i - 1]) * tensor_product(pauli(i), pauli(i));
    m *= 0.25;
    return DensityMatrix(std::move(m));
}

BellDiagonalState from_density_matrix(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw DimensionError("from_density_matrix: input must be 4x4");
    const ComplexMatrix& m = rho.mat();

    auto overlap = [&m](const ComplexMatrix& op) {
        // Tr[m op] for Hermitian op
        Complex t = 0.0;
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) t += m(i, k) * op(k, i);
        return t;
    };

    double c[3];
    for (int i = 1; i <= 3; ++i) c[i - 1] = overlap(tensor_product(pauli(i), pauli(i))).real();

    // any component outside the {I, sigma_i (x) sigma_i} pattern disqualifies
    const ComplexMatrix id2 = ComplexMatrix::identity(2);
    for (int i = 1; i <= 3; ++i) {
        if (std::abs(overlap(tensor_product(pauli(i), id2))) > 1e-10 ||
            std::abs(overlap(tensor_product(id2, pauli(i)))) > 1e-10)
            throw NotBellDiagonalError("state has a local Bloch component above 1e-10");
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            if (std::abs(overlap(tensor_product(pauli(i), pauli(j)))) > 1e-10)
                throw NotBellDiagonalError("state has a mixed sigma_i (x) sigma_j component above 1e-10");
        }
    }
    return {c[0], c[1], c[2]};
}

} // namespace qd

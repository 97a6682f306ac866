#pragma once

#include <array>
#include <random>

#include "qd/qcore.hpp"

namespace qd {

/// Two-qubit state 1/4 (I + sum_i c_i sigma_i (x) sigma_i), maximally mixed marginals.
struct BellDiagonalState {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;
};

/// Spectrum of the corresponding density matrix:
/// {(1-c1-c2-c3)/4, (1-c1+c2+c3)/4, (1+c1-c2+c3)/4, (1+c1+c2-c3)/4}.
std::array<double, 4> bell_eigenvalues(const BellDiagonalState& s);

/// True iff |c_i| <= 1 and all four eigenvalues >= -1e-12.
bool validate(double c1, double c2, double c3);

DensityMatrix to_density_matrix(const BellDiagonalState& s);

/// Inverse via c_i = Tr[rho (sigma_i (x) sigma_i)]. Rejects matrices with
/// components off the Bell-diagonal pattern above 1e-10.
BellDiagonalState from_density_matrix(const DensityMatrix& rho);

/// Uniform on [-1,1]^3 with rejection against validate.
template <class Rng>
BellDiagonalState random_valid_state(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const double c1 = u(rng), c2 = u(rng), c3 = u(rng);
        if (validate(c1, c2, c3)) return {c1, c2, c3};
    }
}

} // namespace qd

#include "qd/measurements.hpp"

#include <cmath>

namespace qd {

std::array<double, 3> BlochDirection::n() const {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const BlochDirection& d) {
    const auto n = d.n();
    ComplexMatrix ndot(2);
    for (int i = 1; i <= 3; ++i) {
        ComplexMatrix s = pauli(i);
        s *= n[i - 1];
        ndot += s;
    }
    ComplexMatrix pi0 = ComplexMatrix::identity(2);
    ComplexMatrix pi1 = ComplexMatrix::identity(2);
    pi0 += ndot;
    pi1 -= ndot;
    pi0 *= 0.5;
    pi1 *= 0.5;
    return {std::move(pi0), std::move(pi1)};
}

std::pair<ComplexMatrix, ComplexMatrix> weak_operators(const WeakMeasurementPair& p) {
    if (p.x < 0.0) throw ValidationError("weak_operators: strength must be >= 0");
    const double th = std::tanh(p.x);
    auto [pi0, pi1] = projectors(p.direction);
    const double am = std::sqrt((1.0 - th) / 2.0);
    const double ap = std::sqrt((1.0 + th) / 2.0);
    ComplexMatrix plus(2), minus(2);
    {
        ComplexMatrix t0 = pi0, t1 = pi1;
        t0 *= am;
        t1 *= ap;
        plus = t0 + t1;
    }
    {
        ComplexMatrix t0 = pi0, t1 = pi1;
        t0 *= ap;
        t1 *= am;
        minus = t0 + t1;
    }
    return {std::move(plus), std::move(minus)};
}

Conditioned conditioned_state_prob(const DensityMatrix& rho, const ComplexMatrix& m) {
    if (rho.dim() != 4 || m.dim() != 2)
        throw DimensionError("conditioned_state_prob: expects 4x4 state and 2x2 operator");
    const ComplexMatrix big = tensor_product(ComplexMatrix::identity(2), m);
    const ComplexMatrix sandwiched = big * rho.mat() * big.adjoint();
    const double prob = sandwiched.trace().real();
    if (prob < 1e-14)
        throw ZeroProbabilityError("measurement outcome has probability below 1e-14");
    ComplexMatrix reduced = partial_trace(sandwiched, Subsystem::A);
    reduced *= 1.0 / prob;
    return {DensityMatrix(std::move(reduced)), prob};
}

} // namespace qd

#pragma once

#include <array>
#include <utility>

#include "qd/qcore.hpp"

namespace qd {

/// Unit Bloch vector n = (sin t cos p, sin t sin p, cos t), theta in [0, pi].
struct BlochDirection {
    double theta = 0.0;
    double phi = 0.0;

    std::array<double, 3> n() const;
};

/// Weak measurement of strength x >= 0 along a Bloch direction.
struct WeakMeasurementPair {
    BlochDirection direction;
    double x = 0.0;
};

/// Orthogonal projector pair (Pi0, Pi1) = ((I + n.sigma)/2, (I - n.sigma)/2).
std::pair<ComplexMatrix, ComplexMatrix> projectors(const BlochDirection& d);

/// P(+-x) = sqrt((1 -+ tanh x)/2) Pi0 + sqrt((1 +- tanh x)/2) Pi1.
/// Completeness: P(+x)^2 + P(-x)^2 = I. Strong limit: P(+x) -> Pi1, P(-x) -> Pi0.
std::pair<ComplexMatrix, ComplexMatrix> weak_operators(const WeakMeasurementPair& p);

struct Conditioned {
    DensityMatrix state; // reduced state of A after the outcome
    double prob;
};

/// Applies (I_A (x) m) on qubit B. prob = Tr[(I (x) m) rho (I (x) m)^dag];
/// state = Tr_B[...] / prob. Throws ZeroProbabilityError when prob < 1e-14.
Conditioned conditioned_state_prob(const DensityMatrix& rho, const ComplexMatrix& m);

} // namespace qd

#pragma once

#include <optional>

#include "qd/measurements.hpp"
#include "qd/qcore.hpp"
#include "qd/states.hpp"

namespace qd {

enum class Method { Numeric, ClosedForm };

struct CorrelationResult {
    double value = 0.0; // bits
    std::optional<BlochDirection> argmin; // absent for closed-form paths
    Method method = Method::ClosedForm;
};

/// I = S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const DensityMatrix& rho);
double mutual_information_bell(const BellDiagonalState& s);

/// C = S(rho_A) - min over projective bases on B of sum_k p_k S(rho_{A|k}).
CorrelationResult classical_correlation_numeric(const DensityMatrix& rho);

/// Luo closed form for Bell-diagonal states: C = f(c) with c = max |c_i| and
/// f(u) = ((1-u)/2) log2(1-u) + ((1+u)/2) log2(1+u).
CorrelationResult classical_bell_closed(const BellDiagonalState& s);

/// D = S(rho_B) - S(rho_AB) + min sum_k p_k S(rho_{A|k}).
CorrelationResult discord_numeric(const DensityMatrix& rho);
CorrelationResult discord_bell_closed(const BellDiagonalState& s);

/// D_w = S(rho_B) - S(rho_AB) + min over bases of the weak conditional entropy
/// p(+x) S(rho_{A|+}) + p(-x) S(rho_{A|-}) at strength x.
CorrelationResult sqd_numeric(const DensityMatrix& rho, double x);

/// Closed form for Bell-diagonal states:
///   -((1 - u)/2) log2(1 - u) - ((1 + u)/2) log2(1 + u)
///   + (1/4) sum over the four sign patterns of (1 +- c1 +- c2 +- c3) log2(...)
/// with u = c tanh(x), c = max |c_i|.
CorrelationResult sqd_bell_closed(const BellDiagonalState& s, double x);

} // namespace qd

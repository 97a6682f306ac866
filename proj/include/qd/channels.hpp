#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qd/qcore.hpp"
#include "qd/states.hpp"

namespace qd {

enum class ChannelKind { PhaseFlip, BitFlip, BitPhaseFlip };

/// CLI tokens: "phase", "bit", "bitphase" (lowercase, exact).
std::optional<ChannelKind> channel_kind_from_token(std::string_view token);
std::string_view channel_kind_token(ChannelKind kind);

/// Local non-dissipative Pauli channel with p(t) = 1 - exp(-gamma t).
struct PauliChannel {
    ChannelKind kind = ChannelKind::PhaseFlip;
    double gamma = 1.0; // dephasing rate, >= 0
};

/// Single-qubit Kraus operators; sum_k E_k^dag E_k = I within 1e-12.
struct KrausSet {
    std::vector<ComplexMatrix> ops;
};

/// {sqrt(1 - p/2) I, sqrt(p/2) sigma} with sigma picked by the channel kind.
KrausSet kraus_operators(const PauliChannel& ch, double t);

/// rho(t) = sum_{i,j} (E_i (x) E_j) rho (E_i (x) E_j)^dag, same channel on both qubits.
DensityMatrix kraus_apply(const DensityMatrix& rho, const PauliChannel& ch, double t);

/// Analytic flow of the correlation triple: the channel's own Pauli component is
/// preserved, the other two are damped by exp(-2 gamma t).
BellDiagonalState evolve_c(const BellDiagonalState& s, const PauliChannel& ch, double t);

/// Index (1..3) of the sigma_i (x) sigma_i component left invariant by the channel.
int preserved_component(ChannelKind kind);

} // namespace qd

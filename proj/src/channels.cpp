#include "qd/channels.hpp"

#include <cmath>

namespace qd {

std::optional<ChannelKind> channel_kind_from_token(std::string_view token) {
    if (token == "phase") return ChannelKind::PhaseFlip;
    if (token == "bit") return ChannelKind::BitFlip;
    if (token == "bitphase") return ChannelKind::BitPhaseFlip;
    return std::nullopt;
}

std::string_view channel_kind_token(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::PhaseFlip: return "phase";
    case ChannelKind::BitFlip: return "bit";
    case ChannelKind::BitPhaseFlip: return "bitphase";
    }
    return "phase";
}

int preserved_component(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::PhaseFlip: return 3;
    case ChannelKind::BitFlip: return 1;
    case ChannelKind::BitPhaseFlip: return 2;
    }
    return 3;
}

KrausSet kraus_operators(const PauliChannel& ch, double t) {
    if (t < 0.0) throw ValidationError("kraus_operators: negative time");
    if (ch.gamma < 0.0) throw ValidationError("kraus_operators: negative rate");
    const double p = 1.0 - std::exp(-ch.gamma * t);
    ComplexMatrix e1 = ComplexMatrix::identity(2);
    e1 *= std::sqrt(1.0 - p / 2.0);
    ComplexMatrix e2 = pauli(preserved_component(ch.kind));
    e2 *= std::sqrt(p / 2.0);
    return KrausSet{{std::move(e1), std::move(e2)}};
}

DensityMatrix kraus_apply(const DensityMatrix& rho, const PauliChannel& ch, double t) {
    if (rho.dim() != 4) throw DimensionError("kraus_apply: input must be 4x4");
    const KrausSet ks = kraus_operators(ch, t);
    ComplexMatrix out(4);
    for (const auto& ei : ks.ops)
        for (const auto& ej : ks.ops) {
            const ComplexMatrix k = tensor_product(ei, ej);
            out += k * rho.mat() * k.adjoint();
        }
    return DensityMatrix(std::move(out));
}

BellDiagonalState evolve_c(const BellDiagonalState& s, const PauliChannel& ch, double t) {
    if (t < 0.0) throw ValidationError("evolve_c: negative time");
    const double damp = std::exp(-2.0 * ch.gamma * t);
    double c[3] = {s.c1 * damp, s.c2 * damp, s.c3 * damp};
    const double orig[3] = {s.c1, s.c2, s.c3};
    const int p = preserved_component(ch.kind) - 1;
    c[p] = orig[p];
    return {c[0], c[1], c[2]};
}

} // namespace qd

#include "qd/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>

namespace qd {

namespace {

constexpr int kGridTheta = 64;
constexpr int kGridPhi = 128;
constexpr int kRefineStarts = 3;
constexpr double kObjectiveTol = 1e-9;
constexpr double kStopTol = 1e-10;

double xlog2x(double v) {
    return v > 0.0 ? v * std::log2(v) : 0.0;
}

/// f(u) = ((1-u)/2) log2(1-u) + ((1+u)/2) log2(1+u)
double luo_f(double u) {
    return 0.5 * (xlog2x(1.0 - u) + xlog2x(1.0 + u));
}

double bell_joint_entropy(const BellDiagonalState& s) {
    double e = 0.0;
    for (double lam : bell_eigenvalues(s)) {
        if (lam < 0.0) lam = 0.0;
        e -= xlog2x(lam);
    }
    return e;
}

double max_abs_c(const BellDiagonalState& s) {
    return std::max({std::abs(s.c1), std::abs(s.c2), std::abs(s.c3)});
}

struct Minimum {
    double value;
    BlochDirection direction;
};

using Objective = std::function<double(double theta, double phi)>;

/// Nelder-Mead on a fixed 2D simplex; deterministic, standard coefficients.
Minimum nelder_mead(const Objective& f, BlochDirection start, double dtheta, double dphi) {
    struct Vertex {
        double t, p, v;
    };
    std::array<Vertex, 3> simplex = {
        Vertex{start.theta, start.phi, f(start.theta, start.phi)},
        Vertex{start.theta + dtheta, start.phi, f(start.theta + dtheta, start.phi)},
        Vertex{start.theta, start.phi + dphi, f(start.theta, start.phi + dphi)},
    };
    auto order = [&] {
        std::stable_sort(simplex.begin(), simplex.end(),
                         [](const Vertex& a, const Vertex& b) { return a.v < b.v; });
    };
    order();
    for (int iter = 0; iter < 500; ++iter) {
        if (simplex[2].v - simplex[0].v < kStopTol) break;
        const double ct = (simplex[0].t + simplex[1].t) / 2.0;
        const double cp = (simplex[0].p + simplex[1].p) / 2.0;
        auto eval = [&](double scale) {
            const double t = ct + scale * (ct - simplex[2].t);
            const double p = cp + scale * (cp - simplex[2].p);
            return Vertex{t, p, f(t, p)};
        };
        const Vertex refl = eval(1.0);
        if (refl.v < simplex[0].v) {
            const Vertex exp_ = eval(2.0);
            simplex[2] = exp_.v < refl.v ? exp_ : refl;
        } else if (refl.v < simplex[1].v) {
            simplex[2] = refl;
        } else {
            const Vertex contr = refl.v < simplex[2].v ? eval(0.5) : eval(-0.5);
            if (contr.v < std::min(refl.v, simplex[2].v)) {
                simplex[2] = contr;
            } else {
                // shrink toward the best vertex
                for (int k = 1; k < 3; ++k) {
                    simplex[k].t = simplex[0].t + 0.5 * (simplex[k].t - simplex[0].t);
                    simplex[k].p = simplex[0].p + 0.5 * (simplex[k].p - simplex[0].p);
                    simplex[k].v = f(simplex[k].t, simplex[k].p);
                }
            }
        }
        order();
    }
    if (simplex[2].v - simplex[0].v > kObjectiveTol)
        throw OptimizerError("basis minimization did not converge to 1e-9");
    return {simplex[0].v, {simplex[0].t, simplex[0].p}};
}

BlochDirection canonical(BlochDirection d) {
    const auto n = BlochDirection{d.theta, d.phi}.n();
    double theta = std::acos(std::clamp(n[2], -1.0, 1.0));
    double phi = std::atan2(n[1], n[0]);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    return {theta, phi};
}

/// Coarse grid scan followed by simplex refinement from the best 3 cells.
/// Deterministic: fixed grid, ties broken by lowest grid index.
Minimum minimize_over_directions(const Objective& f) {
    struct Cell {
        double v;
        int it, ip;
    };
    std::vector<Cell> best;
    const double dtheta = std::numbers::pi / (kGridTheta - 1);
    const double dphi = 2.0 * std::numbers::pi / kGridPhi;
    for (int it = 0; it < kGridTheta; ++it)
        for (int ip = 0; ip < kGridPhi; ++ip) {
            const double v = f(it * dtheta, ip * dphi);
            best.push_back({v, it, ip});
        }
    std::stable_sort(best.begin(), best.end(), [](const Cell& a, const Cell& b) { return a.v < b.v; });
    best.resize(kRefineStarts);

    Minimum result{best[0].v, {best[0].it * dtheta, best[0].ip * dphi}};
    for (const Cell& c : best) {
        const Minimum m =
            nelder_mead(f, {c.it * dtheta, c.ip * dphi}, dtheta / 2.0, dphi / 2.0);
        if (m.value < result.value) result = m;
    }
    result.direction = canonical(result.direction);
    return result;
}

/// Average conditional entropy of A under the projective basis along (theta, phi).
Objective projective_objective(const DensityMatrix& rho) {
    return [&rho](double theta, double phi) {
        const auto [pi0, pi1] = projectors({theta, phi});
        double acc = 0.0;
        for (const ComplexMatrix* proj : {&pi0, &pi1}) {
            try {
                const Conditioned c = conditioned_state_prob(rho, *proj);
                acc += c.prob * von_neumann_entropy(c.state);
            } catch (const ZeroProbabilityError&) {
                // zero-probability branch contributes nothing
            }
        }
        return acc;
    };
}

Objective weak_objective(const DensityMatrix& rho, double x) {
    return [&rho, x](double theta, double phi) {
        const auto [plus, minus] = weak_operators({{theta, phi}, x});
        double acc = 0.0;
        for (const ComplexMatrix* op : {&plus, &minus}) {
            try {
                const Conditioned c = conditioned_state_prob(rho, *op);
                acc += c.prob * von_neumann_entropy(c.state);
            } catch (const ZeroProbabilityError&) {
            }
        }
        return acc;
    };
}

} // namespace

double mutual_information(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw DimensionError("mutual_information: input must be 4x4");
    const DensityMatrix a = partial_trace(rho, Subsystem::A);
    const DensityMatrix b = partial_trace(rho, Subsystem::B);
    return von_neumann_entropy(a) + von_neumann_entropy(b) - von_neumann_entropy(rho);
}

double mutual_information_bell(const BellDiagonalState& s) {
    // both marginals are maximally mixed
    return 2.0 - bell_joint_entropy(s);
}

CorrelationResult classical_correlation_numeric(const DensityMatrix& rho) {
    const double sa = von_neumann_entropy(partial_trace(rho, Subsystem::A));
    const Minimum m = minimize_over_directions(projective_objective(rho));
    return {sa - m.value, m.direction, Method::Numeric};
}

CorrelationResult classical_bell_closed(const BellDiagonalState& s) {
    return {luo_f(max_abs_c(s)), std::nullopt, Method::ClosedForm};
}

CorrelationResult discord_numeric(const DensityMatrix& rho) {
    const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    const double sab = von_neumann_entropy(rho);
    const Minimum m = minimize_over_directions(projective_objective(rho));
    return {sb - sab + m.value, m.direction, Method::Numeric};
}

CorrelationResult discord_bell_closed(const BellDiagonalState& s) {
    const double value = mutual_information_bell(s) - luo_f(max_abs_c(s));
    return {value, std::nullopt, Method::ClosedForm};
}

CorrelationResult sqd_numeric(const DensityMatrix& rho, double x) {
    if (x < 0.0) throw ValidationError("sqd_numeric: strength must be >= 0");
    const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::B));
    const double sab = von_neumann_entropy(rho);
    const Minimum m = minimize_over_directions(weak_objective(rho, x));
    return {sb - sab + m.value, m.direction, Method::Numeric};
}

CorrelationResult sqd_bell_closed(const BellDiagonalState& s, double x) {
    if (x < 0.0) throw ValidationError("sqd_bell_closed: strength must be >= 0");
    const double u = max_abs_c(s) * std::tanh(x);
    double value = -0.5 * (xlog2x(1.0 - u) + xlog2x(1.0 + u));
    value += 0.25 * (xlog2x(1.0 - s.c1 - s.c2 - s.c3) + xlog2x(1.0 - s.c1 + s.c2 + s.c3) +
                     xlog2x(1.0 + s.c1 - s.c2 + s.c3) + xlog2x(1.0 + s.c1 + s.c2 - s.c3));
    return {value, std::nullopt, Method::ClosedForm};
}

} // namespace qd

#include "qd/dynamics.hpp"

#include <algorithm>
#include <cmath>

namespace qd {

namespace {

constexpr int kSlopeWindow = 3;

TrajectoryPoint evaluate_point(const SweepConfig& cfg, double gamma_t) {
    // the grid is in gamma*t units, so only the channel kind matters here
    const PauliChannel ch{cfg.channel.kind, 1.0};
    const BellDiagonalState s = evolve_c(cfg.initial, ch, gamma_t);

    TrajectoryPoint pt;
    pt.gamma_t = gamma_t;
    if (cfg.method == Method::ClosedForm) {
        pt.mutual_info = mutual_information_bell(s);
        pt.classical = classical_bell_closed(s).value;
        pt.discord = discord_bell_closed(s).value;
        for (double x : cfg.x_values) pt.sqd.push_back(sqd_bell_closed(s, x).value);
    } else {
        const DensityMatrix rho = to_density_matrix(s);
        pt.mutual_info = mutual_information(rho);
        pt.classical = classical_correlation_numeric(rho).value;
        pt.discord = discord_numeric(rho).value;
        for (double x : cfg.x_values) pt.sqd.push_back(sqd_numeric(rho, x).value);
    }
    return pt;
}

} // namespace

std::vector<TrajectoryPoint> sweep(const SweepConfig& cfg) {
    if (cfg.steps < 2) throw ValidationError("sweep: steps must be >= 2");
    if (cfg.t_max <= 0.0) throw ValidationError("sweep: t_max must be > 0");
    if (!validate(cfg.initial.c1, cfg.initial.c2, cfg.initial.c3))
        throw ValidationError("sweep: invalid Bell-diagonal state");
    std::vector<TrajectoryPoint> out;
    out.reserve(cfg.steps);
    const double h = cfg.t_max / (cfg.steps - 1);
    for (int i = 0; i < cfg.steps; ++i) out.push_back(evaluate_point(cfg, i * h));
    return out;
}

std::optional<double> transition_time_analytic(const BellDiagonalState& s,
                                               const PauliChannel& ch) {
    const double c[3] = {s.c1, s.c2, s.c3};
    const int p = preserved_component(ch.kind) - 1;
    const double preserved = std::abs(c[p]);
    double damped_max = 0.0;
    for (int i = 0; i < 3; ++i)
        if (i != p) damped_max = std::max(damped_max, std::abs(c[i]));
    if (preserved <= 0.0 || damped_max <= preserved) return std::nullopt;
    return 0.5 * std::log(damped_max / preserved);
}

std::vector<KinkReport> detect_kink(const std::vector<std::pair<double, double>>& series,
                                    double threshold, const std::string& name) {
    const int n = static_cast<int>(series.size());
    if (n < 5) throw ValidationError("detect_kink: need at least 5 grid points");
    const double h = series[1].first - series[0].first;

    // second-order one-sided differences over w-interval strides; the extra
    // stencil point cancels the curvature bias of each branch
    const int w = std::min(kSlopeWindow, std::max(1, (n - 2) / 4));
    const int lo = 2 * w;
    const int hi = n - 2 - 2 * w;
    auto slope_left = [&](int i) {
        // second-order one-sided difference; the extra stencil point cancels
        // the curvature bias of the branch
        return (3.0 * series[i].second - 4.0 * series[i - w].second +
                series[i - 2 * w].second) /
               (2.0 * w * h);
    };
    auto slope_right = [&](int i) {
        return (-3.0 * series[i].second + 4.0 * series[i + w].second -
                series[i + 2 * w].second) /
               (2.0 * w * h);
    };
    // a kink inside cell (i, i+1) leaves both stencils on pure branches when
    // the left slope is taken at i and the right slope at i+1
    std::vector<double> jump(n, 0.0);
    for (int i = lo; i <= hi; ++i) jump[i] = std::abs(slope_right(i + 1) - slope_left(i));

    // only interior local maxima qualify: the jump profile ramps monotonically
    // off any boundary slope singularity and must rise then fall at a kink
    std::vector<KinkReport> reports;
    for (int i = lo + 1; i < hi; ++i) {
        if (jump[i] > jump[i - 1] && jump[i] >= jump[i + 1])
            reports.push_back({name, series[i].first, jump[i], jump[i] > threshold});
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const KinkReport& a, const KinkReport& b) {
                         return a.slope_jump > b.slope_jump;
                     });
    if (reports.empty()) {
        // monotone jump profile: fall back to the global maximum
        int arg = lo;
        for (int i = lo; i <= hi; ++i)
            if (jump[i] > jump[arg]) arg = i;
        reports.push_back({name, series[arg].first, jump[arg], jump[arg] > threshold});
    }
    return reports;
}

} // namespace qd

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qd/channels.hpp"
#include "qd/correlations.hpp"

namespace qd {

struct SweepConfig {
    BellDiagonalState initial;
    PauliChannel channel;
    std::vector<double> x_values;
    double t_max = 2.0; // in gamma*t units
    int steps = 401;
    Method method = Method::ClosedForm;
};

struct TrajectoryPoint {
    double gamma_t = 0.0;
    double mutual_info = 0.0;
    double classical = 0.0;
    double discord = 0.0;
    std::vector<double> sqd; // aligned with SweepConfig::x_values
};

struct KinkReport {
    std::string series_name;
    double gamma_t_star = 0.0;
    double slope_jump = 0.0; // bits per unit gamma*t
    bool flagged = false;
};

/// Evaluates all measures on a uniform gamma*t grid including both endpoints.
std::vector<TrajectoryPoint> sweep(const SweepConfig& cfg);

/// gamma*t at which the largest damped |c_i| crosses the preserved one:
/// (1/2) ln(m0 / |c_p|). Absent when the preserved component is already
/// maximal or zero.
std::optional<double> transition_time_analytic(const BellDiagonalState& s,
                                               const PauliChannel& ch);

/// One-sided slopes over w = 3 grid intervals at each interior point; reports
/// local maxima of |right - left|, flagged when above threshold. Sorted by
/// jump, descending; always contains at least one entry.
std::vector<KinkReport> detect_kink(const std::vector<std::pair<double, double>>& series,
                                    double threshold, const std::string& name = "");

} // namespace qd

#include "frachh/error.hpp"
#include "frachh/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace frachh {

namespace {

constexpr std::size_t kMinMesh = 32;

} // namespace

std::vector<double> graded_mesh(Interval iv, std::size_t mesh_size) {
    validate_interval(iv);
    mesh_size = std::max(mesh_size, kMinMesh);
    mesh_size += mesh_size % 2;
    const std::size_t per_half = mesh_size / 2;

    const double m = iv.midpoint();
    const double half = m - iv.a;
    const double scale = std::max({std::fabs(iv.a), std::fabs(iv.b), iv.length()});
    const double min_width = 1e-12 * scale;

    // Geometric levels a + half * 2^-k, stopping before panels become
    // indistinguishable from round-off.
    std::size_t levels = 1;
    while (levels < per_half && half * std::ldexp(1.0, -static_cast<int>(levels)) > min_width) {
        ++levels;
    }

    std::vector<double> left;
    left.reserve(per_half + 1);
    left.push_back(iv.a);
    for (std::size_t k = levels - 1; k >= 1; --k) {
        left.push_back(iv.a + half * std::ldexp(1.0, -static_cast<int>(k)));
    }
    // Panels beyond the geometric capacity split the widest (central) panel.
    const double inner = left.back();
    const std::size_t central = per_half - (left.size() - 1);
    for (std::size_t j = 1; j < central; ++j) {
        left.push_back(inner + (m - inner) * static_cast<double>(j) / static_cast<double>(central));
    }
    left.push_back(m);

    std::vector<double> nodes = left;
    for (std::size_t i = left.size() - 1; i-- > 0;) {
        nodes.push_back(iv.reflect(left[i]));
    }
    nodes.back() = iv.b;
    return nodes;
}

CumulativeKernel::CumulativeKernel(RealFn g, Interval iv, double alpha, std::size_t mesh_size,
                                   double tol)
    : g_(std::move(g)), iv_(iv), alpha_(alpha) {
    validate_interval(iv);
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw DomainError("fractional order must be positive");
    }
    if (mesh_size < kMinMesh) {
        throw DomainError("cumulative kernel mesh needs at least 32 panels");
    }
    nodes_ = graded_mesh(iv, mesh_size);
    const std::size_t n = nodes_.size();
    const std::size_t panels = n - 1;
    panel_tol_ = tol / static_cast<double>(panels);

    upper_cum_.assign(n, 0.0);
    upper_cum_err_.assign(n, 0.0);
    lower_tail_.assign(n, 0.0);
    lower_tail_err_.assign(n, 0.0);

    for (std::size_t i = 0; i < panels; ++i) {
        const Interval panel{nodes_[i], nodes_[i + 1]};
        const QuadResult up = integrate_kernel_segment(g_, panel, iv.b, alpha, panel_tol_);
        upper_cum_[i + 1] = upper_cum_[i] + up.value;
        upper_cum_err_[i + 1] = upper_cum_err_[i] + up.abs_error_estimate;
        accurate_ = accurate_ && up.tolerance_met;
        build_evaluations_ += up.evaluations;
    }
    for (std::size_t i = panels; i-- > 0;) {
        const Interval panel{nodes_[i], nodes_[i + 1]};
        const QuadResult lo = integrate_kernel_segment(g_, panel, iv.a, alpha, panel_tol_);
        lower_tail_[i] = lower_tail_[i + 1] + lo.value;
        lower_tail_err_[i] = lower_tail_err_[i + 1] + lo.abs_error_estimate;
        accurate_ = accurate_ && lo.tolerance_met;
        build_evaluations_ += lo.evaluations;
    }

    node_values_.resize(n);
    node_errors_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        node_values_[i] = upper_cum_[i] - lower_tail_[i];
        node_errors_[i] = upper_cum_err_[i] + lower_tail_err_[i];
    }
}

double CumulativeKernel::max_node_error() const noexcept {
    return node_errors_.empty() ? 0.0 : *std::max_element(node_errors_.begin(), node_errors_.end());
}

KernelValue CumulativeKernel::evaluate(double t) const {
    if (!(t >= iv_.a && t <= iv_.b)) {
        throw DomainError("cumulative kernel evaluated outside its interval");
    }
    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
    i = i == 0 ? 0 : i - 1;
    if (nodes_[i] == t) {
        return KernelValue{node_values_[i], node_errors_[i], 0};
    }
    // t lies strictly inside panel [t_i, t_{i+1}].
    const QuadResult up = integrate_kernel_segment(g_, Interval{nodes_[i], t}, iv_.b, alpha_,
                                                   panel_tol_);
    const QuadResult lo = integrate_kernel_segment(g_, Interval{t, nodes_[i + 1]}, iv_.a, alpha_,
                                                   panel_tol_);
    KernelValue out;
    out.value = (upper_cum_[i] + up.value) - (lower_tail_[i + 1] + lo.value);
    out.abs_error_estimate = upper_cum_err_[i] + up.abs_error_estimate + lower_tail_err_[i + 1] +
                             lo.abs_error_estimate;
    out.evaluations = up.evaluations + lo.evaluations;
    return out;
}

CumulativeKernel cumulative_kernel(const RealFn& g, Interval iv, double alpha,
                                   std::size_t mesh_size, double tol) {
    return CumulativeKernel(g, iv, alpha, mesh_size, tol);
}

} // namespace frachh

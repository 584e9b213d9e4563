#include "sppc/param_curve.hpp"

#include <algorithm>
#include <cmath>

#include "sppc/errors.hpp"

namespace sppc {

ParamCurve::ParamCurve(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty()) throw ValidationError("ParamCurve: empty breakpoints");
    if (breakpoints_.size() != values_.size())
        throw ValidationError("ParamCurve: breakpoints/values size mismatch");
    if (breakpoints_.front() != 0.0) throw ValidationError("ParamCurve: first breakpoint must be 0");
    for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
        if (!(breakpoints_[i] > breakpoints_[i - 1]))
            throw ValidationError("ParamCurve: breakpoints not strictly increasing");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw ValidationError("ParamCurve: non-finite value");
    }
}

std::size_t ParamCurve::piece_index(double t) const {
    // Last piece whose start is <= t; t below 0 clamps to the first piece.
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    if (it == breakpoints_.begin()) return 0;
    return static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
}

double ParamCurve::operator()(double t) const {
    if (t < 0.0) throw ValidationError("ParamCurve: evaluation at negative time");
    return values_[piece_index(t)];
}

double ParamCurve::integral(double s, double t) const {
    if (s < 0.0 || t < s) throw ValidationError("ParamCurve: bad integration bounds");
    double sum = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        const double lo = std::max(s, breakpoints_[i]);
        const double hi = (i + 1 < breakpoints_.size()) ? std::min(t, breakpoints_[i + 1]) : t;
        if (hi > lo) sum += values_[i] * (hi - lo);
    }
    return sum;
}

bool ParamCurve::is_zero() const {
    for (double v : values_)
        if (v != 0.0) return false;
    return true;
}

ParamCurve ParamCurve::scaled(double factor) const {
    std::vector<double> v = values_;
    for (double& x : v) x *= factor;
    return ParamCurve(breakpoints_, std::move(v));
}

}  // namespace sppc

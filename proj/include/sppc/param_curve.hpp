#pragma once

#include <cstddef>
#include <vector>

namespace sppc {

/// Piecewise-constant deterministic coefficient curve on [0, horizon).
///
/// Breakpoints start at 0 and are strictly increasing; values[i] applies on
/// the right-open interval [breakpoints[i], breakpoints[i+1]), the last value
/// extending indefinitely. Definite integrals are exact sums of
/// value * overlap length, so no quadrature error enters anywhere a curve is
/// integrated.
class ParamCurve {
public:
    ParamCurve() : breakpoints_{0.0}, values_{0.0} {}
    /* implicit */ ParamCurve(double constant) : breakpoints_{0.0}, values_{constant} {}
    ParamCurve(std::vector<double> breakpoints, std::vector<double> values);

    double operator()(double t) const;
    double integral(double s, double t) const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    std::size_t pieces() const { return values_.size(); }
    bool is_constant() const { return values_.size() == 1; }
    bool is_zero() const;

    ParamCurve scaled(double factor) const;

    friend bool operator==(const ParamCurve& a, const ParamCurve& b) {
        return a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
    }

private:
    std::size_t piece_index(double t) const;

    std::vector<double> breakpoints_;
    std::vector<double> values_;
};

}  // namespace sppc

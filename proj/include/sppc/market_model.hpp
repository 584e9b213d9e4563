#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sppc/linalg.hpp"
#include "sppc/param_curve.hpp"

namespace sppc {

/// Probability measure a computation runs under. Physical keeps the observed
/// drifts; Optimal applies the beta adjustment to the performance drifts and
/// replaces each stock drift by rate minus dividend yield.
enum class Measure { Physical, Optimal };

struct StockSpec {
    std::string name;
    double initial_price = 0.0;
    ParamCurve dividend_yield;
    ParamCurve physical_drift;
    std::vector<ParamCurve> vol_row;  // d entries; columns beyond the stock block must be zero
};

struct PerfVarSpec {
    std::string name;
    double initial_level = 0.0;
    ParamCurve physical_drift;
    std::vector<ParamCurve> vol_row;  // d entries
};

/// Optional low-parameter alternative to the full multi-stock adjustment:
/// one excess-return curve for the optimal portfolio plus a single-regression
/// beta per performance variable.
struct OptimalPortfolio {
    ParamCurve excess_return;
    std::vector<double> betas;
};

/// The market: one money account, m stocks, n performance variables, all
/// geometric with piecewise-constant coefficients. Immutable once built.
class MarketModel {
public:
    MarketModel(double horizon, ParamCurve rate, std::vector<StockSpec> stocks,
                std::vector<PerfVarSpec> perf_vars,
                std::optional<OptimalPortfolio> optimal_portfolio = std::nullopt);

    double horizon() const { return horizon_; }
    std::size_t n_stocks() const { return stocks_.size(); }
    std::size_t n_perf() const { return perf_vars_.size(); }
    std::size_t n_brownian() const { return stocks_.size() + perf_vars_.size(); }
    std::size_t n_vars() const { return n_brownian(); }

    const ParamCurve& rate() const { return rate_; }
    const std::vector<StockSpec>& stocks() const { return stocks_; }
    const std::vector<PerfVarSpec>& perf_vars() const { return perf_vars_; }
    const std::optional<OptimalPortfolio>& optimal_portfolio() const { return optimal_portfolio_; }

    /// Union of every coefficient breakpoint, sorted, starting at 0.
    const std::vector<double>& coefficient_breakpoints() const { return breakpoints_; }

    Matrix sigma1(double t) const;         // m x m stock block
    Matrix t1(double t) const;             // n x m
    Matrix total_vol_matrix(double t) const;  // (m+n) x d, stocks first

    /// Instantaneous volatility (row 2-norm) of variable index v
    /// (stocks first, then performance variables).
    double row_norm(double t, std::size_t var) const;
    const ParamCurve& vol_entry(std::size_t var, std::size_t col) const;

    double initial_level(std::size_t var) const;
    double log_initial_level(std::size_t var) const;

private:
    void validate() const;

    double horizon_;
    ParamCurve rate_;
    std::vector<StockSpec> stocks_;
    std::vector<PerfVarSpec> perf_vars_;
    std::optional<OptimalPortfolio> optimal_portfolio_;
    std::vector<double> breakpoints_;
};

/// Builds explicit volatility rows from per-variable vol curves and a constant
/// correlation matrix (stocks first). The stock block is the symmetric square
/// root of the stock correlation block, so the rows land in the
/// stocks-then-residual column layout directly. Throws on a correlation
/// matrix that is not positive semidefinite.
MarketModel make_model_from_correlation(double horizon, ParamCurve rate,
                                        std::vector<StockSpec> stocks_basic,
                                        std::vector<PerfVarSpec> perf_basic,
                                        const Matrix& correlation,
                                        std::optional<OptimalPortfolio> optimal_portfolio = std::nullopt);

/// Multiple-regression betas of the performance shocks on the stock shocks:
/// the T1 Sigma1^{-1} matrix, n x m. Rows of zeros in T1 short-circuit to
/// zero betas without inverting.
Matrix multiple_regression_betas(const MarketModel& model, double t);

/// Performance drifts under the optimal measure via the multiple-regression
/// betas: c - B (b + d - r 1).
std::vector<double> q_drift_multi(const MarketModel& model, double t);

/// Stock drifts under the optimal measure: r - d per stock.
std::vector<double> q_stock_drift(const MarketModel& model, double t);

/// Performance drifts under the optimal measure via the optimal-portfolio
/// spec: c_j - beta_j * excess(t). Requires the spec to be present.
std::vector<double> q_drift_optimal(const MarketModel& model, double t);

/// Drift of every performance variable under the requested measure. Under
/// Optimal, uses the optimal-portfolio spec when present, otherwise the
/// multiple-regression adjustment.
std::vector<double> perf_drift(const MarketModel& model, Measure measure, double t);
std::vector<double> stock_drift(const MarketModel& model, Measure measure, double t);

/// Single-regression beta of a performance variable on an index:
/// correlation * vol_perf / vol_index.
double single_regression_beta(double correlation, double vol_perf, double vol_index);

}  // namespace sppc

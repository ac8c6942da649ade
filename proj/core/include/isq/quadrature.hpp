#ifndef ISQ_QUADRATURE_HPP
#define ISQ_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace isq {

/// Gauss-Legendre nodes / weights on [-1, 1], computed once per order and
/// cached. Nodes ascend.
const std::vector<double>& gauss_nodes(int order);
const std::vector<double>& gauss_weights(int order);

struct QuadratureResult {
    double value;
    double error; // accumulated panel-difference estimate (conservative)
    int panels;
};

struct QuadratureOptions {
    int panel_order = 15;
    int max_panels = 8192;
    int max_depth = 60;
};

/// Adaptive composite Gauss rule with bisection refinement. tol is an
/// absolute target for the whole interval; endpoint singularities are
/// handled by geometric panel grading down to a width floor. Throws
/// quadrature_error (carrying the best estimate) if the panel budget is
/// exhausted before the local tolerances are met.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double tol, const QuadratureOptions& opts = {});

} // namespace isq

#endif

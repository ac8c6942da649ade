#ifndef ISQ_ERRORS_HPP
#define ISQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isq {

/// A power series failed to converge within its term budget.
class series_error : public std::runtime_error {
public:
    series_error(const std::string& what, double last_term_magnitude)
        : std::runtime_error(what), last_term_(last_term_magnitude) {}
    double last_term_magnitude() const noexcept { return last_term_; }

private:
    double last_term_;
};

/// Argument lies on (or within tolerance of) a branch-cut ray.
class branch_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation requested too close to a pole of a meromorphic function.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Extension parameter sits on the open-interval boundary of the atom
/// window, where the measure classification is indeterminate.
class boundary_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive quadrature exhausted its panel budget. Carries the best
/// available estimate so callers can decide whether it is usable.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double best_value, double best_error)
        : std::runtime_error(what), value_(best_value), error_(best_error) {}
    double best_value() const noexcept { return value_; }
    double best_error() const noexcept { return error_; }

private:
    double value_;
    double error_;
};

} // namespace isq

#endif

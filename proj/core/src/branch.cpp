#include "isq/branch.hpp"
#include "isq/errors.hpp"

#include <cmath>
#include <numbers>

namespace isq {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double cut_tol = 1e-12; // angular tolerance for cut membership
} // namespace

double cut_angle(BranchCut cut) noexcept {
    return cut == BranchCut::lower_imaginary ? 1.5 * pi : pi;
}

cplx cut_log(cplx z, BranchCut cut) {
    if (z == cplx(0.0, 0.0))
        throw std::domain_error("cut_log: z = 0");
    double arg = std::arg(z); // (-pi, pi]
    if (cut == BranchCut::negative_real) {
        if (std::abs(arg - pi) < cut_tol || std::abs(arg + pi) < cut_tol)
            throw branch_error("cut_log: z on the negative real axis cut");
    } else {
        // reduce to (-pi/2, 3*pi/2)
        if (std::abs(arg + 0.5 * pi) < cut_tol)
            throw branch_error("cut_log: z on the negative imaginary axis cut");
        if (arg < -0.5 * pi)
            arg += 2.0 * pi;
    }
    return {std::log(std::abs(z)), arg};
}

cplx cut_power(cplx z, cplx rho, BranchCut cut) {
    return std::exp(rho * cut_log(z, cut));
}

} // namespace isq

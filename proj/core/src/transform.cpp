#include "isq/transform.hpp"
#include "isq/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace isq {

namespace {
constexpr double pi = std::numbers::pi;
} // namespace

void GridFunction::validate() const {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("GridFunction: requires 0 < a < b");
    if (nodes.size() != weights.size() || nodes.size() != values.size() || nodes.empty())
        throw std::invalid_argument("GridFunction: inconsistent array sizes");
    double sw = 0.0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (!(weights[i] > 0.0))
            throw std::invalid_argument("GridFunction: weights must be positive");
        if (nodes[i] < a || nodes[i] > b || (i > 0 && nodes[i] <= nodes[i - 1]))
            throw std::invalid_argument("GridFunction: nodes must ascend within [a, b]");
        sw += weights[i];
    }
    if (std::abs(sw - (b - a)) > 1e-12 * (b - a))
        throw std::invalid_argument("GridFunction: weights do not integrate constants");
}

double GridFunction::norm2() const {
    long double s = 0.0L;
    for (size_t i = 0; i < nodes.size(); ++i)
        s += static_cast<long double>(weights[i]) * values[i] * values[i];
    return static_cast<double>(s);
}

SmoothFunction make_bump(double a, double b) {
    if (!(b > a))
        throw std::invalid_argument("make_bump: requires b > a");
    // || ((r-a)(b-r))^3 ||_2 = (b-a)^{13/2} sqrt(B(7,7)), B(7,7) = (6!)^2/13!
    const double beta77 = 518400.0 / 6227020800.0;
    const double c = 1.0 / (std::pow(b - a, 6.5) * std::sqrt(beta77));
    SmoothFunction s;
    s.a = a;
    s.b = b;
    s.f = [=](double r) {
        if (r <= a || r >= b)
            return 0.0;
        const double t = (r - a) * (b - r);
        return c * t * t * t;
    };
    s.df = [=](double r) {
        if (r <= a || r >= b)
            return 0.0;
        const double t = (r - a) * (b - r);
        const double tp = (a + b) - 2.0 * r;
        return c * 3.0 * t * t * tp;
    };
    s.d2f = [=](double r) {
        if (r <= a || r >= b)
            return 0.0;
        const double t = (r - a) * (b - r);
        const double tp = (a + b) - 2.0 * r;
        return c * (6.0 * t * tp * tp - 6.0 * t * t);
    };
    return s;
}

GridFunction sample_grid(double a, double b, const std::function<double(double)>& f,
                         double e_max, int order, int min_panels) {
    if (!(a > 0.0) || !(b > a))
        throw std::invalid_argument("sample_grid: requires 0 < a < b");
    const double wavelength = 2.0 * pi / std::sqrt(std::max(e_max, 1.0));
    const double target = std::min((b - a) / min_panels, 0.5 * wavelength);
    const int n_panels = std::max(min_panels, static_cast<int>(std::ceil((b - a) / target)));
    const auto& xs = gauss_nodes(order);
    const auto& ws = gauss_weights(order);

    GridFunction g;
    g.a = a;
    g.b = b;
    const double h = (b - a) / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        const double lo = a + p * h;
        const double c = lo + 0.5 * h;
        for (int i = 0; i < order; ++i) {
            const double r = c + 0.5 * h * xs[i];
            g.nodes.push_back(r);
            g.weights.push_back(0.5 * h * ws[i]);
            g.values.push_back(f(r));
        }
    }
    return g;
}

GridFunction sample_grid(const SmoothFunction& s, double e_max, int order, int min_panels) {
    return sample_grid(s.a, s.b, s.f, e_max, order, min_panels);
}

EnergyGrid make_energy_grid(double e_max, double r_max, double e_min, int order,
                            int min_panels) {
    if (!(e_max > e_min) || e_min < 0.0)
        throw std::invalid_argument("make_energy_grid: requires 0 <= e_min < e_max");
    const double k_lo = std::sqrt(e_min), k_hi = std::sqrt(e_max);
    const double wavelength = 2.0 * pi / std::max(r_max, 1e-6);
    const double target = std::min((k_hi - k_lo) / min_panels, 0.5 * wavelength);
    const int n_panels =
        std::max(min_panels, static_cast<int>(std::ceil((k_hi - k_lo) / target)));
    const auto& xs = gauss_nodes(order);
    const auto& ws = gauss_weights(order);

    EnergyGrid eg;
    const double h = (k_hi - k_lo) / n_panels;
    for (int p = 0; p < n_panels; ++p) {
        const double lo = k_lo + p * h;
        const double c = lo + 0.5 * h;
        for (int i = 0; i < order; ++i) {
            const double k = c + 0.5 * h * xs[i];
            eg.nodes.push_back(k * k);
            eg.weights.push_back(2.0 * k * 0.5 * h * ws[i]); // dE = 2k dk
        }
    }
    return eg;
}

namespace {

template <typename Kernel>
SpectralFunction forward_impl(const GridFunction& psi, const EnergyGrid& eg,
                              Kernel&& kernel, std::optional<Atom> atom) {
    psi.validate();
    if (eg.nodes.size() != eg.weights.size() || eg.nodes.empty())
        throw std::invalid_argument("forward: inconsistent energy grid");
    for (double e : eg.nodes)
        if (!(e > 0.0))
            throw std::invalid_argument("forward: energy grid must be positive");
    SpectralFunction out;
    out.e_nodes = eg.nodes;
    out.e_weights = eg.weights;
    out.values.resize(eg.nodes.size());
    for (size_t j = 0; j < eg.nodes.size(); ++j) {
        const double e = eg.nodes[j];
        long double s = 0.0L;
        for (size_t i = 0; i < psi.nodes.size(); ++i)
            s += static_cast<long double>(psi.weights[i]) * psi.values[i] *
                 kernel(e, psi.nodes[i]);
        out.values[j] = static_cast<double>(s);
    }
    if (atom) {
        long double s = 0.0L;
        for (size_t i = 0; i < psi.nodes.size(); ++i)
            s += static_cast<long double>(psi.weights[i]) * psi.values[i] *
                 kernel(atom->energy, psi.nodes[i]);
        out.atom_coeff = static_cast<double>(s);
    }
    return out;
}

} // namespace

SpectralFunction forward(const ExtensionParams& p, const GridFunction& psi,
                         const EnergyGrid& eg) {
    const auto measure = build_measure(p);
    return forward_impl(
        psi, eg,
        [&p](double e, double r) { return eval_u_theta(p, cplx(e, 0.0), r).value.real(); },
        measure.atom);
}

SpectralFunction forward_u(double kappa, const GridFunction& psi, const EnergyGrid& eg) {
    return forward_impl(
        psi, eg,
        [kappa](double e, double r) { return eval_u(kappa, cplx(e, 0.0), r).value.real(); },
        std::nullopt);
}

std::vector<double> inverse(const ExtensionParams& p, const SpectralFunction& phi,
                            const std::vector<double>& r_grid) {
    const auto measure = build_measure(p);
    if (phi.atom_coeff.has_value() != measure.atom.has_value())
        throw std::invalid_argument("inverse: atom channel does not match the measure");
    std::vector<double> out(r_grid.size());
    for (size_t i = 0; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        long double s = 0.0L;
        for (size_t j = 0; j < phi.e_nodes.size(); ++j) {
            const double e = phi.e_nodes[j];
            s += static_cast<long double>(phi.e_weights[j]) * phi.values[j] *
                 measure.density(e) * eval_u_theta(p, cplx(e, 0.0), r).value.real();
        }
        if (measure.atom)
            s += static_cast<long double>(measure.atom->weight) * *phi.atom_coeff *
                 eval_u_theta(p, cplx(measure.atom->energy, 0.0), r).value.real();
        out[i] = static_cast<double>(s);
    }
    return out;
}

std::vector<double> apply_hamiltonian(double kappa, const SmoothFunction& psi,
                                      const std::vector<double>& nodes) {
    std::vector<double> out(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        out[i] = -psi.d2f(nodes[i]) + q_potential(kappa, nodes[i]) * psi.f(nodes[i]);
    return out;
}

ParsevalResult parseval_defect(const ExtensionParams& p, const GridFunction& psi,
                               double e_max, double tail_tol) {
    const auto measure = build_measure(p);
    const auto eg = make_energy_grid(e_max, psi.b);
    const auto phi = forward(p, psi, eg);

    long double total = 0.0L, shell_hi = 0.0L, shell_lo = 0.0L;
    for (size_t j = 0; j < phi.e_nodes.size(); ++j) {
        const double e = phi.e_nodes[j];
        const long double contrib = static_cast<long double>(phi.e_weights[j]) *
                                    phi.values[j] * phi.values[j] * measure.density(e);
        total += contrib;
        if (e > 0.5 * e_max)
            shell_hi += contrib;
        else if (e > 0.25 * e_max)
            shell_lo += contrib;
    }
    if (measure.atom)
        total += static_cast<long double>(measure.atom->weight) * *phi.atom_coeff *
                 *phi.atom_coeff;

    const double n2 = psi.norm2();
    ParsevalResult res;
    res.defect = std::abs(n2 - static_cast<double>(total)) / n2;
    // geometric extrapolation of the dyadic-shell decay
    if (shell_lo > 0.0L && shell_hi > 0.0L && shell_hi < shell_lo) {
        const long double ratio = shell_hi / shell_lo;
        res.tail_estimate = static_cast<double>(shell_hi * ratio / (1.0L - ratio)) / n2;
    } else {
        res.tail_estimate = static_cast<double>(shell_hi) / n2;
    }
    res.conclusive = res.tail_estimate <= tail_tol;
    return res;
}

double diag_defect(const ExtensionParams& p, const SmoothFunction& psi,
                   const std::vector<double>& e_points) {
    double e_scale = 1.0;
    for (double e : e_points)
        e_scale = std::max(e_scale, std::abs(e));
    const auto grid = sample_grid(psi, 1.5 * e_scale);
    const auto hpsi = apply_hamiltonian(p.kappa, psi, grid.nodes);

    double worst = 0.0;
    for (double e : e_points) {
        long double lhs = 0.0L, rhs = 0.0L;
        for (size_t i = 0; i < grid.nodes.size(); ++i) {
            const double u = eval_u_theta(p, cplx(e, 0.0), grid.nodes[i]).value.real();
            lhs += static_cast<long double>(grid.weights[i]) * hpsi[i] * u;
            rhs += static_cast<long double>(grid.weights[i]) * grid.values[i] * u;
        }
        rhs *= e;
        const double defect = std::abs(static_cast<double>(lhs - rhs)) /
                              (1.0 + std::abs(static_cast<double>(rhs)));
        worst = std::max(worst, defect);
    }
    return worst;
}

} // namespace isq

// Acceptance suite: runs every structural claim end-to-end and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "isq/branch.hpp"
#include "isq/measure.hpp"
#include "isq/quadrature.hpp"
#include "isq/solutions.hpp"
#include "isq/transform.hpp"

using namespace isq;

namespace {

constexpr double pi = std::numbers::pi;
const cplx I(0.0, 1.0);

int failures = 0;

void report(int idx, const char* what, double defect, double tol, bool pass) {
    if (!pass)
        ++failures;
    std::printf("%s  criterion %2d: %-34s  defect=%.3e  tol=%.1e\n",
                pass ? "PASS" : "FAIL", idx, what, defect, tol);
}

double rel(cplx got, cplx want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// --- 1: the differential equation -----------------------------------------
void criterion_1() {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> ks(-0.95, 0.95), ths(0.0, pi), es(-5.0, 25.0),
        rs(0.05, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const ExtensionParams p(ks(rng), ths(rng));
        const double e = es(rng), r = rs(rng);
        auto f = [&](double rr) { return eval_u_theta(p, cplx(e, 0.0), rr); };
        worst = std::max(worst, ode_residual(p.kappa, cplx(e, 0.0), f, r, 1e-3));
    }
    report(1, "ODE residual of u_theta", worst, 1e-7, worst <= 1e-7);
    // domain-corner note: at (kappa, r) = (0.94, 0.05) the h = 1e-3 stencil
    // truncation alone is ~6e-5; h = 1e-4 shows the h^4 collapse
    const ExtensionParams pc(0.94, 1.0);
    auto fc = [&](double rr) { return eval_u_theta(pc, cplx(0.5, 0.0), rr); };
    std::printf("info  criterion  1: corner (0.94, r=0.05) residual %.3e at h=1e-3, %.3e at h=1e-4\n",
                ode_residual(0.94, cplx(0.5, 0.0), fc, 0.05, 1e-3),
                ode_residual(0.94, cplx(0.5, 0.0), fc, 0.05, 1e-4));
}

// --- 2: Wronskian identities ------------------------------------------------
void criterion_2() {
    // 20 (kappa, z) pairs including the blend band; z tempered so the O(1)
    // Wronskians stay numerically reachable at r = 10 (see notes in tests)
    const std::vector<double> kappas = {-0.9, -0.5, -0.3, -5e-3, -1e-3, 0.0, 1e-3, 5e-3,
                                        0.3,  0.5,  0.7,  0.9};
    const std::vector<cplx> zs = {0.5, 2.0, 10.0, cplx(1.0, 0.5), cplx(3.0, 1.0), -0.1};
    const std::vector<double> rset = {1e-2, 1.0, 10.0};
    double worst = 0.0;
    int pairs = 0;
    for (size_t i = 0; i < 20; ++i) {
        const double k = kappas[i % kappas.size()];
        const cplx z = zs[(i + i / 6) % zs.size()]; // stride keeps all 20 pairs distinct
        ++pairs;
        const cplx lz = cut_log(z, BranchCut::lower_imaginary);
        const cplx w_vu_closed = std::exp(-0.5 * k * lz) * std::exp(I * pi * k / 2.0);
        std::vector<cplx> uw(rset.size()), pairw(rset.size()), vu(rset.size());
        for (size_t j = 0; j < rset.size(); ++j) {
            const double r = rset[j];
            const auto u = eval_u(k, z, r);
            const auto w = eval_w(k, z, r);
            const auto v = eval_v(k, z, r);
            const ExtensionParams p(k, 1.1), q(k, 1.1 - 0.5 * pi);
            uw[j] = wronskian_at(u, w);
            pairw[j] = wronskian_at(eval_u_theta(p, z, r), eval_u_theta(q, z, r));
            vu[j] = wronskian_at(v, u);
            worst = std::max({worst, rel(uw[j], 2.0 / pi), rel(pairw[j], -2.0 / pi),
                              rel(vu[j], w_vu_closed)});
        }
        for (size_t j = 1; j < rset.size(); ++j) {
            worst = std::max({worst, rel(uw[j], uw[0]), rel(pairw[j], pairw[0]),
                              rel(vu[j], vu[0])});
        }
    }
    report(2, "Wronskian identities", worst, 1e-9, worst <= 1e-9 && pairs == 20);
}

// --- 3: m-function boundary limit -------------------------------------------
void criterion_3() {
    const std::vector<double> etas = {1e-2, 1e-3, 1e-4, 1e-5};
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ks(-0.9, 0.9), ths(0.0, pi), es(0.1, 20.0);
    double worst = 0.0;
    for (int i = 0; i < 30; ++i) {
        const ExtensionParams p(ks(rng), ths(rng));
        const double e = es(rng);
        worst = std::max(worst, std::abs(m_limit_check(p, e, etas).limit - density(p, e)));
    }
    // below the spectrum, away from the atom, the limit vanishes
    for (const auto& [p, e] : std::vector<std::pair<ExtensionParams, double>>{
             {ExtensionParams(0.0, 0.5 * pi), -2.0},
             {ExtensionParams(0.3, 1.2), -9.0},
             {ExtensionParams(-0.45, 0.3), -1.0},
             {ExtensionParams(0.5, 0.3), -4.0}}) {
        worst = std::max(worst, std::abs(m_limit_check(p, e, etas).limit));
    }
    report(3, "Im m boundary limit = density", worst, 1e-6, worst <= 1e-6);
}

// --- 4: atom residue ----------------------------------------------------------
void criterion_4() {
    const std::vector<ExtensionParams> samples = {
        {0.0, 0.5 * pi}, {1e-3, 0.5 * pi}, {-1e-3, 0.5 * pi}, {0.3, 1.2}, {-0.45, 2.0},
        {0.7, 1.8},      {0.2, 0.9},       {0.0, 2.5},        {5e-3, 1.0}, {-0.6, 1.4}};
    double worst = 0.0;
    for (const auto& p : samples) {
        const double e0 = *bound_state_energy(p);
        const double weight = *atom_weight(p);
        const int n = 64;
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const cplx e_it = std::exp(I * (2.0 * pi * j / n));
            acc += m_function(p, cplx(e0, 0.0) + 1e-4 * e_it) * e_it;
        }
        const double got = -pi * (acc * 1e-4 / static_cast<double>(n)).real();
        worst = std::max(worst, std::abs(got - weight) / weight);
    }
    report(4, "contour residue = atom weight", worst, 1e-6, worst <= 1e-6);
}

// --- 5: unitarity ---------------------------------------------------------------
void criterion_5() {
    const std::vector<ExtensionParams> params = {
        {0.0, 0.5 * pi}, {0.5, 0.25 * pi}, {-0.3, 1.2}};
    const std::vector<std::pair<double, double>> supports = {{1.0, 2.0}, {0.5, 1.5}, {2.0, 3.5}};
    double worst_pv = 0.0;
    bool conclusive = true;
    for (const auto& p : params) {
        for (const auto& [a, b] : supports) {
            const auto g = sample_grid(make_bump(a, b), 400.0);
            const auto res = parseval_defect(p, g, 400.0);
            worst_pv = std::max(worst_pv, res.defect);
            conclusive = conclusive && res.conclusive;
        }
    }
    report(5, "Parseval defect (e_max 400)", worst_pv, 1e-4, worst_pv <= 1e-4 && conclusive);

    const auto wide = make_bump(1.0, 4.0);
    const std::vector<double> probe = {1.3, 1.9, 2.5, 3.1, 3.7};
    double worst_rt = 0.0;
    bool monotone = true;
    for (const auto& p : params) {
        double prev = 1e300;
        for (double e_max : {100.0, 200.0, 400.0}) {
            const auto g = sample_grid(wide, e_max);
            const auto f = forward(p, g, make_energy_grid(e_max, g.b));
            const auto back = inverse(p, f, probe);
            double sup = 0.0;
            for (size_t i = 0; i < probe.size(); ++i)
                sup = std::max(sup, std::abs(back[i] - wide.f(probe[i])));
            monotone = monotone && sup < prev;
            prev = sup;
        }
        worst_rt = std::max(worst_rt, prev);
    }
    report(5, "round trip (strictly improving)", worst_rt, 1e-4,
           worst_rt <= 1e-4 && monotone);
}

// --- 6: diagonalization ----------------------------------------------------------
void criterion_6() {
    const auto bump = make_bump(1.0, 2.0);
    const std::vector<double> es = {0.5, 1.0, 2.0, 5.0};
    double worst = 0.0;
    for (const auto& p : {ExtensionParams(0.0, 0.5 * pi), ExtensionParams(0.5, 0.25 * pi),
                          ExtensionParams(-0.3, 1.2)})
        worst = std::max(worst, diag_defect(p, bump, es));
    report(6, "U(h psi) = E U(psi)", worst, 1e-6, worst <= 1e-6);
}

// --- 7: bound-state norm ------------------------------------------------------------
void criterion_7() {
    double worst = 0.0;
    for (const auto& [p, expected] : std::vector<std::pair<ExtensionParams, double>>{
             {ExtensionParams(0.0, 0.5 * pi), 2.0 / (pi * pi)},
             {ExtensionParams(0.5, 0.5 * pi), 1.0 / (2.0 * pi)}}) {
        const auto m = build_measure(p);
        const double e0 = m.atom->energy;
        auto usq = [&](double r) {
            const double u = eval_u_theta(p, cplx(e0, 0.0), r).value.real();
            return u * u;
        };
        const double r_max = 0.5 * std::log(1e16) / std::sqrt(-e0);
        const double nrm = integrate(usq, 1e-10, r_max, 1e-10).value;
        worst = std::max({worst, std::abs(nrm - expected) / expected,
                          std::abs(nrm - 1.0 / m.atom->weight) * m.atom->weight});
    }
    report(7, "bound-state norm = 1/weight", worst, 1e-6, worst <= 1e-6);
}

// --- 8: continuity at kappa = 0 --------------------------------------------------
void criterion_8() {
    auto phi_fn = [](double e) {
        if (e <= -3.0 || e >= 3.0)
            return 0.0;
        const double t = (e + 3.0) * (3.0 - e);
        return t * t * t / 729.0;
    };
    auto m_int = [&](const ExtensionParams& p) {
        const auto m = build_measure(p);
        double acc = integrate([&](double e) { return phi_fn(e) * m.density(e); }, 1e-10,
                               3.0, 1e-11)
                         .value;
        if (m.atom && m.atom->energy > -3.0)
            acc += m.atom->weight * phi_fn(m.atom->energy);
        return acc;
    };
    double final_gap = 0.0;
    bool shrinking = true;
    for (double th : {0.3, 1.4, 0.5 * pi}) {
        const double base = m_int(ExtensionParams(0.0, th));
        double prev = 1e300;
        for (int kexp = 2; kexp <= 5; ++kexp) {
            const double k = std::pow(10.0, -kexp);
            const double gap = std::max(std::abs(m_int(ExtensionParams(k, th)) - base),
                                        std::abs(m_int(ExtensionParams(-k, th)) - base));
            shrinking = shrinking && gap <= prev + 1e-10;
            prev = gap;
        }
        final_gap = std::max(final_gap, prev);
    }
    report(8, "measure continuity at kappa=0", final_gap, 1e-4,
           final_gap <= 1e-4 && shrinking);

    double worst_u = 0.0;
    for (double th : {0.3, 1.4}) {
        for (double e : {-2.0, 0.5, 4.0, 12.0}) {
            for (double r : {0.1, 1.0, 3.0}) {
                const auto base = eval_u_theta(ExtensionParams(0.0, th), cplx(e, 0.0), r);
                for (double k : {1e-5, -1e-5}) {
                    const auto gap =
                        eval_u_theta(ExtensionParams(k, th), cplx(e, 0.0), r).value -
                        base.value;
                    worst_u = std::max(worst_u, std::abs(gap));
                }
            }
        }
    }
    report(8, "solution continuity at kappa=0", worst_u, 1e-6, worst_u <= 1e-6);
}

// --- 9: Hankel specialization --------------------------------------------------
void criterion_9() {
    double worst_meas = 0.0, worst_fwd = 0.0;
    const auto bump = make_bump(1.0, 2.0);
    for (double k : {-0.4, 0.0, 0.3, 0.6}) {
        const ExtensionParams p(k, 0.5 * pi * k);
        const auto m = build_measure(p);
        if (m.atom)
            worst_meas = 1.0;
        for (double e : {0.2, 1.0, 4.0, 30.0})
            worst_meas = std::max(worst_meas, std::abs(m.density(e) - v_kappa_density(k, e)) /
                                                  v_kappa_density(k, e));
        const auto g = sample_grid(bump, 100.0);
        const auto eg = make_energy_grid(100.0, g.b);
        const auto a = forward(p, g, eg);
        const auto b = forward_u(k, g, eg);
        for (size_t j = 0; j < a.values.size(); ++j)
            worst_fwd = std::max(worst_fwd, std::abs(a.values[j] - b.values[j]) /
                                                (1.0 + std::abs(b.values[j])));
    }
    report(9, "measure/transform at theta_kappa", std::max(worst_meas, worst_fwd), 1e-12,
           worst_meas <= 1e-12 && worst_fwd <= 1e-12);

    // kappa = 1/2: elementary sine-kernel transform
    const ExtensionParams ph(0.5, 0.25 * pi);
    const auto g = sample_grid(bump, 50.0);
    const auto eg = make_energy_grid(50.0, g.b);
    const auto f = forward(ph, g, eg);
    double worst_sine = 0.0;
    for (size_t j = 0; j < eg.nodes.size(); j += 23) {
        const double e = eg.nodes[j];
        // composite Simpson oracle on a fine fixed mesh
        const int n = 4000;
        const double h = 1.0 / n;
        double s = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double r = 1.0 + i * h;
            const double fr = std::sqrt(2.0 / pi) * std::sin(std::sqrt(e) * r) /
                              std::sqrt(e) * bump.f(r);
            s += fr * (i == 0 || i == n ? 1.0 : (i % 2 ? 4.0 : 2.0));
        }
        s *= h / 3.0;
        worst_sine = std::max(worst_sine, std::abs(f.values[j] - s));
    }
    report(9, "sine-kernel closed form (kappa=1/2)", worst_sine, 1e-9, worst_sine <= 1e-9);
}

// --- 10: symmetries ----------------------------------------------------------------
void criterion_10() {
    std::mt19937 rng(10);
    std::uniform_real_distribution<double> ks(0.05, 0.9), ths(0.1, pi - 0.1), es(0.1, 15.0),
        rs(0.2, 3.0);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
        const double k = ks(rng), th = ths(rng), e = es(rng), r = rs(rng);
        // pi-periodicity of the measure, kappa-evenness of the measure
        const ExtensionParams p(k, th), pp(k, th + pi), pm(-k, th);
        worst = std::max(worst, std::abs(density(p, e) - density(pp, e)));
        worst = std::max(worst, std::abs(density(p, e) - density(pm, e)));
        const auto ap = bound_state_energy(p);
        const auto app = bound_state_energy(pp);
        const auto apm = bound_state_energy(pm);
        if (ap.has_value() != app.has_value() || ap.has_value() != apm.has_value()) {
            worst = 1.0;
        } else if (ap) {
            worst = std::max(worst, std::abs(*ap - *app) / std::abs(*ap));
            worst = std::max(worst, std::abs(*ap - *apm) / std::abs(*ap));
            worst = std::max(worst,
                             std::abs(*atom_weight(p) - *atom_weight(pp)) / *atom_weight(p));
            worst = std::max(worst,
                             std::abs(*atom_weight(p) - *atom_weight(pm)) / *atom_weight(p));
        }
        // sign flip and evenness of the eigenfunctions
        const auto u1 = eval_u_theta(p, cplx(e, 0.0), r);
        const auto u2 = eval_u_theta(pp, cplx(e, 0.0), r);
        const auto u3 = eval_u_theta(pm, cplx(e, 0.0), r);
        worst = std::max(worst,
                         std::abs(u1.value + u2.value) / (1.0 + std::abs(u1.value)));
        worst = std::max(worst,
                         std::abs(u1.value - u3.value) / (1.0 + std::abs(u1.value)));
    }
    report(10, "theta/kappa symmetries", worst, 1e-10, worst <= 1e-10);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures)
        std::printf("%d criterion check(s) FAILED\n", failures);
    else
        std::printf("all acceptance criteria passed\n");
    return failures;
}

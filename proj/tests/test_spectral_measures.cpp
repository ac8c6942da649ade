#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "isq/branch.hpp"
#include "isq/errors.hpp"
#include "isq/measure.hpp"
#include "isq/quadrature.hpp"
#include "oracles.hpp"

using namespace isq;
using oracle::rel_err;

namespace {
const cplx I(0.0, 1.0);
constexpr double pi = oracle::pi;

// literal Eq-forms, used as oracles against the stable implementations
cplx m_literal(double kappa, double theta, cplx z) {
    const double tk = 0.5 * pi * kappa;
    const cplx q = std::exp(-I * pi * kappa) * cut_power(z, kappa, BranchCut::lower_imaginary);
    return 0.5 * (std::cos(theta + tk) - q * std::cos(theta - tk)) /
           (std::sin(theta + tk) - q * std::sin(theta - tk));
}

cplx m_literal_k0(double theta, cplx z) {
    const cplx lg = cut_log(z, BranchCut::lower_imaginary);
    const cplx a = I - lg / pi;
    return 0.5 * (a * std::cos(theta) - std::sin(theta)) /
           (std::cos(theta) + a * std::sin(theta));
}

double density_literal(double kappa, double theta, double E) {
    const double tk = 0.5 * pi * kappa;
    const double sp = std::sin(theta + tk), sm = std::sin(theta - tk);
    const double s = std::sin(pi * kappa);
    return 0.5 * s * s /
           (std::pow(E, -kappa) * sp * sp - 2.0 * std::cos(pi * kappa) * sp * sm +
            std::pow(E, kappa) * sm * sm);
}

double density_literal_k0(double theta, double E) {
    const double c = std::cos(theta) - std::log(E) * std::sin(theta) / pi;
    return 0.5 / (c * c + std::sin(theta) * std::sin(theta));
}

// integral of phi dV_{kappa,theta} for a bump phi supported on [lo, hi]
double measure_integral(const ExtensionParams& p, double lo, double hi,
                        const std::function<double(double)>& phi_fn) {
    const auto m = build_measure(p);
    double acc = 0.0;
    if (hi > 0.0) {
        const double a = std::max(lo, 1e-12);
        acc += integrate([&](double e) { return phi_fn(e) * m.density(e); }, a, hi, 1e-11)
                   .value;
    }
    if (m.atom && m.atom->energy > lo && m.atom->energy < hi)
        acc += m.atom->weight * phi_fn(m.atom->energy);
    return acc;
}
} // namespace

TEST_CASE("phi: closed forms and stability") {
    CHECK(std::abs(phi(0.0, std::exp(1.0)) + 1.0 / pi) < 1e-14);
    CHECK(phi(0.3, 1.0) == 0.0);
    CHECK(std::abs(phi(0.5, 4.0) - (std::pow(2.0, -0.5) - std::pow(2.0, 0.5))) < 1e-14);
    // piecewise form agreement
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> ks(0.05, 0.95), es(0.01, 50.0);
    for (int i = 0; i < 200; ++i) {
        const double k = ks(rng) * (i % 2 ? 1.0 : -1.0), e = es(rng);
        const double want = (std::pow(e, -0.5 * k) - std::pow(e, 0.5 * k)) / std::sin(pi * k);
        CHECK(rel_err(phi(k, e), want) < 1e-12);
    }
    // continuity across kappa = 0
    for (double e : {0.2, 3.0}) {
        CHECK(std::abs(phi(1e-9, e) - phi(0.0, e)) < 1e-10);
    }
    CHECK_THROWS_AS((void)phi(0.3, -1.0), std::domain_error);
}

TEST_CASE("density: fixed values, identities, bounds") {
    CHECK(rel_err(density(ExtensionParams(0.5, 0.25 * pi), 4.0), 1.0) < 1e-13);
    for (double e : {0.1, 1.0, 7.0, 300.0}) {
        CHECK(rel_err(density(ExtensionParams(0.0, 0.0), e), 0.5) < 1e-14);
        // theta = theta_kappa: density is E^kappa / 2
        for (double k : {-0.7, 0.3, 1e-4}) {
            const ExtensionParams p(k, 0.5 * pi * k);
            CHECK(rel_err(density(p, e), 0.5 * std::pow(e, k)) < 1e-12);
        }
    }

    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ks(0.05, 0.95), ths(0.0, pi), es(0.01, 40.0);
    for (int i = 0; i < 300; ++i) {
        const double k = ks(rng) * (i % 2 ? 1.0 : -1.0);
        const double th = ths(rng), e = es(rng);
        const ExtensionParams p(k, th);
        const double got = density(p, e);
        CHECK(got > 0.0);
        CHECK(rel_err(got, density_literal(k, th, e)) < 1e-11);
        // the two closed upper bounds
        const double f = phi(k, e);
        CHECK(got <= 1.0 + 0.5 * f * f + 1e-12);
        const double alpha = std::min(0.99, std::abs(k) + 0.5 * (1.0 - std::abs(k)));
        const double sa = std::sin(pi * alpha);
        CHECK(got <= (std::pow(e, alpha) + std::pow(e, -alpha)) / (2.0 * sa * sa) + 1e-12);
    }
    for (int i = 0; i < 100; ++i) {
        const double th = ths(rng), e = es(rng);
        CHECK(rel_err(density(ExtensionParams(0.0, th), e), density_literal_k0(th, e)) <
              1e-11);
    }
}

TEST_CASE("bound_state_energy: window, closed forms, symmetry") {
    CHECK(*bound_state_energy(ExtensionParams(0.0, 0.5 * pi)) == doctest::Approx(-1.0));
    CHECK(*bound_state_energy(ExtensionParams(0.5, 0.5 * pi)) == doctest::Approx(-1.0));
    CHECK(!bound_state_energy(ExtensionParams(0.5, 0.3)).has_value());
    CHECK(!bound_state_energy(ExtensionParams(0.4, 0.0)).has_value());

    // Eq-form agreement away from kappa = 0
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ks(0.05, 0.9), frac(0.05, 0.95);
    for (int i = 0; i < 200; ++i) {
        const double k = ks(rng) * (i % 2 ? 1.0 : -1.0);
        const double b = 0.5 * pi * std::abs(k);
        const double th = b + frac(rng) * (pi - 2.0 * b);
        const ExtensionParams p(k, th);
        const double tk = p.theta_kappa();
        const double want =
            -std::pow(std::sin(th + tk) / std::sin(th - tk), 1.0 / k);
        CHECK(rel_err(*bound_state_energy(p), want) < 1e-11);
    }
    // kappa = 0 form
    for (double th : {0.3, 0.5 * pi, 2.0}) {
        const double want = -std::exp(pi * std::cos(th) / std::sin(th));
        CHECK(rel_err(*bound_state_energy(ExtensionParams(0.0, th)), want) < 1e-12);
    }
    // even in kappa, periodic in theta
    for (double k : {0.3, 0.55}) {
        for (double th : {1.0, 2.0}) {
            CHECK(rel_err(*bound_state_energy(ExtensionParams(k, th)),
                          *bound_state_energy(ExtensionParams(-k, th))) < 1e-12);
            CHECK(rel_err(*bound_state_energy(ExtensionParams(k, th)),
                          *bound_state_energy(ExtensionParams(k, th + pi))) < 1e-12);
        }
    }
    // stability where cot(theta) vanishes and kappa is tiny
    CHECK(rel_err(*bound_state_energy(ExtensionParams(1e-8, 0.5 * pi)), -1.0) < 1e-12);

    // deep inside the window edge the energy leaves double range; that is
    // surfaced, never returned as inf (which would break the weight)
    CHECK_THROWS_AS((void)bound_state_energy(ExtensionParams(0.0, 1e-4)), std::domain_error);
    CHECK_THROWS_AS((void)bound_state_energy(ExtensionParams(0.0, pi - 1e-4)),
                    std::domain_error);
    // while moderately close values still come out finite
    const double near = *bound_state_energy(ExtensionParams(0.0, 0.05));
    CHECK(std::isfinite(near));
    CHECK(near < -1e20);

    // exact window edges are the closed atomless classification...
    CHECK(!bound_state_energy(ExtensionParams(0.5, 0.25 * pi)).has_value());
    CHECK(!bound_state_energy(ExtensionParams(0.0, 0.0)).has_value());
    // ...while the fuzzy annulus around them is surfaced as an error
    CHECK_THROWS_AS((void)bound_state_energy(ExtensionParams(0.5, 0.25 * pi + 1e-13)),
                    boundary_error);
    CHECK_THROWS_AS((void)bound_state_energy(ExtensionParams(0.0, 1e-13)), boundary_error);
}

TEST_CASE("atom_weight: fixed values and Eq-form") {
    CHECK(rel_err(*atom_weight(ExtensionParams(0.0, 0.5 * pi)), 0.5 * pi * pi) < 1e-13);
    CHECK(rel_err(*atom_weight(ExtensionParams(0.5, 0.5 * pi)), 2.0 * pi) < 1e-13);
    CHECK(!atom_weight(ExtensionParams(0.5, 0.3)).has_value());
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> ks(0.05, 0.9), frac(0.1, 0.9);
    for (int i = 0; i < 100; ++i) {
        const double k = ks(rng) * (i % 2 ? 1.0 : -1.0);
        const double b = 0.5 * pi * std::abs(k);
        const double th = b + frac(rng) * (pi - 2.0 * b);
        const ExtensionParams p(k, th);
        const double tk = p.theta_kappa();
        const double e0 = *bound_state_energy(p);
        const double want = pi * std::sin(pi * k) * std::abs(e0) /
                            (2.0 * k * std::sin(th + tk) * std::sin(th - tk));
        CHECK(rel_err(*atom_weight(p), want) < 1e-11);
        CHECK(*atom_weight(p) > 0.0);
    }
}

TEST_CASE("m_function: closed forms") {
    CHECK(rel_err(m_function(ExtensionParams(0.0, 0.0), 1.0), 0.5 * I) < 1e-14);
    // kappa = 0 literal form
    for (double th : {0.0, 0.4, 2.2}) {
        for (const cplx z : {cplx(1.0, 0.3), cplx(-2.0, 0.1), cplx(5.0, 2.0)}) {
            CHECK(rel_err(m_function(ExtensionParams(0.0, th), z), m_literal_k0(th, z)) <
                  1e-12);
        }
    }
    // general literal form at moderate kappa
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ks(0.05, 0.95), ths(0.0, pi);
    std::uniform_real_distribution<double> zr(-4.0, 6.0), zi(0.01, 4.0);
    for (int i = 0; i < 200; ++i) {
        const double k = ks(rng) * (i % 2 ? 1.0 : -1.0), th = ths(rng);
        const cplx z(zr(rng), zi(rng));
        CHECK(rel_err(m_function(ExtensionParams(k, th), z), m_literal(k, th, z)) < 1e-11);
    }
    // boundary imaginary part on E > 0 (the Im M formula)
    const double imm = m_function(ExtensionParams(0.5, 1.0), 2.0).imag();
    CHECK(rel_err(imm, density_literal(0.5, 1.0, 2.0)) < 1e-12);
    // theta = theta_kappa: Im M(E) = E^kappa / 2
    CHECK(rel_err(m_function(ExtensionParams(0.5, 0.25 * pi), 4.0).imag(), 1.0) < 1e-12);

    CHECK_THROWS_AS((void)m_function(ExtensionParams(0.5, 0.5 * pi), cplx(-1.0, 0.0)),
                    pole_error);
}

TEST_CASE("m_function: Herglotz property on the upper half-plane") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ks(-0.95, 0.95), ths(0.0, pi);
    std::uniform_real_distribution<double> zr(-6.0, 8.0), zi(1e-3, 5.0);
    int checked = 0;
    for (int i = 0; i < 260; ++i) {
        const double k = (i % 6 == 0) ? ks(rng) * 1e-2 : ks(rng);
        const ExtensionParams p(k, ths(rng));
        const cplx z(zr(rng), zi(rng));
        CHECK(m_function(p, z).imag() > 0.0);
        ++checked;
    }
    CHECK(checked >= 200);
}

TEST_CASE("m_function: Wronskian route agreement") {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> ks(-0.95, 0.95), ths(0.0, pi);
    std::uniform_real_distribution<double> zr(-3.0, 5.0), zi(0.05, 3.0);
    for (int i = 0; i < 60; ++i) {
        const double k = (i % 4 == 0) ? ks(rng) * 1e-2 : ks(rng); // include blend band
        const ExtensionParams p(k, ths(rng));
        const cplx z(zr(rng), zi(rng));
        const cplx closed = m_function(p, z);
        const cplx viaw = m_function_wronskian_path(p, z, 0.7);
        CHECK(rel_err(viaw, closed) < 1e-10);
    }
    // closed Wronskian form matches the numerically evaluated one
    for (int i = 0; i < 60; ++i) {
        const double k = (i % 4 == 0) ? ks(rng) * 1e-2 : ks(rng);
        const ExtensionParams p(k, ths(rng));
        const cplx z(zr(rng), zi(rng));
        const auto v = eval_v(p.kappa, z, 1.0);
        const auto ut = eval_u_theta(p, z, 1.0);
        CHECK(rel_err(wronskian_at(v, ut), wronskian_v_u_theta(p, z)) < 1e-10);
    }
}

TEST_CASE("residue of the m-function reproduces the atom weight") {
    const std::vector<ExtensionParams> samples = {
        {0.0, 0.5 * pi},   {1e-3, 0.5 * pi}, {-1e-3, 0.5 * pi}, {0.3, 1.2},
        {-0.45, 2.0},      {0.7, 1.8},       {0.2, 0.9},        {0.0, 2.5},
        {5e-3, 1.0},       {-0.6, 1.4}};
    for (const auto& p : samples) {
        const double e0 = *bound_state_energy(p);
        const double weight = *atom_weight(p);
        // trapezoid contour quadrature on a circle of radius 1e-4
        const double delta = 1e-4;
        const int n = 64;
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double t = 2.0 * pi * j / n;
            const cplx e_it = std::exp(I * t);
            acc += m_function(p, cplx(e0, 0.0) + delta * e_it) * e_it;
        }
        // residue = (1/2 pi i) contour integral; M = A/(E0 - z) + analytic
        const cplx residue = acc * delta / static_cast<double>(n);
        const double got = -pi * residue.real();
        CHECK(std::abs(residue.imag()) < 1e-8 * std::abs(residue.real()));
        CHECK(rel_err(got, weight) < 1e-6);
    }
}

TEST_CASE("build_measure: assembly and symmetries") {
    // theta = theta_kappa: no atom, density is the Hankel measure
    for (double k : {-0.5, 0.0, 0.35}) {
        const auto m = build_measure(ExtensionParams(k, 0.5 * pi * k + pi)); // mod-pi rep
        CHECK(!m.atom.has_value());
        for (double e : {0.3, 2.0, 9.0})
            CHECK(rel_err(m.density(e), v_kappa_density(k, e)) < 1e-12);
    }
    // pi-periodicity in theta
    {
        const auto a = build_measure(ExtensionParams(0.3, 1.2));
        const auto b = build_measure(ExtensionParams(0.3, 1.2 + pi));
        REQUIRE(a.atom.has_value());
        REQUIRE(b.atom.has_value());
        CHECK(rel_err(a.atom->energy, b.atom->energy) < 1e-12);
        CHECK(rel_err(a.atom->weight, b.atom->weight) < 1e-12);
        for (double e : {0.5, 4.0})
            CHECK(rel_err(a.density(e), b.density(e)) < 1e-12);
    }
    // even in kappa
    {
        const auto a = build_measure(ExtensionParams(0.4, 1.0));
        const auto b = build_measure(ExtensionParams(-0.4, 1.0));
        REQUIRE(a.atom.has_value());
        CHECK(rel_err(a.atom->energy, b.atom->energy) < 1e-12);
        CHECK(rel_err(a.atom->weight, b.atom->weight) < 1e-12);
        for (double e : {0.5, 4.0})
            CHECK(rel_err(a.density(e), b.density(e)) < 1e-12);
    }
    CHECK_THROWS_AS((void)build_measure(ExtensionParams(0.5, 0.25 * pi + 1e-13)),
                    boundary_error);

    CHECK(v_kappa_density(0.5, -3.0) == 0.0);
    CHECK(v_kappa_density(0.5, 4.0) == doctest::Approx(1.0));
    CHECK(v_kappa_density(0.0, 0.0) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)v_kappa_density(-1.0, 1.0), std::domain_error);
}

TEST_CASE("m_limit_check: boundary limits of Im M") {
    // analytic oracle: Im m((0,0), 1 + i eta) -> 1/2
    const auto r1 = m_limit_check(ExtensionParams(0.0, 0.0), 1.0);
    CHECK(r1.converged);
    CHECK(std::abs(r1.limit - 0.5) < 1e-6);

    const auto r2 = m_limit_check(ExtensionParams(0.5, 0.25 * pi), 4.0);
    CHECK(r2.converged);
    CHECK(std::abs(r2.limit - 1.0) < 1e-6);

    // E < 0 away from the atom at -1: no absolutely continuous part
    const auto r3 = m_limit_check(ExtensionParams(0.0, 0.5 * pi), -2.0);
    CHECK(std::abs(r3.limit) < 1e-6);

    // general E > 0 samples converge to the density
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ks(-0.9, 0.9), ths(0.0, pi), es(0.1, 20.0);
    const std::vector<double> etas = {1e-2, 1e-3, 1e-4, 1e-5};
    for (int i = 0; i < 25; ++i) {
        const ExtensionParams p(ks(rng), ths(rng));
        const double e = es(rng);
        const auto r = m_limit_check(p, e, etas);
        CHECK(std::abs(r.limit - density(p, e)) < 1e-6);
    }

    CHECK_THROWS_AS((void)m_limit_check(ExtensionParams(0.0, 0.0), 1.0, {1e-2, 1e-3}),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)m_limit_check(ExtensionParams(0.0, 0.0), 1.0, {1e-2, 1e-3, 1e-7}),
                    std::invalid_argument);
}

TEST_CASE("measure integrals: continuity in kappa and across the atom edge") {
    // smooth compactly supported phi on [-3, 3]
    auto phi_fn = [](double e) {
        if (e <= -3.0 || e >= 3.0)
            return 0.0;
        const double t = (e + 3.0) * (3.0 - e);
        return t * t * t / 729.0;
    };

    SUBCASE("kappa -> 0 convergence") {
        for (double th : {0.3, 1.2, 0.5 * pi}) {
            const double base = measure_integral(ExtensionParams(0.0, th), -3.0, 3.0, phi_fn);
            double prev_gap = 1e300;
            for (int kexp = 2; kexp <= 5; ++kexp) {
                const double k = std::pow(10.0, -kexp);
                const double up = measure_integral(ExtensionParams(k, th), -3.0, 3.0, phi_fn);
                const double dn = measure_integral(ExtensionParams(-k, th), -3.0, 3.0, phi_fn);
                const double gap = std::max(std::abs(up - base), std::abs(dn - base));
                CHECK(gap <= prev_gap + 1e-9);
                prev_gap = gap;
            }
            CHECK(prev_gap <= 1e-4);
        }
    }

    SUBCASE("continuity across atom appearance") {
        // at kappa = 0.2 the atom enters at theta = pi/10; the weight tends
        // to zero there, so the integral stays continuous
        const double k = 0.2, edge = 0.1 * pi;
        double prev_gap = 1e300;
        for (double d : {0.1, 0.01, 1e-3, 1e-4}) {
            const double lo = measure_integral(ExtensionParams(k, edge - d), -3.0, 3.0, phi_fn);
            const double hi = measure_integral(ExtensionParams(k, edge + d), -3.0, 3.0, phi_fn);
            const double gap = std::abs(hi - lo);
            CHECK(gap < prev_gap + 1e-9);
            prev_gap = gap;
        }
        CHECK(prev_gap < 1e-2);
    }

    SUBCASE("boundedness on [-0.8, 0.8] x [0, pi)") {
        // explicit bound: ac part <= int |phi| (E^a + E^-a)/(2 sin^2 pi a),
        // atom part <= sup over support of pi^2 E (E^a + E^-a)/(2 sin^2 pi a) |phi|
        const double alpha = 0.9;
        const double sa = std::sin(pi * alpha);
        const double ac_bound =
            integrate(
                [&](double e) {
                    return phi_fn(e) * (std::pow(e, alpha) + std::pow(e, -alpha)) /
                           (2.0 * sa * sa);
                },
                1e-10, 3.0, 1e-9)
                .value;
        double atom_bound = 0.0;
        for (double e = 0.01; e <= 3.0; e += 0.01) {
            const double cand = 0.5 * pi * pi * e * (std::pow(e, alpha) + std::pow(e, -alpha)) /
                                (sa * sa) * phi_fn(-e);
            atom_bound = std::max(atom_bound, cand);
        }
        const double bound = ac_bound + atom_bound;
        for (double k = -0.8; k <= 0.8001; k += 0.2) {
            for (double th = 0.05; th < pi; th += 0.3) {
                const double val =
                    measure_integral(ExtensionParams(k, th), -3.0, 3.0, phi_fn);
                CHECK(std::isfinite(val));
                CHECK(val <= bound + 1e-9);
            }
        }
    }
}

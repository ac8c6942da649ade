#include "tables.hpp"
#include "cli_util.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "isq/measure.hpp"
#include "isq/solutions.hpp"
#include "isq/special.hpp"

namespace isqcli {

namespace {

using namespace isq;
using json = nlohmann::ordered_json;
constexpr double pi = std::numbers::pi;

std::string csv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i)
            out += ',';
        out += cells[i];
    }
    out += '\n';
    return out;
}

json meta_for(const std::string& table, json tags) {
    json m;
    m["version"] = "0.1.0";
    m["table"] = table;
    m["tags"] = std::move(tags);
    return m;
}

TableFile special_values_table() {
    const std::vector<double> kappas = {-0.75, -0.5, 0.0, 1e-3, 0.3, 0.5, 0.9};
    const std::vector<cplx> zetas = {cplx(0.0),       cplx(0.5),   cplx(-2.0),
                                     cplx(4.0, 3.0),  cplx(40.0),  cplx(-100.0),
                                     cplx(300.0)};
    json data;
    std::vector<std::string> cols = {"kappa",  "zeta_re", "zeta_im", "chi_re",
                                     "chi_im", "chi_dkappa_re", "chi_dkappa_im",
                                     "script_y_re", "script_y_im"};
    for (const auto& c : cols)
        data[c] = json::array();
    std::string csv = csv_row({cols.begin(), cols.end()});
    for (double k : kappas) {
        for (const cplx zeta : zetas) {
            const cplx c = chi(k, zeta);
            const cplx dk = chi_dkappa(k, zeta);
            const cplx sy = script_y(zeta);
            const std::vector<double> row = {k,         zeta.real(), zeta.imag(),
                                             c.real(),  c.imag(),    dk.real(),
                                             dk.imag(), sy.real(),   sy.imag()};
            std::vector<std::string> cells;
            for (size_t i = 0; i < cols.size(); ++i) {
                data[cols[i]].push_back(row[i]);
                cells.push_back(format_double(row[i]));
            }
            csv += csv_row(cells);
        }
    }
    json j;
    j["meta"] = meta_for("special_values",
                         {{"chi", "entire Bessel-type series chi_kappa(zeta)"},
                          {"chi_dkappa", "order derivative of chi"},
                          {"script_y", "harmonic-number companion series"}});
    j["data"] = std::move(data);
    return {"special_values", std::move(j), std::move(csv)};
}

TableFile density_atoms_table() {
    const std::vector<double> kappas = {-0.6, -0.2, 0.0, 1e-3, 0.25, 0.5, 0.85};
    const std::vector<double> thetas = {0.3, 0.9, 0.5 * pi, 2.2, 2.9};
    const std::vector<double> energies = {0.5, 2.0, 8.0};
    json data;
    std::vector<std::string> cols = {"kappa", "theta", "atom_energy", "atom_weight",
                                     "density_e0", "density_e1", "density_e2"};
    for (const auto& c : cols)
        data[c] = json::array();
    std::string csv = csv_row({cols.begin(), cols.end()});
    for (double k : kappas) {
        for (double th : thetas) {
            const ExtensionParams p(k, th);
            const auto m = build_measure(p);
            std::vector<std::string> cells = {format_double(k), format_double(th)};
            data["kappa"].push_back(k);
            data["theta"].push_back(th);
            if (m.atom) {
                data["atom_energy"].push_back(m.atom->energy);
                data["atom_weight"].push_back(m.atom->weight);
                cells.push_back(format_double(m.atom->energy));
                cells.push_back(format_double(m.atom->weight));
            } else {
                data["atom_energy"].push_back(nullptr);
                data["atom_weight"].push_back(nullptr);
                cells.push_back("");
                cells.push_back("");
            }
            for (size_t i = 0; i < energies.size(); ++i) {
                const double d = m.density(energies[i]);
                data[cols[4 + i]].push_back(d);
                cells.push_back(format_double(d));
            }
            csv += csv_row(cells);
        }
    }
    json j;
    j["meta"] = meta_for(
        "density_atoms",
        {{"atom_energy", "bound-state energy (empty when no atom)"},
         {"atom_weight", "spectral mass at the bound state"},
         {"density_e0", "spectral density at E=0.5"},
         {"density_e1", "spectral density at E=2"},
         {"density_e2", "spectral density at E=8"}});
    j["data"] = std::move(data);
    return {"density_atoms", std::move(j), std::move(csv)};
}

TableFile mfunction_trace_table() {
    const std::vector<ExtensionParams> params = {
        {0.0, 0.0}, {0.0, 0.5 * pi}, {5e-3, 1.0}, {0.5, 0.25 * pi}, {-0.4, 1.8}};
    const std::vector<double> etas = {1e-2, 1e-3, 1e-4};
    json data;
    std::vector<std::string> cols = {"kappa", "theta", "e",
                                     "im_m_eta2", "im_m_eta3", "im_m_eta4", "density"};
    for (const auto& c : cols)
        data[c] = json::array();
    std::string csv = csv_row({cols.begin(), cols.end()});
    for (const auto& p : params) {
        for (double e = 0.25; e <= 8.0; e *= 2.0) {
            std::vector<double> row = {p.kappa, p.theta, e};
            for (double eta : etas)
                row.push_back(m_function(p, cplx(e, eta)).imag());
            row.push_back(density(p, e));
            std::vector<std::string> cells;
            for (size_t i = 0; i < cols.size(); ++i) {
                data[cols[i]].push_back(row[i]);
                cells.push_back(format_double(row[i]));
            }
            csv += csv_row(cells);
        }
    }
    json j;
    j["meta"] = meta_for("mfunction_trace",
                         {{"im_m_eta2", "Im m(E + i 1e-2)"},
                          {"im_m_eta3", "Im m(E + i 1e-3)"},
                          {"im_m_eta4", "Im m(E + i 1e-4)"},
                          {"density", "boundary density the trace converges to"}});
    j["data"] = std::move(data);
    return {"mfunction_trace", std::move(j), std::move(csv)};
}

} // namespace

std::vector<TableFile> generate_tables() {
    return {special_values_table(), density_atoms_table(), mfunction_trace_table()};
}

} // namespace isqcli

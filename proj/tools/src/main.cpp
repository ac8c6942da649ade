#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "isq/errors.hpp"
#include "isq/measure.hpp"
#include "isq/solutions.hpp"
#include "isq/transform.hpp"

#include "cli_util.hpp"
#include "tables.hpp"
#include "verify_suite.hpp"

namespace {

using namespace isq;
using json = nlohmann::ordered_json;
using isqcli::exit_inconclusive;
using isqcli::exit_numerical;
using isqcli::exit_ok;
using isqcli::exit_usage;
using isqcli::format_double;
using isqcli::GridSpec;

constexpr const char* version_string = "0.1.0";

struct CommonOpts {
    double kappa = 0.0;
    double theta = 0.0;
    std::string theta_mode = "absolute";
    std::string r_grid = "0.25:4:24";
    std::string e_grid = "0.25:16:24:log";
    std::vector<double> eta_list = {1e-2, 1e-3, 1e-4};
    double e_max = 400.0;
    std::vector<std::string> tol_kv;
    std::string out;
    std::string format = "json";
    std::string psi_file;
    bool seed_goldens = false;
};

ExtensionParams resolve_params(const CommonOpts& o) {
    double theta = o.theta;
    if (o.theta_mode == "offset-from-theta-kappa")
        theta += 0.5 * std::numbers::pi * o.kappa;
    else if (o.theta_mode != "absolute")
        throw std::invalid_argument("theta-mode must be absolute or offset-from-theta-kappa");
    return ExtensionParams(o.kappa, theta);
}

std::map<std::string, double> parse_tols(const std::vector<std::string>& kv) {
    std::map<std::string, double> out;
    for (const auto& item : kv) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("tolerance override must be name=value");
        const double v = std::stod(item.substr(eq + 1));
        if (!(v > 0.0))
            throw std::invalid_argument("tolerance overrides must be positive");
        out[item.substr(0, eq)] = v;
    }
    return out;
}

// Columnar payload shared by the json and csv writers. A cell may be absent
// (atom-less rows); absent cells serialize as null / empty.
struct Columns {
    std::vector<std::string> names;
    std::vector<std::vector<double>> cols;
    std::vector<std::vector<bool>> present;

    void add(const std::string& name) {
        names.push_back(name);
        cols.emplace_back();
        present.emplace_back();
    }
    void push(size_t col, double v, bool ok = true) {
        cols[col].push_back(v);
        present[col].push_back(ok);
    }
};

json columns_to_json(const Columns& c) {
    json data;
    for (size_t i = 0; i < c.names.size(); ++i) {
        json arr = json::array();
        for (size_t r = 0; r < c.cols[i].size(); ++r) {
            if (c.present[i][r])
                arr.push_back(c.cols[i][r]);
            else
                arr.push_back(nullptr);
        }
        data[c.names[i]] = std::move(arr);
    }
    return data;
}

std::string columns_to_csv(const Columns& c) {
    std::string out;
    for (size_t i = 0; i < c.names.size(); ++i) {
        if (i)
            out += ',';
        out += c.names[i];
    }
    out += '\n';
    const size_t rows = c.cols.empty() ? 0 : c.cols[0].size();
    for (size_t r = 0; r < rows; ++r) {
        for (size_t i = 0; i < c.names.size(); ++i) {
            if (i)
                out += ',';
            if (c.present[i][r])
                out += format_double(c.cols[i][r]);
        }
        out += '\n';
    }
    return out;
}

void write_output(const CommonOpts& o, const json& meta, const Columns& data) {
    std::string payload;
    if (o.format == "csv") {
        payload = columns_to_csv(data);
    } else if (o.format == "json") {
        json j;
        j["meta"] = meta;
        j["data"] = columns_to_json(data);
        payload = j.dump(2);
        payload += '\n';
    } else {
        throw std::invalid_argument("format must be json or csv");
    }
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f)
            throw std::invalid_argument("cannot open output path: " + o.out);
        f << payload;
    }
}

json config_echo(const CommonOpts& o, std::initializer_list<const char*> keys) {
    json cfg;
    for (const char* k : keys) {
        const std::string key(k);
        if (key == "kappa")
            cfg["kappa"] = o.kappa;
        else if (key == "theta")
            cfg["theta"] = o.theta;
        else if (key == "theta_mode")
            cfg["theta_mode"] = o.theta_mode;
        else if (key == "r_grid")
            cfg["r_grid"] = o.r_grid;
        else if (key == "e_grid")
            cfg["e_grid"] = o.e_grid;
        else if (key == "eta_list")
            cfg["eta_list"] = o.eta_list;
        else if (key == "e_max")
            cfg["e_max"] = o.e_max;
        else if (key == "psi_file")
            cfg["psi_file"] = o.psi_file;
    }
    return cfg;
}

// ---------------------------------------------------------------------------

int run_eval(const CommonOpts& o) {
    const auto p = resolve_params(o);
    const auto rs = GridSpec::parse(o.r_grid).points();
    const auto es = GridSpec::parse(o.e_grid).points();
    if (GridSpec::parse(o.r_grid).min <= 0.0)
        throw std::invalid_argument("r-grid must start above 0");

    Columns c;
    for (const char* n : {"e", "r", "u_theta", "u_theta_dr", "w", "w_dr", "v_re", "v_im",
                          "v_dr_re", "v_dr_im"})
        c.add(n);
    const size_t n = es.size() * rs.size();
    for (auto& col : c.cols)
        col.resize(n);
    for (auto& pr : c.present)
        pr.assign(n, true);

    isqcli::parallel_for(n, [&](size_t idx) {
        const double e = es[idx / rs.size()];
        const double r = rs[idx % rs.size()];
        const auto ut = eval_u_theta(p, cplx(e, 0.0), r);
        const auto w = eval_w(p.kappa, cplx(e, 0.0), r);
        // v lives on the cut plane and has no finite value at E = 0
        SolutionEval v{0.0, 0.0};
        const bool has_v = e != 0.0;
        if (has_v)
            v = eval_v(p.kappa, cplx(e, 0.0), r);
        const double row[] = {e,
                              r,
                              ut.value.real(),
                              ut.d_r.real(),
                              w.value.real(),
                              w.d_r.real(),
                              v.value.real(),
                              v.value.imag(),
                              v.d_r.real(),
                              v.d_r.imag()};
        for (size_t i = 0; i < c.names.size(); ++i) {
            c.cols[i][idx] = row[i];
            if (i >= 6 && !has_v)
                c.present[i][idx] = false;
        }
    });

    json meta;
    meta["version"] = version_string;
    meta["command"] = "eval";
    meta["config"] = config_echo(o, {"kappa", "theta", "theta_mode", "r_grid", "e_grid"});
    meta["tags"] = {{"u_theta", "boundary-condition solution u_theta(E|r)"},
                    {"w", "logarithmic companion solution w(E|r)"},
                    {"v", "solution square-integrable at infinity"}};
    write_output(o, meta, c);
    return exit_ok;
}

int run_measure(const CommonOpts& o) {
    const auto p = resolve_params(o);
    const auto es = GridSpec::parse(o.e_grid).points();
    if (GridSpec::parse(o.e_grid).min <= 0.0)
        throw std::invalid_argument("e-grid for the density must start above 0");
    for (size_t i = 0; i + 1 < o.eta_list.size(); ++i)
        if (!(o.eta_list[i] > o.eta_list[i + 1]))
            throw std::invalid_argument("eta-list must decrease");

    const auto measure = build_measure(p);

    Columns c;
    c.add("e");
    c.add("density");
    for (double eta : o.eta_list)
        c.add("im_m_eta_" + format_double(eta));
    const size_t n = es.size();
    for (auto& col : c.cols)
        col.resize(n);
    for (auto& pr : c.present)
        pr.assign(n, true);

    isqcli::parallel_for(n, [&](size_t idx) {
        const double e = es[idx];
        c.cols[0][idx] = e;
        c.cols[1][idx] = measure.density(e);
        for (size_t k = 0; k < o.eta_list.size(); ++k)
            c.cols[2 + k][idx] = m_function(p, cplx(e, o.eta_list[k])).imag();
    });

    json meta;
    meta["version"] = version_string;
    meta["command"] = "measure";
    meta["config"] = config_echo(o, {"kappa", "theta", "theta_mode", "e_grid", "eta_list"});
    if (measure.atom)
        meta["atom"] = {{"energy", measure.atom->energy}, {"weight", measure.atom->weight}};
    else
        meta["atom"] = nullptr;
    meta["tags"] = {{"density", "spectral density on E > 0"},
                    {"im_m", "Im m(E + i eta), converging to the density"}};
    write_output(o, meta, c);
    return exit_ok;
}

GridFunction load_psi(const std::string& path, double e_max) {
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot open psi file: " + path);
    json j;
    f >> j;
    GridFunction g;
    if (j.contains("nodes")) {
        g.a = j.at("support").at(0).get<double>();
        g.b = j.at("support").at(1).get<double>();
        g.nodes = j.at("nodes").get<std::vector<double>>();
        g.weights = j.at("weights").get<std::vector<double>>();
        g.values = j.at("values").get<std::vector<double>>();
        g.validate();
        return g;
    }
    // {"support": [a, b]} alone samples the built-in bump on that support
    const double a = j.at("support").at(0).get<double>();
    const double b = j.at("support").at(1).get<double>();
    return sample_grid(make_bump(a, b), e_max);
}

int run_transform(const CommonOpts& o) {
    const auto p = resolve_params(o);
    const auto rspec = GridSpec::parse(o.r_grid);
    if (rspec.min <= 0.0)
        throw std::invalid_argument("r-grid must start above 0");
    if (!(o.e_max > 0.0))
        throw std::invalid_argument("e-max must be positive");

    const auto bump = make_bump(rspec.min, rspec.max);
    const GridFunction g = o.psi_file.empty() ? sample_grid(bump, o.e_max)
                                              : load_psi(o.psi_file, o.e_max);
    const auto eg = make_energy_grid(o.e_max, g.b);
    const auto fwd = forward(p, g, eg);
    // probe radii strictly inside the support: the reconstruction defect is
    // defined over interior nodes
    GridSpec inner = rspec;
    inner.count = rspec.count + 2;
    auto probes = inner.points();
    probes.erase(probes.begin());
    probes.pop_back();
    const auto back = inverse(p, fwd, probes);

    double roundtrip = 0.0;
    std::vector<double> psi_at_probe(probes.size());
    for (size_t i = 0; i < probes.size(); ++i) {
        double want = 0.0;
        if (o.psi_file.empty()) {
            want = bump.f(probes[i]);
        } else {
            // nearest-node reference for file-supplied grids
            size_t best = 0;
            for (size_t k = 1; k < g.nodes.size(); ++k)
                if (std::abs(g.nodes[k] - probes[i]) < std::abs(g.nodes[best] - probes[i]))
                    best = k;
            want = g.values[best];
        }
        psi_at_probe[i] = want;
        roundtrip = std::max(roundtrip, std::abs(back[i] - want));
    }

    const auto pres = parseval_defect(p, g, o.e_max);

    Columns c;
    for (const char* nme : {"e", "forward"})
        c.add(nme);
    for (size_t j = 0; j < fwd.e_nodes.size(); ++j) {
        c.push(0, fwd.e_nodes[j]);
        c.push(1, fwd.values[j]);
    }
    Columns cr;
    for (const char* nme : {"r", "psi", "inverse"})
        cr.add(nme);
    for (size_t i = 0; i < probes.size(); ++i) {
        cr.push(0, probes[i]);
        cr.push(1, psi_at_probe[i]);
        cr.push(2, back[i]);
    }

    json meta;
    meta["version"] = version_string;
    meta["command"] = "transform";
    meta["config"] =
        config_echo(o, {"kappa", "theta", "theta_mode", "r_grid", "e_max", "psi_file"});
    meta["atom_coeff"] = fwd.atom_coeff ? json(*fwd.atom_coeff) : json(nullptr);
    meta["roundtrip_sup_defect"] = roundtrip;
    meta["parseval"] = {{"defect", pres.defect},
                        {"tail_estimate", pres.tail_estimate},
                        {"conclusive", pres.conclusive}};
    meta["tags"] = {{"forward", "spectral-side transform values"},
                    {"inverse", "reconstruction at the probe radii"}};

    if (o.format == "csv") {
        write_output(o, meta, cr); // csv carries the r-side table
    } else {
        json j;
        j["meta"] = meta;
        j["data"] = columns_to_json(c);
        j["data"].update(columns_to_json(cr));
        std::string payload = j.dump(2);
        payload += '\n';
        if (o.out.empty()) {
            std::cout << payload;
        } else {
            std::ofstream f(o.out, std::ios::binary);
            if (!f)
                throw std::invalid_argument("cannot open output path: " + o.out);
            f << payload;
        }
    }
    return pres.conclusive ? exit_ok : exit_inconclusive;
}

int run_verify(const CommonOpts& o) {
    const auto overrides = parse_tols(o.tol_kv);
    const auto results = isqcli::run_verify_suite(overrides);

    int failed = 0, inconclusive = 0;
    json checks = json::array();
    for (const auto& r : results) {
        const char* status = r.pass ? "PASS" : (r.inconclusive ? "INCONCLUSIVE" : "FAIL");
        if (!r.pass && !r.inconclusive)
            ++failed;
        if (r.inconclusive)
            ++inconclusive;
        std::cerr << status << "  " << r.name << "  defect=" << format_double(r.defect)
                  << "  tol=" << format_double(r.tolerance) << "\n";
        checks.push_back({{"name", r.name},
                          {"defect", r.defect},
                          {"tolerance", r.tolerance},
                          {"pass", r.pass},
                          {"inconclusive", r.inconclusive}});
    }
    json j;
    j["meta"] = {{"version", version_string}, {"command", "verify"}};
    j["data"] = {{"checks", checks},
                 {"summary",
                  {{"total", results.size()},
                   {"failed", failed},
                   {"inconclusive", inconclusive}}}};
    std::string payload = j.dump(2);
    payload += '\n';
    if (o.out.empty()) {
        std::cout << payload;
    } else {
        std::ofstream f(o.out, std::ios::binary);
        if (!f)
            throw std::invalid_argument("cannot open output path: " + o.out);
        f << payload;
    }
    if (failed)
        return exit_numerical;
    return inconclusive ? exit_inconclusive : exit_ok;
}

int run_table(const CommonOpts& o) {
    const std::filesystem::path dir = o.out.empty() ? "golden" : o.out;
    std::filesystem::create_directories(dir);
    for (const auto& t : isqcli::generate_tables()) {
        {
            std::ofstream f(dir / (t.name + ".json"), std::ios::binary);
            f << t.json.dump(2) << '\n';
        }
        {
            std::ofstream f(dir / (t.name + ".csv"), std::ios::binary);
            f << t.csv;
        }
    }
    std::cerr << (o.seed_goldens ? "seeded" : "wrote") << " regression tables under " << dir
              << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"eigenfunction expansions and spectral measures for the half-line "
                 "inverse-square operator"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_param_opts = [&](CLI::App* cmd) {
        cmd->add_option("--kappa", o.kappa, "singularity strength parameter, |kappa| < 1");
        cmd->add_option("--theta", o.theta, "extension angle (radians)");
        cmd->add_option("--theta-mode", o.theta_mode,
                        "absolute | offset-from-theta-kappa");
    };
    auto add_io_opts = [&](CLI::App* cmd) {
        cmd->add_option("--out", o.out, "output path (stdout when omitted)");
        cmd->add_option("--format", o.format, "json | csv");
    };

    auto* eval = app.add_subcommand("eval", "tabulate u_theta, w, v over (E, r) grids");
    add_param_opts(eval);
    eval->add_option("--r-grid", o.r_grid, "min:max:n[:log]");
    eval->add_option("--e-grid", o.e_grid, "min:max:n[:log]");
    add_io_opts(eval);

    auto* measure = app.add_subcommand(
        "measure", "spectral density, atom, and m-function boundary traces");
    add_param_opts(measure);
    measure->add_option("--e-grid", o.e_grid, "min:max:n[:log]");
    measure->add_option("--eta-list", o.eta_list, "decreasing eta values")
        ->delimiter(',');
    add_io_opts(measure);

    auto* transform =
        app.add_subcommand("transform", "forward/inverse expansion of a test function");
    add_param_opts(transform);
    transform->add_option("--r-grid", o.r_grid,
                          "support and probe grid for the test function");
    transform->add_option("--e-max", o.e_max, "spectral truncation energy");
    transform->add_option("--psi-file", o.psi_file,
                          "JSON grid function ({support,nodes,weights,values})");
    add_io_opts(transform);

    auto* verify =
        app.add_subcommand("verify", "run the full invariant suite and report defects");
    verify->add_option("--tol", o.tol_kv, "override check tolerance, name=value")
        ->take_all();
    add_io_opts(verify);

    auto* table = app.add_subcommand("table", "write deterministic regression tables");
    table->add_option("--out", o.out, "output directory (default ./golden)");
    table->add_flag("--seed-goldens", o.seed_goldens,
                    "regenerate the committed golden tree");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (eval->parsed())
            return run_eval(o);
        if (measure->parsed())
            return run_measure(o);
        if (transform->parsed())
            return run_transform(o);
        if (verify->parsed())
            return run_verify(o);
        if (table->parsed())
            return run_table(o);
    } catch (const series_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const quadrature_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::domain_error& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    }
    return exit_usage;
}

#include "mconv/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mconv/json_io.hpp"
#include "mconv/star.hpp"
#include "mconv/transfer.hpp"

namespace mconv {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ojson load_json(const std::string& path) { return parse_json(read_file(path)); }

void emit(const ojson& j) { std::cout << j.dump(2) << "\n"; }

// 17 significant digits, enough to reproduce any double exactly.
std::string fmt17(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string alpha_key(const MultiIndex& a) {
    std::string s;
    for (std::size_t j = 0; j < a.dim(); ++j) {
        if (j) s += ' ';
        s += std::to_string(a[j]);
    }
    return s;
}

JetFunction rhs_builtin(const std::string& name) {
    if (name == "one") return jet_from_polynomial(Polynomial::constant(1, Rational(1)));
    if (name == "x") return jet_from_polynomial(Polynomial::monomial(1, MultiIndex({1})));
    if (name == "x2") return jet_from_polynomial(Polynomial::monomial(1, MultiIndex({2})));
    if (name == "x3") return jet_from_polynomial(Polynomial::monomial(1, MultiIndex({3})));
    if (name == "x4") return jet_from_polynomial(Polynomial::monomial(1, MultiIndex({4})));
    if (name == "log") return jet_log();
    if (name == "log2") return jet_log_power(2);
    if (name == "log3") return jet_log_power(3);
    if (name == "exp") return jet_exp();
    if (name.rfind("pow:", 0) == 0) {
        try {
            return jet_power(std::stod(name.substr(4)));
        } catch (const std::exception&) {
            throw ValidationError("bad exponent in '" + name + "'");
        }
    }
    if (name.rfind("logpow:", 0) == 0) {
        try {
            const int k = std::stoi(name.substr(7));
            if (k < 0) throw ValidationError("logpow exponent must be non-negative");
            return jet_log_power(static_cast<unsigned>(k));
        } catch (const ValidationError&) {
            throw;
        } catch (const std::exception&) {
            throw ValidationError("bad exponent in '" + name + "'");
        }
    }
    throw ValidationError(
        "unknown rhs '" + name +
        "' (builtins: one, x, x2, x3, x4, log, log2, log3, exp, pow:<s>, logpow:<k>; "
        "or a grid-function JSON file)");
}

int run(int argc, const char* const* argv) {
    CLI::App app{"Multiplicative convolution algebra of point-supported distributions"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- star ----------------------------------------------------------
    auto* star_cmd = app.add_subcommand("star", "Multiplicative convolution of two distributions");
    std::string star_a, star_b;
    int star_moments = -1;
    star_cmd->add_option("a", star_a, "first distribution (JSON file)")->required();
    star_cmd->add_option("b", star_b, "second distribution (JSON file)")->required();
    star_cmd->add_option("--moments", star_moments,
                         "also emit the moment table up to this degree");
    star_cmd->callback([&] {
        auto T = distribution_from_json(load_json(star_a));
        auto S = distribution_from_json(load_json(star_b));
        auto R = star(T, S);
        if (star_moments < 0) {
            emit(to_json(R));
        } else {
            ojson out;
            out["distribution"] = to_json(R);
            out["moments"] = to_json(moment_table(
                R, std::vector<std::uint32_t>(R.dim(), static_cast<std::uint32_t>(star_moments))));
            emit(out);
        }
    });

    // ---- moments -------------------------------------------------------
    auto* mom_cmd = app.add_subcommand("moments", "Moment (multiplier) table of a distribution");
    std::string mom_file, mom_output = "json";
    int mom_max = 0;
    mom_cmd->add_option("t", mom_file, "distribution (JSON file)")->required();
    mom_cmd->add_option("--max", mom_max, "max degree per coordinate")->required();
    mom_cmd->add_option("--output", mom_output, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    mom_cmd->callback([&] {
        if (mom_max < 0) throw ValidationError("--max must be non-negative");
        auto T = distribution_from_json(load_json(mom_file));
        auto S = moment_table(
            T, std::vector<std::uint32_t>(T.dim(), static_cast<std::uint32_t>(mom_max)));
        if (mom_output == "json") {
            emit(to_json(S));
        } else {
            std::cout << "alpha,value\n";
            S.for_each([&](const MultiIndex& a, const Rational& v) {
                std::cout << alpha_key(a) << "," << v.to_string() << "\n";
            });
        }
    });

    // ---- euler ---------------------------------------------------------
    auto* eu_cmd = app.add_subcommand("euler", "Euler operator conversions and symbol");
    std::string eu_file;
    bool eu_to_xd = false, eu_to_dist = false;
    std::vector<double> eu_symbol;
    eu_cmd->add_option("op", eu_file, "operator (JSON file)")->required();
    eu_cmd->add_flag("--to-xd", eu_to_xd, "emit the x^a d^a presentation");
    eu_cmd->add_flag("--to-dist", eu_to_dist, "emit the distribution presentation");
    eu_cmd->add_option("--symbol", eu_symbol,
                       "evaluate the symbol at z (d real values, or d re/im pairs)")
        ->expected(-1);
    eu_cmd->callback([&] {
        auto P = operator_from_json(load_json(eu_file));
        const int chosen = (eu_to_xd ? 1 : 0) + (eu_to_dist ? 1 : 0) + (eu_symbol.empty() ? 0 : 1);
        if (chosen != 1)
            throw ValidationError("choose exactly one of --to-xd, --to-dist, --symbol");
        if (eu_to_xd) {
            emit(xd_form_to_json(P.dim(), P.to_xd_form()));
        } else if (eu_to_dist) {
            emit(to_json(P.to_distribution()));
        } else {
            std::vector<std::complex<double>> z;
            if (eu_symbol.size() == P.dim()) {
                for (double v : eu_symbol) z.emplace_back(v, 0.0);
            } else if (eu_symbol.size() == 2 * P.dim()) {
                for (std::size_t j = 0; j < P.dim(); ++j)
                    z.emplace_back(eu_symbol[2 * j], eu_symbol[2 * j + 1]);
            } else {
                throw ValidationError("--symbol expects d values or 2d re/im pairs");
            }
            const auto v = P.symbol(z);
            ojson out;
            out["re"] = v.real();
            out["im"] = v.imag();
            emit(out);
        }
    });

    // ---- cauchy --------------------------------------------------------
    auto* ca_cmd = app.add_subcommand("cauchy", "Cauchy transform and its Taylor table");
    std::string ca_file;
    int ca_degree = 0;
    ca_cmd->add_option("t", ca_file, "distribution (JSON file)")->required();
    ca_cmd->add_option("--degree", ca_degree, "Taylor degree per coordinate")->required();
    ca_cmd->callback([&] {
        if (ca_degree < 0) throw ValidationError("--degree must be non-negative");
        auto T = distribution_from_json(load_json(ca_file));
        auto F = cauchy_transform(T);
        ojson out;
        out["transform"] = to_json(F);
        out["taylor"] = to_json(taylor_coefficients(
            F, std::vector<std::uint32_t>(T.dim(), static_cast<std::uint32_t>(ca_degree))));
        emit(out);
    });

    // ---- hadamard ------------------------------------------------------
    auto* ha_cmd = app.add_subcommand("hadamard", "Entrywise product of two coefficient tables");
    std::string ha_a, ha_b;
    ha_cmd->add_option("a", ha_a, "first series table (JSON file)")->required();
    ha_cmd->add_option("b", ha_b, "second series table (JSON file)")->required();
    ha_cmd->callback([&] {
        auto A = series_from_json(load_json(ha_a));
        auto B = series_from_json(load_json(ha_b));
        emit(to_json(hadamard_product(A, B)));
    });

    // ---- sdcheck -------------------------------------------------------
    auto* sd_cmd = app.add_subcommand("sdcheck", "Slowly-decreasing check (semi-decision)");
    std::string sd_file;
    const SDConfig sd_cfg_defaults;
    double sd_a = sd_cfg_defaults.a, sd_b = 0, sd_c = -1, sd_xmax = sd_cfg_defaults.x_max;
    int sd_grid = 0, sd_samples = sd_cfg_defaults.samples;
    sd_cmd->add_option("t", sd_file, "distribution (JSON file)")->required();
    sd_cmd->add_option("--a", sd_a, "ball radius factor a")->capture_default_str();
    sd_cmd->add_option("--b", sd_b, "lower-bound constant b (0 = tune automatically)")
        ->capture_default_str();
    sd_cmd->add_option("--c", sd_c, "decay exponent c (-1 = default 2*(order+1))")
        ->capture_default_str();
    sd_cmd->add_option("--xmax", sd_xmax, "grid extent per coordinate")->capture_default_str();
    sd_cmd->add_option("--grid", sd_grid, "grid points per coordinate (0 = per-dim default)")
        ->capture_default_str();
    sd_cmd->add_option("--samples", sd_samples, "sample budget per grid point")
        ->capture_default_str();
    sd_cmd->callback([&] {
        auto T = distribution_from_json(load_json(sd_file));
        SDConfig cfg;
        cfg.a = sd_a;
        if (sd_b != 0) cfg.b = sd_b;
        if (sd_c >= 0) cfg.c = sd_c;
        cfg.x_max = sd_xmax;
        cfg.x_grid = sd_grid;
        cfg.samples = sd_samples;
        auto rep = slowly_decreasing_check(T, cfg);
        emit(to_json(rep));
        if (rep.verdict == SDVerdict::inconclusive) exit_code = 4;
        else if (rep.verdict == SDVerdict::fail) exit_code = 3;
    });

    // ---- transfer-check --------------------------------------------------
    auto* tr_cmd = app.add_subcommand(
        "transfer-check", "Compare star against the log/convolve/exp transfer route");
    std::string tr_a, tr_b;
    int tr_degree = 6;
    double tr_tol = 1e-8;
    tr_cmd->add_option("a", tr_a, "first distribution (JSON file)")->required();
    tr_cmd->add_option("b", tr_b, "second distribution (JSON file)")->required();
    tr_cmd->add_option("--max-degree", tr_degree, "moment degree to compare up to")
        ->capture_default_str();
    tr_cmd->add_option("--tol", tr_tol, "relative tolerance")->capture_default_str();
    tr_cmd->callback([&] {
        if (tr_degree < 0) throw ValidationError("--max-degree must be non-negative");
        auto T = distribution_from_json(load_json(tr_a));
        auto S = distribution_from_json(load_json(tr_b));
        auto direct = star(T, S);
        auto transferred =
            exp_pushforward(classical_convolution(log_pushforward(T), log_pushforward(S)));
        const std::vector<std::uint32_t> md(T.dim(), static_cast<std::uint32_t>(tr_degree));
        double worst = 0;
        ojson entries = ojson::array();
        for_each_leq(md, [&](const MultiIndex& alpha) {
            const Rational exact = direct.moment(alpha);
            const double got = transferred.moment(alpha).to_double();
            const double want = exact.to_double();
            const double err = std::abs(got - want) / std::max(1.0, std::abs(want));
            worst = std::max(worst, err);
            ojson e;
            e["alpha"] = ojson::array();
            for (std::size_t j = 0; j < alpha.dim(); ++j) e["alpha"].push_back(alpha[j]);
            e["star"] = exact.to_string();
            e["transfer"] = got;
            e["rel_error"] = err;
            entries.push_back(std::move(e));
        });
        ojson out;
        out["max_degree"] = tr_degree;
        out["tol"] = tr_tol;
        out["max_rel_error"] = worst;
        out["pass"] = worst <= tr_tol;
        out["entries"] = std::move(entries);
        emit(out);
        if (worst > tr_tol) exit_code = 3;
    });

    // ---- vset / uset -----------------------------------------------------
    auto* vs_cmd = app.add_subcommand("vset", "Scaling set {eta : eta X within Y}");
    std::string vs_x, vs_y;
    vs_cmd->add_option("x", vs_x, "box X (JSON file)")->required();
    vs_cmd->add_option("y", vs_y, "box Y (JSON file)")->required();
    vs_cmd->callback([&] {
        emit(to_json(v_set(box_from_json(load_json(vs_x)), box_from_json(load_json(vs_y)))));
    });

    auto* us_cmd = app.add_subcommand("uset", "Admissible dilation set for a region pair");
    std::string us_op, us_om;
    us_cmd->add_option("inner", us_op, "relatively compact inner box (JSON file)")->required();
    us_cmd->add_option("outer", us_om, "outer box (JSON file)")->required();
    us_cmd->callback([&] {
        emit(to_json(u_set(box_from_json(load_json(us_op)), box_from_json(load_json(us_om)))));
    });

    // ---- hull ------------------------------------------------------------
    auto* hu_cmd = app.add_subcommand("hull", "Multiplicative convex hull (vertex set)");
    std::string hu_file;
    hu_cmd->add_option("points", hu_file, "point set (JSON file)")->required();
    hu_cmd->callback([&] { emit(to_json(mconv_hull(pointset_from_json(load_json(hu_file))))); });

    // ---- solve -----------------------------------------------------------
    auto* so_cmd = app.add_subcommand("solve", "Particular solution of P(theta) u = f on (r, R)");
    std::string so_op, so_rhs = "one", so_output = "csv";
    std::vector<double> so_interval;
    int so_n = 1024;
    so_cmd->add_option("--op", so_op, "operator (JSON file)")->required();
    so_cmd->add_option("--interval", so_interval, "interval endpoints r R")
        ->expected(2)
        ->required();
    so_cmd->add_option("--n", so_n, "grid size")->capture_default_str();
    so_cmd->add_option("--rhs", so_rhs, "right-hand side: builtin name or grid JSON file")
        ->capture_default_str();
    so_cmd->add_option("--output", so_output, "output format: csv or json")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    so_cmd->callback([&] {
        auto P = operator_from_json(load_json(so_op));
        const double r = so_interval.at(0), R = so_interval.at(1);
        GridFunction u, f;
        bool builtin = true;
        try {
            f = GridFunction::sample(rhs_builtin(so_rhs), r, R, so_n);
        } catch (const ValidationError&) {
            builtin = false;
        }
        if (!builtin) {
            std::ifstream probe(so_rhs);
            if (!probe.good()) throw ValidationError("unknown rhs '" + so_rhs +
                "' (not a builtin name and not a readable file)");
            f = grid_from_json(load_json(so_rhs));
            if (f.n != so_n || f.r != r || f.R != R)
                throw ValidationError("rhs grid does not match --interval/--n");
        }
        u = solve_euler(P, f);
        const double res = residual(P, u, f);
        if (so_output == "csv") {
            std::cout << "x,u\n";
            for (int k = 0; k < u.n; ++k)
                std::cout << fmt17(u.node(k)) << "," << fmt17(u.values[static_cast<std::size_t>(k)])
                          << "\n";
            std::cout << "# residual = " << fmt17(res) << "\n";
        } else {
            ojson out;
            out["grid"] = to_json(u);
            out["residual"] = res;
            emit(out);
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace

int cli_main(int argc, const char* const* argv) {
    try {
        return run(argc, argv);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericError& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace mconv

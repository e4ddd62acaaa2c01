#include "table_check.hpp"

#include "pitune/pitune.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using cli::strf;
using nlohmann::ordered_json;

constexpr double kDefaultDt = 0.005;
constexpr double kDefaultBand = 0.02;

double default_horizon(const pitune::Plant& plant) {
    return 30.0 * std::max(plant.t1(), 2.0 * plant.t2());
}

std::string complex_str(pitune::Complex z) {
    if (std::abs(z.imag()) <= 1e-9 * std::max(1.0, std::abs(z.real()))) {
        return strf("%.6g", z.real());
    }
    return strf("%.6g%+.6gj", z.real(), z.imag());
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 4;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: failed while writing " << path << "\n";
        return 4;
    }
    return 0;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw std::invalid_argument("frequency grid needs 0 < wmin < wmax and points >= 2");
    }
    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[static_cast<std::size_t>(i)] =
            lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    }
    return grid;
}

int run_tune(double kp, double t1, double t2, const std::string& format) {
    const pitune::Plant plant(kp, t1, t2);
    const pitune::PiController ctrl = pitune::tune_pi(plant);
    const pitune::SecondOrderParams so = pitune::damping_params(plant, ctrl);
    if (format == "json") {
        const ordered_json j{
            {"k", ctrl.k()}, {"ti", ctrl.ti()}, {"zeta", so.zeta}, {"wn", so.wn}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << strf("K    = %.6g\n", ctrl.k());
        std::cout << strf("Ti   = %.6g s\n", ctrl.ti());
        std::cout << strf("zeta = %.6g\n", so.zeta);
        std::cout << strf("wn   = %.6g rad/s\n", so.wn);
    }
    return 0;
}

int run_analyze(double kp, double t1, double t2, std::optional<double> k,
                std::optional<double> ti, const std::string& format) {
    const pitune::Plant plant(kp, t1, t2);
    const pitune::PiController tuned = pitune::tune_pi(plant);
    const bool is_tuned = !k.has_value() && !ti.has_value();
    const pitune::PiController ctrl(k.value_or(tuned.k()), ti.value_or(tuned.ti()));

    const pitune::ClosedLoopReport report = pitune::analyze_closed_loop(plant, ctrl);
    const pitune::FreqMetrics fm = pitune::robustness_report(plant, ctrl);

    std::optional<pitune::SecondOrderParams> so;
    if (std::abs(ctrl.ti() - plant.t1()) <= 1e-12 * plant.t1()) {
        so = pitune::damping_params(plant, ctrl);
    }

    if (format == "json") {
        ordered_json j;
        j["k"] = ctrl.k();
        j["ti"] = ctrl.ti();
        j["tuned"] = is_tuned;
        j["poles"] = ordered_json::array();
        for (pitune::Complex p : report.poles) {
            j["poles"].push_back({{"re", p.real()}, {"im", p.imag()}});
        }
        j["cancellation_detected"] = report.cancellation_detected;
        j["vieta_residuals"] = report.vieta_residuals;
        if (so) {
            j["zeta"] = so->zeta;
            j["wn"] = so->wn;
        }
        j["ms"] = fm.ms;
        j["mt"] = fm.mt;
        j["pm_deg"] = fm.pm_deg;
        j["wgc"] = fm.wgc;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::cout << strf("plant: Kp = %.6g, T1 = %.6g s, T2 = %.6g s\n", plant.kp(), plant.t1(),
                      plant.t2());
    std::cout << strf("controller: K = %.6g, Ti = %.6g s (%s)\n", ctrl.k(), ctrl.ti(),
                      is_tuned ? "tuned" : "provided");
    std::cout << "poles: " << complex_str(report.poles[0]) << ", "
              << complex_str(report.poles[1]) << ", " << complex_str(report.poles[2]) << "\n";
    std::cout << strf("cancellation at -1/Ti: %s\n",
                      report.cancellation_detected ? "yes" : "no");
    std::cout << strf("vieta residuals: %.3g, %.3g, %.3g\n", report.vieta_residuals[0],
                      report.vieta_residuals[1], report.vieta_residuals[2]);
    if (so) {
        const char* damping = std::abs(so->zeta - 1.0) <= 1e-9 ? "critically damped"
                              : so->zeta < 1.0                 ? "underdamped"
                                                               : "overdamped";
        std::cout << strf("zeta = %.6g (%s), wn = %.6g rad/s\n", so->zeta, damping, so->wn);
    }
    std::cout << strf("Ms = %.3f   Mt = %.3f   PM = %.2f deg   wgc = %.6g rad/s\n", fm.ms,
                      fm.mt, fm.pm_deg, fm.wgc);
    return 0;
}

int run_simulate(double kp, double t1, double t2, double dt, double band, double horizon,
                 const std::string& out, const std::string& format) {
    const pitune::Plant plant(kp, t1, t2);
    const pitune::PiController ctrl = pitune::tune_pi(plant);
    const pitune::RationalTF g = pitune::closed_loop(plant, ctrl);
    const double hz = horizon > 0.0 ? horizon : default_horizon(plant);

    const pitune::StepResponse r = pitune::simulate_step(g, dt, hz);
    const pitune::StepMetrics m = pitune::step_metrics(r, band);

    if (!out.empty()) {
        std::string csv = "t,y,y_analytic\n";
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const double t = static_cast<double>(i) * r.dt;
            csv += strf("%.17g,%.17g,%.17g\n", t, r.samples[i],
                        pitune::analytic_step_tuned(plant.t2(), t));
        }
        const int rc = write_file(out, csv);
        if (rc != 0) {
            return rc;
        }
    }

    if (format == "json") {
        const ordered_json j{{"k", ctrl.k()},
                             {"ti", ctrl.ti()},
                             {"ts", m.ts},
                             {"po", m.po},
                             {"monotonic", m.monotonic}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << strf("controller: K = %.6g, Ti = %.6g s (tuned)\n", ctrl.k(), ctrl.ti());
        std::cout << strf("Ts = %.3f s (band %g%%)\n", m.ts, 100.0 * band);
        std::cout << strf("PO = %.3f %%\n", m.po);
        std::cout << strf("monotonic: %s\n", m.monotonic ? "YES" : "NO");
    }
    return 0;
}

int run_verify(double dt, double band, const std::string& format) {
    const cli::VerifyOutcome v = cli::run_verify(dt, band);
    if (format == "json") {
        std::cout << cli::render_verify_json(v);
    } else {
        std::cout << cli::render_verify_text(v);
    }
    return v.all_pass ? 0 : 1;
}

int run_export(const std::string& kind, double kp, double t1, double t2, double wmin,
               double wmax, int points, double dt, double horizon, std::string out) {
    const pitune::Plant plant(kp, t1, t2);
    const pitune::PiController ctrl = pitune::tune_pi(plant);
    if (out.empty()) {
        out = kind + ".csv";
    }

    std::string csv;
    if (kind == "step") {
        const double hz = horizon > 0.0 ? horizon : default_horizon(plant);
        const pitune::StepResponse r =
            pitune::simulate_step(pitune::closed_loop(plant, ctrl), dt, hz);
        csv = "t,y,y_analytic\n";
        for (std::size_t i = 0; i < r.samples.size(); ++i) {
            const double t = static_cast<double>(i) * r.dt;
            csv += strf("%.17g,%.17g,%.17g\n", t, r.samples[i],
                        pitune::analytic_step_tuned(plant.t2(), t));
        }
        return write_file(out, csv);
    }

    const double lo = wmin > 0.0 ? wmin : 1e-2 / plant.t2();
    const double hi = wmax > 0.0 ? wmax : 1e2 / plant.t2();
    const std::vector<double> grid = log_grid(lo, hi, points);

    if (kind == "nyquist") {
        const pitune::RationalTF t = pitune::closed_loop(plant, ctrl);
        csv = "omega,re,im\n";
        for (const pitune::FreqSample& s : pitune::nyquist_points(t, grid)) {
            csv += strf("%.17g,%.17g,%.17g\n", s.omega, s.value.real(), s.value.imag());
        }
        return write_file(out, csv);
    }

    const pitune::RationalTF l = pitune::loop_tf(plant, ctrl);
    const pitune::RationalTF s = pitune::sensitivity_tf(l);
    const pitune::RationalTF t = pitune::comp_sensitivity_tf(l);
    csv = "omega,mag_L,phase_L_deg,mag_S,mag_T\n";
    for (double w : grid) {
        csv += strf("%.17g,%.17g,%.17g,%.17g,%.17g\n", w, std::abs(pitune::tf_eval(l, w)),
                    pitune::unwrapped_phase_deg(l, w), std::abs(pitune::tf_eval(s, w)),
                    std::abs(pitune::tf_eval(t, w)));
    }
    return write_file(out, csv);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PI tuning for stable second-order plants by cancelling the slow pole and "
                 "critically damping the loop"};
    app.require_subcommand(1);

    double kp = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double k_flag = 0.0;
    double ti_flag = 0.0;
    double dt = kDefaultDt;
    double band = kDefaultBand;
    double horizon = 0.0;
    double wmin = 0.0;
    double wmax = 0.0;
    int points = 500;
    std::string out;
    std::string format = "text";
    std::string kind;

    const auto add_plant_flags = [&](CLI::App* cmd) {
        cmd->add_option("--kp", kp, "plant gain Kp")->required();
        cmd->add_option("--t1", t1, "slow time constant T1 in seconds")->required();
        cmd->add_option("--t2", t2, "fast time constant T2 in seconds")->required();
    };
    const auto add_format_flag = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* tune = app.add_subcommand("tune", "compute the PI gains K = T1/(4 Kp T2), Ti = T1");
    add_plant_flags(tune);
    add_format_flag(tune);

    CLI::App* analyze =
        app.add_subcommand("analyze", "closed-loop poles, cancellation, and robustness metrics");
    add_plant_flags(analyze);
    CLI::Option* k_opt = analyze->add_option("--k", k_flag, "controller gain (default: tuned)");
    CLI::Option* ti_opt =
        analyze->add_option("--ti", ti_flag, "integral time in seconds (default: tuned)");
    add_format_flag(analyze);

    CLI::App* simulate =
        app.add_subcommand("simulate", "step response of the tuned closed loop with metrics");
    add_plant_flags(simulate);
    simulate->add_option("--dt", dt, "integration step in seconds")->capture_default_str();
    simulate->add_option("--band", band, "settling band as a fraction")->capture_default_str();
    simulate->add_option("--horizon", horizon,
                         "simulation horizon in seconds (default: 30*max(T1, 2*T2))");
    simulate->add_option("--out", out, "write the response as CSV to this path");
    add_format_flag(simulate);

    CLI::App* verify = app.add_subcommand(
        "verify", "recompute the six benchmark plants and check every published cell");
    verify->add_option("--dt", dt, "integration step in seconds")->capture_default_str();
    verify->add_option("--band", band, "settling band as a fraction")->capture_default_str();
    add_format_flag(verify);

    CLI::App* exp = app.add_subcommand("export", "write nyquist, bode, or step data as CSV");
    exp->add_option("kind", kind, "data set to export")
        ->required()
        ->check(CLI::IsMember({"nyquist", "bode", "step"}));
    add_plant_flags(exp);
    exp->add_option("--wmin", wmin, "lowest frequency in rad/s (default: 1e-2/T2)");
    exp->add_option("--wmax", wmax, "highest frequency in rad/s (default: 1e2/T2)");
    exp->add_option("--points", points, "number of grid points")->capture_default_str();
    exp->add_option("--dt", dt, "integration step for step export")->capture_default_str();
    exp->add_option("--horizon", horizon,
                    "horizon for step export (default: 30*max(T1, 2*T2))");
    exp->add_option("--out", out, "output path (default: <kind>.csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tune->parsed()) {
            return run_tune(kp, t1, t2, format);
        }
        if (analyze->parsed()) {
            std::optional<double> k;
            std::optional<double> ti;
            if (k_opt->count() > 0) {
                k = k_flag;
            }
            if (ti_opt->count() > 0) {
                ti = ti_flag;
            }
            return run_analyze(kp, t1, t2, k, ti, format);
        }
        if (simulate->parsed()) {
            return run_simulate(kp, t1, t2, dt, band, horizon, out, format);
        }
        if (verify->parsed()) {
            return run_verify(dt, band, format);
        }
        if (exp->parsed()) {
            return run_export(kind, kp, t1, t2, wmin, wmax, points, dt, horizon, out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const pitune::NotSettled& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

#include "commands.hpp"

#include "hgrid/demand.hpp"
#include "hgrid/error.hpp"
#include "hgrid/sarima.hpp"
#include "hgrid/scenario.hpp"
#include "hgrid/simulation.hpp"
#include "hgrid/trace_io.hpp"

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <charconv>
#include <future>
#include <ostream>

namespace hgrid::cli {

namespace {

// Everything that would stop a run before its first tick.
std::vector<std::string> scenario_issues(Scenario const& sc)
{
    std::vector<std::string> out = config_problems(sc.config);
    for (auto const& v : validate_topology(sc.topology))
        out.push_back(fmt::format("{} [{}]: {}", v.entity, to_string(v.rule), v.detail));
    auto check_path = [&](char const* what, std::optional<std::filesystem::path> const& p) {
        if (p && !std::filesystem::is_regular_file(*p))
            out.push_back(fmt::format("{}: file '{}' does not exist", what, p->string()));
    };
    check_path("weather.csv", sc.config.weather.csv);
    check_path("loads.csv", sc.config.load_data.csv);
    return out;
}

void apply(RunOverrides const& o, ScenarioConfig& c)
{
    if (o.days) c.days = *o.days;
    if (o.priority) c.priority_enabled = *o.priority;
    if (o.health) c.health_enabled = *o.health;
    if (o.seed) c.seed = *o.seed;
}

// Runs `body`, mapping the library's exceptions onto exit codes.
template <typename F>
int guarded(std::ostream& err, F&& body)
{
    try {
        return body();
    } catch (IoError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kIoFailure;
    } catch (ValidationError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kInvalid;
    } catch (InputError const& e) {
        fmt::print(err, "error: {}\n", e.what());
        return kInvalid;
    } catch (SimulationError const& e) {
        fmt::print(err, "simulation failed: {}\n", e.what());
        return kSimFailure;
    } catch (std::exception const& e) {
        fmt::print(err, "simulation failed: {}\n", e.what());
        return kSimFailure;
    }
}

// Loads and checks a scenario; returns an exit code on failure.
std::optional<int> prepare(std::filesystem::path const& path, RunOverrides const& overrides, Scenario& sc,
                           std::ostream& err)
{
    int const rc = guarded(err, [&] {
        sc = load_scenario(path);
        return int{kOk};
    });
    if (rc != kOk) return rc;
    apply(overrides, sc.config);
    auto const issues = scenario_issues(sc);
    if (issues.empty()) return std::nullopt;
    for (auto const& i : issues) fmt::print(err, "violation: {}\n", i);
    return kInvalid;
}

std::string join(std::vector<double> const& v)
{
    return v.empty() ? std::string("-") : fmt::format("{:.6f}", fmt::join(v, " "));
}

bool parse_orders(std::string const& text, SarimaOrders& o)
{
    int vals[7];
    char const* p = text.data();
    char const* end = text.data() + text.size();
    for (int i = 0; i < 7; ++i) {
        auto const r = std::from_chars(p, end, vals[i]);
        if (r.ec != std::errc{}) return false;
        p = r.ptr;
        if (i < 6) {
            if (p == end || *p != ',') return false;
            ++p;
        }
    }
    if (p != end) return false;
    o = {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6]};
    return true;
}

} // namespace

int cmd_validate(std::filesystem::path const& config, std::ostream& out, std::ostream& err)
{
    Scenario sc;
    if (auto rc = prepare(config, {}, sc, err)) return *rc;
    fmt::print(out, "{}: ok ({} systems, {} loads, {} sources)\n", config.string(), sc.topology.systems.size(),
               sc.topology.loads.size(), sc.topology.sources.size());
    return kOk;
}

int cmd_simulate(std::filesystem::path const& config, std::filesystem::path const& out_dir,
                 RunOverrides const& overrides, std::ostream& out, std::ostream& err)
{
    Scenario sc;
    if (auto rc = prepare(config, overrides, sc, err)) return *rc;
    return guarded(err, [&] {
        auto const trace = run_simulation(sc.config, sc.topology);
        write_simulation_outputs(out_dir, trace);
        auto const& s = trace.summary;
        fmt::print(out, "{} days: zero-SoC events {}, unmet {:.3f} MWd, curtailed {:.3f} MWd, mean SoH {:.3f}%\n",
                   trace.records.size(), s.zero_soc_events, s.total_unmet_mwd, s.total_curtailed_mwd,
                   s.final_mean_soh_pct);
        return int{kOk};
    });
}

int cmd_compare(std::filesystem::path const& config, std::filesystem::path const& out_dir, CompareAxis axis,
                RunOverrides const& overrides, std::ostream& out, std::ostream& err)
{
    Scenario sc;
    if (auto rc = prepare(config, overrides, sc, err)) return *rc;
    return guarded(err, [&] {
        auto const inputs = prepare_inputs(sc.config, sc.topology);
        auto base_cfg = sc.config;
        auto treat_cfg = sc.config;
        bool ScenarioConfig::*toggle =
            axis == CompareAxis::priority ? &ScenarioConfig::priority_enabled : &ScenarioConfig::health_enabled;
        base_cfg.*toggle = false;
        treat_cfg.*toggle = true;

        auto baseline_run = std::async(std::launch::async,
                                       [&] { return run_simulation(base_cfg, sc.topology, inputs); });
        auto treatment = run_simulation(treat_cfg, sc.topology, inputs);
        auto baseline = baseline_run.get();

        auto const report = compare(baseline, treatment);
        write_comparison_outputs(out_dir, baseline, treatment, report);
        fmt::print(out,
                   "{} axis, {} days: SoH gap {:+.3f} pp, zero-SoC events {} -> {}, unmet {:.3f} -> {:.3f} MWd\n",
                   axis == CompareAxis::priority ? "priority" : "health", treatment.records.size(),
                   report.fleet_soh_gap_pp, report.baseline_zero_soc, report.treatment_zero_soc,
                   report.baseline_unmet_mwd, report.treatment_unmet_mwd);
        return int{kOk};
    });
}

int cmd_forecast(std::filesystem::path const& history, ForecastOptions const& options, std::ostream& out,
                 std::ostream& err)
{
    SarimaOrders orders;
    if (!parse_orders(options.orders, orders)) {
        fmt::print(err, "error: --orders expects seven integers p,d,q,P,D,Q,s\n");
        return kInvalid;
    }
    if (auto const problems = order_problems(orders); !problems.empty()) {
        for (auto const& p : problems) fmt::print(err, "error: {}\n", p);
        return kInvalid;
    }
    if (options.horizon < 1) {
        fmt::print(err, "error: --horizon must be >= 1\n");
        return kInvalid;
    }
    return guarded(err, [&] {
        auto const all = load_demand_csv(history);
        if (all.empty()) throw ValidationError(fmt::format("{}: no demand rows", history.string()));
        DemandSeries const* series = nullptr;
        if (options.load_id) {
            auto it = all.find(*options.load_id);
            if (it == all.end())
                throw ValidationError(fmt::format("{}: no rows for load {}", history.string(), *options.load_id));
            series = &it->second;
        } else if (all.size() == 1) {
            series = &all.begin()->second;
        } else {
            throw ValidationError(fmt::format("{} holds {} loads; choose one with --load", history.string(), all.size()));
        }
        if (series->values.size() < min_fit_length(orders)) {
            throw ValidationError(fmt::format("series has {} points; these orders need at least {}",
                                              series->values.size(), min_fit_length(orders)));
        }
        auto model = fit_sarima(series->values, orders);
        fmt::print(out, "orders: ({},{},{})({},{},{}){}\n", orders.p, orders.d, orders.q, orders.P, orders.D,
                   orders.Q, orders.s);
        fmt::print(out, "ar: {}\nma: {}\nseasonal_ar: {}\nseasonal_ma: {}\n", join(model.ar_coeffs),
                   join(model.ma_coeffs), join(model.seasonal_ar_coeffs), join(model.seasonal_ma_coeffs));
        fmt::print(out, "intercept: {:.6f}\nresidual_variance: {:.6f}\n", model.intercept, model.residual_variance);
        fmt::print(out, "converged: {} ({} iterations)\n", model.converged ? "yes" : "no", model.iterations);
        for (auto const& w : model.warnings) fmt::print(out, "warning: {}\n", w);
        int day = series->end_day();
        for (int h = 0; h < options.horizon; ++h, ++day) {
            double const f = forecast_one(model);
            fmt::print(out, "forecast {} {:.6f}\n", day, f);
            model = model.with_observation(f);
        }
        return int{kOk};
    });
}

} // namespace hgrid::cli

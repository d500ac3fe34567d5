#include "hgrid/simulation.hpp"

#include "hgrid/dispatch.hpp"
#include "hgrid/error.hpp"
#include "hgrid/synthetic.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <set>

namespace hgrid {

LoadForecaster::LoadForecaster(ForecastConfig config, std::vector<double> history)
    : config_(std::move(config)), history_(std::move(history))
{
}

std::size_t LoadForecaster::warm_up_length() const noexcept
{
    auto const s = static_cast<std::size_t>(std::max(config_.orders.s, 1));
    return std::max({3 * s, std::size_t{30}, min_fit_length(config_.orders)});
}

double LoadForecaster::forecast()
{
    auto const s = std::max(config_.orders.s, 1);
    if (config_.method == ForecastMethod::sarima && history_.size() >= warm_up_length()) {
        if (!model_ || since_fit_ >= config_.refit_interval_days) {
            auto const window = std::max(static_cast<std::size_t>(config_.training_window_days), warm_up_length());
            auto const n = std::min(window, history_.size());
            std::span<double const> tail(history_.data() + (history_.size() - n), n);
            model_ = fit_sarima(tail, config_.orders);
            since_fit_ = 0;
            ++fits_;
        }
        return forecast_one(*model_);
    }
    if (history_.size() >= static_cast<std::size_t>(s)) return std::max(0.0, seasonal_naive(history_, s));
    return history_.empty() ? 0.0 : history_.back();
}

void LoadForecaster::observe(double actual)
{
    history_.push_back(actual);
    if (model_) {
        model_ = model_->with_observation(actual);
        ++since_fit_;
    }
}

namespace {

std::vector<std::size_t> order_by_id(std::vector<StorageSystem> const& systems)
{
    std::vector<std::size_t> idx(systems.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return systems[a].id < systems[b].id; });
    return idx;
}

bool is_empty(StorageSystem const& s)
{
    return stored_energy(s) <= kZeroSocTolerance * s.capacity();
}

} // namespace

DailyRecord step_day(SimulationState& state, DayInputs const& inputs, StepOptions const& options)
{
    auto& topo = state.topology;
    DailyRecord rec;
    rec.day = inputs.day;

    // (1) generation from the day's weather
    auto const generation = predict_generation(inputs.weather, topo.sources);

    // (2) load forecasts
    std::vector<LoadCenter const*> loads;
    for (auto const& l : topo.loads) loads.push_back(&l);
    std::sort(loads.begin(), loads.end(), [](auto* a, auto* b) { return a->id < b->id; });
    std::map<int, double> forecasts;
    for (auto const* l : loads) {
        auto it = state.forecasters.find(l->id);
        if (it == state.forecasters.end())
            throw SimulationError(fmt::format("no forecaster for load {}", l->id));
        forecasts[l->id] = it->second.forecast();
    }

    // (3) targets and grid-level allocation
    auto const targets = compute_charge_targets(topo, forecasts);
    ChargeAllocation allocation;
    if (options.priority_enabled) {
        auto const order = prioritize(targets);
        allocation = allocate_priority(order, targets, generation, topo);
    } else {
        allocation = allocate_equal(generation, topo);
    }

    // (4) intra-system charge distribution
    std::map<int, double> charged;
    for (auto& sys : topo.systems) {
        double const q = std::min(allocation.inflow(sys.id), system_headroom(sys));
        if (q > 0.0) {
            if (options.health_enabled)
                distribute_charge_ranked(sys, q, options.score_weights);
            else
                distribute_charge_equal(sys, q);
        }
        charged[sys.id] = std::max(q, 0.0);
    }

    // (5) loads settle one after another against the updated stores
    std::map<int, double> discharged;
    for (auto const* l : loads) {
        auto it = inputs.demand.find(l->id);
        if (it == inputs.demand.end())
            throw SimulationError(fmt::format("no demand for load {} on day {}", l->id, inputs.day));
        std::vector<SystemLevel> levels;
        for (int sid : l->connected_systems) {
            auto const* sys = topo.find_system(sid);
            if (!sys) throw ValidationError(fmt::format("load {} references unknown system {}", l->id, sid));
            levels.push_back({sid, stored_energy(*sys)});
        }
        auto const share = discharge_shares(it->second, levels);
        for (auto const& c : share.contributions) {
            auto* sys = topo.find_system(c.system_id);
            double const amount = std::min(c.stored, stored_energy(*sys));
            if (amount <= 0.0) continue;
            auto const per_unit = apply_discharge(*sys, amount);
            for (std::size_t u = 0; u < per_unit.size(); ++u) {
                if (per_unit[u] > 0.0) degrade_on_discharge(sys->units[u], per_unit[u]);
            }
            discharged[c.system_id] += amount;
        }
        rec.loads.push_back({l->id, forecasts[l->id], share.demand, share.served, share.unmet});
    }

    // (6) record
    std::map<int, ChargeTarget> target_by_id;
    for (auto const& t : targets) target_by_id[t.system_id] = t;
    for (auto i : order_by_id(topo.systems)) {
        auto const& sys = topo.systems[i];
        auto const& t = target_by_id[sys.id];
        rec.systems.push_back({sys.id, system_soc(sys), mean_soh(sys), t.target, t.deficit, charged[sys.id],
                               discharged[sys.id], is_empty(sys)});
    }
    for (auto const& [id, energy] : generation) rec.sources.push_back({id, energy, allocation.curtailed_from(id)});

    for (auto const* l : loads) state.forecasters.at(l->id).observe(inputs.demand.at(l->id));
    return rec;
}

void apply_unit_variation(GridTopology& topology, UnitVariation const& v, std::uint64_t seed)
{
    for (auto& sys : topology.systems) {
        for (auto& unit : sys.units) {
            double const u = Rng::for_stream(seed, fmt::format("unit-variation/{}/{}", sys.id, unit.id)).uniform();
            unit.soh = 100.0 - u * (100.0 - v.initial_soh_min);
            double const m = 1.0 + u * (v.rate_multiplier_max - 1.0);
            unit.r_charge *= m;
            unit.r_discharge *= m;
        }
    }
}

ScenarioInputs prepare_inputs(ScenarioConfig const& config, GridTopology const& topology)
{
    ScenarioInputs in;
    if (config.weather.csv) {
        in.weather = WeatherTable(load_weather_csv(*config.weather.csv));
    } else {
        std::set<std::string> sites;
        for (auto const& s : topology.sources) sites.insert(s.site_id);
        for (auto const& site : sites) {
            for (auto& sample : synth_weather(config.seed, config.days, site, config.weather.params_for(site)))
                in.weather.add(std::move(sample));
        }
    }

    auto const& ld = config.load_data;
    if (ld.csv) {
        in.demand = load_demand_csv(*ld.csv);
        return in;
    }
    double total = ld.total_mean_mwd;
    if (ld.generation_fraction > 0.0) {
        double generated = 0.0;
        for (int d = 0; d < config.days; ++d) {
            for (auto const& [id, e] : predict_generation(in.weather.day(d), topology.sources)) generated += e;
        }
        total = ld.generation_fraction * generated / config.days;
    }
    double weight_sum = 0.0;
    auto weight_of = [&](int id) {
        auto it = ld.weights.find(id);
        return it == ld.weights.end() ? 1.0 : it->second;
    };
    for (auto const& l : topology.loads) weight_sum += weight_of(l.id);
    for (auto const& l : topology.loads) {
        double const mean = weight_sum > 0.0 ? total * weight_of(l.id) / weight_sum : 0.0;
        DemandSeries series;
        series.first_day = -ld.history_days;
        series.values = synth_load(config.seed, l.id, mean, ld.history_days + config.days, ld.params, -ld.history_days);
        in.demand[l.id] = std::move(series);
    }
    return in;
}

TraceSummary summarize(GridTopology const& topology, std::vector<DailyRecord> const& records,
                       GridTopology const& final_state)
{
    TraceSummary sum;
    std::map<int, SystemSummary> by_id;
    for (auto const& s : topology.systems) by_id[s.id].system_id = s.id;
    std::map<int, LoadCenter const*> loads;
    for (auto const& l : topology.loads) loads[l.id] = &l;
    std::map<int, EnergySource const*> sources;
    for (auto const& s : topology.sources) sources[s.id] = &s;

    for (auto const& rec : records) {
        for (auto const& s : rec.systems) {
            if (s.zero_soc) ++by_id[s.system_id].zero_soc_events;
        }
        for (auto const& l : rec.loads) {
            sum.total_demand_mwd += l.demand;
            sum.total_served_mwd += l.served;
            sum.total_unmet_mwd += l.unmet;
            auto const& conn = loads.at(l.load_id)->connected_systems;
            for (int sid : conn) by_id[sid].unmet_mwd += l.unmet / static_cast<double>(conn.size());
        }
        for (auto const& s : rec.sources) {
            sum.total_generated_mwd += s.generated;
            sum.total_curtailed_mwd += s.curtailed;
            auto const& conn = sources.at(s.source_id)->connected_systems;
            for (int sid : conn) by_id[sid].curtailed_mwd += s.curtailed / static_cast<double>(conn.size());
        }
    }
    double soh_total = 0.0;
    std::size_t unit_count = 0;
    for (auto const& sys : final_state.systems) {
        by_id[sys.id].final_mean_soh_pct = mean_soh(sys);
        for (auto const& u : sys.units) soh_total += u.soh;
        unit_count += sys.units.size();
    }
    sum.final_mean_soh_pct = unit_count ? soh_total / static_cast<double>(unit_count) : 0.0;
    for (auto const& [id, s] : by_id) {
        sum.zero_soc_events += s.zero_soc_events;
        sum.systems.push_back(s);
    }
    return sum;
}

SimulationTrace run_simulation(ScenarioConfig const& config, GridTopology const& topology)
{
    return run_simulation(config, topology, prepare_inputs(config, topology));
}

SimulationTrace run_simulation(ScenarioConfig const& config, GridTopology const& topology,
                               ScenarioInputs const& inputs)
{
    auto const problems = config_problems(config);
    if (!problems.empty()) throw ValidationError(fmt::format("invalid scenario: {}", problems.front()));
    auto const violations = validate_topology(topology);
    if (!violations.empty()) {
        auto const& v = violations.front();
        throw ValidationError(fmt::format("invalid topology: {} [{}] {}", v.entity, to_string(v.rule), v.detail));
    }

    SimulationState state;
    state.topology = topology;
    if (config.degradation.variation.active())
        apply_unit_variation(state.topology, config.degradation.variation, config.seed);

    for (auto const& l : topology.loads) {
        auto it = inputs.demand.find(l.id);
        if (it == inputs.demand.end()) throw SimulationError(fmt::format("no demand data for load {}", l.id));
        state.forecasters.emplace(l.id, LoadForecaster(config.forecasting, it->second.before(0)));
    }
    std::set<std::string> sites;
    for (auto const& s : topology.sources) sites.insert(s.site_id);

    StepOptions const options{config.priority_enabled, config.health_enabled, config.degradation.score_weights};
    SimulationTrace trace;
    trace.scenario = Scenario{config, topology};
    trace.records.reserve(static_cast<std::size_t>(config.days));
    for (int d = 0; d < config.days; ++d) {
        DayInputs day;
        day.day = d;
        for (auto const& site : sites) {
            auto const* w = inputs.weather.find(site, d);
            if (!w) throw SimulationError(fmt::format("weather data for site '{}' ends before day {}", site, d));
            day.weather.emplace(site, *w);
        }
        for (auto const& [id, series] : inputs.demand) {
            if (!series.covers(d)) throw SimulationError(fmt::format("demand data for load {} ends before day {}", id, d));
            day.demand[id] = series.at(d);
        }
        trace.records.push_back(step_day(state, day, options));
    }
    trace.summary = summarize(topology, trace.records, state.topology);
    return trace;
}

ComparisonReport compare(SimulationTrace const& baseline, SimulationTrace const& treatment)
{
    if (baseline.records.size() != treatment.records.size())
        throw ValidationError(fmt::format("traces cover {} and {} days", baseline.records.size(),
                                          treatment.records.size()));
    auto const& a = baseline.summary;
    auto const& b = treatment.summary;
    if (a.systems.size() != b.systems.size())
        throw ValidationError("traces describe different storage systems");
    ComparisonReport rep;
    for (std::size_t i = 0; i < a.systems.size(); ++i) {
        auto const& x = a.systems[i];
        auto const& y = b.systems[i];
        if (x.system_id != y.system_id) throw ValidationError("traces describe different storage systems");
        rep.systems.push_back({x.system_id, x.final_mean_soh_pct, y.final_mean_soh_pct,
                               y.final_mean_soh_pct - x.final_mean_soh_pct, x.zero_soc_events, y.zero_soc_events,
                               x.unmet_mwd, y.unmet_mwd});
    }
    rep.baseline_soh_pct = a.final_mean_soh_pct;
    rep.treatment_soh_pct = b.final_mean_soh_pct;
    rep.fleet_soh_gap_pp = b.final_mean_soh_pct - a.final_mean_soh_pct;
    rep.baseline_zero_soc = a.zero_soc_events;
    rep.treatment_zero_soc = b.zero_soc_events;
    rep.baseline_unmet_mwd = a.total_unmet_mwd;
    rep.treatment_unmet_mwd = b.total_unmet_mwd;
    return rep;
}

} // namespace hgrid

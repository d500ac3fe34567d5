#include "hgrid/scenario.hpp"

#include "hgrid/error.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>

namespace hgrid {

using nlohmann::json;

namespace {

// Typed, path-aware access to one JSON object. Every failure names the key.
class Reader {
public:
    Reader(json const& node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ValidationError(fmt::format("{}: expected an object", where()));
    }

    bool has(char const* key) const { return node_.contains(key) && !node_.at(key).is_null(); }

    void allow_only(std::initializer_list<std::string_view> keys) const
    {
        for (auto const& item : node_.items()) {
            if (std::find(keys.begin(), keys.end(), item.key()) == keys.end())
                throw ValidationError(fmt::format("{}: unknown key '{}'", where(), item.key()));
        }
    }

    double number(char const* key, double fallback) const
    {
        if (!has(key)) return fallback;
        auto const& v = node_.at(key);
        if (!v.is_number()) throw type_error(key, "a number");
        return v.get<double>();
    }

    int integer(char const* key, int fallback) const
    {
        if (!has(key)) return fallback;
        auto const& v = node_.at(key);
        if (!v.is_number_integer()) throw type_error(key, "an integer");
        auto const raw = v.get<long long>();
        if (raw < std::numeric_limits<int>::min() || raw > std::numeric_limits<int>::max())
            throw type_error(key, "an integer in range");
        return static_cast<int>(raw);
    }

    std::uint64_t unsigned_integer(char const* key, std::uint64_t fallback) const
    {
        if (!has(key)) return fallback;
        auto const& v = node_.at(key);
        if (!v.is_number_unsigned()) throw type_error(key, "a non-negative integer");
        return v.get<std::uint64_t>();
    }

    bool flag(char const* key, bool fallback) const
    {
        if (!has(key)) return fallback;
        auto const& v = node_.at(key);
        if (!v.is_boolean()) throw type_error(key, "true or false");
        return v.get<bool>();
    }

    std::string text(char const* key, std::string fallback) const
    {
        if (!has(key)) return fallback;
        auto const& v = node_.at(key);
        if (!v.is_string()) throw type_error(key, "a string");
        return v.get<std::string>();
    }

    std::vector<int> int_list(char const* key) const
    {
        if (!has(key)) return {};
        auto const& v = node_.at(key);
        if (!v.is_array()) throw type_error(key, "an array of integers");
        std::vector<int> out;
        for (auto const& e : v) {
            if (!e.is_number_integer()) throw type_error(key, "an array of integers");
            out.push_back(e.get<int>());
        }
        return out;
    }

    Reader child(char const* key) const { return Reader(node_.at(key), join(key)); }

    json const& raw(char const* key) const { return node_.at(key); }
    json const& node() const { return node_; }
    std::string join(std::string_view key) const
    {
        return path_.empty() ? std::string(key) : fmt::format("{}.{}", path_, key);
    }

private:
    std::string where() const { return path_.empty() ? std::string("<root>") : path_; }

    ValidationError type_error(char const* key, char const* expected) const
    {
        return ValidationError(fmt::format("{}: expected {}", join(key), expected));
    }

    json const& node_;
    std::string path_;
};

std::filesystem::path resolve(std::filesystem::path const& base, std::string const& value)
{
    std::filesystem::path p(value);
    if (p.is_relative() && !base.empty()) p = base / p;
    return p.lexically_normal();
}

SyntheticWeatherParams read_weather_params(Reader const& r, SyntheticWeatherParams p)
{
    r.allow_only({"ghi_mean", "ghi_amplitude", "ghi_phase", "cloud_min", "cloud_max", "cloud_shape",
                  "cloud_persistence", "wind_mean", "wind_amplitude", "wind_phase", "wind_noise_sd",
                  "wind_persistence", "noise"});
    p.ghi_mean = r.number("ghi_mean", p.ghi_mean);
    p.ghi_amplitude = r.number("ghi_amplitude", p.ghi_amplitude);
    p.ghi_phase = r.number("ghi_phase", p.ghi_phase);
    p.cloud_min = r.number("cloud_min", p.cloud_min);
    p.cloud_max = r.number("cloud_max", p.cloud_max);
    p.cloud_shape = r.number("cloud_shape", p.cloud_shape);
    p.cloud_persistence = r.number("cloud_persistence", p.cloud_persistence);
    p.wind_mean = r.number("wind_mean", p.wind_mean);
    p.wind_amplitude = r.number("wind_amplitude", p.wind_amplitude);
    p.wind_phase = r.number("wind_phase", p.wind_phase);
    p.wind_noise_sd = r.number("wind_noise_sd", p.wind_noise_sd);
    p.wind_persistence = r.number("wind_persistence", p.wind_persistence);
    p.noise = r.flag("noise", p.noise);
    return p;
}

json weather_params_json(SyntheticWeatherParams const& p)
{
    return json{{"ghi_mean", p.ghi_mean},
                {"ghi_amplitude", p.ghi_amplitude},
                {"ghi_phase", p.ghi_phase},
                {"cloud_min", p.cloud_min},
                {"cloud_max", p.cloud_max},
                {"cloud_shape", p.cloud_shape},
                {"cloud_persistence", p.cloud_persistence},
                {"wind_mean", p.wind_mean},
                {"wind_amplitude", p.wind_amplitude},
                {"wind_phase", p.wind_phase},
                {"wind_noise_sd", p.wind_noise_sd},
                {"wind_persistence", p.wind_persistence},
                {"noise", p.noise}};
}

StorageSystem read_system(json const& node, std::string const& path, Reader const& defaults,
                          DegradationConfig const& deg)
{
    int id = 0;
    int units = defaults.integer("units_per_system", 10);
    double unit_capacity = defaults.number("unit_capacity_mwd", 100.0);
    double initial_soc = defaults.number("initial_soc_pct", 50.0);
    if (node.is_number_integer()) {
        id = node.get<int>();
    } else {
        Reader r(node, path);
        r.allow_only({"id", "units", "unit_capacity_mwd", "initial_soc_pct"});
        if (!r.has("id")) throw ValidationError(fmt::format("{}: missing 'id'", path));
        id = r.integer("id", 0);
        units = r.integer("units", units);
        unit_capacity = r.number("unit_capacity_mwd", unit_capacity);
        initial_soc = r.number("initial_soc_pct", initial_soc);
    }
    if (units < 0) throw ValidationError(fmt::format("{}: unit count must be >= 0", path));
    if (initial_soc < 0.0 || initial_soc > 100.0)
        throw ValidationError(fmt::format("{}: initial_soc_pct must lie in [0, 100]", path));
    BatteryUnit proto;
    proto.capacity = unit_capacity;
    proto.energy = unit_capacity * initial_soc / 100.0;
    proto.r_charge = deg.r_charge;
    proto.r_discharge = deg.r_discharge;
    return make_system(id, static_cast<std::size_t>(units), proto);
}

EnergySource read_source(Reader const& r)
{
    r.allow_only({"id", "name", "kind", "site", "systems", "area_m2", "efficiency", "turbine_count",
                  "power_coefficient", "air_density", "rotor_area_m2", "cut_in_ms", "cut_out_ms"});
    EnergySource s;
    s.id = r.integer("id", 0);
    s.name = r.text("name", fmt::format("source-{}", s.id));
    s.site_id = r.text("site", "");
    if (s.site_id.empty()) throw ValidationError(fmt::format("{}: missing 'site'", r.join("site")));
    s.connected_systems = r.int_list("systems");
    auto const kind = r.text("kind", "");
    if (kind == "solar") {
        for (char const* k : {"turbine_count", "power_coefficient", "air_density", "rotor_area_m2", "cut_in_ms",
                              "cut_out_ms"}) {
            if (r.has(k)) throw ValidationError(fmt::format("{}: not a solar parameter", r.join(k)));
        }
        SolarPlantParams p;
        p.area_m2 = r.number("area_m2", p.area_m2);
        p.efficiency = r.number("efficiency", p.efficiency);
        s.params = p;
    } else if (kind == "wind") {
        for (char const* k : {"area_m2", "efficiency"}) {
            if (r.has(k)) throw ValidationError(fmt::format("{}: not a wind parameter", r.join(k)));
        }
        WindPlantParams p;
        p.turbine_count = r.integer("turbine_count", p.turbine_count);
        p.power_coefficient = r.number("power_coefficient", p.power_coefficient);
        p.air_density = r.number("air_density", p.air_density);
        p.rotor_area_m2 = r.number("rotor_area_m2", p.rotor_area_m2);
        p.cut_in_ms = r.number("cut_in_ms", p.cut_in_ms);
        p.cut_out_ms = r.number("cut_out_ms", p.cut_out_ms);
        s.params = p;
    } else {
        throw ValidationError(fmt::format("{}: expected \"solar\" or \"wind\"", r.join("kind")));
    }
    return s;
}

SarimaOrders read_orders(json const& node, std::string const& path)
{
    SarimaOrders o;
    if (node.is_array()) {
        if (node.size() != 7 || !std::all_of(node.begin(), node.end(), [](json const& e) { return e.is_number_integer(); }))
            throw ValidationError(fmt::format("{}: expected [p, d, q, P, D, Q, s]", path));
        o = {node[0].get<int>(), node[1].get<int>(), node[2].get<int>(), node[3].get<int>(),
             node[4].get<int>(), node[5].get<int>(), node[6].get<int>()};
        return o;
    }
    Reader r(node, path);
    r.allow_only({"p", "d", "q", "P", "D", "Q", "s"});
    o.p = r.integer("p", o.p);
    o.d = r.integer("d", o.d);
    o.q = r.integer("q", o.q);
    o.P = r.integer("P", o.P);
    o.D = r.integer("D", o.D);
    o.Q = r.integer("Q", o.Q);
    o.s = r.integer("s", o.s);
    return o;
}

void read_degradation(Reader const& r, DegradationConfig& d)
{
    r.allow_only({"r_charge", "r_discharge", "score_weights", "soc_preference", "unit_variation"});
    d.r_charge = r.number("r_charge", d.r_charge);
    d.r_discharge = r.number("r_discharge", d.r_discharge);
    if (r.has("score_weights")) {
        auto w = r.child("score_weights");
        w.allow_only({"soh", "soc"});
        d.score_weights.soh = w.number("soh", d.score_weights.soh);
        d.score_weights.soc = w.number("soc", d.score_weights.soc);
    }
    auto const pref = r.text("soc_preference", d.score_weights.soc_preference == SocPreference::prefer_full ? "full" : "empty");
    if (pref == "empty")
        d.score_weights.soc_preference = SocPreference::prefer_empty;
    else if (pref == "full")
        d.score_weights.soc_preference = SocPreference::prefer_full;
    else
        throw ValidationError(fmt::format("{}: expected \"empty\" or \"full\"", r.join("soc_preference")));
    if (r.has("unit_variation")) {
        auto v = r.child("unit_variation");
        v.allow_only({"initial_soh_min", "rate_multiplier_max"});
        d.variation.initial_soh_min = v.number("initial_soh_min", d.variation.initial_soh_min);
        d.variation.rate_multiplier_max = v.number("rate_multiplier_max", d.variation.rate_multiplier_max);
    }
}

void read_loads(Reader const& r, std::filesystem::path const& base, ScenarioConfig& cfg, GridTopology& topo)
{
    r.allow_only({"centers", "csv", "synthetic"});
    if (r.has("centers")) {
        auto const& centers = r.raw("centers");
        if (!centers.is_array()) throw ValidationError(fmt::format("{}: expected an array", r.join("centers")));
        for (std::size_t i = 0; i < centers.size(); ++i) {
            Reader c(centers[i], fmt::format("{}[{}]", r.join("centers"), i));
            c.allow_only({"id", "name", "systems"});
            LoadCenter load;
            load.id = c.integer("id", 0);
            load.name = c.text("name", fmt::format("load-{}", load.id));
            load.connected_systems = c.int_list("systems");
            topo.loads.push_back(std::move(load));
        }
    }
    if (r.has("csv") && r.has("synthetic"))
        throw ValidationError(fmt::format("{}: give either 'csv' or 'synthetic', not both", "loads"));
    if (r.has("csv")) cfg.load_data.csv = resolve(base, r.text("csv", ""));
    if (r.has("synthetic")) {
        auto s = r.child("synthetic");
        s.allow_only({"generation_fraction", "total_mean_mwd", "weights", "history_days", "weekly_amplitude",
                      "annual_amplitude", "annual_phase", "noise_sd", "noise_persistence"});
        auto& ld = cfg.load_data;
        ld.generation_fraction = s.number("generation_fraction", ld.generation_fraction);
        ld.total_mean_mwd = s.number("total_mean_mwd", ld.total_mean_mwd);
        if (s.has("total_mean_mwd") && !s.has("generation_fraction")) ld.generation_fraction = 0.0;
        ld.history_days = s.integer("history_days", ld.history_days);
        ld.params.weekly_amplitude = s.number("weekly_amplitude", ld.params.weekly_amplitude);
        ld.params.annual_amplitude = s.number("annual_amplitude", ld.params.annual_amplitude);
        ld.params.annual_phase = s.number("annual_phase", ld.params.annual_phase);
        ld.params.noise_sd = s.number("noise_sd", ld.params.noise_sd);
        ld.params.noise_persistence = s.number("noise_persistence", ld.params.noise_persistence);
        if (s.has("weights")) {
            auto w = s.child("weights");
            for (auto const& item : w.node().items()) {
                int id = 0;
                auto const& key = item.key();
                auto const [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), id);
                if (ec != std::errc{} || ptr != key.data() + key.size())
                    throw ValidationError(fmt::format("{}: keys must be load ids", w.join(key)));
                if (!item.value().is_number())
                    throw ValidationError(fmt::format("{}: expected a number", w.join(key)));
                ld.weights[id] = item.value().get<double>();
            }
        }
    }
}

} // namespace

SyntheticWeatherParams const& WeatherConfig::params_for(std::string const& site) const
{
    auto it = sites.find(site);
    return it == sites.end() ? defaults : it->second;
}

std::vector<std::string> config_problems(ScenarioConfig const& c)
{
    std::vector<std::string> out;
    auto add = [&](std::string msg) { out.push_back(std::move(msg)); };
    if (c.days < 1) add("run.days must be >= 1");
    auto const& f = c.forecasting;
    for (auto const& p : order_problems(f.orders)) add("forecasting.orders: " + p);
    if (f.refit_interval_days < 1) add("forecasting.refit_interval_days must be >= 1");
    if (f.training_window_days < 1) add("forecasting.training_window_days must be >= 1");
    auto const& d = c.degradation;
    if (!(d.r_charge >= 0.0)) add("degradation.r_charge must be >= 0");
    if (!(d.r_discharge >= 0.0)) add("degradation.r_discharge must be >= 0");
    try {
        validate(d.score_weights);
    } catch (InputError const& e) {
        add(fmt::format("degradation.score_weights: {}", e.what()));
    }
    if (!(d.variation.initial_soh_min >= 0.0 && d.variation.initial_soh_min <= 100.0))
        add("degradation.unit_variation.initial_soh_min must lie in [0, 100]");
    if (!(d.variation.rate_multiplier_max >= 1.0))
        add("degradation.unit_variation.rate_multiplier_max must be >= 1");
    auto check_weather = [&](std::string const& where, SyntheticWeatherParams const& p) {
        if (!(p.ghi_mean >= 0.0)) add(where + ".ghi_mean must be >= 0");
        if (!(p.cloud_min >= 0.0 && p.cloud_min <= p.cloud_max)) add(where + ": need 0 <= cloud_min <= cloud_max");
        if (!(p.cloud_shape > 0.0)) add(where + ".cloud_shape must be > 0");
        if (!(p.cloud_persistence >= 0.0 && p.cloud_persistence < 1.0))
            add(where + ".cloud_persistence must lie in [0, 1)");
        if (!(p.wind_persistence >= 0.0 && p.wind_persistence < 1.0))
            add(where + ".wind_persistence must lie in [0, 1)");
        if (!(p.wind_noise_sd >= 0.0)) add(where + ".wind_noise_sd must be >= 0");
    };
    if (!c.weather.csv) {
        check_weather("weather.synthetic.defaults", c.weather.defaults);
        for (auto const& [site, p] : c.weather.sites) check_weather("weather.synthetic.sites." + site, p);
    }
    auto const& l = c.load_data;
    if (!l.csv) {
        if (!(l.generation_fraction >= 0.0)) add("loads.synthetic.generation_fraction must be >= 0");
        if (l.generation_fraction == 0.0 && !(l.total_mean_mwd >= 0.0))
            add("loads.synthetic.total_mean_mwd must be >= 0");
        if (l.history_days < 0) add("loads.synthetic.history_days must be >= 0");
        for (auto const& [id, w] : l.weights) {
            if (!(w >= 0.0)) add(fmt::format("loads.synthetic.weights.{} must be >= 0", id));
        }
        if (!(l.params.noise_sd >= 0.0)) add("loads.synthetic.noise_sd must be >= 0");
        if (!(l.params.noise_persistence >= 0.0 && l.params.noise_persistence < 1.0))
            add("loads.synthetic.noise_persistence must lie in [0, 1)");
    }
    return out;
}

Scenario parse_scenario(std::string_view text, std::filesystem::path const& base)
{
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
        throw ValidationError(fmt::format("malformed JSON: {}", e.what()));
    }
    Reader root(doc, "");
    root.allow_only({"name", "topology", "sources", "loads", "forecasting", "degradation", "weather", "run"});

    Scenario sc;
    auto& cfg = sc.config;
    cfg.name = root.text("name", cfg.name);

    // Degradation first: unit rates are stamped into the systems below.
    if (root.has("degradation")) read_degradation(root.child("degradation"), cfg.degradation);

    if (!root.has("topology")) throw ValidationError("topology: missing section");
    auto topo = root.child("topology");
    topo.allow_only({"units_per_system", "unit_capacity_mwd", "initial_soc_pct", "systems"});
    if (!topo.has("systems") || !topo.raw("systems").is_array())
        throw ValidationError("topology.systems: expected an array");
    auto const& systems = topo.raw("systems");
    for (std::size_t i = 0; i < systems.size(); ++i)
        sc.topology.systems.push_back(
            read_system(systems[i], fmt::format("topology.systems[{}]", i), topo, cfg.degradation));

    if (!root.has("sources") || !root.raw("sources").is_array())
        throw ValidationError("sources: expected an array");
    auto const& sources = root.raw("sources");
    for (std::size_t i = 0; i < sources.size(); ++i)
        sc.topology.sources.push_back(read_source(Reader(sources[i], fmt::format("sources[{}]", i))));

    if (!root.has("loads")) throw ValidationError("loads: missing section");
    read_loads(root.child("loads"), base, cfg, sc.topology);

    if (root.has("forecasting")) {
        auto f = root.child("forecasting");
        f.allow_only({"method", "orders", "refit_interval_days", "training_window_days"});
        auto const method = f.text("method", "sarima");
        if (method == "sarima")
            cfg.forecasting.method = ForecastMethod::sarima;
        else if (method == "seasonal_naive")
            cfg.forecasting.method = ForecastMethod::seasonal_naive;
        else
            throw ValidationError("forecasting.method: expected \"sarima\" or \"seasonal_naive\"");
        if (f.has("orders")) cfg.forecasting.orders = read_orders(f.raw("orders"), "forecasting.orders");
        cfg.forecasting.refit_interval_days = f.integer("refit_interval_days", cfg.forecasting.refit_interval_days);
        cfg.forecasting.training_window_days =
            f.integer("training_window_days", cfg.forecasting.training_window_days);
    }

    if (root.has("weather")) {
        auto w = root.child("weather");
        w.allow_only({"csv", "synthetic"});
        if (w.has("csv") && w.has("synthetic"))
            throw ValidationError("weather: give either 'csv' or 'synthetic', not both");
        if (w.has("csv")) cfg.weather.csv = resolve(base, w.text("csv", ""));
        if (w.has("synthetic")) {
            auto s = w.child("synthetic");
            s.allow_only({"defaults", "sites"});
            if (s.has("defaults")) cfg.weather.defaults = read_weather_params(s.child("defaults"), {});
            if (s.has("sites")) {
                auto sites = s.child("sites");
                for (auto const& item : sites.node().items())
                    cfg.weather.sites[item.key()] =
                        read_weather_params(Reader(item.value(), sites.join(item.key())), cfg.weather.defaults);
            }
        }
    }

    if (root.has("run")) {
        auto r = root.child("run");
        r.allow_only({"days", "priority_enabled", "health_enabled", "seed"});
        cfg.days = r.integer("days", cfg.days);
        cfg.priority_enabled = r.flag("priority_enabled", cfg.priority_enabled);
        cfg.health_enabled = r.flag("health_enabled", cfg.health_enabled);
        cfg.seed = r.unsigned_integer("seed", cfg.seed);
    }
    return sc;
}

Scenario load_scenario(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(fmt::format("cannot read scenario file '{}'", path.string()));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.parent_path());
}

Scenario reference_scenario()
{
    Scenario sc;
    sc.config.name = "reference";
    sc.topology = reference_topology();
    return sc;
}

std::string scenario_to_json(Scenario const& sc)
{
    auto const& c = sc.config;
    json systems = json::array();
    for (auto const& s : sc.topology.systems) {
        double const unit_cap = s.units.empty() ? 0.0 : s.units.front().capacity;
        double const cap = s.capacity();
        systems.push_back({{"id", s.id},
                           {"units", s.units.size()},
                           {"unit_capacity_mwd", unit_cap},
                           {"initial_soc_pct", cap > 0.0 ? 100.0 * stored_energy(s) / cap : 0.0}});
    }
    json sources = json::array();
    for (auto const& s : sc.topology.sources) {
        json j{{"id", s.id}, {"name", s.name}, {"kind", to_string(s.kind())}, {"site", s.site_id},
               {"systems", s.connected_systems}};
        if (auto const* p = std::get_if<SolarPlantParams>(&s.params)) {
            j["area_m2"] = p->area_m2;
            j["efficiency"] = p->efficiency;
        } else {
            auto const& w = std::get<WindPlantParams>(s.params);
            j["turbine_count"] = w.turbine_count;
            j["power_coefficient"] = w.power_coefficient;
            j["air_density"] = w.air_density;
            j["rotor_area_m2"] = w.rotor_area_m2;
            j["cut_in_ms"] = w.cut_in_ms;
            j["cut_out_ms"] = w.cut_out_ms;
        }
        sources.push_back(std::move(j));
    }
    json centers = json::array();
    for (auto const& l : sc.topology.loads)
        centers.push_back({{"id", l.id}, {"name", l.name}, {"systems", l.connected_systems}});
    json loads{{"centers", centers}};
    auto const& ld = c.load_data;
    if (ld.csv) {
        loads["csv"] = ld.csv->string();
    } else {
        json weights = json::object();
        for (auto const& [id, w] : ld.weights) weights[std::to_string(id)] = w;
        json syn{{"weights", weights},
                 {"history_days", ld.history_days},
                 {"weekly_amplitude", ld.params.weekly_amplitude},
                 {"annual_amplitude", ld.params.annual_amplitude},
                 {"annual_phase", ld.params.annual_phase},
                 {"noise_sd", ld.params.noise_sd},
                 {"noise_persistence", ld.params.noise_persistence}};
        if (ld.generation_fraction > 0.0)
            syn["generation_fraction"] = ld.generation_fraction;
        else
            syn["total_mean_mwd"] = ld.total_mean_mwd;
        loads["synthetic"] = std::move(syn);
    }
    json weather;
    if (c.weather.csv) {
        weather["csv"] = c.weather.csv->string();
    } else {
        json sites = json::object();
        for (auto const& [site, p] : c.weather.sites) sites[site] = weather_params_json(p);
        weather["synthetic"] = {{"defaults", weather_params_json(c.weather.defaults)}, {"sites", sites}};
    }
    auto const& o = c.forecasting.orders;
    auto const& d = c.degradation;
    json doc{
        {"name", c.name},
        {"topology", {{"systems", systems}}},
        {"sources", sources},
        {"loads", loads},
        {"forecasting",
         {{"method", c.forecasting.method == ForecastMethod::sarima ? "sarima" : "seasonal_naive"},
          {"orders", {o.p, o.d, o.q, o.P, o.D, o.Q, o.s}},
          {"refit_interval_days", c.forecasting.refit_interval_days},
          {"training_window_days", c.forecasting.training_window_days}}},
        {"degradation",
         {{"r_charge", d.r_charge},
          {"r_discharge", d.r_discharge},
          {"score_weights", {{"soh", d.score_weights.soh}, {"soc", d.score_weights.soc}}},
          {"soc_preference", d.score_weights.soc_preference == SocPreference::prefer_full ? "full" : "empty"},
          {"unit_variation",
           {{"initial_soh_min", d.variation.initial_soh_min},
            {"rate_multiplier_max", d.variation.rate_multiplier_max}}}}},
        {"weather", weather},
        {"run",
         {{"days", c.days},
          {"priority_enabled", c.priority_enabled},
          {"health_enabled", c.health_enabled},
          {"seed", c.seed}}}};
    return doc.dump(2) + "\n";
}

} // namespace hgrid

#include "hgrid/model.hpp"

#include "hgrid/error.hpp"

#include <algorithm>
#include <fmt/format.h>
#include <map>
#include <numeric>
#include <set>

namespace hgrid {

double StorageSystem::capacity() const noexcept
{
    double total = 0.0;
    for (auto const& u : units) {
        total += u.capacity;
    }
    return total;
}

StorageSystem make_system(int id, std::size_t unit_count, BatteryUnit const& prototype)
{
    StorageSystem s;
    s.id = id;
    s.units.reserve(unit_count);
    for (std::size_t i = 0; i < unit_count; ++i) {
        BatteryUnit u = prototype;
        u.id = static_cast<int>(i);
        s.units.push_back(u);
    }
    return s;
}

double stored_energy(StorageSystem const& system) noexcept
{
    double total = 0.0;
    for (auto const& u : system.units) {
        total += u.energy;
    }
    return total;
}

double system_headroom(StorageSystem const& system) noexcept
{
    double total = 0.0;
    for (auto const& u : system.units) {
        total += u.headroom();
    }
    return total;
}

double system_soc(StorageSystem const& system)
{
    double const capacity = system.capacity();
    if (!(capacity > 0.0)) {
        throw InputError(fmt::format("system {} has no capacity", system.id));
    }
    return stored_energy(system) / capacity * 100.0;
}

double mean_soh(StorageSystem const& system)
{
    if (system.units.empty()) {
        throw InputError(fmt::format("system {} has no units", system.id));
    }
    double total = 0.0;
    for (auto const& u : system.units) {
        total += u.soh;
    }
    return total / static_cast<double>(system.units.size());
}

std::string to_string(SourceKind kind)
{
    return kind == SourceKind::solar ? "solar" : "wind";
}

StorageSystem const* GridTopology::find_system(int id) const noexcept
{
    auto it = std::find_if(systems.begin(), systems.end(), [id](auto const& s) { return s.id == id; });
    return it == systems.end() ? nullptr : &*it;
}

StorageSystem* GridTopology::find_system(int id) noexcept
{
    auto it = std::find_if(systems.begin(), systems.end(), [id](auto const& s) { return s.id == id; });
    return it == systems.end() ? nullptr : &*it;
}

LoadCenter const* GridTopology::find_load(int id) const noexcept
{
    auto it = std::find_if(loads.begin(), loads.end(), [id](auto const& l) { return l.id == id; });
    return it == loads.end() ? nullptr : &*it;
}

EnergySource const* GridTopology::find_source(int id) const noexcept
{
    auto it = std::find_if(sources.begin(), sources.end(), [id](auto const& s) { return s.id == id; });
    return it == sources.end() ? nullptr : &*it;
}

std::vector<int> GridTopology::sources_for_system(int system_id) const
{
    std::vector<int> out;
    for (auto const& src : sources) {
        if (std::find(src.connected_systems.begin(), src.connected_systems.end(), system_id)
            != src.connected_systems.end()) {
            out.push_back(src.id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> GridTopology::loads_for_system(int system_id) const
{
    std::vector<int> out;
    for (auto const& load : loads) {
        if (std::find(load.connected_systems.begin(), load.connected_systems.end(), system_id)
            != load.connected_systems.end()) {
            out.push_back(load.id);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

double GridTopology::total_capacity() const noexcept
{
    double total = 0.0;
    for (auto const& s : systems) {
        total += s.capacity();
    }
    return total;
}

std::string to_string(ViolationRule rule)
{
    switch (rule) {
    case ViolationRule::duplicate_id: return "duplicate-id";
    case ViolationRule::missing_system: return "missing-system";
    case ViolationRule::duplicate_connection: return "duplicate-connection";
    case ViolationRule::no_connections: return "no-connections";
    case ViolationRule::unsourced_system: return "unsourced-system";
    case ViolationRule::invalid_system: return "invalid-system";
    case ViolationRule::invalid_unit: return "invalid-unit";
    case ViolationRule::invalid_source_params: return "invalid-source-params";
    }
    return "unknown";
}

namespace {

template <typename Items, typename Label>
void check_unique_ids(Items const& items, Label label, std::vector<TopologyViolation>& out)
{
    std::map<int, int> seen;
    for (auto const& item : items) {
        if (++seen[item.id] == 2) {
            out.push_back({ViolationRule::duplicate_id, label(item.id), "id appears more than once"});
        }
    }
}

void check_connections(std::string const& entity,
                       std::vector<int> const& connected,
                       std::set<int> const& system_ids,
                       std::vector<TopologyViolation>& out)
{
    if (connected.empty()) {
        out.push_back({ViolationRule::no_connections, entity, "not connected to any storage system"});
        return;
    }
    std::set<int> seen;
    for (int id : connected) {
        if (!system_ids.contains(id)) {
            out.push_back({ViolationRule::missing_system, entity, fmt::format("references unknown system {}", id)});
        }
        if (!seen.insert(id).second) {
            out.push_back({ViolationRule::duplicate_connection, entity, fmt::format("lists system {} twice", id)});
        }
    }
}

std::string system_label(int id) { return fmt::format("system {}", id); }
std::string load_label(int id) { return fmt::format("load {}", id); }
std::string source_label(int id) { return fmt::format("source {}", id); }

} // namespace

std::vector<TopologyViolation> validate_topology(GridTopology const& topology)
{
    std::vector<TopologyViolation> out;

    check_unique_ids(topology.systems, system_label, out);
    check_unique_ids(topology.loads, load_label, out);
    check_unique_ids(topology.sources, source_label, out);

    std::set<int> system_ids;
    for (auto const& s : topology.systems) {
        system_ids.insert(s.id);
        if (s.units.empty()) {
            out.push_back({ViolationRule::invalid_system, system_label(s.id), "has no battery units"});
            continue;
        }
        for (auto const& u : s.units) {
            std::string const entity = fmt::format("system {} unit {}", s.id, u.id);
            if (!(u.capacity > 0.0)) {
                out.push_back({ViolationRule::invalid_unit, entity, "capacity must be > 0"});
            }
            if (!(u.energy >= 0.0 && u.energy <= u.capacity)) {
                out.push_back({ViolationRule::invalid_unit, entity, "energy must lie within [0, capacity]"});
            }
            if (!(u.soh >= 0.0 && u.soh <= 100.0)) {
                out.push_back({ViolationRule::invalid_unit, entity, "soh must lie within [0, 100]"});
            }
            if (!(u.r_charge >= 0.0 && u.r_discharge >= 0.0)) {
                out.push_back({ViolationRule::invalid_unit, entity, "degradation rates must be >= 0"});
            }
        }
    }

    for (auto const& load : topology.loads) {
        check_connections(load_label(load.id), load.connected_systems, system_ids, out);
    }

    std::set<int> sourced;
    for (auto const& src : topology.sources) {
        check_connections(source_label(src.id), src.connected_systems, system_ids, out);
        sourced.insert(src.connected_systems.begin(), src.connected_systems.end());
        auto problems = std::visit([](auto const& p) { return param_problems(p); }, src.params);
        for (auto& problem : problems) {
            out.push_back({ViolationRule::invalid_source_params, source_label(src.id), std::move(problem)});
        }
    }

    for (auto const& s : topology.systems) {
        if (!sourced.contains(s.id)) {
            out.push_back({ViolationRule::unsourced_system, system_label(s.id),
                           "no energy source is connected, so it can never charge"});
        }
    }
    return out;
}

GridTopology reference_topology(ReferenceTopologyOptions const& options)
{
    GridTopology t;

    BatteryUnit prototype;
    prototype.capacity = options.unit_capacity;
    prototype.energy = options.unit_capacity * options.initial_soc;
    prototype.soh = 100.0;
    prototype.r_charge = options.r_charge;
    prototype.r_discharge = options.r_discharge;
    for (int id = 1; id <= 7; ++id) {
        t.systems.push_back(make_system(id, options.units_per_system, prototype));
    }

    std::vector<std::vector<int>> const wiring = {
        {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {1, 6, 7}, {1, 2, 7}, {2, 3, 7},
    };
    for (int id = 0; id < static_cast<int>(wiring.size()); ++id) {
        t.loads.push_back({id, fmt::format("load-{}", id), wiring[static_cast<std::size_t>(id)]});
    }

    WindPlantParams wind1;
    wind1.turbine_count = 50;
    WindPlantParams wind2;
    wind2.turbine_count = 100;
    SolarPlantParams solar1{900000.0, 0.21};
    SolarPlantParams solar2{1500000.0, 0.21};

    t.sources.push_back({1, "wind-1", "rameswaram", wind1, {1, 2, 3, 4}});
    t.sources.push_back({2, "wind-2", "madurai", wind2, {1, 2, 3, 4}});
    t.sources.push_back({3, "solar-1", "rameswaram", solar1, {4, 5, 6, 7}});
    t.sources.push_back({4, "solar-2", "madurai", solar2, {4, 5, 6, 7}});
    return t;
}

} // namespace hgrid

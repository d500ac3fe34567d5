#pragma once

#include "hgrid/generation.hpp"

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace hgrid {

// Energy quantities are in MWd (megawatt-days). One simulation tick is one
// day, so a plant producing P MW for a tick delivers P MWd.

/// Default SoH points lost per equivalent full charge / discharge.
inline constexpr double kDefaultChargeDegradation = 0.15;
inline constexpr double kDefaultDischargeDegradation = 0.2;

struct BatteryUnit {
    int id = 0;
    double capacity = 0.0;     // MWd, > 0
    double energy = 0.0;       // MWd, within [0, capacity]
    double soh = 100.0;        // percent
    double r_charge = 0.0;     // SoH points lost per equivalent full charge
    double r_discharge = 0.0;  // SoH points lost per equivalent full discharge

    double headroom() const noexcept { return capacity - energy; }
    /// Stored fraction of capacity, in [0, 1].
    double soc_fraction() const noexcept { return capacity > 0.0 ? energy / capacity : 0.0; }
};

struct StorageSystem {
    int id = 0;
    std::vector<BatteryUnit> units;

    /// Sum of unit capacities. Always derived, never cached.
    double capacity() const noexcept;
};

/// Builds a system of `unit_count` copies of `prototype`, ids 0..n-1.
StorageSystem make_system(int id, std::size_t unit_count, BatteryUnit const& prototype);

/// Sum of unit energies in MWd.
double stored_energy(StorageSystem const& system) noexcept;

/// Capacity minus stored energy.
double system_headroom(StorageSystem const& system) noexcept;

/// Stored energy as a percentage of system capacity. Throws InputError for a
/// system without capacity.
double system_soc(StorageSystem const& system);

/// Arithmetic mean of unit SoH, in percent.
double mean_soh(StorageSystem const& system);

struct LoadCenter {
    int id = 0;
    std::string name;
    std::vector<int> connected_systems;
};

enum class SourceKind { solar, wind };

std::string to_string(SourceKind kind);

struct EnergySource {
    int id = 0;
    std::string name;
    std::string site_id;
    std::variant<SolarPlantParams, WindPlantParams> params;
    std::vector<int> connected_systems;

    SourceKind kind() const noexcept
    {
        return std::holds_alternative<SolarPlantParams>(params) ? SourceKind::solar : SourceKind::wind;
    }
};

/// Storage systems, loads and sources plus their wiring. Systems carry the
/// mutable battery state; everything else is static for a run.
struct GridTopology {
    std::vector<StorageSystem> systems;
    std::vector<LoadCenter> loads;
    std::vector<EnergySource> sources;

    StorageSystem const* find_system(int id) const noexcept;
    StorageSystem* find_system(int id) noexcept;
    LoadCenter const* find_load(int id) const noexcept;
    EnergySource const* find_source(int id) const noexcept;

    /// Source ids wired to a system, ascending.
    std::vector<int> sources_for_system(int system_id) const;
    /// Load ids drawing from a system, ascending.
    std::vector<int> loads_for_system(int system_id) const;

    double total_capacity() const noexcept;
};

enum class ViolationRule {
    duplicate_id,
    missing_system,
    duplicate_connection,
    no_connections,
    unsourced_system,
    invalid_system,
    invalid_unit,
    invalid_source_params,
};

std::string to_string(ViolationRule rule);

struct TopologyViolation {
    ViolationRule rule;
    std::string entity;  // e.g. "load 3", "system 7"
    std::string detail;
};

/// Checks every GridTopology invariant. Violations are returned, not thrown;
/// an empty result means the topology is usable.
std::vector<TopologyViolation> validate_topology(GridTopology const& topology);

struct ReferenceTopologyOptions {
    std::size_t units_per_system = 10;
    double unit_capacity = 100.0;
    double initial_soc = 0.5;  // fraction
    double r_charge = kDefaultChargeDegradation;
    double r_discharge = kDefaultDischargeDegradation;
};

/// Seven systems of ten 100 MWd units, eight three-way loads, two wind farms
/// feeding systems 1-4 and two solar plants feeding systems 4-7.
/// System ids run 1..7 and load ids 0..7.
GridTopology reference_topology(ReferenceTopologyOptions const& options = {});

} // namespace hgrid

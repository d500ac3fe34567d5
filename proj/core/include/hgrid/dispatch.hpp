#pragma once

#include "hgrid/model.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace hgrid {

/// Headroom factor applied to forecast load when setting charge targets.
inline constexpr double kChargeBuffer = 1.25;

struct ChargeTarget {
    int system_id = 0;
    double target = 0.0;   // MWd, within [0, capacity]
    double deficit = 0.0;  // max(0, target - stored)
};

/// Source -> system wiring in dense form. Indices into `source_ids` and
/// `system_ids` are what the allocators work on; ids are only for lookup.
struct ChargeNetwork {
    std::vector<int> source_ids;
    std::vector<int> system_ids;
    std::vector<double> source_energy;                     // MWd available per source
    std::vector<double> headroom;                          // MWd per system
    std::vector<std::vector<std::size_t>> source_systems;  // per source, ascending system index

    std::size_t source_count() const noexcept { return source_ids.size(); }
    std::size_t system_count() const noexcept { return system_ids.size(); }
    std::size_t system_index(int system_id) const;
    std::size_t source_index(int source_id) const;
};

/// Builds the network for the topology's current battery state. Sources
/// absent from `per_source_energy` get zero energy.
ChargeNetwork make_charge_network(GridTopology const& topology, std::map<int, double> const& per_source_energy);

/// Energy routed from sources to systems for one tick.
struct ChargeAllocation {
    std::vector<int> source_ids;
    std::vector<int> system_ids;
    std::vector<double> amounts;    // row-major [source][system], MWd
    std::vector<double> curtailed;  // per source, MWd

    double amount(int source_id, int system_id) const;
    double curtailed_from(int source_id) const;
    /// Total inflow into a system across all sources.
    double inflow(int system_id) const;
    double inflow_at(std::size_t system_index) const;
    double delivered_at(std::size_t source_index) const;
};

/// Per-system charge target: the system's equal share of every connected
/// load's forecast plus a 25% buffer, capped at capacity.
/// Throws InputError for a negative forecast.
std::vector<ChargeTarget> compute_charge_targets(GridTopology const& topology,
                                                 std::map<int, double> const& load_forecasts);

/// Charging order: largest deficit first, ties by ascending system id.
std::vector<int> prioritize(std::span<ChargeTarget const> targets);

/// Two-pass priority allocation on a dense network.
///
/// Pass 1 walks systems in `priority` order (system indices) and covers each
/// one's deficit as far as the wiring allows, searching sources in ascending
/// index order. A later system may re-route energy already promised to an
/// earlier one through another source, but never reduces an earlier
/// system's covered amount, so the pass-1 total is the largest deficit
/// coverage the wiring permits.
///
/// Pass 2 hands each source's leftover energy (ascending source order) to
/// its systems in proportion to their remaining headroom; whatever still
/// does not fit is curtailed.
ChargeAllocation allocate_priority(ChargeNetwork const& network,
                                   std::span<std::size_t const> priority,
                                   std::span<double const> deficits);

/// Topology-level wrapper: `order` and `targets` are keyed by system id.
ChargeAllocation allocate_priority(std::span<int const> order,
                                   std::span<ChargeTarget const> targets,
                                   std::map<int, double> const& per_source_energy,
                                   GridTopology const& topology);

/// Non-prioritised baseline: each source splits its energy equally across
/// its systems, water-filling around full ones. Sources are processed in
/// ascending order against the headroom left by earlier sources.
ChargeAllocation allocate_equal(ChargeNetwork const& network);
ChargeAllocation allocate_equal(std::map<int, double> const& per_source_energy, GridTopology const& topology);

/// Deficit coverage of an allocation: sum over systems of min(inflow, deficit).
double deficit_coverage(ChargeAllocation const& allocation, std::span<double const> deficits);

/// Stored energy of a system as seen by a load.
struct SystemLevel {
    int system_id = 0;
    double stored = 0.0;
};

/// Energy the load's connected systems could deliver: the sum of their
/// SoC times capacity, i.e. their stored energy. Systems that do not
/// resolve are a ValidationError.
double available_energy(LoadCenter const& load, GridTopology const& topology);
double available_energy(std::span<SystemLevel const> systems) noexcept;

struct DischargeAssignment {
    std::vector<SystemLevel> contributions;  // same order as the input systems, MWd
    double demand = 0.0;
    double served = 0.0;
    double unmet = 0.0;
};

/// Serves min(demand, available) with each system contributing in proportion
/// to its stored energy. Throws InputError for negative demand.
DischargeAssignment discharge_shares(double demand, std::span<SystemLevel const> systems);

/// Withdraws `amount` from a system split equally across its units; drained
/// units drop out and the shortfall is re-split. Returns per-unit
/// withdrawals (unit order). Throws InputError if the amount exceeds the
/// stored energy or is negative.
std::vector<double> apply_discharge(StorageSystem& system, double amount);

} // namespace hgrid

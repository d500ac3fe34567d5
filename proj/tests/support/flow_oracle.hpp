#pragma once

// Reference answers for deficit coverage on small charge networks. Both are
// written independently of the allocator under test.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace hgrid::testing {

/// Largest total deficit coverage, by enumerating every cut of the
/// source -> system -> sink network: for a set S of systems left on the sink
/// side, the cut costs the deficits outside S plus the energy of every
/// source wired into S. Max-flow equals the cheapest such cut.
/// `masks[u]` has bit j set when source u feeds system j.
inline double max_deficit_coverage(std::span<double const> energy, std::span<unsigned const> masks,
                                   std::span<double const> deficit)
{
    std::size_t const n = deficit.size();
    double best = std::numeric_limits<double>::infinity();
    for (unsigned s = 0; s < (1u << n); ++s) {
        double cost = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(s & (1u << j))) cost += deficit[j];
        }
        for (std::size_t u = 0; u < energy.size(); ++u) {
            if (masks[u] & s) cost += energy[u];
        }
        best = std::min(best, cost);
    }
    return best;
}

namespace detail {

inline void enumerate_splits(std::span<double const> energy, std::span<unsigned const> masks,
                             std::span<double const> deficit, double quantum, std::size_t u,
                             std::vector<double>& inflow, double& best)
{
    if (u == energy.size()) {
        double covered = 0.0;
        for (std::size_t j = 0; j < deficit.size(); ++j) covered += std::min(inflow[j], deficit[j]);
        best = std::max(best, covered);
        return;
    }
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j < deficit.size(); ++j) {
        if (masks[u] & (1u << j)) targets.push_back(j);
    }
    int const units = static_cast<int>(std::lround(energy[u] / quantum));
    // Place `left` quanta over targets[k..]; whatever is not placed is curtailed.
    auto place = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == targets.size()) {
            enumerate_splits(energy, masks, deficit, quantum, u + 1, inflow, best);
            return;
        }
        for (int take = 0; take <= left; ++take) {
            inflow[targets[k]] += take * quantum;
            self(self, k + 1, left - take);
            inflow[targets[k]] -= take * quantum;
        }
    };
    place(place, 0, units);
}

} // namespace detail

/// Literal exhaustive search over every way of splitting each source's
/// energy, in whole quanta, among its systems. Energies must be multiples
/// of `quantum`; with integral data an integral optimum exists, so this is
/// the true maximum. Exponential, so only for tiny instances.
inline double brute_force_coverage(std::span<double const> energy, std::span<unsigned const> masks,
                                   std::span<double const> deficit, double quantum)
{
    std::vector<double> inflow(deficit.size(), 0.0);
    double best = 0.0;
    detail::enumerate_splits(energy, masks, deficit, quantum, 0, inflow, best);
    return best;
}

} // namespace hgrid::testing

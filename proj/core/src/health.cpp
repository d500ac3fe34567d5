#include "hgrid/health.hpp"

#include "hgrid/detail/water_fill.hpp"
#include "hgrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace hgrid {

namespace {

void degrade(BatteryUnit& unit, double q, double rate, char const* what)
{
    if (!(q >= 0.0)) {
        throw InputError(fmt::format("{} amount must be >= 0 (got {})", what, q));
    }
    if (!(unit.capacity > 0.0)) {
        throw InputError(fmt::format("unit {} has no capacity", unit.id));
    }
    unit.soh = std::max(0.0, unit.soh - q * rate / unit.capacity);
}

void check_charge(StorageSystem const& system, double q)
{
    if (!(q >= 0.0)) {
        throw InputError(fmt::format("charge amount must be >= 0 (got {})", q));
    }
    double const room = system_headroom(system);
    if (q > room + 1e-9 * std::max(1.0, system.capacity())) {
        throw InputError(fmt::format("charge {} MWd exceeds headroom {} MWd of system {}", q, room, system.id));
    }
}

void apply_charge(StorageSystem& system, std::vector<double> const& amounts)
{
    for (std::size_t i = 0; i < system.units.size(); ++i) {
        auto& u = system.units[i];
        u.energy = std::min(u.capacity, u.energy + amounts[i]);
        degrade_on_charge(u, amounts[i]);
    }
}

} // namespace

void validate(ScoreWeights const& w)
{
    if (!(w.soh >= 0.0 && w.soc >= 0.0)) {
        throw InputError("score weights must be non-negative");
    }
    if (std::abs(w.soh + w.soc - 1.0) > 1e-9) {
        throw InputError(fmt::format("score weights must sum to 1 (got {} + {})", w.soh, w.soc));
    }
}

void degrade_on_charge(BatteryUnit& unit, double q)
{
    degrade(unit, q, unit.r_charge, "charge");
}

void degrade_on_discharge(BatteryUnit& unit, double q)
{
    degrade(unit, q, unit.r_discharge, "discharge");
}

UnitScore unit_score(BatteryUnit const& unit, ScoreWeights const& weights)
{
    validate(weights);
    double const soc = unit.soc_fraction();
    double const soc_term = weights.soc_preference == SocPreference::prefer_empty ? 1.0 - soc : soc;
    return {unit.id, weights.soh * unit.soh / 100.0 + weights.soc * soc_term};
}

std::vector<int> rank_units(StorageSystem const& system, ScoreWeights const& weights)
{
    std::vector<std::size_t> order(system.units.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> scores;
    scores.reserve(system.units.size());
    for (auto const& u : system.units) {
        scores.push_back(unit_score(u, weights).score);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });
    std::vector<int> ids;
    ids.reserve(order.size());
    for (std::size_t i : order) {
        ids.push_back(system.units[i].id);
    }
    return ids;
}

std::vector<double> distribute_charge_ranked(StorageSystem& system, double q, ScoreWeights const& weights)
{
    check_charge(system, q);
    validate(weights);

    std::vector<std::size_t> order(system.units.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::vector<double> scores;
    scores.reserve(system.units.size());
    for (auto const& u : system.units) {
        scores.push_back(unit_score(u, weights).score);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<double> amounts(system.units.size(), 0.0);
    double remaining = std::min(q, system_headroom(system));
    for (std::size_t i : order) {
        if (remaining <= 0.0) {
            break;
        }
        double const give = std::min(remaining, std::max(0.0, system.units[i].headroom()));
        amounts[i] = give;
        remaining -= give;
    }
    apply_charge(system, amounts);
    return amounts;
}

std::vector<double> distribute_charge_equal(StorageSystem& system, double q)
{
    check_charge(system, q);
    std::vector<double> limits;
    limits.reserve(system.units.size());
    for (auto const& u : system.units) {
        limits.push_back(std::max(0.0, u.headroom()));
    }
    auto amounts = detail::water_fill_equal(limits, std::min(q, system_headroom(system)));
    apply_charge(system, amounts);
    return amounts;
}

} // namespace hgrid

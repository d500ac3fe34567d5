#pragma once

#include "hgrid/model.hpp"

#include <vector>

namespace hgrid {

/// Which end of the SoC range the ranking score favours.
enum class SocPreference {
    prefer_empty,  // score term is 1 - SoC
    prefer_full,   // score term is SoC
};

struct ScoreWeights {
    double soh = 0.5;
    double soc = 0.5;
    SocPreference soc_preference = SocPreference::prefer_empty;
};

/// Throws InputError unless both weights are >= 0 and sum to 1.
void validate(ScoreWeights const& weights);

struct UnitScore {
    int unit_id = 0;
    double score = 0.0;  // in [0, 1]
};

/// Charge degradation: soh -= q * r_charge / capacity, floored at 0.
/// Energy is not touched. Throws InputError for negative q.
void degrade_on_charge(BatteryUnit& unit, double q);

/// Discharge degradation: soh -= q * r_discharge / capacity, floored at 0.
void degrade_on_discharge(BatteryUnit& unit, double q);

/// w_soh * soh/100 + w_soc * (1 - SoC)  (or SoC with prefer_full).
UnitScore unit_score(BatteryUnit const& unit, ScoreWeights const& weights);

/// Unit ids by descending score; ties keep ascending unit position.
std::vector<int> rank_units(StorageSystem const& system, ScoreWeights const& weights);

/// Greedy charge in rank order: the best unit is filled to capacity before
/// the next one receives anything. Updates energies, applies charge
/// degradation, and returns the per-unit amounts in unit order. Throws
/// InputError if q is negative or exceeds the system headroom.
std::vector<double> distribute_charge_ranked(StorageSystem& system, double q, ScoreWeights const& weights);

/// Equal split with water-filling around full units; otherwise as above.
std::vector<double> distribute_charge_equal(StorageSystem& system, double q);

} // namespace hgrid

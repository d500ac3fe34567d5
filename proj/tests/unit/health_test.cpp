#include "hgrid/error.hpp"
#include "hgrid/health.hpp"
#include "hgrid/synthetic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

namespace {

using namespace hgrid;

BatteryUnit unit(double capacity, double energy, double soh = 100.0, double rc = 0.01, double rd = 0.02)
{
    BatteryUnit u;
    u.capacity = capacity;
    u.energy = energy;
    u.soh = soh;
    u.r_charge = rc;
    u.r_discharge = rd;
    return u;
}

StorageSystem system_of(std::vector<BatteryUnit> units)
{
    StorageSystem s;
    s.id = 1;
    for (std::size_t i = 0; i < units.size(); ++i) units[i].id = static_cast<int>(i);
    s.units = std::move(units);
    return s;
}

TEST(Degradation, ChargeHandValues)
{
    auto u = unit(100.0, 0.0);
    degrade_on_charge(u, 100.0);
    EXPECT_NEAR(u.soh, 100.0 - 0.01, 1e-12);
    EXPECT_EQ(u.energy, 0.0);  // energy bookkeeping is not degradation's job

    auto v = unit(100.0, 0.0);
    degrade_on_charge(v, 0.0);
    EXPECT_EQ(v.soh, 100.0);

    auto w = unit(100.0, 0.0, 0.005);
    degrade_on_charge(w, 100.0);
    EXPECT_EQ(w.soh, 0.0);
    EXPECT_THROW(degrade_on_charge(w, -1.0), InputError);
}

TEST(Degradation, DischargeHandValuesAndLinearity)
{
    auto u = unit(100.0, 100.0);
    degrade_on_discharge(u, 50.0);
    EXPECT_NEAR(u.soh, 100.0 - 0.01, 1e-12);

    auto a = unit(100.0, 100.0);
    auto b = unit(100.0, 100.0);
    degrade_on_discharge(a, 50.0);
    degrade_on_discharge(a, 50.0);
    degrade_on_discharge(b, 100.0);
    EXPECT_NEAR(a.soh, b.soh, 1e-9);

    auto c = unit(100.0, 100.0);
    degrade_on_discharge(c, 0.0);
    EXPECT_EQ(c.soh, 100.0);
}

TEST(Degradation, InstallmentsMatchSingleCharge)
{
    Rng rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        double const q = 100.0 * rng.uniform();
        int const k = 1 + static_cast<int>(rng.next() % 20);
        auto a = unit(100.0, 0.0, 100.0, 0.3, 0.4);
        auto b = a;
        for (int i = 0; i < k; ++i) degrade_on_charge(a, q / k);
        degrade_on_charge(b, q);
        EXPECT_NEAR(a.soh, b.soh, 1e-9);
    }
}

TEST(UnitScore, DecidedFormula)
{
    ScoreWeights const w;
    EXPECT_DOUBLE_EQ(unit_score(unit(100.0, 0.0, 100.0), w).score, 1.0);
    EXPECT_DOUBLE_EQ(unit_score(unit(100.0, 100.0, 0.0), w).score, 0.0);
    EXPECT_NEAR(unit_score(unit(100.0, 40.0, 80.0), w).score, 0.70, 1e-12);

    ScoreWeights full;
    full.soc_preference = SocPreference::prefer_full;
    EXPECT_NEAR(unit_score(unit(100.0, 40.0, 80.0), full).score, 0.5 * 0.8 + 0.5 * 0.4, 1e-12);
}

TEST(UnitScore, WeightsMustSumToOne)
{
    EXPECT_THROW(validate(ScoreWeights{0.6, 0.6}), InputError);
    EXPECT_THROW(validate(ScoreWeights{-0.5, 1.5}), InputError);
    EXPECT_NO_THROW(validate(ScoreWeights{1.0, 0.0}));
}

TEST(RankUnits, Ordering)
{
    ScoreWeights const w;
    auto identical = system_of({unit(100, 50), unit(100, 50), unit(100, 50)});
    EXPECT_EQ(rank_units(identical, w), (std::vector<int>{0, 1, 2}));

    auto health = system_of({unit(100, 50, 50.0), unit(100, 50, 100.0)});
    EXPECT_EQ(rank_units(health, w), (std::vector<int>{1, 0}));

    auto charge = system_of({unit(100, 100), unit(100, 0)});
    EXPECT_EQ(rank_units(charge, w), (std::vector<int>{1, 0}));
}

TEST(DistributeRanked, GreedyFill)
{
    ScoreWeights const w;
    auto s = system_of({unit(100, 50, 90.0), unit(100, 0, 100.0), unit(100, 20, 95.0)});
    auto const q = distribute_charge_ranked(s, 30.0, w);
    EXPECT_EQ(q, (std::vector<double>{0.0, 30.0, 0.0}));
    EXPECT_DOUBLE_EQ(s.units[1].energy, 30.0);
    EXPECT_NEAR(s.units[1].soh, 100.0 - 30.0 * 0.01 / 100.0, 1e-12);
    EXPECT_EQ(s.units[0].soh, 90.0);

    auto f = system_of({unit(100, 50), unit(100, 0), unit(100, 20)});
    auto const all = distribute_charge_ranked(f, 230.0, w);
    EXPECT_DOUBLE_EQ(std::accumulate(all.begin(), all.end(), 0.0), 230.0);
    for (auto const& u : f.units) EXPECT_DOUBLE_EQ(u.energy, 100.0);

    auto z = system_of({unit(100, 50), unit(100, 0)});
    auto const none = distribute_charge_ranked(z, 0.0, w);
    EXPECT_EQ(none, (std::vector<double>{0.0, 0.0}));
    EXPECT_EQ(z.units[0].soh, 100.0);
    EXPECT_THROW(distribute_charge_ranked(z, 151.0, w), InputError);
    EXPECT_THROW(distribute_charge_ranked(z, -1.0, w), InputError);
}

TEST(DistributeEqual, WaterFilling)
{
    std::vector<BatteryUnit> ten(10, unit(100, 0));
    auto s = system_of(ten);
    auto const q = distribute_charge_equal(s, 100.0);
    for (double x : q) EXPECT_DOUBLE_EQ(x, 10.0);

    auto t = system_of({unit(100, 95), unit(100, 5)});
    auto const r = distribute_charge_equal(t, 100.0);
    EXPECT_DOUBLE_EQ(r[0], 5.0);
    EXPECT_DOUBLE_EQ(r[1], 95.0);

    auto z = system_of({unit(100, 95), unit(100, 5)});
    auto const none = distribute_charge_equal(z, 0.0);
    EXPECT_EQ(none, (std::vector<double>{0.0, 0.0}));
    EXPECT_THROW(distribute_charge_equal(z, 101.0), InputError);
}

// With equal SoC the ranking follows health, so while q fits into the
// healthier units the weakest one is not charged at all and ends no worse
// than under an equal split.
TEST(Distribute, RankedSparesWeakestUnit)
{
    Rng rng(5);
    ScoreWeights const w;
    for (int trial = 0; trial < 500; ++trial) {
        double const level = 90.0 * rng.uniform();
        std::vector<BatteryUnit> units;
        for (int i = 0; i < 6; ++i) units.push_back(unit(100.0, level, 60.0 + 40.0 * rng.uniform(), 0.3, 0.4));
        auto a = system_of(units);
        auto b = a;
        double const q = (system_headroom(a) - (100.0 - level)) * rng.uniform();
        auto const ra = distribute_charge_ranked(a, q, w);
        auto const rb = distribute_charge_equal(b, q);
        EXPECT_NEAR(std::accumulate(ra.begin(), ra.end(), 0.0), q, 1e-9);
        EXPECT_NEAR(std::accumulate(rb.begin(), rb.end(), 0.0), q, 1e-9);
        auto min_soh = [](StorageSystem const& s) {
            double m = 100.0;
            for (auto const& u : s.units) m = std::min(m, u.soh);
            return m;
        };
        EXPECT_GE(min_soh(a), min_soh(b));
        for (std::size_t i = 0; i < units.size(); ++i) {
            EXPECT_LE(a.units[i].soh, units[i].soh);
            EXPECT_LE(a.units[i].energy, a.units[i].capacity + 1e-9);
        }
    }
}

} // namespace

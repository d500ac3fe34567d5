#include "hgrid/error.hpp"
#include "hgrid/model.hpp"

#include <gtest/gtest.h>

#include <algorithm>

namespace {

using namespace hgrid;

StorageSystem ten_units(double energy_each, double capacity_each = 100.0)
{
    BatteryUnit proto;
    proto.capacity = capacity_each;
    proto.energy = energy_each;
    return make_system(1, 10, proto);
}

bool has_rule(std::vector<TopologyViolation> const& v, ViolationRule rule)
{
    return std::any_of(v.begin(), v.end(), [&](auto const& x) { return x.rule == rule; });
}

TEST(SystemSoc, HandValues)
{
    EXPECT_DOUBLE_EQ(system_soc(ten_units(100.0)), 100.0);
    EXPECT_DOUBLE_EQ(system_soc(ten_units(0.0)), 0.0);
    EXPECT_NEAR(system_soc(ten_units(50.0)), 50.0, 50.0 * 1e-12);
}

TEST(SystemSoc, NoCapacityIsAnError)
{
    StorageSystem s;
    s.id = 3;
    EXPECT_THROW(system_soc(s), InputError);
}

TEST(StoredEnergy, Sums)
{
    StorageSystem empty;
    EXPECT_EQ(stored_energy(empty), 0.0);
    EXPECT_DOUBLE_EQ(stored_energy(ten_units(50.0)), 500.0);
    auto s = ten_units(0.0);
    s.units[0].energy = 37.5;
    EXPECT_DOUBLE_EQ(stored_energy(s), 37.5);
    EXPECT_DOUBLE_EQ(system_headroom(s), 1000.0 - 37.5);
    EXPECT_DOUBLE_EQ(s.capacity(), 1000.0);
}

TEST(MakeSystem, AssignsSequentialUnitIds)
{
    auto const s = ten_units(10.0);
    ASSERT_EQ(s.units.size(), 10u);
    for (int i = 0; i < 10; ++i) EXPECT_EQ(s.units[static_cast<std::size_t>(i)].id, i);
}

TEST(ReferenceTopology, MatchesReferenceGrid)
{
    auto const t = reference_topology();
    EXPECT_DOUBLE_EQ(t.total_capacity(), 7000.0);
    ASSERT_EQ(t.systems.size(), 7u);
    ASSERT_EQ(t.loads.size(), 8u);
    ASSERT_EQ(t.sources.size(), 4u);

    auto const* wind1 = t.find_source(1);
    ASSERT_NE(wind1, nullptr);
    EXPECT_EQ(wind1->kind(), SourceKind::wind);
    EXPECT_EQ(wind1->connected_systems, (std::vector<int>{1, 2, 3, 4}));
    auto const* load7 = t.find_load(7);
    ASSERT_NE(load7, nullptr);
    EXPECT_EQ(load7->connected_systems, (std::vector<int>{2, 3, 7}));
    EXPECT_EQ(t.sources_for_system(4), (std::vector<int>{1, 2, 3, 4}));
    EXPECT_EQ(t.sources_for_system(7), (std::vector<int>{3, 4}));
    EXPECT_EQ(t.loads_for_system(7), (std::vector<int>{4, 5, 6, 7}));

    for (auto const& s : t.systems) EXPECT_DOUBLE_EQ(system_soc(s), 50.0);
    EXPECT_TRUE(validate_topology(t).empty());
}

TEST(ValidateTopology, MissingSystemReference)
{
    auto t = reference_topology();
    t.loads[0].connected_systems.push_back(99);
    auto const v = validate_topology(t);
    ASSERT_FALSE(v.empty());
    EXPECT_TRUE(has_rule(v, ViolationRule::missing_system));
    EXPECT_EQ(to_string(ViolationRule::missing_system), "missing-system");
}

TEST(ValidateTopology, UnsourcedSystem)
{
    auto t = reference_topology();
    BatteryUnit proto;
    proto.capacity = 100.0;
    t.systems.push_back(make_system(8, 10, proto));
    auto const v = validate_topology(t);
    EXPECT_TRUE(has_rule(v, ViolationRule::unsourced_system));
}

TEST(ValidateTopology, OtherRules)
{
    auto t = reference_topology();
    t.loads[1].id = t.loads[0].id;
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::duplicate_id));

    t = reference_topology();
    t.loads[2].connected_systems = {3, 3, 4};
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::duplicate_connection));

    t = reference_topology();
    t.sources[0].connected_systems.clear();
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::no_connections));

    t = reference_topology();
    t.systems[0].units[3].energy = 150.0;
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::invalid_unit));

    t = reference_topology();
    t.systems[1].units.clear();
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::invalid_system));

    t = reference_topology();
    t.sources[2].params = SolarPlantParams{900000.0, 1.2};
    EXPECT_TRUE(has_rule(validate_topology(t), ViolationRule::invalid_source_params));
}

} // namespace

#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

std::optional<bool> on_off(std::string const& v)
{
    if (v.empty()) return std::nullopt;
    return v == "on";
}

} // namespace

int main(int argc, char** argv)
{
    using namespace hgrid::cli;

    CLI::App app{"Hybrid renewable grid storage simulator"};
    app.require_subcommand(1);

    std::string config;
    std::string out_dir;
    std::string priority;
    std::string health;
    RunOverrides overrides;
    auto add_overrides = [&](CLI::App* cmd) {
        cmd->add_option("--days", overrides.days, "Number of daily ticks")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", overrides.seed, "Seed for synthetic inputs");
    };

    auto* validate = app.add_subcommand("validate", "Check a scenario config and its topology");
    validate->add_option("config", config, "Scenario JSON")->required();

    auto* simulate = app.add_subcommand("simulate", "Run a scenario and write trace.csv, summary.csv");
    simulate->add_option("config", config, "Scenario JSON")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();
    add_overrides(simulate);
    simulate->add_option("--priority", priority, "Grid-level priority charging")->check(CLI::IsMember({"on", "off"}));
    simulate->add_option("--health", health, "Health-ranked unit charging")->check(CLI::IsMember({"on", "off"}));

    std::string axis = "priority";
    auto* compare = app.add_subcommand("compare", "Run a scenario with one algorithm toggled off and on");
    compare->add_option("config", config, "Scenario JSON")->required();
    compare->add_option("--out", out_dir, "Output directory")->required();
    compare->add_option("--axis", axis, "Toggle to compare")->check(CLI::IsMember({"priority", "health"}));
    add_overrides(compare);

    std::string history;
    ForecastOptions fopts;
    auto* forecast = app.add_subcommand("forecast", "Fit SARIMA to a demand history and forecast ahead");
    forecast->add_option("history", history, "CSV with load_id,day_index,demand_mwd")->required();
    forecast->add_option("--orders", fopts.orders, "p,d,q,P,D,Q,s");
    forecast->add_option("--horizon", fopts.horizon, "Days ahead");
    forecast->add_option("--load", fopts.load_id, "Load id when the file holds several");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        int const rc = app.exit(e);
        return rc == 0 ? 0 : kInvalid;
    }

    overrides.priority = on_off(priority);
    overrides.health = on_off(health);
    if (*validate) return cmd_validate(config, std::cout, std::cerr);
    if (*simulate) return cmd_simulate(config, out_dir, overrides, std::cout, std::cerr);
    if (*compare)
        return cmd_compare(config, out_dir, axis == "health" ? CompareAxis::health : CompareAxis::priority, overrides,
                           std::cout, std::cerr);
    return cmd_forecast(history, fopts, std::cout, std::cerr);
}

#include "hgrid/dispatch.hpp"

#include "hgrid/detail/water_fill.hpp"
#include "hgrid/error.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace hgrid {

namespace detail {

std::vector<double> water_fill_equal(std::span<double const> limits, double amount)
{
    std::vector<double> out(limits.size(), 0.0);
    std::vector<std::size_t> order;
    order.reserve(limits.size());
    for (std::size_t i = 0; i < limits.size(); ++i) {
        if (limits[i] > 0.0) {
            order.push_back(i);
        }
    }
    // Ascending limit: once a recipient's limit exceeds the running equal
    // share, every later recipient is unsaturated as well.
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return limits[a] < limits[b]; });
    double remaining = std::max(0.0, amount);
    for (std::size_t k = 0; k < order.size() && remaining > 0.0; ++k) {
        double const share = remaining / static_cast<double>(order.size() - k);
        std::size_t const i = order[k];
        if (limits[i] <= share) {
            out[i] = limits[i];
            remaining -= limits[i];
        } else {
            for (std::size_t m = k; m < order.size(); ++m) {
                out[order[m]] = share;
            }
            remaining = 0.0;
        }
    }
    return out;
}

} // namespace detail

std::size_t ChargeNetwork::system_index(int system_id) const
{
    auto it = std::find(system_ids.begin(), system_ids.end(), system_id);
    if (it == system_ids.end()) {
        throw InputError(fmt::format("system {} is not part of the charge network", system_id));
    }
    return static_cast<std::size_t>(it - system_ids.begin());
}

std::size_t ChargeNetwork::source_index(int source_id) const
{
    auto it = std::find(source_ids.begin(), source_ids.end(), source_id);
    if (it == source_ids.end()) {
        throw InputError(fmt::format("source {} is not part of the charge network", source_id));
    }
    return static_cast<std::size_t>(it - source_ids.begin());
}

ChargeNetwork make_charge_network(GridTopology const& topology, std::map<int, double> const& per_source_energy)
{
    ChargeNetwork net;
    std::vector<StorageSystem const*> systems;
    for (auto const& s : topology.systems) {
        systems.push_back(&s);
    }
    std::sort(systems.begin(), systems.end(), [](auto a, auto b) { return a->id < b->id; });
    for (auto const* s : systems) {
        net.system_ids.push_back(s->id);
        net.headroom.push_back(std::max(0.0, system_headroom(*s)));
    }

    std::vector<EnergySource const*> sources;
    for (auto const& src : topology.sources) {
        sources.push_back(&src);
    }
    std::sort(sources.begin(), sources.end(), [](auto a, auto b) { return a->id < b->id; });
    for (auto const* src : sources) {
        double energy = 0.0;
        if (auto it = per_source_energy.find(src->id); it != per_source_energy.end()) {
            energy = it->second;
        }
        if (!(energy >= 0.0)) {
            throw InputError(fmt::format("source {} energy must be >= 0 (got {})", src->id, energy));
        }
        std::vector<std::size_t> wired;
        for (int sys : src->connected_systems) {
            wired.push_back(net.system_index(sys));
        }
        std::sort(wired.begin(), wired.end());
        wired.erase(std::unique(wired.begin(), wired.end()), wired.end());
        net.source_ids.push_back(src->id);
        net.source_energy.push_back(energy);
        net.source_systems.push_back(std::move(wired));
    }
    for (auto const& [id, energy] : per_source_energy) {
        if (topology.find_source(id) == nullptr && energy > 0.0) {
            throw InputError(fmt::format("energy given for unknown source {}", id));
        }
    }
    return net;
}

double ChargeAllocation::amount(int source_id, int system_id) const
{
    auto si = std::find(source_ids.begin(), source_ids.end(), source_id);
    auto yi = std::find(system_ids.begin(), system_ids.end(), system_id);
    if (si == source_ids.end() || yi == system_ids.end()) {
        return 0.0;
    }
    auto const row = static_cast<std::size_t>(si - source_ids.begin());
    auto const col = static_cast<std::size_t>(yi - system_ids.begin());
    return amounts[row * system_ids.size() + col];
}

double ChargeAllocation::curtailed_from(int source_id) const
{
    auto si = std::find(source_ids.begin(), source_ids.end(), source_id);
    return si == source_ids.end() ? 0.0 : curtailed[static_cast<std::size_t>(si - source_ids.begin())];
}

double ChargeAllocation::inflow_at(std::size_t system_index) const
{
    double total = 0.0;
    for (std::size_t r = 0; r < source_ids.size(); ++r) {
        total += amounts[r * system_ids.size() + system_index];
    }
    return total;
}

double ChargeAllocation::inflow(int system_id) const
{
    auto yi = std::find(system_ids.begin(), system_ids.end(), system_id);
    return yi == system_ids.end() ? 0.0 : inflow_at(static_cast<std::size_t>(yi - system_ids.begin()));
}

double ChargeAllocation::delivered_at(std::size_t source_index) const
{
    double total = 0.0;
    for (std::size_t c = 0; c < system_ids.size(); ++c) {
        total += amounts[source_index * system_ids.size() + c];
    }
    return total;
}

namespace {

ChargeAllocation empty_allocation(ChargeNetwork const& net)
{
    ChargeAllocation a;
    a.source_ids = net.source_ids;
    a.system_ids = net.system_ids;
    a.amounts.assign(net.source_count() * net.system_count(), 0.0);
    a.curtailed.assign(net.source_count(), 0.0);
    return a;
}

void finish_curtailment(ChargeNetwork const& net, ChargeAllocation& a)
{
    for (std::size_t u = 0; u < net.source_count(); ++u) {
        a.curtailed[u] = std::max(0.0, net.source_energy[u] - a.delivered_at(u));
    }
}

double magnitude(ChargeNetwork const& net)
{
    double scale = 1.0;
    for (double e : net.source_energy) {
        scale = std::max(scale, e);
    }
    for (double h : net.headroom) {
        scale = std::max(scale, h);
    }
    return scale;
}

void check_network(ChargeNetwork const& net)
{
    if (net.source_energy.size() != net.source_count() || net.source_systems.size() != net.source_count()
        || net.headroom.size() != net.system_count()) {
        throw InputError("charge network arrays have inconsistent sizes");
    }
    for (std::size_t u = 0; u < net.source_count(); ++u) {
        if (!(net.source_energy[u] >= 0.0)) {
            throw InputError(fmt::format("source {} energy must be >= 0", net.source_ids[u]));
        }
        for (std::size_t k : net.source_systems[u]) {
            if (k >= net.system_count()) {
                throw InputError(fmt::format("source {} wired to a system outside the network", net.source_ids[u]));
            }
        }
    }
}

} // namespace

ChargeAllocation allocate_priority(ChargeNetwork const& net,
                                   std::span<std::size_t const> priority,
                                   std::span<double const> deficits)
{
    check_network(net);
    std::size_t const n_src = net.source_count();
    std::size_t const n_sys = net.system_count();
    if (deficits.size() != n_sys) {
        throw InputError("one deficit per system is required");
    }

    ChargeAllocation a = empty_allocation(net);
    auto flow = [&](std::size_t u, std::size_t k) -> double& { return a.amounts[u * n_sys + k]; };
    double const tiny = 1e-12 * magnitude(net);

    // Reused between calls; the allocator runs once per tick per system set
    // and in tight loops under test, where the small allocations dominate.
    thread_local struct {
        std::vector<std::size_t> sources_begin, sources, cursor;  // system -> feeding sources, CSR
        std::vector<double> left, covered, inflow;
        std::vector<std::ptrdiff_t> sys_parent, src_parent;
        std::vector<char> sys_seen, src_seen;
        std::vector<std::size_t> queue;
    } scratch;
    auto& sources_begin = scratch.sources_begin;
    auto& sources = scratch.sources;
    sources_begin.assign(n_sys + 1, 0);
    for (std::size_t u = 0; u < n_src; ++u) {
        for (std::size_t k : net.source_systems[u]) {
            ++sources_begin[k + 1];
        }
    }
    for (std::size_t k = 0; k < n_sys; ++k) {
        sources_begin[k + 1] += sources_begin[k];
    }
    sources.resize(sources_begin[n_sys]);
    scratch.cursor.assign(sources_begin.begin(), sources_begin.end() - 1);
    for (std::size_t u = 0; u < n_src; ++u) {
        for (std::size_t k : net.source_systems[u]) {
            sources[scratch.cursor[k]++] = u;
        }
    }

    auto& left = scratch.left;
    auto& covered = scratch.covered;
    left.assign(net.source_energy.begin(), net.source_energy.end());
    covered.assign(n_sys, 0.0);

    // Pass 1: augmenting paths from each system, in priority order, back to
    // a source with energy left. A path alternates "source u feeds system k"
    // and "source u stops feeding system k'" so k' must be re-fed elsewhere.
    auto& sys_parent = scratch.sys_parent;
    auto& src_parent = scratch.src_parent;
    auto& sys_seen = scratch.sys_seen;
    auto& src_seen = scratch.src_seen;
    auto& queue = scratch.queue;
    sys_parent.resize(n_sys);
    src_parent.resize(n_src);
    sys_seen.resize(n_sys);
    src_seen.resize(n_src);
    for (std::size_t j : priority) {
        if (j >= n_sys) {
            throw InputError("priority order refers to a system outside the network");
        }
        double const want = std::min(std::max(0.0, deficits[j]), net.headroom[j]);
        while (want - covered[j] > tiny) {
            std::fill(sys_seen.begin(), sys_seen.end(), 0);
            std::fill(src_seen.begin(), src_seen.end(), 0);
            queue.assign(1, j);
            sys_seen[j] = 1;
            sys_parent[j] = -1;
            std::ptrdiff_t found = -1;
            for (std::size_t head = 0; head < queue.size() && found < 0; ++head) {
                std::size_t const k = queue[head];
                for (std::size_t i = sources_begin[k]; i < sources_begin[k + 1]; ++i) {
                    std::size_t const u = sources[i];
                    if (src_seen[u]) {
                        continue;
                    }
                    src_seen[u] = 1;
                    src_parent[u] = static_cast<std::ptrdiff_t>(k);
                    if (left[u] > tiny) {
                        found = static_cast<std::ptrdiff_t>(u);
                        break;
                    }
                    for (std::size_t k2 : net.source_systems[u]) {
                        if (!sys_seen[k2] && flow(u, k2) > tiny) {
                            sys_seen[k2] = 1;
                            sys_parent[k2] = static_cast<std::ptrdiff_t>(u);
                            queue.push_back(k2);
                        }
                    }
                }
            }
            if (found < 0) {
                break;
            }

            double delta = std::min(want - covered[j], left[static_cast<std::size_t>(found)]);
            for (auto u = static_cast<std::size_t>(found);;) {
                auto const k = static_cast<std::size_t>(src_parent[u]);
                if (sys_parent[k] < 0) {
                    break;
                }
                auto const prev = static_cast<std::size_t>(sys_parent[k]);
                delta = std::min(delta, flow(prev, k));
                u = prev;
            }
            for (auto u = static_cast<std::size_t>(found);;) {
                auto const k = static_cast<std::size_t>(src_parent[u]);
                flow(u, k) += delta;
                if (sys_parent[k] < 0) {
                    break;
                }
                auto const prev = static_cast<std::size_t>(sys_parent[k]);
                flow(prev, k) -= delta;
                u = prev;
            }
            left[static_cast<std::size_t>(found)] -= delta;
            covered[j] += delta;
        }
    }

    // Pass 2: leftover energy in proportion to remaining headroom.
    auto& inflow = scratch.inflow;
    inflow.assign(n_sys, 0.0);
    for (std::size_t u = 0; u < n_src; ++u) {
        for (std::size_t k = 0; k < n_sys; ++k) {
            inflow[k] += flow(u, k);
        }
    }
    for (std::size_t u = 0; u < n_src; ++u) {
        if (left[u] <= 0.0) {
            continue;
        }
        double room_total = 0.0;
        for (std::size_t k : net.source_systems[u]) {
            room_total += std::max(0.0, net.headroom[k] - inflow[k]);
        }
        if (room_total <= 0.0) {
            continue;
        }
        bool const fills_all = left[u] >= room_total;
        for (std::size_t k : net.source_systems[u]) {
            double const room = std::max(0.0, net.headroom[k] - inflow[k]);
            double const give = fills_all ? room : left[u] * (room / room_total);
            flow(u, k) += give;
            inflow[k] += give;
        }
        left[u] = fills_all ? left[u] - room_total : 0.0;
    }

    finish_curtailment(net, a);
    return a;
}

ChargeAllocation allocate_equal(ChargeNetwork const& net)
{
    check_network(net);
    std::size_t const n_sys = net.system_count();
    ChargeAllocation a = empty_allocation(net);
    std::vector<double> room = net.headroom;
    std::vector<double> limits;
    for (std::size_t u = 0; u < net.source_count(); ++u) {
        auto const& wired = net.source_systems[u];
        limits.clear();
        for (std::size_t k : wired) {
            limits.push_back(std::max(0.0, room[k]));
        }
        auto shares = detail::water_fill_equal(limits, net.source_energy[u]);
        for (std::size_t i = 0; i < wired.size(); ++i) {
            a.amounts[u * n_sys + wired[i]] += shares[i];
            room[wired[i]] -= shares[i];
        }
    }
    finish_curtailment(net, a);
    return a;
}

ChargeAllocation allocate_equal(std::map<int, double> const& per_source_energy, GridTopology const& topology)
{
    return allocate_equal(make_charge_network(topology, per_source_energy));
}

std::vector<ChargeTarget> compute_charge_targets(GridTopology const& topology,
                                                 std::map<int, double> const& load_forecasts)
{
    std::map<int, double> share;
    for (auto const& load : topology.loads) {
        auto it = load_forecasts.find(load.id);
        if (it == load_forecasts.end()) {
            throw InputError(fmt::format("no forecast for load {}", load.id));
        }
        if (!(it->second >= 0.0)) {
            throw InputError(fmt::format("forecast for load {} must be >= 0 (got {})", load.id, it->second));
        }
        if (load.connected_systems.empty()) {
            continue;
        }
        double const per_system = kChargeBuffer * it->second / static_cast<double>(load.connected_systems.size());
        for (int sys : load.connected_systems) {
            share[sys] += per_system;
        }
    }

    std::vector<ChargeTarget> out;
    out.reserve(topology.systems.size());
    for (auto const& s : topology.systems) {
        ChargeTarget t;
        t.system_id = s.id;
        t.target = std::min(s.capacity(), share[s.id]);
        t.deficit = std::max(0.0, t.target - stored_energy(s));
        out.push_back(t);
    }
    std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.system_id < b.system_id; });
    return out;
}

std::vector<int> prioritize(std::span<ChargeTarget const> targets)
{
    std::vector<ChargeTarget> sorted(targets.begin(), targets.end());
    std::sort(sorted.begin(), sorted.end(), [](auto const& a, auto const& b) {
        if (a.deficit != b.deficit) {
            return a.deficit > b.deficit;
        }
        return a.system_id < b.system_id;
    });
    std::vector<int> out;
    out.reserve(sorted.size());
    for (auto const& t : sorted) {
        out.push_back(t.system_id);
    }
    return out;
}

ChargeAllocation allocate_priority(std::span<int const> order,
                                   std::span<ChargeTarget const> targets,
                                   std::map<int, double> const& per_source_energy,
                                   GridTopology const& topology)
{
    auto net = make_charge_network(topology, per_source_energy);
    std::vector<double> deficits(net.system_count(), 0.0);
    for (auto const& t : targets) {
        deficits[net.system_index(t.system_id)] = t.deficit;
    }
    std::vector<std::size_t> priority;
    std::vector<char> listed(net.system_count(), 0);
    for (int id : order) {
        auto const idx = net.system_index(id);
        if (listed[idx]) {
            throw InputError(fmt::format("system {} appears twice in the priority order", id));
        }
        listed[idx] = 1;
        priority.push_back(idx);
    }
    if (priority.size() != net.system_count()) {
        throw InputError("priority order must cover every system");
    }
    return allocate_priority(net, priority, deficits);
}

double deficit_coverage(ChargeAllocation const& allocation, std::span<double const> deficits)
{
    double total = 0.0;
    for (std::size_t k = 0; k < allocation.system_ids.size() && k < deficits.size(); ++k) {
        total += std::min(allocation.inflow_at(k), std::max(0.0, deficits[k]));
    }
    return total;
}

double available_energy(std::span<SystemLevel const> systems) noexcept
{
    double total = 0.0;
    for (auto const& s : systems) {
        total += s.stored;
    }
    return total;
}

double available_energy(LoadCenter const& load, GridTopology const& topology)
{
    double total = 0.0;
    for (int id : load.connected_systems) {
        auto const* s = topology.find_system(id);
        if (s == nullptr) {
            throw ValidationError(fmt::format("load {} references unknown system {}", load.id, id));
        }
        total += system_soc(*s) / 100.0 * s->capacity();
    }
    return total;
}

DischargeAssignment discharge_shares(double demand, std::span<SystemLevel const> systems)
{
    if (!(demand >= 0.0)) {
        throw InputError(fmt::format("demand must be >= 0 (got {})", demand));
    }
    DischargeAssignment out;
    out.demand = demand;
    double const available = available_energy(systems);
    out.served = std::min(demand, available);
    out.unmet = demand - out.served;
    double const ratio = available > 0.0 ? out.served / available : 0.0;
    out.contributions.reserve(systems.size());
    for (auto const& s : systems) {
        out.contributions.push_back({s.system_id, s.stored * ratio});
    }
    return out;
}

std::vector<double> apply_discharge(StorageSystem& system, double amount)
{
    double const stored = stored_energy(system);
    if (!(amount >= 0.0)) {
        throw InputError(fmt::format("discharge amount must be >= 0 (got {})", amount));
    }
    if (amount > stored * (1.0 + 1e-12)) {
        throw InputError(fmt::format("cannot discharge {} MWd from system {} holding {} MWd", amount, system.id, stored));
    }
    std::vector<double> limits;
    limits.reserve(system.units.size());
    for (auto const& u : system.units) {
        limits.push_back(u.energy);
    }
    auto withdrawals = detail::water_fill_equal(limits, std::min(amount, stored));
    for (std::size_t i = 0; i < system.units.size(); ++i) {
        auto& u = system.units[i];
        u.energy = std::max(0.0, u.energy - withdrawals[i]);
    }
    return withdrawals;
}

} // namespace hgrid

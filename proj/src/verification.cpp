#include "pathpebble/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

namespace pathpebble {

int PathDecomposition::width() const
{
    std::size_t widest = 0;
    for (const auto & bag : bags)
        widest = std::max(widest, bag.size());
    return static_cast<int>(widest) - 1;
}

DecompositionReport validate_decomposition(const PathDecomposition &d, const Graph &g)
{
    DecompositionReport report;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> first(g.size(), none), last(g.size(), none), count(g.size(), 0);
    std::vector<std::size_t> seen_in(g.size(), none);

    for (std::size_t i = 0; i < d.bags.size(); ++i)
        for (Vertex v : d.bags[i]) {
            if (v < 0 || v >= g.size() || seen_in[v] == i) {
                report.violation = DecompositionViolation::BadVertex;
                report.vertex = v;
                report.first = i;
                report.message = "bag " + std::to_string(i) + " has invalid or repeated vertex " + std::to_string(v);
                return report;
            }
            seen_in[v] = i;
            if (first[v] == none)
                first[v] = i;
            last[v] = i;
            ++count[v];
        }

    for (Vertex v = 0; v < g.size(); ++v)
        if (count[v] == 0) {
            report.violation = DecompositionViolation::UncoveredVertex;
            report.vertex = v;
            report.message = "vertex " + std::to_string(v) + " is in no bag";
            return report;
        }

    for (Vertex v = 0; v < g.size(); ++v)
        if (count[v] != last[v] - first[v] + 1) {
            report.violation = DecompositionViolation::Interpolation;
            report.vertex = v;
            report.first = first[v];
            report.last = last[v];
            for (std::size_t j = first[v] + 1; j < last[v]; ++j)
                if (std::find(d.bags[j].begin(), d.bags[j].end(), v) == d.bags[j].end()) {
                    report.middle = j;
                    break;
                }
            report.message = "interpolation fails for vertex " + std::to_string(v) + ": bags "
                + std::to_string(report.first) + " and " + std::to_string(report.last) + " hold it, bag "
                + std::to_string(report.middle) + " does not";
            return report;
        }

    // with contiguous occurrences an edge is covered iff the two intervals meet
    for (const auto & e : g.edges())
        if (std::max(first[e.u], first[e.v]) > std::min(last[e.u], last[e.v])) {
            report.violation = DecompositionViolation::UncoveredEdge;
            report.edge = e;
            report.message = "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is in no bag";
            return report;
        }

    report.ok = true;
    report.width = d.width();
    return report;
}

EmbeddingReport validate_embedding(const EmbeddingCertificate &c, const Graph &guest, const Graph &host)
{
    EmbeddingReport report;
    auto fail = [&] (EmbeddingViolation kind, std::string message) {
        report.violation = kind;
        report.message = std::move(message);
        return report;
    };

    if (c.vertex_map.size() != static_cast<std::size_t>(guest.size()))
        return fail(EmbeddingViolation::BadVertexMap, "vertex map covers " + std::to_string(c.vertex_map.size())
                + " of " + std::to_string(guest.size()) + " guest vertices");

    // 0 = unused, 1 = image of a guest vertex, 2 = internal path vertex
    std::vector<std::uint8_t> used(host.size(), 0);
    for (std::size_t i = 0; i < c.vertex_map.size(); ++i) {
        Vertex h = c.vertex_map[i];
        if (h < 0 || h >= host.size() || used[h]) {
            report.host_vertex = h;
            return fail(EmbeddingViolation::BadVertexMap, "guest vertex " + std::to_string(i)
                    + " maps to invalid or shared host vertex " + std::to_string(h));
        }
        used[h] = 1;
    }

    std::vector<bool> covered(guest.edge_count(), false);
    auto edges = guest.edges();
    for (const auto & p : c.edge_paths) {
        Edge key{std::min(p.from, p.to), std::max(p.from, p.to)};
        auto it = std::lower_bound(edges.begin(), edges.end(), key);
        if (p.from < 0 || p.to < 0 || it == edges.end() || *it != key) {
            report.guest_edge = key;
            return fail(EmbeddingViolation::ExtraPath, "path given for non-edge (" + std::to_string(p.from) + ", "
                    + std::to_string(p.to) + ")");
        }
        auto index = static_cast<std::size_t>(it - edges.begin());
        if (covered[index]) {
            report.guest_edge = key;
            return fail(EmbeddingViolation::ExtraPath, "second path for edge (" + std::to_string(key.u) + ", "
                    + std::to_string(key.v) + ")");
        }
        covered[index] = true;

        Vertex previous = c.vertex_map[p.from];
        for (Vertex x : p.internal) {
            if (x < 0 || x >= host.size() || used[x]) {
                report.guest_edge = key;
                report.host_vertex = x;
                return fail(EmbeddingViolation::NotDisjoint, "host vertex " + std::to_string(x)
                        + " on the path of edge (" + std::to_string(key.u) + ", " + std::to_string(key.v)
                        + ") is invalid or already used");
            }
            if (! host.adjacent(previous, x)) {
                report.guest_edge = key;
                report.host_vertex = x;
                return fail(EmbeddingViolation::BrokenPath, "host vertices " + std::to_string(previous) + " and "
                        + std::to_string(x) + " are not adjacent");
            }
            used[x] = 2;
            previous = x;
        }
        if (! host.adjacent(previous, c.vertex_map[p.to])) {
            report.guest_edge = key;
            report.host_vertex = c.vertex_map[p.to];
            return fail(EmbeddingViolation::BrokenPath, "host vertices " + std::to_string(previous) + " and "
                    + std::to_string(c.vertex_map[p.to]) + " are not adjacent");
        }
    }

    for (std::size_t i = 0; i < covered.size(); ++i)
        if (! covered[i]) {
            report.guest_edge = edges[i];
            return fail(EmbeddingViolation::MissingEdge, "guest edge (" + std::to_string(edges[i].u) + ", "
                    + std::to_string(edges[i].v) + ") has no path");
        }

    report.ok = true;
    return report;
}

int exact_pathwidth(const Graph &g, OracleLimit limit)
{
    const int n = g.size();
    if (n > static_cast<int>(limit))
        throw GraphError("exact pathwidth oracle limited to " + std::to_string(static_cast<int>(limit))
                + " vertices, got " + std::to_string(n));
    if (n == 0)
        return 0;

    std::vector<std::uint32_t> adj(n, 0);
    for (const auto & e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }

    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    // cost[S]: best achievable max boundary over orderings whose prefix
    // sequence ends at S.
    std::vector<std::uint8_t> cost(std::size_t{full} + 1, 0);
    for (std::uint32_t s = 1; s <= full; ++s) {
        int boundary = 0;
        std::uint8_t best = std::numeric_limits<std::uint8_t>::max();
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (adj[v] & ~s & full)
                ++boundary;
            best = std::min(best, cost[s & ~(1u << v)]);
        }
        cost[s] = std::max<std::uint8_t>(best, static_cast<std::uint8_t>(boundary));
    }
    return cost[full];
}

bool check_edge_bound(const Graph &g, int t)
{
    auto n = static_cast<std::int64_t>(g.size());
    // beyond n - 1 the formula undercounts; at n - 1 it is n(n - 1) / 2
    auto k = std::min<std::int64_t>(t, std::max<std::int64_t>(n - 1, 0));
    auto bound = n * k - (k * k + k) / 2;
    return static_cast<std::int64_t>(g.edge_count()) <= bound;
}

} // namespace pathpebble

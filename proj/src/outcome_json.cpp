#include "pathpebble/outcome_json.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pathpebble {

namespace {
    auto require(const Json & j, const char * key) -> const Json &
    {
        if (! j.is_object() || ! j.contains(key))
            throw std::invalid_argument(std::string("missing \"") + key + "\"");
        return j.at(key);
    }

    auto vertices(const Json & j) -> std::vector<Vertex>
    {
        if (! j.is_array())
            throw std::invalid_argument("expected an array of vertices");
        return j.get<std::vector<Vertex>>();
    }

    auto boundary_to_json(const BoundaryGraph & b, std::span<const Vertex> hosts) -> Json
    {
        Json j = graph_to_json(b.graph);
        j["boundary"] = b.boundary;
        j["hosts"] = hosts;
        return j;
    }

    auto boundary_from_json(const Json & j, std::vector<Vertex> & hosts) -> BoundaryGraph
    {
        BoundaryGraph b{graph_from_json(j), vertices(require(j, "boundary"))};
        b.check();
        hosts = vertices(require(j, "hosts"));
        return b;
    }
}

Json graph_to_json(const Graph &g)
{
    Json edges = Json::array();
    for (const auto & e : g.edges())
        edges.push_back({e.u, e.v});
    return {{"n", g.size()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json &j)
{
    std::vector<Edge> edges;
    for (const auto & e : require(j, "edges")) {
        if (! e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge must be a pair of vertices");
        edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
    }
    return Graph::from_edges(require(j, "n").get<Vertex>(), std::move(edges));
}

Json decomposition_to_json(const PathDecomposition &d)
{
    return {{"bags", d.bags}};
}

PathDecomposition decomposition_from_json(const Json &j)
{
    if (j.is_array())
        return {j.get<std::vector<std::vector<Vertex>>>()};
    if (j.is_object() && j.contains("bags"))
        return decomposition_from_json(j.at("bags"));
    if (j.is_object() && j.contains("decomposition"))
        return decomposition_from_json(j.at("decomposition"));
    throw std::invalid_argument("no decomposition bags found");
}

Json certificate_to_json(const EmbeddingCertificate &c, std::span<const TokenLabel> labels)
{
    if (labels.size() != c.vertex_map.size())
        throw std::invalid_argument("one label per guest vertex required");
    Json names = Json::array(), hosts = Json::object(), paths = Json::object();
    for (std::size_t i = 0; i < labels.size(); ++i) {
        names.push_back(labels[i].to_string());
        hosts[labels[i].to_string()] = c.vertex_map[i];
    }
    for (const auto & p : c.edge_paths) {
        auto child = labels[p.to], parent = labels[p.from];
        if (child.is_root() || child.parent() != parent)
            throw std::invalid_argument("edge path does not run from a label to its child");
        paths[child.to_string()] = p.internal;
    }
    return {{"labels", std::move(names)}, {"tokenHost", std::move(hosts)}, {"edgePaths", std::move(paths)}};
}

std::optional<Graph> CertificateDocument::label_tree() const
{
    if (labels.empty())
        return std::nullopt;
    std::map<std::uint64_t, Vertex> index;
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i].code()] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].is_root())
            continue;
        auto it = index.find(labels[i].parent().code());
        if (it == index.end())
            throw std::invalid_argument("label " + labels[i].to_string() + " has no parent in the set");
        edges.push_back({it->second, static_cast<Vertex>(i)});
    }
    return Graph::from_edges(static_cast<Vertex>(labels.size()), std::move(edges));
}

CertificateDocument certificate_from_json(const Json &j)
{
    if (j.is_object() && j.contains("certificate"))
        return certificate_from_json(j.at("certificate"));

    CertificateDocument doc;
    if (j.is_object() && j.contains("vertexMap")) {
        doc.certificate.vertex_map = vertices(j.at("vertexMap"));
        for (const auto & p : require(j, "edgePaths"))
            doc.certificate.edge_paths.push_back(
                    {require(p, "from").get<Vertex>(), require(p, "to").get<Vertex>(), vertices(require(p, "path"))});
        return doc;
    }

    const auto & hosts = require(j, "tokenHost");
    if (! hosts.is_object())
        throw std::invalid_argument("tokenHost must map labels to vertices");
    if (j.contains("labels")) {
        for (const auto & name : j.at("labels"))
            doc.labels.push_back(TokenLabel::parse(name.get<std::string>()));
    }
    else {
        for (const auto & item : hosts.items())
            doc.labels.push_back(TokenLabel::parse(item.key()));
        std::sort(doc.labels.begin(), doc.labels.end(),
                [] (TokenLabel a, TokenLabel b) { return a.code() < b.code(); });
    }

    std::map<std::uint64_t, Vertex> index;
    for (std::size_t i = 0; i < doc.labels.size(); ++i) {
        const auto name = doc.labels[i].to_string();
        if (! hosts.contains(name))
            throw std::invalid_argument("label " + name + " has no host vertex");
        if (! index.emplace(doc.labels[i].code(), static_cast<Vertex>(i)).second)
            throw std::invalid_argument("label " + name + " listed twice");
        doc.certificate.vertex_map.push_back(hosts.at(name).get<Vertex>());
    }

    const auto & paths = require(j, "edgePaths");
    if (! paths.is_object())
        throw std::invalid_argument("edgePaths must map child labels to vertex arrays");
    for (const auto & item : paths.items()) {
        auto child = TokenLabel::parse(item.key());
        auto c = index.find(child.code());
        if (child.is_root() || c == index.end())
            throw std::invalid_argument("edge path for unknown label " + item.key());
        auto p = index.find(child.parent().code());
        if (p == index.end())
            throw std::invalid_argument("label " + item.key() + " has no parent in the set");
        doc.certificate.edge_paths.push_back({p->second, c->second, vertices(item.value())});
    }
    return doc;
}

Json stats_to_json(const RunStats &s)
{
    return {{"touches", s.touches}, {"iterations", s.iterations}, {"rootPlacements", s.root_placements},
        {"relabels", s.relabels}, {"shifts", s.shifts}, {"expansions", s.expansions}, {"maxBag", s.max_bag}};
}

RunStats stats_from_json(const Json &j)
{
    RunStats s;
    s.touches = require(j, "touches").get<std::uint64_t>();
    s.iterations = require(j, "iterations").get<std::uint64_t>();
    s.root_placements = require(j, "rootPlacements").get<std::uint64_t>();
    s.relabels = require(j, "relabels").get<std::uint64_t>();
    s.shifts = require(j, "shifts").get<std::uint64_t>();
    s.expansions = require(j, "expansions").get<std::uint64_t>();
    s.max_bag = require(j, "maxBag").get<std::size_t>();
    return s;
}

const char *outcome_kind(const Outcome &o)
{
    if (o.is_full())
        return "full-decomposition";
    if (o.is_fat())
        return "fat-factor";
    return "edge-bound-reject";
}

Json outcome_to_json(const Outcome &o)
{
    Json j{{"outcome", outcome_kind(o)}, {"t", o.t}, {"f", f_bound(o.t)}, {"stats", stats_to_json(o.stats)}};
    if (const auto * full = std::get_if<FullDecomposition>(&o.result)) {
        j["width"] = full->decomposition.width();
        j["decomposition"] = decomposition_to_json(full->decomposition);
    }
    else if (const auto * fat = std::get_if<FatFactor>(&o.result)) {
        j["width"] = fat->decomposition.width();
        j["factor"] = boundary_to_json(fat->factor, fat->factor_hosts);
        j["complement"] = boundary_to_json(fat->complement, fat->complement_hosts);
        j["decomposition"] = decomposition_to_json(fat->decomposition);
        j["history"] = decomposition_to_json(o.history);
        j["guest"] = graph_to_json(fat->guest);
        j["certificate"] = certificate_to_json(fat->certificate, fat->guest_labels);
    }
    else {
        const auto & reject = std::get<EdgeBoundReject>(o.result);
        j["edgeCount"] = reject.edge_count;
        j["bound"] = reject.bound;
    }
    return j;
}

Outcome outcome_from_json(const Json &j)
{
    Outcome o;
    o.t = require(j, "t").get<int>();
    o.stats = stats_from_json(require(j, "stats"));
    auto kind = require(j, "outcome").get<std::string>();
    if (kind == "full-decomposition") {
        FullDecomposition full{decomposition_from_json(require(j, "decomposition"))};
        o.history = full.decomposition;
        o.result = std::move(full);
    }
    else if (kind == "fat-factor") {
        FatFactor fat;
        fat.factor = boundary_from_json(require(j, "factor"), fat.factor_hosts);
        fat.complement = boundary_from_json(require(j, "complement"), fat.complement_hosts);
        fat.decomposition = decomposition_from_json(require(j, "decomposition"));
        o.history = decomposition_from_json(require(j, "history"));
        fat.guest = graph_from_json(require(j, "guest"));
        auto doc = certificate_from_json(require(j, "certificate"));
        fat.certificate = std::move(doc.certificate);
        fat.guest_labels = std::move(doc.labels);
        o.result = std::move(fat);
    }
    else if (kind == "edge-bound-reject") {
        o.result = EdgeBoundReject{require(j, "edgeCount").get<std::size_t>(), require(j, "bound").get<std::int64_t>()};
    }
    else {
        throw std::invalid_argument("unknown outcome kind \"" + kind + "\"");
    }
    return o;
}

} // namespace pathpebble

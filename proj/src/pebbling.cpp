#include "pathpebble/pebbling.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

namespace pathpebble {

int max_supported_t(GuestChoice guest)
{
    switch (guest) {
        case GuestChoice::Obstruction: return 3;
        case GuestChoice::Complete:    return 6;
        case GuestChoice::Custom:      return (GuestTree::max_height - 2) / 2;
    }
    return 0;
}

GuestTree make_guest(int t, const RunOptions &options)
{
    if (t < 0 || t > max_supported_t(options.guest))
        throw std::out_of_range("t = " + std::to_string(t) + " is outside the supported range 0.."
                + std::to_string(max_supported_t(options.guest)) + " for this guest");

    bool expandable = options.relabel == RelabelMode::Expand;
    switch (options.guest) {
        case GuestChoice::Obstruction:
            return GuestTree::with_flags(h_bound(t), default_obstruction_guest(t).labels, expandable);
        case GuestChoice::Complete:
            return GuestTree::complete(h_bound(t));
        case GuestChoice::Custom:
            return GuestTree::with_flags(h_bound(t), options.custom_flags, expandable);
    }
    throw std::logic_error("unknown guest choice");
}

PebbleState::PebbleState(const Graph &host, GuestTree guest, std::optional<std::uint64_t> seed, std::ostream *trace) :
    host_(host),
    guest_(std::move(guest)),
    trace_(trace),
    red_(host.size(), 0),
    cursor_(host.size(), 0),
    token_at_(host.size(), 0),
    vertex_of_(guest_.universe_size() + 1, no_vertex),
    path_(guest_.universe_size() + 1),
    placed_pos_(guest_.universe_size() + 1, 0),
    root_order_(host.size())
{
    std::iota(root_order_.begin(), root_order_.end(), 0);
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(root_order_.begin(), root_order_.end(), rng);
    }
}

std::optional<Vertex> PebbleState::vertex_of(TokenLabel label) const
{
    if (! guest_.contains(label) || vertex_of_[label.code()] == no_vertex)
        return std::nullopt;
    return vertex_of_[label.code()];
}

std::optional<TokenLabel> PebbleState::token_at(Vertex v) const
{
    if (token_at_.at(v) == 0)
        return std::nullopt;
    return TokenLabel::from_code(token_at_[v]);
}

std::span<const Vertex> PebbleState::path_to_parent(TokenLabel label) const
{
    if (! vertex_of(label))
        throw std::logic_error("token " + label.to_string() + " is not placed");
    return path_[label.code()];
}

std::vector<TokenLabel> PebbleState::placed_tokens() const
{
    auto codes = placed_;
    std::sort(codes.begin(), codes.end());
    std::vector<TokenLabel> result;
    for (auto c : codes)
        result.push_back(TokenLabel::from_code(c));
    return result;
}

void PebbleState::emit(const char *event, TokenLabel label, Vertex v, const char *extra_key,
        const std::string &extra) const
{
    if (! trace_)
        return;
    nlohmann::json line{{"event", event}, {"step", stats_.iterations}, {"token", label.to_string()}};
    if (v != no_vertex)
        line["vertex"] = v;
    if (extra_key)
        line[extra_key] = extra;
    *trace_ << line.dump() << '\n';
}

std::optional<Vertex> PebbleState::next_blue_neighbour(Vertex u)
{
    auto nb = host_.neighbors(u);
    // red entries are passed over for good: red never turns blue again
    while (cursor_[u] < nb.size()) {
        Vertex w = nb[cursor_[u]++];
        ++stats_.touches;
        if (! red_[w])
            return w;
    }
    return std::nullopt;
}

std::optional<Vertex> PebbleState::next_blue_vertex()
{
    while (root_cursor_ < root_order_.size()) {
        Vertex v = root_order_[root_cursor_++];
        ++stats_.touches;
        if (! red_[v])
            return v;
    }
    return std::nullopt;
}

bool PebbleState::has_unplaced_flagged_child(TokenLabel label) const
{
    for (auto child : guest_.children(label))
        if (guest_.is_flagged(child) && vertex_of_[child.code()] == no_vertex)
            return true;
    return false;
}

void PebbleState::place(TokenLabel label, Vertex v)
{
    auto code = label.code();
    vertex_of_[code] = v;
    token_at_[v] = code;
    placed_pos_[code] = placed_.size();
    placed_.push_back(code);
    if (guest_.is_flagged(label))
        ++flagged_placed_;
}

void PebbleState::unplace(TokenLabel label)
{
    auto code = label.code();
    Vertex v = vertex_of_[code];
    token_at_[v] = 0;
    vertex_of_[code] = no_vertex;

    auto pos = placed_pos_[code];
    placed_[pos] = placed_.back();
    placed_pos_[placed_[pos]] = pos;
    placed_.pop_back();
    if (guest_.is_flagged(label))
        --flagged_placed_;
}

std::vector<Vertex> PebbleState::grow_token_tree()
{
    const auto root = TokenLabel::root();
    if (vertex_of_[root.code()] == no_vertex) {
        if (auto v = next_blue_vertex()) {
            red_[*v] = 1;
            ++red_count_;
            place(root, *v);
            path_[root.code()].clear();
            ++stats_.root_placements;
            emit("root-place", root, *v);
        }
    }

    std::vector<std::uint64_t> work;
    for (auto code : placed_)
        if (has_unplaced_flagged_child(TokenLabel::from_code(code)))
            work.push_back(code);
    std::sort(work.begin(), work.end());

    for (std::size_t next = 0; next < work.size(); ++next) {
        auto token = TokenLabel::from_code(work[next]);
        Vertex u = vertex_of_[token.code()];
        for (auto child : guest_.children(token)) {
            if (! guest_.is_flagged(child) || vertex_of_[child.code()] != no_vertex)
                continue;
            auto v = next_blue_neighbour(u);
            if (! v)
                break;
            red_[*v] = 1;
            ++red_count_;
            place(child, *v);
            path_[child.code()].clear();
            emit("place", child, *v);
            if (has_unplaced_flagged_child(child))
                work.push_back(child.code());
        }
    }

    std::vector<Vertex> tokened;
    tokened.reserve(placed_.size());
    for (auto code : placed_)
        tokened.push_back(vertex_of_[code]);
    std::sort(tokened.begin(), tokened.end());
    return tokened;
}

TokenLabel PebbleState::pick_removal_token(Strategy strategy) const
{
    std::optional<TokenLabel> best;
    for (auto code : placed_) {
        auto label = TokenLabel::from_code(code);
        if (! has_unplaced_flagged_child(label))
            continue;
        if (! best) {
            best = label;
            continue;
        }
        bool better = false;
        switch (strategy) {
            case Strategy::Deepest:
                better = label.length() != best->length() ? label.length() > best->length()
                    : lexicographic_less(label, *best);
                break;
            case Strategy::LowestLabel:
                better = lexicographic_less(label, *best);
                break;
        }
        if (better)
            best = label;
    }
    if (! best)
        throw std::logic_error("no placed token has an unplaced flagged child");
    return *best;
}

void PebbleState::snapshot()
{
    std::vector<Vertex> bag;
    bag.reserve(placed_.size());
    for (auto code : placed_)
        bag.push_back(vertex_of_[code]);
    std::sort(bag.begin(), bag.end());
    stats_.max_bag = std::max(stats_.max_bag, bag.size());
    if (trace_) {
        nlohmann::json line{{"event", "snapshot"}, {"step", stats_.iterations}, {"index", history_.size()},
            {"bag", bag}};
        *trace_ << line.dump() << '\n';
    }
    history_.push_back(std::move(bag));
}

namespace {
    struct Moved
    {
        TokenLabel label;
        Vertex vertex;
        std::vector<Vertex> path;
    };
}

void PebbleState::move_subtree(TokenLabel from, TokenLabel to)
{
    std::vector<Moved> moved;
    std::vector<TokenLabel> stack{from};
    while (! stack.empty()) {
        auto label = stack.back();
        stack.pop_back();
        if (! guest_.contains(label) || vertex_of_[label.code()] == no_vertex)
            continue;
        moved.push_back({label, vertex_of_[label.code()], std::move(path_[label.code()])});
        for (auto child : guest_.children(label))
            stack.push_back(child);
    }
    for (const auto & m : moved)
        unplace(m.label);
    for (auto & m : moved) {
        auto target = m.label.replace_prefix(from, to);
        if (! guest_.contains(target) || vertex_of_[target.code()] != no_vertex)
            throw std::logic_error("relabel target " + target.to_string() + " unavailable");
        place(target, m.vertex);
        path_[target.code()] = std::move(m.path);
    }
}

void PebbleState::record_subdivision(TokenLabel removed, Vertex removed_vertex, TokenLabel surviving_child)
{
    std::vector<Vertex> spliced;
    if (! removed.is_root()) {
        spliced = std::move(path_[removed.code()]);
        spliced.push_back(removed_vertex);
        const auto & below = path_[surviving_child.code()];
        spliced.insert(spliced.end(), below.begin(), below.end());
    }
    move_subtree(surviving_child, removed);
    path_[removed.code()] = std::move(spliced);
}

void PebbleState::remove_token(TokenLabel token, RelabelMode mode)
{
    auto found = vertex_of(token);
    if (! found)
        throw std::logic_error("token " + token.to_string() + " is not placed");
    Vertex u = *found;
    auto nb = host_.neighbors(u);
    while (cursor_[u] < nb.size() && red_[nb[cursor_[u]]]) {
        ++cursor_[u];
        ++stats_.touches;
    }
    if (cursor_[u] < nb.size())
        throw std::logic_error("vertex " + std::to_string(u) + " still has a blue neighbour");

    ++stats_.iterations;
    std::vector<TokenLabel> tokened_children;
    for (auto child : guest_.children(token))
        if (vertex_of_[child.code()] != no_vertex)
            tokened_children.push_back(child);

    unplace(token);
    emit("remove", token, u);

    if (tokened_children.size() == 1) {
        record_subdivision(token, u, tokened_children.front());
        ++stats_.relabels;
        emit("relabel", tokened_children.front(), vertex_of_[token.code()], "to", token.to_string());
    }
    else if (tokened_children.empty()) {
        path_[token.code()].clear();
        if (mode == RelabelMode::Shift && ! token.is_root()) {
            auto sibling = token.sibling();
            if (! guest_.is_flagged(sibling) && vertex_of_[sibling.code()] != no_vertex) {
                move_subtree(sibling, token);
                ++stats_.shifts;
                emit("shift", sibling, vertex_of_[token.code()], "to", token.to_string());
            }
        }
    }
    else
        throw std::logic_error("token " + token.to_string() + " had two tokened children");

    if (mode == RelabelMode::Expand && guest_.expandable()) {
        // parents sort before children, so each flag lands below a flagged parent
        auto codes = placed_;
        std::sort(codes.begin(), codes.end());
        for (auto code : codes) {
            auto label = TokenLabel::from_code(code);
            if (! guest_.is_flagged(label)) {
                guest_.flag(label);
                ++flagged_placed_;
                ++stats_.expansions;
            }
        }
    }
}

EmbeddingCertificate PebbleState::certificate(std::span<const TokenLabel> labels) const
{
    EmbeddingCertificate cert;
    std::vector<Vertex> index(vertex_of_.size(), no_vertex);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto v = vertex_of(labels[i]);
        if (! v)
            throw std::logic_error("token " + labels[i].to_string() + " is not placed");
        cert.vertex_map.push_back(*v);
        index[labels[i].code()] = static_cast<Vertex>(i);
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].is_root())
            continue;
        Vertex parent = index[labels[i].parent().code()];
        if (parent == no_vertex)
            throw std::logic_error("label set is not closed under parent");
        cert.edge_paths.push_back({parent, static_cast<Vertex>(i), path_[labels[i].code()]});
    }
    return cert;
}

namespace {
    auto fat_factor(const PebbleState & state, const GuestTree & original) -> FatFactor
    {
        const auto & host = state.host();
        FatFactor fat;

        std::vector<Vertex> local(host.size(), -1);
        for (Vertex v = 0; v < host.size(); ++v)
            if (state.is_red(v)) {
                local[v] = static_cast<Vertex>(fat.factor_hosts.size());
                fat.factor_hosts.push_back(v);
            }
        fat.factor.graph = induced_subgraph(host, fat.factor_hosts);

        const auto & last = state.history().back();
        std::vector<bool> on_boundary(host.size(), false);
        for (Vertex v : last) {
            on_boundary[v] = true;
            fat.factor.boundary.push_back(local[v]);
        }

        std::vector<Vertex> rest(host.size(), -1);
        for (Vertex v = 0; v < host.size(); ++v)
            if (! state.is_red(v) || on_boundary[v]) {
                rest[v] = static_cast<Vertex>(fat.complement_hosts.size());
                fat.complement_hosts.push_back(v);
            }
        std::vector<Edge> rest_edges;
        for (const auto & e : host.edges())
            if (rest[e.u] >= 0 && rest[e.v] >= 0 && ! (on_boundary[e.u] && on_boundary[e.v]))
                rest_edges.push_back({rest[e.u], rest[e.v]});
        fat.complement.graph = Graph::from_edges(static_cast<Vertex>(fat.complement_hosts.size()), std::move(rest_edges));
        for (Vertex v : last)
            fat.complement.boundary.push_back(rest[v]);

        for (const auto & bag : state.history()) {
            std::vector<Vertex> mapped;
            for (Vertex v : bag)
                mapped.push_back(local[v]);
            fat.decomposition.bags.push_back(std::move(mapped));
        }

        fat.guest_labels = original.flagged_labels();
        fat.guest = original.flagged_tree();
        fat.certificate = state.certificate(fat.guest_labels);
        return fat;
    }
}

Outcome run(const Graph &host, int t, const RunOptions &options)
{
    GuestTree guest = make_guest(t, options);

    Outcome outcome;
    outcome.t = t;
    auto bound = static_cast<std::int64_t>(t) * host.size();
    if (static_cast<std::int64_t>(host.edge_count()) > bound) {
        outcome.result = EdgeBoundReject{host.edge_count(), bound};
        return outcome;
    }

    const GuestTree original = guest;
    PebbleState state(host, std::move(guest), options.seed, options.trace);

    state.grow_token_tree();
    if (host.size() > 0)
        state.snapshot();

    while (true) {
        if (state.placed_count() > 0 && state.all_flagged_placed()) {
            outcome.result = fat_factor(state, original);
            break;
        }
        if (! state.has_blue()) {
            outcome.result = FullDecomposition{PathDecomposition{state.history()}};
            break;
        }
        auto token = state.pick_removal_token(options.strategy);
        state.remove_token(token, options.relabel);
        state.grow_token_tree();
        state.snapshot();
    }

    outcome.history.bags = state.history();
    outcome.stats = state.stats();
    return outcome;
}

} // namespace pathpebble

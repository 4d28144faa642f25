#include "pathpebble/guest_tree.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <bit>
#include <limits>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace pathpebble {

TokenLabel TokenLabel::from_code(std::uint64_t code)
{
    if (code == 0 || std::bit_width(code) - 1 > max_length)
        throw std::invalid_argument("invalid token code " + std::to_string(code));
    return TokenLabel(code);
}

TokenLabel TokenLabel::parse(std::string_view text)
{
    if (text == "-")
        text = {};
    if (text.size() > static_cast<std::size_t>(max_length))
        throw std::invalid_argument("token label too long");
    std::uint64_t code = 1;
    for (char c : text) {
        if (c != '0' && c != '1')
            throw std::invalid_argument("token label '" + std::string(text) + "' is not a binary string");
        code = (code << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return TokenLabel(code);
}

int TokenLabel::length() const noexcept
{
    return static_cast<int>(std::bit_width(code_)) - 1;
}

TokenLabel TokenLabel::child(int bit) const
{
    if (length() >= max_length)
        throw std::out_of_range("token label too long");
    return TokenLabel((code_ << 1) | static_cast<std::uint64_t>(bit & 1));
}

TokenLabel TokenLabel::parent() const
{
    if (is_root())
        throw std::logic_error("the root token has no parent");
    return TokenLabel(code_ >> 1);
}

TokenLabel TokenLabel::sibling() const
{
    if (is_root())
        throw std::logic_error("the root token has no sibling");
    return TokenLabel(code_ ^ 1);
}

int TokenLabel::last_bit() const
{
    if (is_root())
        throw std::logic_error("the root token has no last bit");
    return static_cast<int>(code_ & 1);
}

bool TokenLabel::is_prefix_of(TokenLabel other) const
{
    int diff = other.length() - length();
    return diff >= 0 && (other.code_ >> diff) == code_;
}

TokenLabel TokenLabel::replace_prefix(TokenLabel from, TokenLabel to) const
{
    if (! from.is_prefix_of(*this))
        throw std::logic_error("replace_prefix: " + from.to_string() + " is not a prefix of " + to_string());
    int suffix = length() - from.length();
    std::uint64_t bits = code_ & ((std::uint64_t{1} << suffix) - 1);
    if (to.length() + suffix > max_length)
        throw std::out_of_range("token label too long");
    return TokenLabel((to.code_ << suffix) | bits);
}

std::string TokenLabel::bits() const
{
    std::string result;
    for (int i = length() - 1; i >= 0; --i)
        result.push_back(((code_ >> i) & 1) ? '1' : '0');
    return result;
}

std::string TokenLabel::to_string() const
{
    return is_root() ? std::string("-") : bits();
}

bool lexicographic_less(TokenLabel a, TokenLabel b)
{
    int la = a.length(), lb = b.length();
    int common = std::min(la, lb);
    auto pa = a.code() >> (la - common);
    auto pb = b.code() >> (lb - common);
    if (pa != pb)
        return pa < pb;
    return la < lb;
}

std::int64_t f_bound(int t)
{
    if (t < 0 || t > 28)
        throw std::out_of_range("t must lie in 0..28, got " + std::to_string(t));
    return (std::int64_t{1} << (2 * t + 2)) - 1;
}

int h_bound(int t)
{
    if (t < 0 || t > 28)
        throw std::out_of_range("t must lie in 0..28, got " + std::to_string(t));
    return 2 * t + 2;
}

std::int64_t obstruction_order(int t)
{
    if (t < 0 || t > 36)
        throw std::out_of_range("t must lie in 0..36, got " + std::to_string(t));
    std::int64_t power = 1;
    for (int i = 0; i < t; ++i)
        power *= 3;
    return (5 * power - 1) / 2;
}

GuestTree::GuestTree(int height, bool expandable) :
    height_(height),
    expandable_(expandable)
{
    if (height < 1 || height > max_height)
        throw std::invalid_argument("guest height must lie in 1.." + std::to_string(max_height));
    flags_.assign(std::size_t{1} << height, 0);
}

GuestTree GuestTree::complete(int height)
{
    GuestTree g(height, false);
    std::fill(g.flags_.begin() + 1, g.flags_.end(), 1);
    g.flagged_count_ = g.universe_size();
    return g;
}

GuestTree GuestTree::with_flags(int height, std::span<const TokenLabel> flags, bool expandable)
{
    GuestTree g(height, expandable);
    for (auto label : flags) {
        if (! g.contains(label))
            throw std::invalid_argument("flagged token " + label.to_string() + " does not fit in height "
                    + std::to_string(height));
        if (! g.flags_[label.code()]) {
            g.flags_[label.code()] = 1;
            ++g.flagged_count_;
        }
    }
    if (! g.flags_[TokenLabel::root().code()])
        throw std::invalid_argument("the flagged set must contain the root token");
    for (auto label : flags)
        if (! label.is_root() && ! g.flags_[label.parent().code()])
            throw std::invalid_argument("flagged token " + label.to_string() + " has an unflagged parent");
    return g;
}

void GuestTree::flag(TokenLabel label)
{
    if (! expandable_)
        throw std::logic_error("guest tree is not expandable");
    if (! contains(label))
        throw std::out_of_range("token " + label.to_string() + " is outside the guest");
    if (flags_[label.code()])
        return;
    if (! label.is_root() && ! flags_[label.parent().code()])
        throw std::logic_error("cannot flag " + label.to_string() + " below an unflagged parent");
    flags_[label.code()] = 1;
    ++flagged_count_;
}

std::vector<TokenLabel> GuestTree::flagged_labels() const
{
    std::vector<TokenLabel> result;
    result.reserve(flagged_count_);
    for (std::uint64_t code = 1; code < flags_.size(); ++code)
        if (flags_[code])
            result.push_back(TokenLabel::from_code(code));
    return result;
}

std::vector<TokenLabel> GuestTree::children(TokenLabel label) const
{
    if (label.length() + 1 >= height_)
        return {};
    return {label.left(), label.right()};
}

std::vector<TokenLabel> GuestTree::flagged_children(TokenLabel label) const
{
    auto result = children(label);
    std::erase_if(result, [&] (TokenLabel c) { return ! flags_[c.code()]; });
    return result;
}

std::vector<TokenLabel> GuestTree::unflagged_children(TokenLabel label) const
{
    auto result = children(label);
    std::erase_if(result, [&] (TokenLabel c) { return flags_[c.code()]; });
    return result;
}

Graph GuestTree::flagged_tree() const
{
    auto labels = flagged_labels();
    std::vector<Vertex> index(flags_.size(), -1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        index[labels[i].code()] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    for (std::size_t i = 1; i < labels.size(); ++i)
        edges.push_back({index[labels[i].parent().code()], static_cast<Vertex>(i)});
    return Graph::from_edges(static_cast<Vertex>(labels.size()), std::move(edges));
}

namespace {
    auto check_tree(const Graph & g) -> void
    {
        if (g.size() == 0 || g.edge_count() != static_cast<std::size_t>(g.size() - 1))
            throw GraphError("not a tree");
        std::vector<bool> seen(g.size(), false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        Vertex reached = 1;
        while (! stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != g.size())
            throw GraphError("not a tree");
    }

    /// One or two vertices whose largest branch has at most n / 2 vertices.
    auto centroids(const Graph & g) -> std::vector<Vertex>
    {
        std::vector<Vertex> parent(g.size(), -1), order{0};
        for (std::size_t i = 0; i < order.size(); ++i)
            for (Vertex w : g.neighbors(order[i]))
                if (w != parent[order[i]]) {
                    parent[w] = order[i];
                    order.push_back(w);
                }
        std::vector<Vertex> size(g.size(), 1), heaviest(g.size(), 0);
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            if (parent[*it] >= 0) {
                size[parent[*it]] += size[*it];
                heaviest[parent[*it]] = std::max(heaviest[parent[*it]], size[*it]);
            }
        std::vector<Vertex> result;
        for (Vertex v = 0; v < g.size(); ++v)
            if (2 * std::max(heaviest[v], g.size() - size[v]) <= g.size())
                result.push_back(v);
        return result;
    }

    /// Parent-before-child order of the component of root, not entering `blocked`.
    auto preorder(const Graph & g, Vertex root, Vertex blocked, std::vector<Vertex> & parent) -> std::vector<Vertex>
    {
        std::vector<Vertex> order{root};
        parent[root] = -1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            Vertex v = order[i];
            for (Vertex w : g.neighbors(v))
                if (w != parent[v] && w != blocked) {
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        return order;
    }

    /// AHU encoding with integer ids for rooted subtrees. Ids are only
    /// comparable between trees encoded by the same instance.
    class Canonizer
    {
        public:
            auto rooted(const Graph & g, Vertex root, Vertex blocked = -1) -> int
            {
                std::vector<Vertex> parent(g.size(), -1);
                auto order = preorder(g, root, blocked, parent);
                std::vector<std::vector<int>> child_ids(g.size());
                int result = 0;
                for (auto it = order.rbegin(); it != order.rend(); ++it) {
                    auto & kids = child_ids[*it];
                    std::sort(kids.begin(), kids.end());
                    int id = intern(std::move(kids));
                    if (parent[*it] >= 0)
                        child_ids[parent[*it]].push_back(id);
                    else
                        result = id;
                }
                return result;
            }

        private:
            auto intern(std::vector<int> kids) -> int
            {
                auto [it, inserted] = ids_.try_emplace(std::move(kids), static_cast<int>(ids_.size()));
                return it->second;
            }

            struct Hash
            {
                auto operator() (const std::vector<int> & v) const -> std::size_t
                {
                    std::size_t h = v.size();
                    for (int x : v)
                        h ^= std::hash<int>{}(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
                    return h;
                }
            };

            std::unordered_map<std::vector<int>, int, Hash> ids_;
    };

    auto rooted_string(const Graph & g, Vertex root, Vertex blocked) -> std::string
    {
        std::vector<Vertex> parent(g.size(), -1);
        auto order = preorder(g, root, blocked, parent);
        std::vector<std::vector<std::string>> kids(g.size());
        std::string result;
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto & mine = kids[*it];
            std::sort(mine.begin(), mine.end());
            std::string s = "(";
            for (auto & k : mine)
                s += k;
            s += ")";
            if (parent[*it] >= 0)
                kids[parent[*it]].push_back(std::move(s));
            else
                result = std::move(s);
        }
        return result;
    }
}

std::string tree_canonical_form(const Graph &g)
{
    check_tree(g);
    auto c = centroids(g);
    if (c.size() == 1)
        return rooted_string(g, c[0], -1);
    auto a = rooted_string(g, c[0], c[1]), b = rooted_string(g, c[1], c[0]);
    if (b < a)
        std::swap(a, b);
    return "[" + a + b + "]";
}

namespace {
    auto join_three(const Graph & a, Vertex va, const Graph & b, Vertex vb, const Graph & c, Vertex vc) -> Graph
    {
        std::vector<Edge> edges;
        edges.reserve(a.edge_count() + b.edge_count() + c.edge_count() + 3);
        Vertex offset = 1;
        for (auto [g, attach] : {std::pair{&a, va}, std::pair{&b, vb}, std::pair{&c, vc}}) {
            for (const auto & e : g->edges())
                edges.push_back({e.u + offset, e.v + offset});
            edges.push_back({0, attach + offset});
            offset += g->size();
        }
        return Graph::from_edges(offset, std::move(edges));
    }

    /// Builds every obstruction one level above `previous` and hands each to
    /// visit until it returns false.
    ///
    /// The joining vertex is the centroid of the result (each of its three
    /// branches holds exactly a third of the other vertices, and any other
    /// vertex has a branch with more than half of them), so the centroid-rooted
    /// canonical form is the sorted triple of the branches' rooted forms.
    auto next_level(const std::vector<ObstructionTree> & previous,
            const std::function<bool (const ObstructionTree &)> & visit) -> void
    {
        Canonizer canon;
        struct Attachment { std::size_t tree; Vertex vertex; int form; };
        std::vector<Attachment> items;
        for (std::size_t i = 0; i < previous.size(); ++i) {
            std::set<int> orbits;
            const auto & g = previous[i].tree;
            for (Vertex v = 0; v < g.size(); ++v) {
                int form = canon.rooted(g, v);
                if (orbits.insert(form).second)
                    items.push_back({i, v, form});
            }
        }

        int t = previous.front().t + 1;
        std::set<std::array<int, 3>> seen;
        for (std::size_t x = 0; x < items.size(); ++x)
            for (std::size_t y = x; y < items.size(); ++y)
                for (std::size_t z = y; z < items.size(); ++z) {
                    std::array<int, 3> key{items[x].form, items[y].form, items[z].form};
                    std::sort(key.begin(), key.end());
                    if (! seen.insert(key).second)
                        continue;
                    ObstructionTree obs{join_three(previous[items[x].tree].tree, items[x].vertex,
                            previous[items[y].tree].tree, items[y].vertex,
                            previous[items[z].tree].tree, items[z].vertex), t};
                    if (! visit(obs))
                        return;
                }
    }

    constexpr int cached_levels = 3;
    std::mutex obstruction_mutex;
    std::array<std::optional<std::vector<ObstructionTree>>, cached_levels> obstruction_cache;

    auto cached_level(int t) -> const std::vector<ObstructionTree> &
    {
        std::lock_guard<std::mutex> lock(obstruction_mutex);
        if (! obstruction_cache[0])
            obstruction_cache[0] = std::vector<ObstructionTree>{{Graph::from_edges(2, {{0, 1}}), 0}};
        for (int level = 1; level <= t; ++level)
            if (! obstruction_cache[level]) {
                std::vector<ObstructionTree> built;
                next_level(*obstruction_cache[level - 1], [&] (const ObstructionTree & obs) {
                        built.push_back(obs);
                        return true;
                        });
                obstruction_cache[level] = std::move(built);
            }
        return *obstruction_cache[t];
    }

    auto check_level(int t) -> void
    {
        if (t < 0 || t > 3)
            throw std::out_of_range("obstruction generation supports t in 0..3, got " + std::to_string(t));
    }
}

void for_each_obstruction(int t, const std::function<bool (const ObstructionTree &)> &visit)
{
    check_level(t);
    if (t < cached_levels) {
        for (const auto & obs : cached_level(t))
            if (! visit(obs))
                return;
        return;
    }
    next_level(cached_level(t - 1), visit);
}

std::vector<ObstructionTree> generate_obstructions(int t)
{
    check_level(t);
    if (t < cached_levels)
        return cached_level(t);
    std::vector<ObstructionTree> result;
    for_each_obstruction(t, [&] (const ObstructionTree & obs) {
            result.push_back(obs);
            return true;
            });
    return result;
}

namespace {
    constexpr int unbounded = std::numeric_limits<int>::max() / 2;

    /// Height of the smallest complete binary tree whose root can hold x with
    /// x's subtree, seen from `from`, hanging below it. Memoised per directed
    /// edge so that all roots together cost O(n).
    class SubtreeHeights
    {
        public:
            explicit SubtreeHeights(const Graph & g) :
                g_(g)
            {
                for (Vertex v = 0; v < g.size(); ++v)
                    memo_.emplace_back(g.degree(v), 0);
            }

            /// from == -1 roots the whole tree at x.
            auto operator() (Vertex x, Vertex from) -> int
            {
                int slot = -1;
                if (from >= 0) {
                    auto nb = g_.neighbors(x);
                    slot = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), from) - nb.begin());
                    if (memo_[x][slot])
                        return memo_[x][slot];
                }

                int kids = 0, tallest = 0;
                for (Vertex w : g_.neighbors(x))
                    if (w != from) {
                        ++kids;
                        tallest = std::max(tallest, (*this)(w, x));
                    }
                int result = (kids > 2 || tallest >= unbounded) ? unbounded : 1 + tallest;
                if (slot >= 0)
                    memo_[x][slot] = result;
                return result;
            }

        private:
            const Graph & g_;
            std::vector<std::vector<int>> memo_;
    };

    auto place(const Graph & g, SubtreeHeights & height, Vertex x, Vertex from, TokenLabel label,
            std::vector<TokenLabel> & where) -> void
    {
        where[x] = label;
        std::vector<std::pair<int, Vertex>> kids;
        for (Vertex w : g.neighbors(x))
            if (w != from)
                kids.emplace_back(-height(w, x), w);
        std::sort(kids.begin(), kids.end());
        for (std::size_t i = 0; i < kids.size(); ++i)
            place(g, height, kids[i].second, x, label.child(i == 0 ? 1 : 0), where);
    }
}

EmbeddedObstruction embed_in_binary_tree(const ObstructionTree &obs)
{
    const auto & g = obs.tree;
    check_tree(g);
    const int limit = h_bound(obs.t);

    // The image of a tree in B_h can always be shifted so its topmost token
    // is the root, which is then either an obstruction vertex of degree <= 2
    // or an interior point of one obstruction edge.
    struct Choice { int height; std::size_t tokens; int kind; Vertex a, b; };
    std::optional<Choice> best;
    auto consider = [&] (Choice c) {
        if (c.height >= unbounded)
            return;
        if (! best || std::tie(c.height, c.tokens, c.kind, c.a, c.b)
                < std::tie(best->height, best->tokens, best->kind, best->a, best->b))
            best = c;
    };
    SubtreeHeights height(g);
    for (Vertex r = 0; r < g.size(); ++r)
        if (g.degree(r) <= 2)
            consider({height(r, -1), static_cast<std::size_t>(g.size()), 0, r, -1});
    for (const auto & e : g.edges()) {
        int hu = height(e.u, e.v), hv = height(e.v, e.u);
        consider({1 + std::max(hu, hv), static_cast<std::size_t>(g.size()) + 1, 1, e.u, e.v});
    }

    if (! best || best->height > limit)
        throw GraphError("obstruction does not fit in a complete binary tree of height " + std::to_string(limit));

    std::vector<TokenLabel> where(g.size());
    if (best->kind == 0)
        place(g, height, best->a, -1, TokenLabel::root(), where);
    else {
        Vertex first = best->a, second = best->b;
        if (height(second, first) > height(first, second))
            std::swap(first, second);
        place(g, height, first, second, TokenLabel::root().left(), where);
        place(g, height, second, first, TokenLabel::root().right(), where);
    }

    std::vector<TokenLabel> flags(where);
    if (best->kind == 1)
        flags.push_back(TokenLabel::root());

    EmbeddedObstruction result{obs, GuestTree::with_flags(limit, flags), {}, {}, {}, best->height};
    result.labels = result.guest.flagged_labels();
    result.guest_graph = result.guest.flagged_tree();

    std::map<std::uint64_t, Vertex> index;
    for (std::size_t i = 0; i < result.labels.size(); ++i)
        index[result.labels[i].code()] = static_cast<Vertex>(i);

    for (Vertex x = 0; x < g.size(); ++x)
        result.certificate.vertex_map.push_back(index.at(where[x].code()));
    for (const auto & e : g.edges()) {
        EdgePath path{e.u, e.v, {}};
        if (best->kind == 1 && Edge{std::min(best->a, best->b), std::max(best->a, best->b)} == e)
            path.internal.push_back(index.at(TokenLabel::root().code()));
        result.certificate.edge_paths.push_back(std::move(path));
    }
    return result;
}

namespace {
    std::mutex guest_mutex;
    std::array<std::optional<EmbeddedObstruction>, 4> guest_cache;
}

const EmbeddedObstruction &default_obstruction_guest(int t)
{
    check_level(t);
    std::lock_guard<std::mutex> lock(guest_mutex);
    auto & slot = guest_cache[t];
    if (! slot) {
        for_each_obstruction(t, [&] (const ObstructionTree & obs) {
                std::optional<EmbeddedObstruction> candidate;
                try {
                    candidate = embed_in_binary_tree(obs);
                }
                catch (const GraphError &) {
                    return true;
                }
                if (! slot || std::pair(candidate->depth, candidate->labels.size())
                        < std::pair(slot->depth, slot->labels.size()))
                    slot = std::move(candidate);
                // nothing beats an unsubdivided copy at the minimum height
                return ! (slot->depth == h_bound(t)
                        && static_cast<std::int64_t>(slot->labels.size()) == obstruction_order(t));
                });
        if (! slot)
            throw GraphError("no obstruction for t = " + std::to_string(t) + " fits its guest tree");
    }
    return *slot;
}

std::vector<TokenLabel> parse_flag_set(std::string_view text)
{
    std::vector<TokenLabel> result;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        auto last = line.find_last_not_of(" \t\r");
        result.push_back(TokenLabel::parse(std::string_view(line).substr(first, last - first + 1)));
    }
    return result;
}

std::string write_flag_set(std::span<const TokenLabel> labels)
{
    std::string out;
    for (auto label : labels)
        out += label.to_string() + "\n";
    return out;
}

} // namespace pathpebble

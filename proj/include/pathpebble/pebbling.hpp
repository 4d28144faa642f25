#pragma once

#include "pathpebble/graph.hpp"
#include "pathpebble/guest_tree.hpp"
#include "pathpebble/verification.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace pathpebble {

/// What happens to the tree of tokens after a removal.
enum class RelabelMode {
    /// Move a placed unflagged sibling subtree into the vacated flagged slot
    /// when there is one, otherwise contract a single tokened child upward.
    Shift,
    /// Always contract a single tokened child upward and flag every label a
    /// token lands on.
    Expand
};

enum class Strategy {
    Deepest,      ///< longest label first, ties broken lexicographically
    LowestLabel   ///< lexicographically smallest label
};

enum class GuestChoice {
    Obstruction,  ///< default_obstruction_guest(t)
    Complete,     ///< all of B_{2t+2}
    Custom        ///< RunOptions::custom_flags
};

struct RunOptions {
    GuestChoice guest = GuestChoice::Obstruction;
    RelabelMode relabel = RelabelMode::Shift;
    Strategy strategy = Strategy::Deepest;
    /// Without a seed the root goes on the lowest-index blue vertex; with
    /// one, blue vertices are tried in a seeded random order.
    std::optional<std::uint64_t> seed;
    /// Flag set for GuestChoice::Custom, inside B_{2t+2}.
    std::vector<TokenLabel> custom_flags;
    /// Newline-delimited JSON events go here when set.
    std::ostream *trace = nullptr;
};

/// Largest t accepted by run() for each guest choice.
int max_supported_t(GuestChoice guest);

struct RunStats {
    std::uint64_t touches = 0;          ///< adjacency entries inspected, plus root-placement probes
    std::uint64_t iterations = 0;       ///< token removals
    std::uint64_t root_placements = 0;
    std::uint64_t relabels = 0;
    std::uint64_t shifts = 0;
    std::uint64_t expansions = 0;
    std::size_t max_bag = 0;
};

struct FullDecomposition {
    PathDecomposition decomposition;
};

struct FatFactor {
    /// Subgraph induced by the red vertices; boundary = final snapshot.
    BoundaryGraph factor;
    /// Host id of each factor vertex (ascending).
    std::vector<Vertex> factor_hosts;
    /// Everything else: blue vertices plus the boundary, without the edges
    /// inside the boundary. glue(factor, complement) rebuilds the host.
    BoundaryGraph complement;
    std::vector<Vertex> complement_hosts;
    /// The snapshots, in factor vertex ids.
    PathDecomposition decomposition;
    /// The originally flagged subtree; guest vertex i is guest_labels[i].
    Graph guest;
    std::vector<TokenLabel> guest_labels;
    /// guest embedded into the host, in host vertex ids.
    EmbeddingCertificate certificate;
};

struct EdgeBoundReject {
    std::size_t edge_count = 0;
    std::int64_t bound = 0;
};

struct Outcome {
    int t = 0;
    std::variant<FullDecomposition, FatFactor, EdgeBoundReject> result;
    /// Snapshots P[0..s] in host ids (empty on rejection).
    PathDecomposition history;
    RunStats stats;

    bool is_full() const { return std::holds_alternative<FullDecomposition>(result); }
    bool is_fat() const { return std::holds_alternative<FatFactor>(result); }
    bool is_reject() const { return std::holds_alternative<EdgeBoundReject>(result); }
};

/// Guest tree for t under the given options (expandable in Expand mode).
GuestTree make_guest(int t, const RunOptions &options);

/// Live state of one pebbling run over a host graph.
///
/// Tokens are guest labels placed on host vertices. A vertex turns red when
/// it receives a token and never turns blue again. Each vertex keeps a cursor
/// into its adjacency list that only moves forward, which is what bounds the
/// total scanning work by 2|E| + |V|.
class PebbleState {
public:
    PebbleState(const Graph &host, GuestTree guest, std::optional<std::uint64_t> seed = std::nullopt,
            std::ostream *trace = nullptr);

    PebbleState(const PebbleState &) = delete;
    PebbleState &operator=(const PebbleState &) = delete;

    /// Places the root if nothing is placed and a blue vertex exists, then
    /// keeps placing unplaced flagged children of placed tokens on blue
    /// neighbours until no such pair remains. Returns the tokened vertices.
    std::vector<Vertex> grow_token_tree();

    /// A placed token with an unplaced flagged child. Throws std::logic_error
    /// if there is none.
    TokenLabel pick_removal_token(Strategy strategy) const;

    /// Takes `token` off its vertex and repairs the token tree. Throws
    /// std::logic_error if the vertex still has a blue neighbour.
    void remove_token(TokenLabel token, RelabelMode mode);

    /// Records the current tokened vertex set as the next snapshot.
    void snapshot();

    bool all_flagged_placed() const noexcept { return flagged_placed_ == guest_.flagged_count(); }
    bool has_blue() const noexcept { return red_count_ < static_cast<std::size_t>(host_.size()); }

    std::optional<Vertex> vertex_of(TokenLabel label) const;
    std::optional<TokenLabel> token_at(Vertex v) const;
    bool is_red(Vertex v) const { return red_[v]; }
    /// Host vertices strictly between the parent's vertex and this token's vertex.
    std::span<const Vertex> path_to_parent(TokenLabel label) const;
    /// Placed labels in increasing code order.
    std::vector<TokenLabel> placed_tokens() const;
    std::size_t placed_count() const noexcept { return placed_.size(); }

    const Graph &host() const noexcept { return host_; }
    const GuestTree &guest() const noexcept { return guest_; }
    const RunStats &stats() const noexcept { return stats_; }
    const std::vector<std::vector<Vertex>> &history() const noexcept { return history_; }

    /// Embedding of the tree on `labels` (all placed, closed under parent)
    /// into the host; guest vertex i is labels[i].
    EmbeddingCertificate certificate(std::span<const TokenLabel> labels) const;

private:
    static constexpr Vertex no_vertex = -1;

    std::optional<Vertex> next_blue_neighbour(Vertex u);
    std::optional<Vertex> next_blue_vertex();
    bool has_unplaced_flagged_child(TokenLabel label) const;
    void place(TokenLabel label, Vertex v);
    void unplace(TokenLabel label);

    /// Contracts removed_child·S onto removed·S, splicing the removed vertex
    /// into the path of the surviving child.
    void record_subdivision(TokenLabel removed, Vertex removed_vertex, TokenLabel surviving_child);
    /// Relabels every placed from·S as to·S, keeping each token's path.
    void move_subtree(TokenLabel from, TokenLabel to);
    void emit(const char *event, TokenLabel label, Vertex v, const char *extra_key = nullptr,
            const std::string &extra = {}) const;

    const Graph &host_;
    GuestTree guest_;
    std::ostream *trace_;

    std::vector<std::uint8_t> red_;
    std::size_t red_count_ = 0;
    std::vector<std::size_t> cursor_;
    std::vector<std::uint64_t> token_at_;   // 0 = none
    std::vector<Vertex> vertex_of_;          // by label code
    std::vector<std::vector<Vertex>> path_;  // by label code
    std::vector<std::uint64_t> placed_;      // codes, unordered
    std::vector<std::size_t> placed_pos_;    // by label code
    std::size_t flagged_placed_ = 0;

    std::vector<Vertex> root_order_;
    std::size_t root_cursor_ = 0;

    std::vector<std::vector<Vertex>> history_;
    RunStats stats_;
};

/// Pebbling run: either a path-decomposition of all of host, or a fat
/// factor with an embedding of the flagged guest, or a rejection when the
/// host has more than t * n edges. Throws std::out_of_range for unsupported t.
Outcome run(const Graph &host, int t, const RunOptions &options = {});

} // namespace pathpebble

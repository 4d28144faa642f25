#pragma once

#include "pathpebble/graph.hpp"
#include "pathpebble/verification.hpp"

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pathpebble {

/// Node of a complete binary tree addressed by a binary string. The root is
/// the empty string; the left child of P is P·1 and the right child P·0.
///
/// Stored as a heap code: a leading 1 bit followed by the string's bits, so
/// the root is code 1 and codes sort by length first.
class TokenLabel {
public:
    static constexpr int max_length = 62;

    constexpr TokenLabel() = default;

    static constexpr TokenLabel root() { return {}; }
    static TokenLabel from_code(std::uint64_t code);
    /// "" or "-" is the root; otherwise a string over {0, 1}.
    static TokenLabel parse(std::string_view text);

    constexpr std::uint64_t code() const noexcept { return code_; }
    int length() const noexcept;
    constexpr bool is_root() const noexcept { return code_ == 1; }

    TokenLabel child(int bit) const;
    TokenLabel left() const { return child(1); }
    TokenLabel right() const { return child(0); }
    TokenLabel parent() const;
    TokenLabel sibling() const;
    int last_bit() const;

    /// True when this label is a (non-strict) prefix of other.
    bool is_prefix_of(TokenLabel other) const;

    /// from·S becomes to·S. Requires from.is_prefix_of(*this).
    TokenLabel replace_prefix(TokenLabel from, TokenLabel to) const;

    /// The bit string; empty for the root.
    std::string bits() const;
    /// The bit string, with the root spelled "-".
    std::string to_string() const;

    friend constexpr bool operator==(TokenLabel a, TokenLabel b) { return a.code_ == b.code_; }

private:
    explicit constexpr TokenLabel(std::uint64_t code) : code_(code) {}

    std::uint64_t code_ = 1;
};

/// Lexicographic order on the bit strings ("" < "0" < "00" < "01" < "1").
bool lexicographic_less(TokenLabel a, TokenLabel b);

/// Number of vertices of the complete binary tree used as guest for
/// parameter t: 2^(2t+2) - 1. Throws std::out_of_range for t < 0 or t > 28.
std::int64_t f_bound(int t);

/// Height of that tree, 2t + 2.
int h_bound(int t);

/// (5 * 3^t - 1) / 2, the order of every tree obstruction for pathwidth t.
std::int64_t obstruction_order(int t);

/// Complete binary tree B_h with a flagged rooted subtree to embed.
class GuestTree {
public:
    static constexpr int max_height = 20;

    /// Every token of B_height flagged.
    static GuestTree complete(int height);

    /// Only `flags` flagged. They must contain the root, be closed under
    /// parent and fit below height; throws std::invalid_argument otherwise.
    static GuestTree with_flags(int height, std::span<const TokenLabel> flags, bool expandable = false);

    int height() const noexcept { return height_; }
    std::uint64_t universe_size() const noexcept { return (std::uint64_t{1} << height_) - 1; }
    bool expandable() const noexcept { return expandable_; }

    bool contains(TokenLabel label) const noexcept { return label.length() < height_; }
    bool is_flagged(TokenLabel label) const noexcept { return contains(label) && flags_[label.code()]; }
    std::size_t flagged_count() const noexcept { return flagged_count_; }
    bool is_complete() const noexcept { return flagged_count_ == universe_size(); }

    /// Adds label to the flagged set; its parent must already be flagged.
    /// Only allowed on expandable guests.
    void flag(TokenLabel label);

    /// Flagged labels in increasing code order, so the root comes first.
    std::vector<TokenLabel> flagged_labels() const;

    /// label·1 then label·0, dropping those below the height.
    std::vector<TokenLabel> children(TokenLabel label) const;
    std::vector<TokenLabel> flagged_children(TokenLabel label) const;
    std::vector<TokenLabel> unflagged_children(TokenLabel label) const;

    /// The flagged subtree as a graph; vertex i is flagged_labels()[i].
    Graph flagged_tree() const;

private:
    GuestTree(int height, bool expandable);

    int height_ = 1;
    bool expandable_ = false;
    std::vector<char> flags_;
    std::size_t flagged_count_ = 0;
};

/// A free tree that is a topological obstruction for pathwidth t, so its own
/// pathwidth is t + 1.
struct ObstructionTree {
    Graph tree;
    int t = 0;
};

/// Canonical string of a free tree: two trees get the same string iff they
/// are isomorphic. Rooted at the centroid (the smaller of the two encodings
/// when there are two centroids). Throws GraphError if g is not a tree.
std::string tree_canonical_form(const Graph &g);

/// All topological tree obstructions for pathwidth t, one per isomorphism
/// class, built from K2 by repeatedly joining a new vertex to one vertex of
/// each of three obstructions of the previous level. Supports 0 <= t <= 3;
/// throws std::out_of_range otherwise. Levels up to 2 are cached; level 3
/// has 117480 trees and is rebuilt on every call.
std::vector<ObstructionTree> generate_obstructions(int t);

/// Streams the same trees as generate_obstructions, in the same order,
/// stopping as soon as visit returns false.
void for_each_obstruction(int t, const std::function<bool (const ObstructionTree &)> &visit);

/// An obstruction placed inside B_{2t+2}.
struct EmbeddedObstruction {
    ObstructionTree obstruction;
    GuestTree guest;
    /// Flagged labels; guest_graph vertex i is labels[i].
    std::vector<TokenLabel> labels;
    Graph guest_graph;
    /// obstruction.tree embedded homeomorphically into guest_graph.
    EmbeddingCertificate certificate;
    /// Smallest complete binary tree height that holds the flagged set.
    int depth = 0;
};

/// Smallest flagged subtree of B_{2t+2} homeomorphic to the obstruction.
/// Throws GraphError if no placement fits below height 2t + 2.
EmbeddedObstruction embed_in_binary_tree(const ObstructionTree &obs);

/// The embedded obstruction of least depth, then fewest flagged tokens,
/// among generate_obstructions(t). Cached per t.
const EmbeddedObstruction &default_obstruction_guest(int t);

/// Flag sets on disk: one label per line, the root spelled "-".
std::vector<TokenLabel> parse_flag_set(std::string_view text);
std::string write_flag_set(std::span<const TokenLabel> labels);

} // namespace pathpebble

#ifndef RP_CORE_TREES_HPP
#define RP_CORE_TREES_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

// Midpoint trees and the pairing involution.
//
// A midpoint tree decomposes a sequence around its middle element: the root
// holds the middle element when the length is odd, or an empty mark when the
// length is even, and the children are the midpoint trees of the two halves
// (the middle element of an odd-length sequence belongs to neither half).
// Inorder traversal of the symbol labels recovers the sequence exactly.
//
// The shape depends only on the length n: every level is full, and the nodes
// at depth d carry symbols exactly when binary digit d of n is 1 (the root is
// depth 0 and contributes weight 2^0).
//
// A sequence is recursively palindromic (RP) when it is empty, or it is a
// palindrome whose left half and right half are themselves recursively
// palindromic.  Equivalently: every node of its midpoint tree has equal left
// and right subtrees.  pair_sequence maps a non-RP sequence to its partner by
// swapping the children of every node at the first depth containing an
// asymmetric node; that map is an involution whose fixed points are exactly
// the RP sequences.

namespace rp {

template <typename T>
struct MidpointNode {
    std::optional<T> label; // nullopt is the even-split mark
    std::shared_ptr<const MidpointNode> left;
    std::shared_ptr<const MidpointNode> right;
};

template <typename T>
class MidpointTree {
public:
    using Node = MidpointNode<T>;
    using NodePtr = std::shared_ptr<const Node>;

    MidpointTree() = default;
    explicit MidpointTree(NodePtr root) : root_(std::move(root)) {}

    bool empty() const { return root_ == nullptr; }
    const NodePtr& root() const { return root_; }

private:
    NodePtr root_;
};

namespace detail {

template <typename T>
std::shared_ptr<const MidpointNode<T>> build_midpoint(std::span<const T> w) {
    if (w.empty())
        return nullptr;
    const std::size_t half = w.size() / 2;
    std::optional<T> label;
    if (w.size() % 2 == 1)
        label = w[half];
    return std::make_shared<const MidpointNode<T>>(MidpointNode<T>{
        std::move(label), build_midpoint(w.first(half)), build_midpoint(w.last(half))});
}

template <typename T>
bool nodes_equal(const std::shared_ptr<const MidpointNode<T>>& a,
                 const std::shared_ptr<const MidpointNode<T>>& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    if (!(a->label == b->label))
        return false;
    return nodes_equal(a->left, b->left) && nodes_equal(a->right, b->right);
}

template <typename T>
void inorder_collect(const std::shared_ptr<const MidpointNode<T>>& v, std::vector<T>& out) {
    if (!v)
        return;
    inorder_collect(v->left, out);
    if (v->label)
        out.push_back(*v->label);
    inorder_collect(v->right, out);
}

template <typename T>
std::size_t node_height(const std::shared_ptr<const MidpointNode<T>>& v) {
    if (!v)
        return 0;
    return 1 + std::max(node_height(v->left), node_height(v->right));
}

template <typename T>
std::shared_ptr<const MidpointNode<T>> swap_children_at(
    const std::shared_ptr<const MidpointNode<T>>& v, std::size_t depth) {
    if (!v)
        return v;
    if (depth == 0)
        return std::make_shared<const MidpointNode<T>>(MidpointNode<T>{v->label, v->right, v->left});
    return std::make_shared<const MidpointNode<T>>(MidpointNode<T>{
        v->label, swap_children_at(v->left, depth - 1), swap_children_at(v->right, depth - 1)});
}

} // namespace detail

template <typename T>
bool operator==(const MidpointTree<T>& a, const MidpointTree<T>& b) {
    return detail::nodes_equal(a.root(), b.root());
}

template <typename T>
MidpointTree<T> midpoint_tree(std::span<const T> w) {
    return MidpointTree<T>(detail::build_midpoint(w));
}

template <typename T>
MidpointTree<T> midpoint_tree(const std::vector<T>& w) {
    return midpoint_tree(std::span<const T>(w));
}

template <typename T>
std::vector<T> inorder_word(const MidpointTree<T>& t) {
    std::vector<T> out;
    detail::inorder_collect(t.root(), out);
    return out;
}

template <typename T>
std::size_t height(const MidpointTree<T>& t) {
    return detail::node_height(t.root());
}

// Direct transcription of the recursive definition; kept independent of the
// tree-based mismatch criterion so the two can be tested against each other.
template <typename T>
bool is_rp(std::span<const T> w) {
    if (w.empty())
        return true;
    const std::size_t half = w.size() / 2;
    for (std::size_t i = 0; i < half; ++i)
        if (!(w[i] == w[w.size() - 1 - i]))
            return false;
    return is_rp(w.first(half)) && is_rp(w.last(half));
}

template <typename T>
bool is_rp(const std::vector<T>& w) {
    return is_rp(std::span<const T>(w));
}

// Smallest depth containing a node whose left and right labeled subtrees
// differ; absent when every node is symmetric, i.e. when the inorder sequence
// is RP.
template <typename T>
std::optional<std::size_t> first_asymmetric_depth(const MidpointTree<T>& t) {
    std::vector<const MidpointNode<T>*> level;
    if (t.root())
        level.push_back(t.root().get());
    for (std::size_t depth = 0; !level.empty(); ++depth) {
        for (const auto* v : level)
            if (!detail::nodes_equal(v->left, v->right))
                return depth;
        std::vector<const MidpointNode<T>*> next;
        next.reserve(level.size() * 2);
        for (const auto* v : level) {
            if (v->left)
                next.push_back(v->left.get());
            if (v->right)
                next.push_back(v->right.get());
        }
        level = std::move(next);
    }
    return std::nullopt;
}

// Exchanges the left and right subtrees of every node at the given depth.
// Unchanged subtrees are shared with the input tree.
template <typename T>
MidpointTree<T> swap_at_depth(const MidpointTree<T>& t, std::size_t depth) {
    if (depth >= height(t))
        throw std::out_of_range("swap_at_depth: no nodes at requested depth");
    return MidpointTree<T>(detail::swap_children_at(t.root(), depth));
}

// The pairing involution: RP sequences are fixed, every other sequence is
// mapped to a distinct rearrangement of itself with the same length, and
// applying the map twice gives the identity.  Swapping at the first
// asymmetric depth keeps shallower nodes symmetric (equal subtrees are
// transformed identically) and leaves at least one asymmetric node at that
// depth, so the partner's first asymmetric depth is the same.
template <typename T>
std::vector<T> pair_sequence(std::span<const T> w) {
    const MidpointTree<T> t = midpoint_tree(w);
    const auto depth = first_asymmetric_depth(t);
    if (!depth)
        return std::vector<T>(w.begin(), w.end());
    return inorder_word(swap_at_depth(t, *depth));
}

template <typename T>
std::vector<T> pair_sequence(const std::vector<T>& w) {
    return pair_sequence(std::span<const T>(w));
}

// Expands per-depth labels (index 0 = root, successive indices deeper) into
// the inorder sequence of the complete tree whose depth-i nodes all carry
// levels[i]:
//   expand([])        = empty
//   expand(l0 : rest) = expand(rest) ++ [l0 if symbol] ++ expand(rest)
// The result length is the sum of 2^i over the symbol indices i.
template <typename T>
std::vector<T> inorder_expand(std::span<const std::optional<T>> levels) {
    std::vector<T> out;
    for (std::size_t i = levels.size(); i-- > 0;) {
        std::vector<T> next;
        next.reserve(2 * out.size() + 1);
        next.insert(next.end(), out.begin(), out.end());
        if (levels[i])
            next.push_back(*levels[i]);
        next.insert(next.end(), out.begin(), out.end());
        out = std::move(next);
    }
    return out;
}

template <typename T>
std::vector<T> inorder_expand(const std::vector<std::optional<T>>& levels) {
    return inorder_expand(std::span<const std::optional<T>>(levels));
}

} // namespace rp

#endif

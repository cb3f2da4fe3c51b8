#ifndef RP_CATALAN_HPP
#define RP_CATALAN_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rp/count.hpp"

// Unlabeled binary trees and the subtree-swapping involution behind the
// parity of the Catalan numbers: C_n is odd exactly when n = 2^k - 1, because
// the involution pairs off all trees except the perfect one, which exists for
// exactly those n.

namespace rp {

// Binary tree counted by internal nodes; the empty tree has none.  Immutable,
// with structural sharing across copies.
class ShapeTree {
public:
    struct Node;
    using NodePtr = std::shared_ptr<const Node>;
    struct Node {
        NodePtr left;
        NodePtr right;
    };

    ShapeTree() = default;
    ShapeTree(const ShapeTree& left, const ShapeTree& right);
    explicit ShapeTree(NodePtr root) : root_(std::move(root)) {}

    bool empty() const { return root_ == nullptr; }
    const NodePtr& root() const { return root_; }
    std::size_t internal_nodes() const;

    friend bool operator==(const ShapeTree& a, const ShapeTree& b);

private:
    NodePtr root_;
};

inline constexpr unsigned kDefaultShapeTreeBound = 14;

// All binary trees with exactly n internal nodes, ordered by left-subtree
// size ascending, then recursively.  There are C_n of them.
std::vector<ShapeTree> shape_trees(unsigned n, unsigned max_n = kDefaultShapeTreeBound);
void for_each_shape_tree(unsigned n, const std::function<void(const ShapeTree&)>& fn,
                         unsigned max_n = kDefaultShapeTreeBound);

// Smallest depth containing a node whose left and right subtrees differ
// structurally (empty vs nonempty counts as differing); absent when every
// node is symmetric, i.e. for perfect trees and the empty tree.
std::optional<std::size_t> first_asymmetric_depth(const ShapeTree& t);

// Swaps the subtrees of every node at the first asymmetric depth; symmetric
// trees are returned unchanged.  Self-inverse, preserves the internal node
// count, and fixes exactly the perfect trees.
ShapeTree catalan_involution(const ShapeTree& t);

// Number of trees with n internal nodes fixed by the involution: 1 when
// n = 2^k - 1 (the perfect tree; the empty tree for n = 0), else 0.
CountValue fixed_point_count(unsigned n, unsigned max_n = kDefaultShapeTreeBound);

// Exact Catalan number via the product recurrence (n+1) C_n = (4n-2) C_{n-1}.
CountValue catalan_number(std::uint64_t n);

// True iff C_n is odd, i.e. iff n+1 is a power of two.
bool parity_rule(std::uint64_t n);

} // namespace rp

#endif

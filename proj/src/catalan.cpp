#include "rp/catalan.hpp"

#include <string>

namespace rp {

namespace {

using NodePtr = ShapeTree::NodePtr;

bool shape_equal(const NodePtr& a, const NodePtr& b) {
    if (a == b)
        return true;
    if (!a || !b)
        return false;
    return shape_equal(a->left, b->left) && shape_equal(a->right, b->right);
}

std::size_t count_nodes(const NodePtr& v) {
    if (!v)
        return 0;
    return 1 + count_nodes(v->left) + count_nodes(v->right);
}

NodePtr swap_children_at(const NodePtr& v, std::size_t depth) {
    if (!v)
        return v;
    if (depth == 0)
        return std::make_shared<const ShapeTree::Node>(ShapeTree::Node{v->right, v->left});
    return std::make_shared<const ShapeTree::Node>(ShapeTree::Node{
        swap_children_at(v->left, depth - 1), swap_children_at(v->right, depth - 1)});
}

} // namespace

ShapeTree::ShapeTree(const ShapeTree& left, const ShapeTree& right)
    : root_(std::make_shared<const Node>(Node{left.root_, right.root_})) {}

std::size_t ShapeTree::internal_nodes() const {
    return count_nodes(root_);
}

bool operator==(const ShapeTree& a, const ShapeTree& b) {
    return shape_equal(a.root_, b.root_);
}

void for_each_shape_tree(unsigned n, const std::function<void(const ShapeTree&)>& fn,
                         unsigned max_n) {
    if (n > max_n)
        throw BoundError("shape_trees: n=" + std::to_string(n) +
                         " exceeds the enumeration bound of " + std::to_string(max_n));
    if (n == 0) {
        fn(ShapeTree{});
        return;
    }
    // subtrees are memoized and shared; the size-n trees themselves stream
    std::vector<std::vector<ShapeTree>> by_size(n);
    by_size[0] = {ShapeTree{}};
    for (unsigned k = 1; k < n; ++k)
        for (unsigned i = 0; i < k; ++i)
            for (const ShapeTree& left : by_size[i])
                for (const ShapeTree& right : by_size[k - 1 - i])
                    by_size[k].emplace_back(left, right);
    for (unsigned i = 0; i < n; ++i)
        for (const ShapeTree& left : by_size[i])
            for (const ShapeTree& right : by_size[n - 1 - i])
                fn(ShapeTree(left, right));
}

std::vector<ShapeTree> shape_trees(unsigned n, unsigned max_n) {
    std::vector<ShapeTree> out;
    for_each_shape_tree(n, [&](const ShapeTree& t) { out.push_back(t); }, max_n);
    return out;
}

std::optional<std::size_t> first_asymmetric_depth(const ShapeTree& t) {
    std::vector<const ShapeTree::Node*> level;
    if (t.root())
        level.push_back(t.root().get());
    for (std::size_t depth = 0; !level.empty(); ++depth) {
        for (const auto* v : level)
            if (!shape_equal(v->left, v->right))
                return depth;
        std::vector<const ShapeTree::Node*> next;
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

ShapeTree catalan_involution(const ShapeTree& t) {
    const auto depth = first_asymmetric_depth(t);
    if (!depth)
        return t;
    return ShapeTree(swap_children_at(t.root(), *depth));
}

CountValue fixed_point_count(unsigned n, unsigned max_n) {
    CountValue fixed = 0;
    for_each_shape_tree(
        n, [&](const ShapeTree& t) {
            if (!first_asymmetric_depth(t))
                ++fixed;
        },
        max_n);
    return fixed;
}

CountValue catalan_number(std::uint64_t n) {
    CountValue c = 1;
    for (std::uint64_t k = 1; k <= n; ++k) {
        c *= 4 * k - 2;
        c /= k + 1; // exact: (k+1) C_k = (4k-2) C_{k-1}
    }
    return c;
}

bool parity_rule(std::uint64_t n) {
    return (n & (n + 1)) == 0; // n+1 is a power of two
}

} // namespace rp

#ifndef FK_EXTRACTION_HPP
#define FK_EXTRACTION_HPP

#include <memory>
#include <span>
#include <vector>

#include "fk/interval.hpp"

namespace fk {

// Node of the binary search tree over ground-set points: a point x and a
// member interval containing x. Intervals in the left subtree lie entirely
// below x, intervals in the right subtree entirely above.
struct TreeNode {
    int x;
    Interval interval;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
};

struct TreeLabel {
    int x;
    Interval interval;

    bool operator==(const TreeLabel&) const = default;
};

// Builds the tree for family|window from the reduction trace, without
// re-running the reduction: a point x is a node exactly when its net
// incidence N_x(family|window) - N_x(reduced|window) is 1. Among such
// points the largest x is chosen; its interval is the member of
// family|window containing x with the largest right endpoint, then the
// smallest left endpoint. Returns nullptr when family|window is empty;
// throws InternalError when the trace is inconsistent with the family.
std::unique_ptr<TreeNode> build_tree(const Family& family, std::span<const Interval> reduced,
                                     Interval window);

// Left subtree, right subtree, then the node itself.
std::vector<TreeLabel> postorder(const TreeNode* root);

// Maximum irredundant subfamily: the node intervals of the tree built from
// the reduction of the family. Its cardinality equals that of the minimum
// generating family.
Family irredundant_subfamily(const Family& family);

}  // namespace fk

#endif

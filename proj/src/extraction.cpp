#include "fk/extraction.hpp"

#include <optional>

#include "fk/error.hpp"
#include "fk/reduction.hpp"

namespace fk {

std::unique_ptr<TreeNode> build_tree(const Family& family, std::span<const Interval> reduced,
                                     Interval window) {
    // Net incidence over the window via a difference array: +1 per member
    // inside the window, -1 per reduced interval inside it.
    std::vector<int> diff(static_cast<std::size_t>(window.length()) + 1, 0);
    bool any_member = false;
    for (const Interval& f : family.members()) {
        if (!window.contains(f))
            continue;
        any_member = true;
        ++diff[static_cast<std::size_t>(f.lo - window.lo)];
        --diff[static_cast<std::size_t>(f.hi - window.lo)];
    }
    if (!any_member)
        return nullptr;
    for (const Interval& s : reduced) {
        if (!window.contains(s))
            continue;
        --diff[static_cast<std::size_t>(s.lo - window.lo)];
        ++diff[static_cast<std::size_t>(s.hi - window.lo)];
    }

    // Largest point whose net incidence is 1; such a point always exists for
    // a trace produced by the reduction loop.
    std::optional<int> node_point;
    int running = 0;
    for (int x = window.lo; x < window.hi; ++x) {
        running += diff[static_cast<std::size_t>(x - window.lo)];
        if (running == 1)
            node_point = x;
    }
    if (!node_point)
        throw InternalError("build_tree: no point with net incidence 1 in a nonempty window");
    int x = *node_point;

    std::optional<Interval> label;
    for (const Interval& f : family.members()) {
        if (!window.contains(f) || !f.contains(x))
            continue;
        if (!label || f.hi > label->hi || (f.hi == label->hi && f.lo < label->lo))
            label = f;
    }
    if (!label)
        throw InternalError("build_tree: no member contains the selected point");

    auto node = std::unique_ptr<TreeNode>(new TreeNode{x, *label, nullptr, nullptr});
    if (window.lo < x)
        node->left = build_tree(family, reduced, Interval(window.lo, x));
    if (x + 1 < window.hi)
        node->right = build_tree(family, reduced, Interval(x + 1, window.hi));
    return node;
}

namespace {

void postorder_into(const TreeNode* node, std::vector<TreeLabel>& out) {
    if (!node)
        return;
    postorder_into(node->left.get(), out);
    postorder_into(node->right.get(), out);
    out.push_back(TreeLabel{node->x, node->interval});
}

}  // namespace

std::vector<TreeLabel> postorder(const TreeNode* root) {
    std::vector<TreeLabel> out;
    postorder_into(root, out);
    return out;
}

Family irredundant_subfamily(const Family& family) {
    if (family.empty())
        return Family(family.ground_size());
    ReductionResult result = fk_run(family);
    std::unique_ptr<TreeNode> root = build_tree(family, result.reduced, family.full_range());
    std::vector<Interval> picked;
    for (const TreeLabel& label : postorder(root.get()))
        picked.push_back(label.interval);
    return Family(family.ground_size(), std::move(picked));
}

}  // namespace fk

#include "nbn/io/layout.hpp"

#include <algorithm>
#include <numeric>

namespace nbn::io {

std::vector<LayoutPoint> layout_2d(const NbnGraph& graph) {
    const std::size_t n = graph.size();
    std::vector<LayoutPoint> pts(n);
    const auto count = static_cast<SolutionId>(n);
    for (SolutionId id = 0; id < count; ++id) {
        pts[static_cast<std::size_t>(id)] =
            LayoutPoint{id, 0, 0, graph.fitness(id), graph.parent(id)};
    }
    if (n == 0) return pts;

    // Depth of every node, found by walking parent chains with memoization
    // (no recursion, so chain-deep walk graphs are fine).
    std::vector<std::int64_t> depth(n, -1);
    std::vector<SolutionId> chain;
    for (SolutionId id = 0; id < count; ++id) {
        SolutionId cur = id;
        chain.clear();
        while (depth[static_cast<std::size_t>(cur)] < 0 && !graph.is_root(cur)) {
            chain.push_back(cur);
            cur = graph.parent(cur);
        }
        std::int64_t base = depth[static_cast<std::size_t>(cur)];
        if (base < 0) base = depth[static_cast<std::size_t>(cur)] = 0; // root
        for (auto it = chain.rbegin(); it != chain.rend(); ++it)
            depth[static_cast<std::size_t>(*it)] = ++base;
    }

    // Subtree sizes: accumulate child into parent in decreasing-depth order.
    std::vector<std::size_t> subtree(n, 1);
    std::vector<SolutionId> by_depth(n);
    std::iota(by_depth.begin(), by_depth.end(), SolutionId{0});
    std::sort(by_depth.begin(), by_depth.end(), [&](SolutionId a, SolutionId b) {
        const auto da = depth[static_cast<std::size_t>(a)];
        const auto db = depth[static_cast<std::size_t>(b)];
        if (da != db) return da > db;
        return a < b;
    });
    for (SolutionId id : by_depth)
        if (!graph.is_root(id))
            subtree[static_cast<std::size_t>(graph.parent(id))] +=
                subtree[static_cast<std::size_t>(id)];

    std::vector<std::vector<SolutionId>> kids(n);
    for (SolutionId id = 0; id < count; ++id)
        if (!graph.is_root(id))
            kids[static_cast<std::size_t>(graph.parent(id))].push_back(id);
    auto wider_first = [&](SolutionId a, SolutionId b) {
        const auto sa = subtree[static_cast<std::size_t>(a)];
        const auto sb = subtree[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return a < b;
    };
    for (auto& list : kids) std::sort(list.begin(), list.end(), wider_first);

    std::vector<SolutionId> roots = graph.roots();
    std::sort(roots.begin(), roots.end(), wider_first);

    // Post-order x assignment: leaves take consecutive slots, parents sit at
    // the midpoint of their children; trees are laid out one after another
    // with a one-slot gap, so their x ranges never overlap.
    double next_slot = 0;
    struct Frame {
        SolutionId node;
        std::size_t next_child;
    };
    std::vector<Frame> stack;
    for (SolutionId root : roots) {
        pts[static_cast<std::size_t>(root)].y = 0;
        stack.push_back(Frame{root, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            const auto& children = kids[static_cast<std::size_t>(top.node)];
            if (children.empty()) {
                pts[static_cast<std::size_t>(top.node)].x = next_slot;
                next_slot += 1;
                stack.pop_back();
                continue;
            }
            if (top.next_child < children.size()) {
                const SolutionId child = children[top.next_child++];
                pts[static_cast<std::size_t>(child)].y =
                    pts[static_cast<std::size_t>(top.node)].y + graph.nbd(child);
                stack.push_back(Frame{child, 0}); // `top` may dangle after this
                continue;
            }
            pts[static_cast<std::size_t>(top.node)].x =
                (pts[static_cast<std::size_t>(children.front())].x +
                 pts[static_cast<std::size_t>(children.back())].x) /
                2;
            stack.pop_back();
        }
        next_slot += 1;
    }
    return pts;
}

} // namespace nbn::io

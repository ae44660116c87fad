/*
 * Copyright 2026 The efkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "efkit/treekit.hpp"

#include "efkit/error.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace efk {

namespace {

void require_tree(const ColoredGraph& t)
{
    if (t.size() == 0 || !is_tree(t))
        throw Error(Errc::NotATree, "input is not a tree");
}

std::vector<std::size_t> bfs_distances(const ColoredGraph& t, Vertex from)
{
    std::vector<std::size_t> dist(t.size(), SIZE_MAX);
    std::deque<Vertex> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : t.neighbors(v))
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

Vertex farthest(const std::vector<std::size_t>& dist)
{
    return Vertex(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

/// Interns (colour, sorted child labels) so that codes compare as integers.
class CodeBook {
public:
    int intern(const std::string& color, std::vector<int> children)
    {
        std::sort(children.begin(), children.end());
        auto [it, fresh] = ids_.try_emplace({color, std::move(children)}, int(ids_.size()));
        if (fresh)
            keys_.push_back(&it->first);
        return it->second;
    }

    std::string text(int id) const
    {
        const auto& [color, children] = *keys_[std::size_t(id)];
        // Integer ids depend on discovery order; the text must not.
        std::vector<std::string> parts;
        for (int c : children)
            parts.push_back(text(c));
        std::sort(parts.begin(), parts.end());
        std::string out = "(" + std::to_string(color.size()) + ":" + color;
        for (const auto& part : parts)
            out += part;
        return out + ")";
    }

private:
    std::map<std::pair<std::string, std::vector<int>>, int> ids_;
    std::vector<const std::pair<std::string, std::vector<int>>*> keys_;
};

/// Postorder of the tree rooted at `root` with parent links.
void root_tree(const ColoredGraph& t, Vertex root, std::vector<Vertex>& order, std::vector<Vertex>& parent)
{
    const auto none = Vertex(t.size());
    parent.assign(t.size(), none);
    order.clear();
    std::vector<Vertex> stack{root};
    parent[root] = root;
    while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Vertex w : t.neighbors(v))
            if (parent[w] == none) {
                parent[w] = v;
                stack.push_back(w);
            }
    }
    std::reverse(order.begin(), order.end());
}

/// Code ids of every branch T_{vu}, indexed like t.neighbors(v).
std::vector<std::vector<int>> branch_codes(const ColoredGraph& t, CodeBook& book)
{
    const std::size_t n = t.size();
    std::vector<Vertex> order, parent;
    root_tree(t, 0, order, parent);
    // down[v]: code of the subtree of v when rooted at 0.
    std::vector<int> down(n);
    for (Vertex v : order) {
        std::vector<int> kids;
        for (Vertex w : t.neighbors(v))
            if (parent[w] == v && w != v)
                kids.push_back(down[w]);
        down[v] = book.intern(t.color(v), std::move(kids));
    }
    // up[v]: code of the branch at v that contains its parent, rooted at the parent.
    std::vector<int> up(n, -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const Vertex p = *it;
        for (Vertex c : t.neighbors(p)) {
            if (parent[c] != p || c == p)
                continue;
            std::vector<int> kids;
            for (Vertex w : t.neighbors(p))
                if (w != c)
                    kids.push_back(parent[w] == p && w != p ? down[w] : up[p]);
            up[c] = book.intern(t.color(p), std::move(kids));
        }
    }
    std::vector<std::vector<int>> out(n);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : t.neighbors(v))
            out[v].push_back(parent[w] == v && w != v ? down[w] : up[v]);
    return out;
}

} // namespace

TreeCenter tree_center(const ColoredGraph& t)
{
    require_tree(t);
    TreeCenter c;
    const auto a = farthest(bfs_distances(t, 0));
    const auto da = bfs_distances(t, a);
    const auto b = farthest(da);
    const auto db = bfs_distances(t, b);
    c.diameter = da[b];
    c.eccentricity.resize(t.size());
    for (Vertex v = 0; v < t.size(); ++v)
        c.eccentricity[v] = std::max(da[v], db[v]);
    c.radius = *std::min_element(c.eccentricity.begin(), c.eccentricity.end());
    for (Vertex v = 0; v < t.size(); ++v)
        if (c.eccentricity[v] == c.radius)
            c.centers.push_back(v);
    return c;
}

std::string rooted_code(const ColoredGraph& t, Vertex root)
{
    require_tree(t);
    if (root >= t.size())
        throw Error(Errc::OutOfRange, "root out of range");
    CodeBook book;
    std::vector<Vertex> order, parent;
    root_tree(t, root, order, parent);
    std::vector<int> code(t.size());
    for (Vertex v : order) {
        std::vector<int> kids;
        for (Vertex w : t.neighbors(v))
            if (parent[w] == v && w != v)
                kids.push_back(code[w]);
        code[v] = book.intern(t.color(v), std::move(kids));
    }
    return book.text(code[root]);
}

std::size_t branching_index(const ColoredGraph& t)
{
    require_tree(t);
    if (t.size() < 2)
        throw Error(Errc::TooSmall, "branching index needs at least two vertices");
    CodeBook book;
    const auto codes = branch_codes(t, book);
    std::size_t best = 0;
    for (const auto& at_v : codes) {
        std::map<int, std::size_t> count;
        for (int c : at_v)
            best = std::max(best, ++count[c]);
    }
    return best;
}

Vertex separator(const ColoredGraph& t)
{
    require_tree(t);
    const std::size_t n = t.size();
    std::vector<Vertex> order, parent;
    root_tree(t, 0, order, parent);
    std::vector<std::size_t> size(n, 1);
    for (Vertex v : order)
        if (v != 0)
            size[parent[v]] += size[v];
    for (Vertex v = 0; v < n; ++v) {
        std::size_t largest = n - size[v];
        for (Vertex w : t.neighbors(v))
            if (parent[w] == v && w != v)
                largest = std::max(largest, size[w]);
        if (2 * largest <= n)
            return v;
    }
    throw Error(Errc::NotATree, "no separator found");
}

Truncation truncate(const ColoredGraph& t, int k)
{
    if (k < 1)
        throw Error(Errc::InvalidParameter, "k must be >= 1");
    const auto center = tree_center(t);
    const std::size_t n = t.size();

    // Heights in the original tree: distance to the nearest central vertex.
    std::vector<std::size_t> height(n, SIZE_MAX);
    std::deque<Vertex> queue;
    for (Vertex c : center.centers) {
        height[c] = 0;
        queue.push_back(c);
    }
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : t.neighbors(v))
            if (height[w] == SIZE_MAX) {
                height[w] = height[v] + 1;
                queue.push_back(w);
            }
    }
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex(0));
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return height[a] > height[b]; });

    std::vector<bool> alive(n, true);
    std::vector<int> code(n, -1);
    CodeBook book;
    auto cut = [&](Vertex root) {
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            alive[v] = false;
            for (Vertex w : t.neighbors(v))
                if (alive[w] && height[w] > height[v])
                    stack.push_back(w);
        }
    };
    for (Vertex v : order) {
        if (!alive[v])
            continue;
        // Upward children are already final; group them by code.
        std::map<int, std::vector<Vertex>> classes;
        for (Vertex w : t.neighbors(v))
            if (alive[w] && height[w] > height[v])
                classes[code[w]].push_back(w);
        std::vector<int> kids;
        for (auto& [c, members] : classes) {
            std::sort(members.begin(), members.end());
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (i < std::size_t(k))
                    kids.push_back(c);
                else
                    cut(members[i]);
            }
        }
        code[v] = book.intern(t.color(v), std::move(kids));
    }

    Truncation out;
    std::vector<Vertex> new_id(n, Vertex(n));
    for (Vertex v = 0; v < n; ++v)
        if (alive[v]) {
            new_id[v] = Vertex(out.original.size());
            out.original.push_back(v);
        }
    std::vector<std::string> colors;
    for (Vertex v : out.original)
        colors.push_back(t.color(v));
    std::vector<Edge> edges;
    for (auto [u, v] : t.edges())
        if (alive[u] && alive[v])
            edges.emplace_back(new_id[u], new_id[v]);
    out.tree = ColoredGraph(std::move(colors), std::move(edges));
    return out;
}

} // namespace efk

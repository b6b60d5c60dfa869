#include "kirchcert/graph_corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace kirchcert {

namespace {

// Edge slots of K_n in lexicographic order; slot index of edge {u, v}, 0-based
// vertices with u < v.
int slot_of(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    // edges (0,1)..(0,n-1) come first, then (1,2).., etc.
    return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

bool mask_connected(std::uint32_t mask, int n, const std::vector<std::pair<int, int>>& slots) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    int components = n;
    for (std::size_t s = 0; s < slots.size(); ++s) {
        if (!(mask >> s & 1)) continue;
        const int a = find(slots[s].first);
        const int b = find(slots[s].second);
        if (a != b) {
            parent[static_cast<std::size_t>(b)] = a;
            --components;
        }
    }
    return components == 1;
}

}  // namespace

std::vector<Graph> simple_connected_graphs(int num_vertices) {
    if (num_vertices < 2 || num_vertices > 7)
        throw std::invalid_argument("graph corpus: supported for 2 <= num_vertices <= 7");
    const int n = num_vertices;
    const int num_slots = n * (n - 1) / 2;

    std::vector<std::pair<int, int>> slots;  // 0-based endpoints, lexicographic
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);

    // Precompute how every vertex permutation permutes the edge slots.
    std::vector<std::vector<int>> slot_perms;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> sp(static_cast<std::size_t>(num_slots));
        for (int s = 0; s < num_slots; ++s) {
            const auto [u, v] = slots[static_cast<std::size_t>(s)];
            sp[static_cast<std::size_t>(s)] =
                slot_of(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], n);
        }
        slot_perms.push_back(std::move(sp));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << num_slots); ++mask) {
        if (!mask_connected(mask, n, slots)) continue;
        // keep the mask only if it is the minimum over its isomorphism class
        bool canonical = true;
        for (const std::vector<int>& sp : slot_perms) {
            std::uint32_t image = 0;
            for (int s = 0; s < num_slots; ++s)
                if (mask >> s & 1) image |= std::uint32_t{1} << sp[static_cast<std::size_t>(s)];
            if (image < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<Edge> edges;
        for (int s = 0; s < num_slots; ++s)
            if (mask >> s & 1)
                edges.push_back({slots[static_cast<std::size_t>(s)].first + 1,
                                 slots[static_cast<std::size_t>(s)].second + 1, ""});
        out.emplace_back(n, std::move(edges));
    }
    return out;  // masks were visited in increasing order
}

std::vector<Graph> simple_connected_corpus(int min_vertices, int max_vertices) {
    std::vector<Graph> out;
    for (int v = min_vertices; v <= max_vertices; ++v) {
        std::vector<Graph> layer = simple_connected_graphs(v);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

std::vector<Graph> multigraph_corpus() {
    std::vector<Graph> out;
    // doubled edge on two vertices ("theta" with two strands)
    out.emplace_back(2, std::vector<Edge>{{1, 2, ""}, {1, 2, ""}});
    // triangle with one doubled edge
    out.emplace_back(3, std::vector<Edge>{{1, 2, ""}, {1, 2, ""}, {2, 3, ""}, {1, 3, ""}});
    // path with a loop at the middle vertex
    out.emplace_back(3, std::vector<Edge>{{1, 2, ""}, {2, 2, ""}, {2, 3, ""}});
    // two vertices, triple edge
    out.emplace_back(2, std::vector<Edge>{{1, 2, ""}, {1, 2, ""}, {1, 2, ""}});
    // 4-cycle with a doubled chord and a loop
    out.emplace_back(4, std::vector<Edge>{{1, 2, ""}, {2, 3, ""}, {3, 4, ""}, {1, 4, ""}, {1, 3, ""}, {1, 3, ""}, {4, 4, ""}});
    // K4 with one doubled edge
    {
        std::vector<Edge> edges = Graph::complete(4).edges();
        edges.push_back({1, 2, ""});
        out.emplace_back(4, std::move(edges));
    }
    // 4-cycle with one doubled side
    out.emplace_back(4, std::vector<Edge>{{1, 2, ""}, {1, 2, ""}, {2, 3, ""}, {3, 4, ""}, {1, 4, ""}});
    return out;
}

}  // namespace kirchcert

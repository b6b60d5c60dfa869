#include "kirchcert/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

namespace kirchcert {

namespace {

// Small union-find over 0-based vertices, used by the connectivity checks and
// the spanning-tree recursion.
struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
    std::vector<int> parent;
};

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 1) throw std::invalid_argument("graph: need at least one vertex");
    if (edges_.size() > 64) throw std::invalid_argument("graph: at most 64 edges supported");
    for (const Edge& e : edges_) {
        if (e.u < 1 || e.u > num_vertices_ || e.v < 1 || e.v > num_vertices_)
            throw std::out_of_range("graph: edge endpoint out of range");
    }
}

Graph Graph::complete(int num_vertices) {
    if (num_vertices < 2) throw std::invalid_argument("graph: complete graph needs >= 2 vertices");
    std::vector<Edge> edges;
    for (int u = 1; u <= num_vertices; ++u)
        for (int v = u + 1; v <= num_vertices; ++v)
            edges.push_back({u, v, ""});
    return Graph(num_vertices, std::move(edges));
}

const Edge& Graph::edge(int index) const {
    if (index < 1 || index > num_edges()) throw std::out_of_range("graph: edge index out of range");
    return edges_[static_cast<std::size_t>(index) - 1];
}

bool Graph::is_loop(int index) const {
    const Edge& e = edge(index);
    return e.u == e.v;
}

bool Graph::is_connected() const {
    UnionFind uf(num_vertices_);
    int components = num_vertices_;
    for (const Edge& e : edges_)
        if (uf.unite(e.u - 1, e.v - 1)) --components;
    return components == 1;
}

std::string Graph::str() const {
    std::ostringstream out;
    out << "p " << num_vertices_ << ' ' << num_edges() << '\n';
    for (const Edge& e : edges_) {
        out << "e " << e.u << ' ' << e.v;
        if (!e.label.empty()) out << ' ' << e.label;
        out << '\n';
    }
    return out.str();
}

SimplicityReport simplicity_check(const Graph& g) {
    SimplicityReport rep;
    for (int i = 1; i <= g.num_edges(); ++i)
        if (g.is_loop(i)) rep.loops.push_back(i);
    for (int i = 1; i <= g.num_edges(); ++i) {
        if (g.is_loop(i)) continue;
        const auto [iu, iv] = std::minmax(g.edge(i).u, g.edge(i).v);
        for (int j = i + 1; j <= g.num_edges(); ++j) {
            if (g.is_loop(j)) continue;
            const auto [ju, jv] = std::minmax(g.edge(j).u, g.edge(j).v);
            if (iu == ju && iv == jv) rep.parallel_pairs.emplace_back(i, j);
        }
    }
    rep.simple = rep.loops.empty() && rep.parallel_pairs.empty();
    return rep;
}

Graph build_graph(const std::string& name) {
    if (name.size() >= 2 && name[0] == 'K') {
        const std::string digits = name.substr(1);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); })) {
            const int m = std::stoi(digits);
            if (m < 2 || m > 9)
                throw std::invalid_argument("graph: builtin K<m> supports 2 <= m <= 9");
            return Graph::complete(m);
        }
    }
    throw std::invalid_argument("graph: unknown builtin graph '" + name + "'");
}

Graph parse_graph(std::istream& in) {
    std::string line;
    int num_vertices = -1;
    int num_edges = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;  // blank or comment
        if (head == "p") {
            if (num_vertices != -1)
                throw std::invalid_argument("graph parse: duplicate 'p' header");
            if (!(ls >> num_vertices >> num_edges) || num_vertices < 1 || num_edges < 0)
                throw std::invalid_argument("graph parse: malformed 'p' header");
        } else if (head == "e") {
            if (num_vertices == -1)
                throw std::invalid_argument("graph parse: 'e' line before 'p' header");
            Edge e;
            if (!(ls >> e.u >> e.v))
                throw std::invalid_argument("graph parse: malformed edge on line " + std::to_string(line_no));
            ls >> e.label;  // optional
            edges.push_back(std::move(e));
        } else {
            throw std::invalid_argument("graph parse: unknown line type '" + head + "'");
        }
    }
    if (num_vertices == -1) throw std::invalid_argument("graph parse: missing 'p' header");
    if (static_cast<int>(edges.size()) != num_edges)
        throw std::invalid_argument("graph parse: header announces " + std::to_string(num_edges) +
                                    " edges, found " + std::to_string(edges.size()));
    return Graph(num_vertices, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("graph: cannot open file '" + path + "'");
    return parse_graph(in);
}

SpanningTreeSet::SpanningTreeSet(std::vector<std::uint64_t> masks, int num_edges)
    : masks_(std::move(masks)), num_edges_(num_edges) {
    std::sort(masks_.begin(), masks_.end());
}

bool SpanningTreeSet::contains(std::uint64_t mask) const {
    return std::binary_search(masks_.begin(), masks_.end(), mask);
}

std::vector<std::vector<int>> SpanningTreeSet::as_index_sets() const {
    std::vector<std::vector<int>> out;
    out.reserve(masks_.size());
    for (std::uint64_t m : masks_) {
        std::vector<int> set;
        for (int k = 0; k < num_edges_; ++k)
            if (m >> k & 1) set.push_back(k + 1);
        out.push_back(std::move(set));
    }
    return out;
}

namespace {

struct TreeEnumerator {
    const std::vector<Edge>& edges;
    int num_vertices;
    std::vector<std::uint64_t> found;

    // comp maps 0-based vertices to their contracted component representative.
    void recurse(std::vector<int> comp, int components, std::size_t pos, std::uint64_t chosen) {
        if (components == 1) {
            found.push_back(chosen);
            return;
        }
        if (pos >= edges.size()) return;
        // Prune: the remaining edges must be able to reconnect everything.
        {
            UnionFind uf(num_vertices);
            int remaining = components;
            for (std::size_t i = pos; i < edges.size() && remaining > 1; ++i) {
                const int a = comp[static_cast<std::size_t>(edges[i].u - 1)];
                const int b = comp[static_cast<std::size_t>(edges[i].v - 1)];
                if (a != b && uf.unite(a, b)) --remaining;
            }
            if (remaining > 1) return;
        }
        const int a = comp[static_cast<std::size_t>(edges[pos].u - 1)];
        const int b = comp[static_cast<std::size_t>(edges[pos].v - 1)];
        if (a == b) {
            // loop in the contracted graph: can never join a tree
            recurse(std::move(comp), components, pos + 1, chosen);
            return;
        }
        // take the edge: contract its endpoints
        std::vector<int> merged = comp;
        for (int& c : merged)
            if (c == b) c = a;
        recurse(std::move(merged), components - 1, pos + 1, chosen | (std::uint64_t{1} << pos));
        // skip the edge
        recurse(std::move(comp), components, pos + 1, chosen);
    }
};

}  // namespace

SpanningTreeSet spanning_trees(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.num_vertices()));
    std::iota(comp.begin(), comp.end(), 0);
    TreeEnumerator en{g.edges(), g.num_vertices(), {}};
    en.recurse(std::move(comp), g.num_vertices(), 0, 0);
    return SpanningTreeSet(std::move(en.found), g.num_edges());
}

}  // namespace kirchcert

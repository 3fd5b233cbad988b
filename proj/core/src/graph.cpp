#include "br/graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace br {

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    adj_[u].set(v);
    adj_[v].set(u);
}

void Graph::remove_edge(int u, int v) {
    adj_[u].reset(v);
    adj_[v].reset(u);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_count() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        adj_[u].for_each([&](int v) { if (v > u) out.emplace_back(u, v); });
    return out;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    Bitset seen(n_);
    std::vector<int> stack{0};
    seen.set(0);
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        adj_[v].for_each([&](int w) {
            if (!seen.test(w)) {
                seen.set(w);
                ++reached;
                stack.push_back(w);
            }
        });
    }
    return reached == n_;
}

Graph Graph::without_edge(int u, int v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::without_vertex(int v) const {
    Graph g(n_ - 1);
    for (int u = 0; u < n_; ++u) {
        if (u == v) continue;
        adj_[u].for_each([&](int w) {
            if (w > u && w != v) g.add_edge(u - (u > v), w - (w > v));
        });
    }
    return g;
}

namespace {

std::uint64_t triangle_code(const Graph& g, const std::vector<int>& perm) {
    // perm[i] = original vertex placed at position i
    std::uint64_t code = 0;
    int bit = 0;
    int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (g.has_edge(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    return code;
}

} // namespace

std::uint64_t Graph::canonical_code() const {
    if (n_ > 11) throw std::invalid_argument("canonical_code: n > 11");
    if (n_ == 0) return 0;
    // Group vertices by degree (descending); only permutations within degree
    // classes can realize the minimum code.
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int da = degree(a), db = degree(b);
        return da != db ? da > db : a < b;
    });
    std::vector<std::pair<int, int>> blocks; // [begin, end) in order
    int start = 0;
    for (int i = 1; i <= n_; ++i) {
        if (i == n_ || degree(order[i]) != degree(order[start])) {
            blocks.emplace_back(start, i);
            start = i;
        }
    }
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm = order;
    // Iterate products of within-block permutations.
    std::vector<std::vector<int>> block_perm;
    for (auto [b, e] : blocks) {
        std::vector<int> p(order.begin() + b, order.begin() + e);
        std::sort(p.begin(), p.end());
        block_perm.push_back(p);
    }
    auto recurse = [&](auto&& self, std::size_t bi) -> void {
        if (bi == blocks.size()) {
            best = std::min(best, triangle_code(*this, perm));
            return;
        }
        auto [b, e] = blocks[bi];
        auto& p = block_perm[bi];
        do {
            std::copy(p.begin(), p.end(), perm.begin() + b);
            self(self, bi + 1);
        } while (std::next_permutation(p.begin(), p.end()));
    };
    recurse(recurse, 0);
    return best;
}

bool Graph::isomorphic_to(const Graph& o) const {
    if (n_ != o.n_ || edge_count() != o.edge_count()) return false;
    return canonical_code() == o.canonical_code();
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    Graph g = path_graph(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) g.add_edge(u, v);
    return g;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<Graph> all_graphs(int n) {
    if (n > 9) throw std::invalid_argument("all_graphs: n > 9");
    std::vector<Graph> level{Graph(1)};
    for (int m = 2; m <= n; ++m) {
        std::map<std::uint64_t, Graph> next;
        for (const Graph& g : level) {
            // Every graph on m vertices arises by attaching a new vertex with
            // some neighborhood to a graph on m-1 vertices.
            for (std::uint32_t nbhd = 0; nbhd < (1u << (m - 1)); ++nbhd) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (int v = 0; v < m - 1; ++v)
                    if (nbhd & (1u << v)) h.add_edge(m - 1, v);
                std::uint64_t code = h.canonical_code();
                next.try_emplace(code, std::move(h));
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    if (n == 0) return {};
    return level;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : all_graphs(n))
        if (g.is_connected()) out.push_back(std::move(g));
    return out;
}

} // namespace br

#include "cospectra/error.hpp"
#include "cospectra/graph.hpp"

#include <algorithm>
#include <map>

namespace cospectra {

namespace {

// Iterated degree refinement (1-dimensional Weisfeiler-Leman). The resulting
// colors are preserved by every automorphism, so they can prune the search.
std::vector<int> refined_colors(const ExactMatrix& a)
{
    const std::size_t n = a.dim();
    std::vector<int> color(n, 0);
    std::size_t classes = 1;
    while (true) {
        using Signature = std::pair<int, std::vector<std::pair<int, std::string>>>;
        std::vector<Signature> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            sig[v].first = color[v];
            for (std::size_t u = 0; u < n; ++u)
                if (sgn(a(v, u)) != 0) sig[v].second.emplace_back(color[u], a(v, u).get_str());
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        std::map<Signature, int> ids;
        for (const auto& s : sig) ids.emplace(s, 0);
        int next = 0;
        for (auto& [s, id] : ids) id = next++;
        for (std::size_t v = 0; v < n; ++v) color[v] = ids.at(sig[v]);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return color;
}

class AutomorphismSearch {
public:
    AutomorphismSearch(const ExactMatrix& a, std::vector<int> order)
        : a_(a), colors_(refined_colors(a)), order_(std::move(order)),
          image_(a.dim(), -1), used_(a.dim(), 0)
    {}

    bool run(int from, int to)
    {
        if (colors_[static_cast<std::size_t>(from)] != colors_[static_cast<std::size_t>(to)]) return false;
        if (!consistent(from, to)) return false;
        assign(from, to);
        return extend(1);
    }

private:
    bool consistent(int v, int u) const
    {
        const auto sv = static_cast<std::size_t>(v);
        const auto su = static_cast<std::size_t>(u);
        if (a_(sv, sv) != a_(su, su)) return false;
        for (std::size_t w = 0; w < image_.size(); ++w) {
            if (image_[w] < 0) continue;
            const auto iw = static_cast<std::size_t>(image_[w]);
            if (a_(sv, w) != a_(su, iw) || a_(w, sv) != a_(iw, su)) return false;
        }
        return true;
    }

    void assign(int v, int u)
    {
        image_[static_cast<std::size_t>(v)] = u;
        used_[static_cast<std::size_t>(u)] = 1;
    }

    void unassign(int v, int u)
    {
        image_[static_cast<std::size_t>(v)] = -1;
        used_[static_cast<std::size_t>(u)] = 0;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        for (std::size_t u = 0; u < image_.size(); ++u) {
            if (used_[u] || colors_[u] != colors_[static_cast<std::size_t>(v)]) continue;
            if (!consistent(v, static_cast<int>(u))) continue;
            assign(v, static_cast<int>(u));
            if (extend(depth + 1)) return true;
            unassign(v, static_cast<int>(u));
        }
        return false;
    }

    const ExactMatrix& a_;
    std::vector<int> colors_;
    std::vector<int> order_;
    std::vector<int> image_;
    std::vector<char> used_;
};

} // namespace

bool automorphism_maps(const Graph& g, VertexPair p, int max_order)
{
    if (g.directed()) throw InvalidArgument("automorphism search supports undirected graphs only");
    validate_pair(p, static_cast<std::size_t>(g.order()));
    if (g.order() > max_order)
        throw BudgetExceeded("automorphism search limited to n <= " + std::to_string(max_order) +
                             " (got n=" + std::to_string(g.order()) + ")");

    // Map vertices in BFS order from p.i so each new vertex is usually
    // adjacent to an already-mapped one.
    const auto nbrs = g.neighbors();
    std::vector<int> order{p.i};
    std::vector<char> queued(nbrs.size(), 0);
    queued[static_cast<std::size_t>(p.i)] = 1;
    for (std::size_t head = 0; order.size() < nbrs.size(); ++head) {
        if (head == order.size()) {
            // next component
            auto v = static_cast<std::size_t>(std::find(queued.begin(), queued.end(), 0) - queued.begin());
            queued[v] = 1;
            order.push_back(static_cast<int>(v));
        }
        for (int u : nbrs[static_cast<std::size_t>(order[head])]) {
            if (!queued[static_cast<std::size_t>(u)]) {
                queued[static_cast<std::size_t>(u)] = 1;
                order.push_back(u);
            }
        }
    }

    const ExactMatrix a = adjacency_matrix(g);
    return AutomorphismSearch(a, std::move(order)).run(p.i, p.j);
}

} // namespace cospectra

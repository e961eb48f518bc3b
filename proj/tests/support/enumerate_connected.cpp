// Connected graphs up to isomorphism, written as graph6, one file per order.
//
// Every connected graph on n vertices has a vertex whose removal leaves it
// connected, so extending each connected graph on n-1 vertices by a vertex
// joined to a nonempty subset reaches all of them. Duplicates are removed by
// a canonical code: the lexicographically smallest adjacency bit string over
// the leaves of an individualization-refinement tree.

#include "cospectra/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

namespace {

constexpr int kMaxN = 10;
using Rows = std::vector<std::uint16_t>;
using Cells = std::vector<std::vector<int>>;

int popcount(unsigned x) { return __builtin_popcount(x); }

void refine(const Rows& g, Cells& cells)
{
    const int n = static_cast<int>(g.size());
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<unsigned> masks;
        for (const auto& c : cells) {
            unsigned m = 0;
            for (int v : c) m |= 1u << v;
            masks.push_back(m);
        }
        Cells next;
        for (const auto& c : cells) {
            if (c.size() == 1) {
                next.push_back(c);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> sig;
            for (int v : c) {
                std::vector<int> s;
                for (unsigned m : masks) s.push_back(popcount(g[static_cast<std::size_t>(v)] & m));
                sig.emplace_back(std::move(s), v);
            }
            std::sort(sig.begin(), sig.end());
            std::size_t start = next.size();
            next.push_back({sig[0].second});
            for (std::size_t k = 1; k < sig.size(); ++k) {
                if (sig[k].first != sig[k - 1].first) next.push_back({});
                next.back().push_back(sig[k].second);
            }
            if (next.size() - start > 1) changed = true;
        }
        cells = std::move(next);
        (void)n;
    }
}

std::uint64_t code_of(const Rows& g, const Cells& cells)
{
    std::vector<int> perm;
    for (const auto& c : cells) perm.push_back(c.front());
    const int n = static_cast<int>(perm.size());
    std::uint64_t code = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            code = (code << 1) | ((g[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] >> perm[static_cast<std::size_t>(j)]) & 1u);
    return code;
}

void search(const Rows& g, Cells cells, std::uint64_t& best, bool& found)
{
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
        const std::uint64_t code = code_of(g, cells);
        if (!found || code < best) best = code;
        found = true;
        return;
    }
    // Twins (same neighbourhood apart from each other) are interchangeable:
    // branching on one of them suffices.
    std::vector<int> tried;
    for (int v : *target) {
        const unsigned nv = g[static_cast<std::size_t>(v)];
        bool twin = std::any_of(tried.begin(), tried.end(), [&](int u) {
            const unsigned mask = ~((1u << u) | (1u << v));
            return (nv & mask) == (g[static_cast<std::size_t>(u)] & mask);
        });
        if (twin) continue;
        tried.push_back(v);
        Cells next;
        for (auto it = cells.begin(); it != cells.end(); ++it) {
            if (it == target) {
                next.push_back({v});
                std::vector<int> rest;
                for (int u : *it)
                    if (u != v) rest.push_back(u);
                next.push_back(std::move(rest));
            } else {
                next.push_back(*it);
            }
        }
        search(g, std::move(next), best, found);
    }
}

std::uint64_t canonical_code(const Rows& g)
{
    Cells cells(1);
    for (int v = 0; v < static_cast<int>(g.size()); ++v) cells[0].push_back(v);
    std::uint64_t best = 0;
    bool found = false;
    search(g, cells, best, found);
    return best;
}

Rows from_code(std::uint64_t code, int n)
{
    Rows g(static_cast<std::size_t>(n), 0);
    int bit = n * (n - 1) / 2 - 1;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, --bit)
            if ((code >> bit) & 1u) {
                g[static_cast<std::size_t>(i)] |= static_cast<std::uint16_t>(1u << j);
                g[static_cast<std::size_t>(j)] |= static_cast<std::uint16_t>(1u << i);
            }
    return g;
}

std::string graph6(const Rows& g)
{
    std::vector<cospectra::Edge> edges;
    const int n = static_cast<int>(g.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((g[static_cast<std::size_t>(i)] >> j) & 1u) edges.push_back({i, j, 1});
    return cospectra::to_graph6(cospectra::Graph(n, false, std::move(edges)));
}

} // namespace

int main(int argc, char** argv)
{
    if (argc != 3) {
        std::cerr << "usage: enumerate_connected <max-order> <output-dir>\n";
        return 2;
    }
    const int max_n = std::stoi(argv[1]);
    const std::string dir = argv[2];
    if (max_n < 1 || max_n > kMaxN) {
        std::cerr << "max order must be in 1.." << kMaxN << "\n";
        return 2;
    }

    std::vector<std::uint64_t> level{0}; // K_1
    for (int n = 1; n <= max_n; ++n) {
        if (n > 1) {
            std::unordered_set<std::uint64_t> seen;
            std::vector<std::uint64_t> next;
            for (std::uint64_t code : level) {
                Rows base = from_code(code, n - 1);
                base.push_back(0);
                for (unsigned subset = 1; subset < (1u << (n - 1)); ++subset) {
                    Rows g = base;
                    g[static_cast<std::size_t>(n - 1)] = static_cast<std::uint16_t>(subset);
                    for (int v = 0; v < n - 1; ++v)
                        if ((subset >> v) & 1u) g[static_cast<std::size_t>(v)] |= static_cast<std::uint16_t>(1u << (n - 1));
                    const std::uint64_t c = canonical_code(g);
                    if (seen.insert(c).second) next.push_back(c);
                }
            }
            std::sort(next.begin(), next.end());
            level = std::move(next);
        }
        std::ofstream out(dir + "/connected" + std::to_string(n) + ".g6");
        for (std::uint64_t code : level) out << graph6(from_code(code, n)) << '\n';
        std::cout << n << ' ' << level.size() << '\n';
    }
    return 0;
}

#include "cospectra/graph.hpp"

#include "cospectra/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace cospectra {

Graph::Graph(int n, bool directed, std::vector<Edge> edges, bool allow_loops)
    : n_(n), directed_(directed), allow_loops_(allow_loops), edges_(std::move(edges))
{
    if (n <= 0) throw InvalidArgument("graph must have at least one vertex");
    if (allow_loops && !directed)
        throw InvalidArgument("self-loops are only supported on directed graphs");

    for (auto& e : edges_) {
        if (e.from < 0 || e.from >= n || e.to < 0 || e.to >= n)
            throw InvalidArgument("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                                  ") out of range for n=" + std::to_string(n));
        if (e.from == e.to && !allow_loops_)
            throw InvalidArgument("self-loop at vertex " + std::to_string(e.from));
        if (sgn(e.weight) == 0)
            throw InvalidArgument("zero edge weight on (" + std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ")");
        if (!directed_ && e.from > e.to) std::swap(e.from, e.to);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
    for (std::size_t k = 1; k < edges_.size(); ++k) {
        if (edges_[k].from == edges_[k - 1].from && edges_[k].to == edges_[k - 1].to)
            throw InvalidArgument("duplicate edge (" + std::to_string(edges_[k].from) + "," +
                                  std::to_string(edges_[k].to) + ")");
    }
}

bool Graph::weighted() const
{
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight != 1; });
}

std::vector<int> Graph::degrees() const
{
    std::vector<int> deg(static_cast<std::size_t>(n_), 0);
    for (const auto& e : edges_) {
        ++deg[static_cast<std::size_t>(e.from)];
        if (!directed_ && e.from != e.to) ++deg[static_cast<std::size_t>(e.to)];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::neighbors() const
{
    std::vector<std::set<int>> sets(static_cast<std::size_t>(n_));
    for (const auto& e : edges_) {
        if (e.from == e.to) continue;
        sets[static_cast<std::size_t>(e.from)].insert(e.to);
        sets[static_cast<std::size_t>(e.to)].insert(e.from);
    }
    std::vector<std::vector<int>> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(s.begin(), s.end());
    return out;
}

void validate_pair(VertexPair p, std::size_t n)
{
    const auto in_range = [n](int v) { return v >= 0 && static_cast<std::size_t>(v) < n; };
    if (!in_range(p.i) || !in_range(p.j))
        throw InvalidArgument("vertex pair (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                              ") out of range for n=" + std::to_string(n));
    if (p.i == p.j) throw InvalidArgument("vertex pair must consist of two distinct vertices");
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && (line[k] == ' ' || line[k] == '\t' || line[k] == '\r')) ++k;
        std::size_t start = k;
        while (k < line.size() && line[k] != ' ' && line[k] != '\t' && line[k] != '\r') ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

int parse_index(std::string_view tok, std::size_t line_no)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0)
        throw ParseError("invalid vertex index '" + std::string(tok) + "'", line_no);
    return v;
}

bool parse_bool(std::string_view tok, std::size_t line_no)
{
    if (tok == "true" || tok == "1") return true;
    if (tok == "false" || tok == "0") return false;
    throw ParseError("invalid boolean '" + std::string(tok) + "'", line_no);
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    std::optional<int> header_n;
    bool directed = false;
    bool loops = false;
    bool seen_edge = false;

    struct Pending {
        Edge edge;
        std::size_t line;
    };
    std::vector<Pending> pending;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;

        if (toks.front().find('=') != std::string_view::npos) {
            if (seen_edge || header_n) throw ParseError("header must precede all edges and appear once", line_no);
            for (auto tok : toks) {
                auto eq = tok.find('=');
                if (eq == std::string_view::npos) throw ParseError("malformed header token '" + std::string(tok) + "'", line_no);
                auto key = tok.substr(0, eq);
                auto val = tok.substr(eq + 1);
                if (key == "n") {
                    header_n = parse_index(val, line_no);
                    if (*header_n <= 0) throw ParseError("vertex count must be positive", line_no);
                } else if (key == "directed") {
                    directed = parse_bool(val, line_no);
                } else if (key == "loops") {
                    loops = parse_bool(val, line_no);
                } else {
                    throw ParseError("unknown header key '" + std::string(key) + "'", line_no);
                }
            }
            if (!header_n) throw ParseError("header must specify n", line_no);
            if (loops && !directed) throw ParseError("loops=true requires directed=true", line_no);
            continue;
        }

        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("expected 'u v' or 'u v w'", line_no);
        Edge e;
        e.from = parse_index(toks[0], line_no);
        e.to = parse_index(toks[1], line_no);
        if (toks.size() == 3) {
            try {
                e.weight = parse_rational(toks[2]);
            } catch (const ParseError& err) {
                throw ParseError(err.what(), line_no);
            }
            if (sgn(e.weight) == 0) throw ParseError("zero edge weight", line_no);
        }
        seen_edge = true;
        pending.push_back({std::move(e), line_no});
    }

    int n = header_n.value_or(0);
    if (!header_n) {
        for (const auto& p : pending) n = std::max({n, p.edge.from + 1, p.edge.to + 1});
        if (n == 0) throw ParseError("empty edge list without header");
    }

    std::set<std::pair<int, int>> seen;
    std::vector<Edge> edges;
    edges.reserve(pending.size());
    for (auto& p : pending) {
        const Edge& e = p.edge;
        if (e.from >= n || e.to >= n)
            throw ParseError("vertex index out of range for n=" + std::to_string(n), p.line);
        if (e.from == e.to && !loops) throw ParseError("self-loop in simple mode", p.line);
        const std::pair<int, int> key = directed ? std::pair{e.from, e.to} : std::pair{std::min(e.from, e.to), std::max(e.from, e.to)};
        if (!seen.insert(key).second) throw ParseError("duplicate edge", p.line);
        edges.push_back(e);
    }
    return Graph(n, directed, std::move(edges), loops);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << "n=" << g.order() << " directed=" << (g.directed() ? "true" : "false");
    if (g.allows_loops()) out << " loops=true";
    out << '\n';
    for (const auto& e : g.edges()) {
        out << e.from << ' ' << e.to;
        if (e.weight != 1) out << ' ' << to_string(e.weight);
        out << '\n';
    }
    return out.str();
}

ExactMatrix adjacency_matrix(const Graph& g)
{
    ExactMatrix a(static_cast<std::size_t>(g.order()));
    for (const auto& e : g.edges()) {
        const auto u = static_cast<std::size_t>(e.from);
        const auto v = static_cast<std::size_t>(e.to);
        a(u, v) = e.weight;
        if (!g.directed()) a(v, u) = e.weight;
    }
    return a;
}

bool is_connected(const Graph& g)
{
    const auto nbrs = g.neighbors();
    std::vector<char> seen(nbrs.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : nbrs[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == nbrs.size();
}

} // namespace cospectra

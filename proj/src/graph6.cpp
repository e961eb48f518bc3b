// graph6: one size byte (n + 63) followed by the upper triangle of the
// adjacency matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...),
// packed six bits per byte, most significant bit first, each byte + 63.

#include "cospectra/error.hpp"
#include "cospectra/graph.hpp"

namespace cospectra {

namespace {

constexpr int kBias = 63;
constexpr int kMaxOrder = 62;

} // namespace

Graph parse_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw ParseError("empty graph6 string");

    for (std::size_t k = 0; k < line.size(); ++k) {
        const int c = static_cast<unsigned char>(line[k]);
        if (c < 63 || c > 126)
            throw ParseError("graph6: invalid character at offset " + std::to_string(k));
    }
    const int n = static_cast<unsigned char>(line[0]) - kBias;
    if (n > kMaxOrder) throw ParseError("graph6: only single-byte sizes (n <= 62) are supported");
    if (n == 0) throw ParseError("graph6: graph must have at least one vertex");

    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (line.size() - 1 < nbytes) throw ParseError("graph6: truncated bit field");
    if (line.size() - 1 > nbytes) throw ParseError("graph6: trailing characters after bit field");

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int byte = static_cast<unsigned char>(line[1 + bit / 6]) - kBias;
            if (byte & (1 << (5 - bit % 6))) edges.push_back({i, j, 1});
        }
    }
    return Graph(n, false, std::move(edges));
}

std::string to_graph6(const Graph& g)
{
    if (g.directed()) throw InvalidArgument("graph6 encodes undirected graphs only");
    if (g.weighted()) throw InvalidArgument("graph6 cannot encode edge weights");
    const int n = g.order();
    if (n > kMaxOrder) throw InvalidArgument("graph6: only n <= 62 is supported");

    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    std::string bytes((nbits + 5) / 6, '\0');
    for (const auto& e : g.edges()) {
        // undirected edges are stored with from < to
        const std::size_t bit = static_cast<std::size_t>(e.to) * static_cast<std::size_t>(e.to - 1) / 2 +
                                static_cast<std::size_t>(e.from);
        bytes[bit / 6] = static_cast<char>(bytes[bit / 6] | (1 << (5 - bit % 6)));
    }
    std::string out(1, static_cast<char>(n + kBias));
    for (char b : bytes) out.push_back(static_cast<char>(b + kBias));
    return out;
}

} // namespace cospectra

#include "bturan/graph6.hpp"

#include <algorithm>
#include <sstream>

namespace bturan {

namespace {

void append_size(std::string& out, long long n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n <= 62) {
        out.push_back(char(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + 63));
    } else if (n <= 68719476735LL) {
        out.push_back(126);
        out.push_back(126);
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(char(((n >> shift) & 63) + 63));
    } else {
        throw std::invalid_argument("vertex count too large for graph6");
    }
}

int char_value(const std::string& s, size_t i) {
    if (i >= s.size()) throw g6_parse_error("unexpected end of input", s.size());
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw g6_parse_error("byte out of graph6 range", i);
    return c - 63;
}

long long parse_size(const std::string& s, size_t& pos) {
    int v = char_value(s, pos);
    if (v != 63) {
        ++pos;
        return v;
    }
    ++pos;
    int width = 3;
    if (char_value(s, pos) == 63) {
        ++pos;
        width = 6;
    }
    long long n = 0;
    for (int i = 0; i < width; ++i) n = (n << 6) | char_value(s, pos++);
    return n;
}

// Append bits MSB-first, 6 per output byte.
struct BitWriter {
    std::string& out;
    int used = 0;
    int cur = 0;
    void push(int bit) {
        cur = (cur << 1) | bit;
        if (++used == 6) {
            out.push_back(char(cur + 63));
            used = cur = 0;
        }
    }
    void pad(int bit) {
        while (used != 0) push(bit);
    }
};

struct BitReader {
    const std::string& s;
    size_t pos;
    int used = 0;
    int cur = 0;
    bool exhausted() const { return pos >= s.size() && used == 0; }
    size_t bits_left() const { return (s.size() - pos) * 6 + used; }
    int next() {
        if (used == 0) {
            cur = char_value(s, pos);
            ++pos;
            used = 6;
        }
        --used;
        return (cur >> used) & 1;
    }
};

}  // namespace

std::string encode_graph6(const Graph& g) {
    std::string out;
    append_size(out, g.n());
    BitWriter bw{out};
    for (int j = 1; j < g.n(); ++j)
        for (int i = 0; i < j; ++i) bw.push(g.has_edge(i, j) ? 1 : 0);
    bw.pad(0);
    return out;
}

Graph decode_graph6(const std::string& s) {
    if (s.empty()) throw g6_parse_error("empty graph6 string", 0);
    size_t pos = 0;
    long long n = parse_size(s, pos);
    if (n > 1'000'000) throw g6_parse_error("vertex count beyond supported size", 0);
    long long nbits = n * (n - 1) / 2;
    size_t expect = size_t(pos) + size_t((nbits + 5) / 6);
    if (s.size() < expect) throw g6_parse_error("truncated graph6 body", s.size());
    if (s.size() > expect) throw g6_parse_error("trailing bytes after graph6 body", expect);

    std::vector<std::pair<int, int>> edges;
    BitReader br{s, pos};
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.next()) edges.emplace_back(i, j);
    while (!br.exhausted() && br.bits_left() > 0) {
        size_t at = br.used > 0 ? br.pos - 1 : br.pos;
        if (br.next()) throw g6_parse_error("nonzero padding bits", at);
    }
    return Graph::from_edges(int(n), edges);
}

std::string encode_sparse6(const Graph& g) {
    std::string out = ":";
    long long n = g.n();
    append_size(out, n);
    int k = 1;
    while (n > 1 && ((n - 1) >> k)) ++k;

    std::vector<std::pair<int, int>> edges = g.edges();  // (a,b) with a < b
    std::sort(edges.begin(), edges.end(),
              [](auto& e, auto& f) { return std::pair(e.second, e.first) < std::pair(f.second, f.first); });

    BitWriter bw{out};
    auto push_group = [&](int b, long long x) {
        bw.push(b);
        for (int i = k - 1; i >= 0; --i) bw.push(int((x >> i) & 1));
    };
    long long v = 0;
    for (auto [a, b] : edges) {
        if (b == v) {
            push_group(0, a);
        } else if (b == v + 1) {
            push_group(1, a);
            v = b;
        } else {
            push_group(0, b);  // jump: x > v moves the current vertex, no edge
            push_group(0, a);
            v = b;
        }
    }
    bw.pad(1);
    return out;
}

Graph decode_sparse6(const std::string& s) {
    if (s.empty() || s[0] != ':') throw g6_parse_error("sparse6 must start with ':'", 0);
    size_t pos = 1;
    long long n = parse_size(s, pos);
    if (n > 1'000'000) throw g6_parse_error("vertex count beyond supported size", 0);
    int k = 1;
    while (n > 1 && ((n - 1) >> k)) ++k;

    std::vector<std::pair<int, int>> edges;
    BitReader br{s, pos};
    long long v = 0;
    while (br.bits_left() >= size_t(k) + 1) {
        size_t at = br.pos;
        int b = br.next();
        long long x = 0;
        for (int i = 0; i < k; ++i) x = (x << 1) | br.next();
        if (b) ++v;
        if (v >= n) break;
        if (x > v) {
            v = x;
        } else if (x == v) {
            throw g6_parse_error("sparse6 encodes a loop: not a simple graph", at);
        } else {
            edges.emplace_back(int(x), int(v));
        }
    }
    return Graph::from_edges(int(n), edges);
}

Graph decode_graph(const std::string& s) {
    if (!s.empty() && s[0] == ':') return decode_sparse6(s);
    return decode_graph6(s);
}

std::string encode_bipartite(const BipartiteGraph& g) {
    const BipartiteGraph* use = &g;
    BipartiteGraph relabeled;
    if (!g.x_first()) {
        std::vector<int> order = g.part_x().to_vector();
        for (int v : g.part_y().to_vector()) order.push_back(v);
        std::vector<int> map(g.graph().n());
        for (int i = 0; i < g.graph().n(); ++i) map[order[i]] = i;
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.graph().edges()) edges.emplace_back(map[u], map[v]);
        Graph h = Graph::from_edges(g.graph().n(), edges);
        Bitset x(g.graph().n());
        for (int i = 0; i < g.nx(); ++i) x.set(i);
        relabeled = BipartiteGraph(std::move(h), std::move(x));
        use = &relabeled;
    }
    std::ostringstream os;
    os << "bip " << use->nx() << ' ' << use->ny() << '\n' << encode_graph6(use->graph()) << '\n';
    return os.str();
}

BipartiteGraph decode_bipartite(const std::string& header, const std::string& g6) {
    std::istringstream is(header);
    std::string tag;
    int nx = -1, ny = -1;
    is >> tag >> nx >> ny;
    if (tag != "bip" || nx < 0 || ny < 0)
        throw std::invalid_argument("malformed bipartite header: " + header);
    Graph g = decode_graph(g6);
    if (g.n() != nx + ny)
        throw std::invalid_argument("bipartite header sizes do not match graph order");
    Bitset x(g.n());
    for (int i = 0; i < nx; ++i) x.set(i);
    return BipartiteGraph(std::move(g), std::move(x));
}

}  // namespace bturan

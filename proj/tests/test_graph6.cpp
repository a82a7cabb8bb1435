#include "doctest.h"

#include "bturan/graph6.hpp"
#include "helpers.hpp"

using namespace bturan;
using namespace testutil;

TEST_CASE("graph6 known strings are bit-exact") {
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(complete_graph(4)) == "C~");
    CHECK(encode_graph6(cycle_graph(4)) == "Cl");
    CHECK(encode_graph6(Graph(5)) == "D??");
    CHECK(decode_graph6("C~") == complete_graph(4));
    CHECK(decode_graph6("?").n() == 0);
}

TEST_CASE("graph6 round trip on random graphs") {
    for (uint64_t seed = 0; seed < 300; ++seed) {
        int n = int(seed % 13);
        Graph g = random_graph(n, 0.2 + 0.6 * double(seed % 7) / 6.0, 31 * seed + 1);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 wide size prefix") {
    Graph g = random_graph(70, 0.05, 77);
    std::string s = encode_graph6(g);
    CHECK(s[0] == '~');
    CHECK(decode_graph6(s) == g);
}

TEST_CASE("graph6 malformed inputs carry byte offsets") {
    CHECK_THROWS_AS(decode_graph6(""), g6_parse_error);
    // truncated body
    try {
        decode_graph6("C");
        FAIL("expected parse error");
    } catch (const g6_parse_error& e) {
        CHECK(e.offset == 1);
    }
    // trailing bytes
    try {
        decode_graph6("Cl?");
        FAIL("expected parse error");
    } catch (const g6_parse_error& e) {
        CHECK(e.offset == 2);
    }
    // nonzero padding: n=2 has one adjacency bit, five pad bits
    try {
        decode_graph6("A@");
        FAIL("expected parse error");
    } catch (const g6_parse_error& e) {
        CHECK(e.offset == 1);
    }
    // byte below the printable range
    CHECK_THROWS_AS(decode_graph6("C\x20\x20"), g6_parse_error);
}

TEST_CASE("sparse6 round trip incl. power-of-two orders") {
    for (int n : {0, 1, 2, 3, 4, 5, 8, 9, 16, 17}) {
        for (uint64_t seed = 0; seed < 20; ++seed) {
            Graph g = random_graph(n, 0.3, 991 * seed + n);
            Graph back = decode_sparse6(encode_sparse6(g));
            CHECK(back == g);
        }
    }
}

TEST_CASE("decode_graph dispatches on the sparse6 prefix") {
    Graph g = cycle_graph(5);
    CHECK(decode_graph(encode_sparse6(g)) == g);
    CHECK(decode_graph(encode_graph6(g)) == g);
}

TEST_CASE("bipartite sidecar header round trip") {
    BipartiteGraph b = complete_bipartite_parts(2, 3);
    std::string blob = encode_bipartite(b);
    auto nl = blob.find('\n');
    std::string header = blob.substr(0, nl);
    std::string g6 = blob.substr(nl + 1, blob.size() - nl - 2);
    CHECK(header == "bip 2 3");
    BipartiteGraph back = decode_bipartite(header, g6);
    CHECK(back.graph() == b.graph());
    CHECK(back.part_x() == b.part_x());

    CHECK_THROWS_AS(decode_bipartite("bip 4 4", g6), std::invalid_argument);
    CHECK_THROWS_AS(decode_bipartite("bop 2 3", g6), std::invalid_argument);
}

TEST_CASE("scattered X part is relabeled to the x-first layout") {
    // path 0-1-2 with X = {1}: relabeling must put 1 first
    Graph p = path_graph(3);
    BipartiteGraph b(p, Bitset::of(3, {1}));
    std::string blob = encode_bipartite(b);
    CHECK(blob.substr(0, 7) == "bip 1 2");
    auto nl = blob.find('\n');
    BipartiteGraph back = decode_bipartite(blob.substr(0, nl), blob.substr(nl + 1, blob.size() - nl - 2));
    CHECK(back.graph().edge_count() == 2);
    CHECK(back.graph().degree(0) == 2);  // the old vertex 1
}

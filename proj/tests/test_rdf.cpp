#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "animl/rdf/graph.hpp"
#include "animl/rdf/io.hpp"
#include "animl/vocab.hpp"
#include "support.hpp"

using animl::rdf::Format;
using animl::rdf::Graph;
using animl::rdf::Node;
using animl::rdf::Triple;
using animl::rdf::TriplePattern;

namespace {

Node ex(const std::string& local) { return Node::iri("http://example.org/" + local); }

// Oracle: pattern match by full scan, independent of the graph's indexes.
std::vector<Triple> scan_match(const Graph& g, const TriplePattern& p) {
    std::vector<Triple> out;
    for (const Triple& t : g.triples()) {
        if (p.subject && t.subject != *p.subject) continue;
        if (p.predicate && t.predicate != *p.predicate) continue;
        if (p.object && t.object != *p.object) continue;
        out.push_back(t);
    }
    return out;
}

// Oracle: transitive closure by repeated relational join until fixpoint.
std::set<std::pair<Node, Node>> closure_by_join(const Graph& g, const Node& pred) {
    std::set<std::pair<Node, Node>> edges;
    for (const Triple& t : g.match(std::nullopt, pred, std::nullopt)) {
        edges.emplace(t.subject, t.object);
    }
    std::set<std::pair<Node, Node>> closure = edges;
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::pair<Node, Node>> next = closure;
        for (const auto& [a, b] : closure) {
            for (const auto& [c, d] : edges) {
                if (b == c && next.emplace(a, d).second) {
                    grew = true;
                }
            }
        }
        closure.swap(next);
    }
    return closure;
}

}  // namespace

TEST_CASE("node invariants") {
    CHECK_THROWS_AS(Node::iri("no-scheme"), std::invalid_argument);
    CHECK_NOTHROW(Node::iri("urn:x"));

    Node lit = Node::literal("7", animl::vocab::xsd_integer.value());
    CHECK(lit.value() == "7");
    CHECK(lit.datatype() == "http://www.w3.org/2001/XMLSchema#integer");

    Node lang = Node::lang_literal("hello", "en");
    CHECK(lang.datatype() == animl::rdf::ns::rdf_lang_string);
    CHECK(lang.ntriples() == "\"hello\"@en");

    // Structural equality: same variant + same fields.
    CHECK(Node::literal("a") == Node::literal("a"));
    CHECK(Node::literal("a") != Node::literal("a", animl::vocab::xsd_integer.value()));
    CHECK(Node::iri("urn:a") != Node::blank("a"));
}

TEST_CASE("insert has set semantics and rejects malformed triples") {
    Graph g;
    CHECK(g.insert(ex("s"), ex("p"), ex("o")));
    CHECK(g.size() == 1);
    CHECK_FALSE(g.insert(ex("s"), ex("p"), ex("o")));
    CHECK(g.size() == 1);

    CHECK_THROWS_WITH(g.insert(Node::literal("x"), ex("p"), ex("o")),
                      Catch::Matchers::ContainsSubstring("literal subject"));
    CHECK_THROWS_WITH(g.insert(ex("s"), Node::blank("b"), ex("o")),
                      Catch::Matchers::ContainsSubstring("non-IRI predicate"));
    CHECK(g.size() == 1);
}

TEST_CASE("match agrees with the scan oracle") {
    Graph g;
    g.insert(ex("s"), animl::vocab::type, ex("T1"));
    g.insert(ex("s"), animl::vocab::type, ex("T2"));
    g.insert(ex("s"), ex("p"), Node::literal("v"));
    g.insert(ex("other"), animl::vocab::type, ex("T1"));

    SECTION("subject+predicate bound") {
        auto got = g.match(ex("s"), animl::vocab::type, std::nullopt);
        auto expected = scan_match(g, TriplePattern{ex("s"), animl::vocab::type, std::nullopt});
        CHECK(got == expected);
        CHECK(got.size() == 2);
    }
    SECTION("wildcard pattern returns everything") {
        auto got = g.match(std::nullopt, std::nullopt, std::nullopt);
        CHECK(got.size() == g.size());
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
    SECTION("empty graph matches nothing") {
        Graph empty;
        CHECK(empty.match(std::nullopt, std::nullopt, std::nullopt).empty());
        CHECK(empty.match(ex("s"), std::nullopt, std::nullopt).empty());
    }
    SECTION("fully bound pattern yields 0 or 1 triples") {
        CHECK(g.match(ex("s"), ex("p"), Node::literal("v")).size() == 1);
        CHECK(g.match(ex("s"), ex("p"), Node::literal("w")).empty());
    }
}

TEST_CASE("match agrees with scan on random graphs through every index") {
    testsupport::GraphGen gen(1234);
    for (int round = 0; round < 40; ++round) {
        Graph g = gen.random_graph(20);
        TriplePattern p;
        if (gen.pick(0, 1)) p.subject = gen.random_subject();
        if (gen.pick(0, 1)) p.predicate = gen.random_predicate();
        if (gen.pick(0, 1)) p.object = gen.random_object();
        CHECK(g.match(p) == scan_match(g, p));
    }
}

TEST_CASE("transitive reachability") {
    Node next = ex("next");

    SECTION("chain") {
        Graph g;
        g.insert(ex("a"), next, ex("b"));
        g.insert(ex("b"), next, ex("c"));
        CHECK(g.reachable(ex("a"), next) == std::set<Node>{ex("b"), ex("c")});
        CHECK(g.reachable(ex("c"), next).empty());
    }
    SECTION("start is included only when on a cycle through itself") {
        Graph g;
        g.insert(ex("a"), next, ex("b"));
        g.insert(ex("b"), next, ex("a"));
        CHECK(g.reachable(ex("a"), next) == std::set<Node>{ex("a"), ex("b")});
    }
    SECTION("4-node DAG matches path enumeration") {
        Graph g;
        g.insert(ex("a"), next, ex("b"));
        g.insert(ex("a"), next, ex("c"));
        g.insert(ex("b"), next, ex("d"));
        g.insert(ex("c"), next, ex("d"));
        // All simple paths from a: a-b, a-c, a-b-d, a-c-d.
        CHECK(g.reachable(ex("a"), next) == std::set<Node>{ex("b"), ex("c"), ex("d")});
    }
    SECTION("matches join-until-fixpoint closure on random graphs up to 8 nodes") {
        testsupport::GraphGen gen(99);
        for (int round = 0; round < 60; ++round) {
            Graph g;
            int nodes = static_cast<int>(gen.pick(2, 8));
            int edges = static_cast<int>(gen.pick(1, 14));
            for (int i = 0; i < edges; ++i) {
                g.insert(ex("n" + std::to_string(gen.pick(0, nodes - 1))), next,
                         ex("n" + std::to_string(gen.pick(0, nodes - 1))));
            }
            auto closure = closure_by_join(g, next);
            for (int i = 0; i < nodes; ++i) {
                Node start = ex("n" + std::to_string(i));
                std::set<Node> expected;
                for (const auto& [a, b] : closure) {
                    if (a == start) expected.insert(b);
                }
                CHECK(g.reachable(start, next) == expected);
            }
        }
    }
}

TEST_CASE("serialization basics") {
    SECTION("empty graph serializes to empty N-Triples") {
        CHECK(animl::rdf::serialize(Graph{}, Format::NTriples).empty());
    }
    SECTION("one-triple Turtle carries the aml prefix and one statement") {
        Graph g;
        g.insert(ex("s"), animl::vocab::type, animl::vocab::Sample);
        std::string ttl = animl::rdf::serialize(g, Format::Turtle);
        CHECK(ttl.find("@prefix aml: <http://www.w3id.org/animl/ontology/> .") !=
              std::string::npos);
        CHECK(ttl.find("<http://example.org/s> a aml:Sample .") != std::string::npos);
    }
    SECTION("serialize is a pure function of the triple set") {
        Graph a, b;
        a.insert(ex("s"), ex("p"), Node::literal("v"));
        a.insert(ex("s2"), ex("p"), ex("o"));
        b.insert(ex("s2"), ex("p"), ex("o"));
        b.insert(ex("s"), ex("p"), Node::literal("v"));
        CHECK(animl::rdf::serialize(a, Format::Turtle) == animl::rdf::serialize(b, Format::Turtle));
        CHECK(animl::rdf::serialize(a, Format::NTriples) ==
              animl::rdf::serialize(b, Format::NTriples));
    }
}

TEST_CASE("parser essentials") {
    SECTION("empty input yields an empty graph") {
        CHECK(animl::rdf::parse("").size() == 0);
        CHECK(animl::rdf::parse("  # only a comment\n").size() == 0);
    }
    SECTION("undefined prefix is reported by name") {
        CHECK_THROWS_WITH(animl::rdf::parse("und:x a aml:Sample ."),
                          Catch::Matchers::ContainsSubstring("undefined prefix 'und'"));
    }
    SECTION("default prefixes are available without declarations") {
        Graph g = animl::rdf::parse("aml:x a aml:Sample .");
        CHECK(g.contains(animl::vocab::aml("x"), animl::vocab::type, animl::vocab::Sample));
    }
    SECTION("syntax errors carry a position") {
        try {
            animl::rdf::parse("<urn:a> <urn:b>\n<urn:c> <urn:d> .");
            FAIL("expected ParseError");
        } catch (const animl::ParseError& e) {
            CHECK(e.line() >= 1);
        }
    }
    SECTION("predicate-object and object lists") {
        Graph g = animl::rdf::parse(
            "@prefix ex: <http://example.org/> .\n"
            "ex:s a aml:Sample ; ex:p ex:o1 , ex:o2 ; aml:name \"s one\" .\n");
        CHECK(g.size() == 4);
        CHECK(g.contains(ex("s"), ex("p"), ex("o2")));
    }
    SECTION("numeric, boolean, and language literals") {
        Graph g = animl::rdf::parse(
            "@prefix ex: <http://example.org/> .\n"
            "ex:s ex:i 42 ; ex:d 1.5 ; ex:e 2.0e3 ; ex:b true ; ex:l \"x\"@en .\n");
        CHECK(g.contains(ex("s"), ex("i"), animl::vocab::integer_literal(42)));
        CHECK(g.contains(ex("s"), ex("d"), Node::literal("1.5", animl::vocab::xsd_decimal.value())));
        CHECK(g.contains(ex("s"), ex("e"), Node::literal("2.0e3", animl::vocab::xsd_double.value())));
        CHECK(g.contains(ex("s"), ex("b"), animl::vocab::boolean_literal(true)));
        CHECK(g.contains(ex("s"), ex("l"), Node::lang_literal("x", "en")));
    }
}

TEST_CASE("round-trip: parse(serialize(G)) == G") {
    testsupport::GraphGen gen(2024);
    for (int round = 0; round < 50; ++round) {
        Graph g = gen.random_graph(30);
        for (Format f : {Format::Turtle, Format::NTriples}) {
            Graph back = animl::rdf::parse(animl::rdf::serialize(g, f), f);
            REQUIRE(back == g);
        }
    }
}

#pragma once

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "animl/rdf/graph.hpp"
#include "animl/rdf/node.hpp"

namespace testsupport {

inline std::filesystem::path fixture_dir() {
#ifdef ANIML_FIXTURE_DIR
    return std::filesystem::path(ANIML_FIXTURE_DIR);
#else
    return std::filesystem::path("fixtures");
#endif
}

inline std::filesystem::path fixture(const std::string& relative) {
    return fixture_dir() / relative;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Deterministic generator of arbitrary (but well-formed) graphs for
/// round-trip and query properties. Includes awkward literals on purpose.
class GraphGen {
public:
    explicit GraphGen(unsigned seed) : rng_(seed) {}

    animl::rdf::Node random_iri() {
        return animl::rdf::Node::iri("http://example.org/t/r" + std::to_string(pick(0, 11)));
    }

    animl::rdf::Node random_subject() {
        if (pick(0, 4) == 0) {
            return animl::rdf::Node::blank("b" + std::to_string(pick(0, 3)));
        }
        return random_iri();
    }

    animl::rdf::Node random_predicate() {
        return animl::rdf::Node::iri("http://example.org/t/p" + std::to_string(pick(0, 5)));
    }

    animl::rdf::Node random_literal() {
        static const std::vector<std::string> lexicals = {
            "plain", "", "line\nbreak", "tab\tand \"quotes\"", "backslash \\ end",
            "caf\xC3\xA9",  // UTF-8 passes through untouched
            "42",
        };
        switch (pick(0, 3)) {
            case 0:
                return animl::rdf::Node::literal(lexicals[pick(0, lexicals.size() - 1)]);
            case 1:
                return animl::rdf::Node::literal(std::to_string(pick(-50, 50)),
                                                 "http://www.w3.org/2001/XMLSchema#integer");
            case 2:
                return animl::rdf::Node::literal(std::to_string(pick(0, 99)) + ".5",
                                                 "http://www.w3.org/2001/XMLSchema#double");
            default:
                return animl::rdf::Node::lang_literal(lexicals[pick(0, lexicals.size() - 1)],
                                                      pick(0, 1) ? "en" : "de");
        }
    }

    animl::rdf::Node random_object() {
        switch (pick(0, 2)) {
            case 0: return random_literal();
            case 1: return random_subject();
            default: return random_iri();
        }
    }

    animl::rdf::Graph random_graph(std::size_t max_triples) {
        animl::rdf::Graph g;
        std::size_t n = static_cast<std::size_t>(pick(0, static_cast<long>(max_triples)));
        for (std::size_t i = 0; i < n; ++i) {
            g.insert(random_subject(), random_predicate(), random_object());
        }
        return g;
    }

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(rng_);
    }

    std::mt19937& rng() { return rng_; }

private:
    std::mt19937 rng_;
};

}  // namespace testsupport

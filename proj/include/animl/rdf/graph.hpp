#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "animl/rdf/node.hpp"

namespace animl::rdf {

/// In-memory triple store with set semantics and per-position indexes.
///
/// Intended usage is single-writer: populate the graph, then treat it as
/// immutable. All read paths are const and safe to share across threads once
/// construction is done.
class Graph {
public:
    Graph() {
        bind_prefix("aml", std::string(ns::aml));
        bind_prefix("rdf", std::string(ns::rdf));
        bind_prefix("rdfs", std::string(ns::rdfs));
        bind_prefix("xsd", std::string(ns::xsd));
        bind_prefix("odp", std::string(ns::odp));
        bind_prefix("skos", std::string(ns::skos));
        bind_prefix("owl", std::string(ns::owl));
    }

    /// Inserts a triple. Returns true when the triple was new. Malformed
    /// triples (literal subject, non-IRI predicate) are rejected.
    bool insert(Triple t) {
        if (t.subject.is_literal()) {
            throw std::invalid_argument("literal subject in triple: " + t.ntriples());
        }
        if (!t.predicate.is_iri()) {
            throw std::invalid_argument("non-IRI predicate in triple: " + t.ntriples());
        }
        auto [it, fresh] = triples_.insert(std::move(t));
        if (fresh) {
            by_subject_[it->subject].insert(*it);
            by_predicate_[it->predicate].insert(*it);
            by_object_[it->object].insert(*it);
        }
        return fresh;
    }

    bool insert(Node s, Node p, Node o) {
        return insert(Triple{std::move(s), std::move(p), std::move(o)});
    }

    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    bool contains(const Triple& t) const { return triples_.count(t) > 0; }
    bool contains(const Node& s, const Node& p, const Node& o) const {
        return contains(Triple{s, p, o});
    }

    /// All triples in canonical (serialized-lexicographic) order.
    const std::set<Triple>& triples() const { return triples_; }

    /// All triples matching the bound positions, in canonical order.
    std::vector<Triple> match(const TriplePattern& p) const {
        const std::set<Triple>* pool = &triples_;
        if (p.subject) {
            pool = index_slice(by_subject_, *p.subject);
        } else if (p.object) {
            pool = index_slice(by_object_, *p.object);
        } else if (p.predicate) {
            pool = index_slice(by_predicate_, *p.predicate);
        }
        std::vector<Triple> out;
        if (!pool) {
            return out;
        }
        for (const Triple& t : *pool) {
            if (p.subject && t.subject != *p.subject) continue;
            if (p.predicate && t.predicate != *p.predicate) continue;
            if (p.object && t.object != *p.object) continue;
            out.push_back(t);
        }
        return out;
    }

    std::vector<Triple> match(std::optional<Node> s, std::optional<Node> p,
                              std::optional<Node> o) const {
        return match(TriplePattern{std::move(s), std::move(p), std::move(o)});
    }

    /// Objects of (subject, predicate, ?) in canonical order.
    std::vector<Node> objects_of(const Node& subject, const Node& predicate) const {
        std::vector<Node> out;
        for (const Triple& t : match(subject, predicate, std::nullopt)) {
            out.push_back(t.object);
        }
        return out;
    }

    /// Subjects of (?, predicate, object) in canonical order.
    std::vector<Node> subjects_of(const Node& predicate, const Node& object) const {
        std::vector<Node> out;
        for (const Triple& t : match(std::nullopt, predicate, object)) {
            out.push_back(t.subject);
        }
        return out;
    }

    /// Every node reachable from `start` via one or more `predicate` edges.
    /// `start` itself is included only when it lies on a cycle through itself.
    std::set<Node> reachable(const Node& start, const Node& predicate) const {
        std::set<Node> seen;
        std::vector<Node> frontier{start};
        while (!frontier.empty()) {
            Node current = std::move(frontier.back());
            frontier.pop_back();
            for (const Triple& t : match(current, predicate, std::nullopt)) {
                if (seen.insert(t.object).second) {
                    frontier.push_back(t.object);
                }
            }
        }
        return seen;
    }

    void bind_prefix(std::string prefix, std::string iri) {
        prefixes_[std::move(prefix)] = std::move(iri);
    }

    /// Prefix -> namespace IRI map, ordered by prefix.
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }

    /// Triple-set equality; the prefix map is presentation metadata and does
    /// not take part.
    friend bool operator==(const Graph& a, const Graph& b) { return a.triples_ == b.triples_; }

private:
    static const std::set<Triple>* index_slice(const std::map<Node, std::set<Triple>>& index,
                                               const Node& key) {
        auto it = index.find(key);
        return it == index.end() ? nullptr : &it->second;
    }

    std::set<Triple> triples_;
    std::map<Node, std::set<Triple>> by_subject_;
    std::map<Node, std::set<Triple>> by_predicate_;
    std::map<Node, std::set<Triple>> by_object_;
    std::map<std::string, std::string> prefixes_;
};

}  // namespace animl::rdf

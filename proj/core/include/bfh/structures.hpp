#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bfh/algebra.hpp"
#include "bfh/f2.hpp"

namespace bfh {

struct Generator {
    std::string id;
    int idem = 0;
    friend bool operator==(const Generator&, const Generator&) = default;
};

using Word = std::vector<Basis>;

class TypeD {
public:
    struct Arrow {
        int source;
        Basis label;
        int target;
        friend bool operator==(const Arrow&, const Arrow&) = default;
        friend auto operator<=>(const Arrow&, const Arrow&) = default;
    };

    std::string name;

    int add_generator(const std::string& id, int idem);
    void add_arrow(int source, Basis label, int target) { arrows_.push_back({source, label, target}); }
    void add_arrow(const std::string& s, Basis label, const std::string& t) {
        add_arrow(index_of(s), label, index_of(t));
    }

    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t size() const { return gens_.size(); }
    int idem(int g) const { return gens_.at(static_cast<std::size_t>(g)).idem; }
    const std::string& id(int g) const { return gens_.at(static_cast<std::size_t>(g)).id; }
    int index_of(const std::string& id) const;
    std::optional<int> find(const std::string& id) const;

    // Arrows with F2 multiplicity reduced and sorted.
    TypeD normalized() const;
    // Outgoing arrows per generator, after normalization.
    std::vector<std::vector<std::pair<Basis, int>>> adjacency() const;

    friend bool operator==(const TypeD& a, const TypeD& b) {
        return a.name == b.name && a.gens_ == b.gens_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<Generator> gens_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> index_;
};

// A type-A module given by a directed graph whose edges carry strings of
// algebra elements.
class GraphTypeA {
public:
    struct Edge {
        int source;
        Word label;
        int target;
        friend bool operator==(const Edge&, const Edge&) = default;
    };

    std::string name;

    int add_generator(const std::string& id, int idem);
    void add_edge(int source, Word label, int target);
    const std::vector<Generator>& generators() const { return gens_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t size() const { return gens_.size(); }
    int index_of(const std::string& id) const;
    bool has_cycle() const;

    friend bool operator==(const GraphTypeA& a, const GraphTypeA& b) {
        return a.name == b.name && a.gens_ == b.gens_ && a.edges_ == b.edges_;
    }

private:
    std::vector<Generator> gens_;
    std::vector<Edge> edges_;
    std::map<std::string, int> index_;
};

// Right A-infinity module with m1 = 0. Operations are stored in a finite
// table, or, for modules whose graph has a cycle, evaluated from the graph
// one input word at a time.
class TypeA {
public:
    std::string name;

    TypeA() = default;
    static TypeA lazy(GraphTypeA g);

    int add_generator(const std::string& id, int idem);
    void add_op(int source, const Word& inputs, int target);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    int idem(int g) const { return gens_.at(static_cast<std::size_t>(g)).idem; }
    const std::string& id(int g) const { return gens_.at(static_cast<std::size_t>(g)).id; }
    int index_of(const std::string& id) const;
    std::optional<int> find(const std::string& id) const;

    // m(x, a_1, ..., a_n). Idempotent single inputs act as units.
    F2Vector m(int x, const Word& inputs) const;
    F2Vector m(const F2Vector& xs, const Word& inputs) const;
    F2Vector m2(int x, Basis a) const { return m(x, Word{a}); }

    // Could some operation m(x, w ++ more) be nonzero?
    bool could_extend(int x, const Word& w) const;

    bool is_lazy() const { return graph_.has_value(); }
    const std::optional<GraphTypeA>& graph() const { return graph_; }
    // Longest input of the finite table; nullopt for lazy modules.
    std::optional<std::size_t> max_op_length() const;
    const std::map<std::pair<int, Word>, F2Vector>& ops() const { return ops_; }

    friend bool operator==(const TypeA& a, const TypeA& b) {
        return a.name == b.name && a.gens_ == b.gens_ && a.ops_ == b.ops_ && a.graph_ == b.graph_;
    }

private:
    std::vector<Generator> gens_;
    std::map<std::string, int> index_;
    std::map<std::pair<int, Word>, F2Vector> ops_;
    std::optional<GraphTypeA> graph_;
    std::size_t max_len_ = 0;
};

class DDBimodule {
public:
    struct Gen {
        std::string id;
        int left = 0;
        int right = 0;
        friend bool operator==(const Gen&, const Gen&) = default;
    };
    struct Arrow {
        int source;
        Basis left;
        Basis right;
        int target;
        friend bool operator==(const Arrow&, const Arrow&) = default;
    };

    std::string name;

    int add_generator(const std::string& id, int left, int right);
    void add_arrow(int source, Basis left, Basis right, int target) {
        arrows_.push_back({source, left, right, target});
    }
    void add_arrow(const std::string& s, Basis left, Basis right, const std::string& t) {
        add_arrow(index_of(s), left, right, index_of(t));
    }
    void remove_arrow(std::size_t k) { arrows_.erase(arrows_.begin() + static_cast<std::ptrdiff_t>(k)); }

    const std::vector<Gen>& generators() const { return gens_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    std::size_t size() const { return gens_.size(); }
    int index_of(const std::string& id) const;

    friend bool operator==(const DDBimodule& a, const DDBimodule& b) {
        return a.name == b.name && a.gens_ == b.gens_ && a.arrows_ == b.arrows_;
    }

private:
    std::vector<Gen> gens_;
    std::vector<Arrow> arrows_;
    std::map<std::string, int> index_;
};

// Validation verdicts carry a list of human-readable failures.
struct Verdict {
    bool ok = true;
    std::vector<std::string> failures;
    explicit operator bool() const { return ok; }
    void fail(std::string why) {
        ok = false;
        failures.push_back(std::move(why));
    }
};

Verdict validate_typeD(const TypeD& d);
// Horizon defaults to max op length + 1 for tables; lazy modules need it.
Verdict validate_typeA(const TypeA& m, std::optional<std::size_t> horizon = std::nullopt);
Verdict validate_DD(const DDBimodule& p);

TypeA expand_graph(const GraphTypeA& g);
// Graph of the length-1 operations of a module.
GraphTypeA graph_of_length_one(const TypeA& m);

// Cancel idempotent-labelled arrows in lexicographic order of generator ids.
// Arrows touching a protected generator are left alone.
TypeD reduce_typeD(const TypeD& d, const std::set<std::string>& protect = {});
bool has_idempotent_arrow(const TypeD& d);

// Same graph, labels read as type-A strings with 1 and 3 swapped.
GraphTypeA dual(const TypeD& d);

}  // namespace bfh

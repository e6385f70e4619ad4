#include "bfh/structures.hpp"

#include <algorithm>
#include <functional>

#include "bfh/errors.hpp"

namespace bfh {

namespace {

Basis letter(int k) { return chord(k, k); }

std::string arrow_str(const std::string& s, Basis a, const std::string& t) {
    return s + " -" + std::string(name(a)) + "-> " + t;
}

void check_idem(int idem, const std::string& id) {
    if (idem != 0 && idem != 1) throw StructureError("generator " + id + " has idempotent " + std::to_string(idem));
}

}  // namespace

// ---- TypeD ---------------------------------------------------------------

int TypeD::add_generator(const std::string& id, int idem) {
    check_idem(idem, id);
    if (index_.count(id)) throw StructureError("duplicate generator " + id);
    index_[id] = static_cast<int>(gens_.size());
    gens_.push_back({id, idem});
    return static_cast<int>(gens_.size()) - 1;
}

std::optional<int> TypeD::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int TypeD::index_of(const std::string& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownGenerator("no generator named " + id);
}

TypeD TypeD::normalized() const {
    std::map<Arrow, int> count;
    for (const auto& a : arrows_) count[a] ^= 1;
    TypeD out;
    out.name = name;
    out.gens_ = gens_;
    out.index_ = index_;
    for (const auto& [a, c] : count)
        if (c) out.arrows_.push_back(a);
    return out;
}

std::vector<std::vector<std::pair<Basis, int>>> TypeD::adjacency() const {
    std::vector<std::vector<std::pair<Basis, int>>> out(gens_.size());
    for (const TypeD nd = normalized(); const auto& a : nd.arrows_) out[static_cast<std::size_t>(a.source)].push_back({a.label, a.target});
    return out;
}

// ---- GraphTypeA ----------------------------------------------------------

int GraphTypeA::add_generator(const std::string& id, int idem) {
    check_idem(idem, id);
    if (index_.count(id)) throw StructureError("duplicate generator " + id);
    index_[id] = static_cast<int>(gens_.size());
    gens_.push_back({id, idem});
    return static_cast<int>(gens_.size()) - 1;
}

int GraphTypeA::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownGenerator("no generator named " + id);
    return it->second;
}

void GraphTypeA::add_edge(int source, Word label, int target) {
    if (label.empty()) throw StructureError("graph edge with empty label");
    for (Basis b : label)
        if (is_idempotent(b)) throw StructureError("graph edge labels must be chords");
    edges_.push_back({source, std::move(label), target});
}

bool GraphTypeA::has_cycle() const {
    std::vector<std::vector<int>> out(gens_.size());
    for (const auto& e : edges_) out[static_cast<std::size_t>(e.source)].push_back(e.target);
    std::vector<int> colour(gens_.size(), 0);
    std::function<bool(int)> dfs = [&](int u) {
        colour[static_cast<std::size_t>(u)] = 1;
        for (int v : out[static_cast<std::size_t>(u)]) {
            if (colour[static_cast<std::size_t>(v)] == 1) return true;
            if (colour[static_cast<std::size_t>(v)] == 0 && dfs(v)) return true;
        }
        colour[static_cast<std::size_t>(u)] = 2;
        return false;
    };
    for (std::size_t u = 0; u < gens_.size(); ++u)
        if (colour[u] == 0 && dfs(static_cast<int>(u))) return true;
    return false;
}

// ---- TypeA ---------------------------------------------------------------

TypeA TypeA::lazy(GraphTypeA g) {
    TypeA m;
    m.name = g.name;
    for (const auto& gen : g.generators()) m.add_generator(gen.id, gen.idem);
    m.graph_ = std::move(g);
    return m;
}

int TypeA::add_generator(const std::string& id, int idem) {
    check_idem(idem, id);
    if (index_.count(id)) throw StructureError("duplicate generator " + id);
    index_[id] = static_cast<int>(gens_.size());
    gens_.push_back({id, idem});
    return static_cast<int>(gens_.size()) - 1;
}

void TypeA::add_op(int source, const Word& inputs, int target) {
    if (graph_) throw StructureError("cannot add table operations to a graph-backed module");
    if (inputs.empty()) throw StructureError("operation with no inputs (m1 is zero)");
    auto& v = ops_[{source, inputs}];
    v.toggle(target);
    if (v.empty()) ops_.erase({source, inputs});
    max_len_ = 0;
    for (const auto& [k, _] : ops_) max_len_ = std::max(max_len_, k.second.size());
}

std::optional<int> TypeA::find(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int TypeA::index_of(const std::string& id) const {
    if (auto i = find(id)) return *i;
    throw UnknownGenerator("no generator named " + id);
}

std::optional<std::size_t> TypeA::max_op_length() const {
    if (graph_) return std::nullopt;
    return max_len_;
}

namespace {

// Walk the graph from x reading the given letters. States are (edge,
// offset) pairs; an offset equal to the label length means "standing at the
// edge target". Paths are counted mod 2, so states with even multiplicity
// drop out.
struct Walker {
    const GraphTypeA& g;
    std::vector<std::vector<int>> edge_letters;
    std::vector<std::vector<int>> out_edges;

    explicit Walker(const GraphTypeA& graph) : g(graph), out_edges(graph.size()) {
        for (std::size_t e = 0; e < g.edges().size(); ++e) {
            edge_letters.push_back(letters(g.edges()[e].label));
            out_edges[static_cast<std::size_t>(g.edges()[e].source)].push_back(static_cast<int>(e));
        }
    }

    // State key: node v as (-1 - v), otherwise e * 64 + offset.
    std::map<long, int> run(int x, const std::vector<int>& word) const {
        std::map<long, int> cur{{-1 - static_cast<long>(x), 1}};
        for (int l : word) {
            std::map<long, int> next;
            auto land = [&](int e, std::size_t k) {
                const auto& el = edge_letters[static_cast<std::size_t>(e)];
                long key = k == el.size() ? -1 - static_cast<long>(g.edges()[static_cast<std::size_t>(e)].target)
                                          : static_cast<long>(e) * 64 + static_cast<long>(k);
                next[key] ^= 1;
            };
            for (const auto& [key, par] : cur) {
                if (!par) continue;
                if (key < 0) {
                    int v = static_cast<int>(-1 - key);
                    for (int e : out_edges[static_cast<std::size_t>(v)])
                        if (edge_letters[static_cast<std::size_t>(e)][0] == l) land(e, 1);
                } else {
                    int e = static_cast<int>(key / 64);
                    std::size_t k = static_cast<std::size_t>(key % 64);
                    if (edge_letters[static_cast<std::size_t>(e)][k] == l) land(e, k + 1);
                }
            }
            std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
            cur = std::move(next);
            if (cur.empty()) break;
        }
        return cur;
    }
};

}  // namespace

F2Vector TypeA::m(int x, const Word& inputs) const {
    if (inputs.empty()) return {};
    if (inputs.size() == 1 && is_idempotent(inputs[0])) {
        if (idem(x) == idem_index(inputs[0])) return F2Vector{x};
        return {};
    }
    if (!graph_) {
        auto it = ops_.find({x, inputs});
        return it == ops_.end() ? F2Vector{} : it->second;
    }
    for (Basis b : inputs)
        if (is_idempotent(b)) return {};
    if (!is_grouped(inputs)) return {};
    Walker w(*graph_);
    F2Vector out;
    for (const auto& [key, par] : w.run(x, letters(inputs)))
        if (par && key < 0) out.toggle(static_cast<int>(-1 - key));
    return out;
}

F2Vector TypeA::m(const F2Vector& xs, const Word& inputs) const {
    F2Vector out;
    for (int x : xs) out += m(x, inputs);
    return out;
}

bool TypeA::could_extend(int x, const Word& w) const {
    if (!graph_) return w.size() < max_len_;
    if (!is_grouped(w)) return false;
    Walker walker(*graph_);
    return !walker.run(x, letters(w)).empty();
}

// ---- DDBimodule ----------------------------------------------------------

int DDBimodule::add_generator(const std::string& id, int left, int right) {
    check_idem(left, id);
    check_idem(right, id);
    if (index_.count(id)) throw StructureError("duplicate generator " + id);
    index_[id] = static_cast<int>(gens_.size());
    gens_.push_back({id, left, right});
    return static_cast<int>(gens_.size()) - 1;
}

int DDBimodule::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownGenerator("no generator named " + id);
    return it->second;
}

// ---- validation ----------------------------------------------------------

Verdict validate_typeD(const TypeD& d) {
    Verdict v;
    TypeD n = d.normalized();
    for (const auto& a : n.arrows()) {
        if (left_idem(a.label) != n.idem(a.source) || right_idem(a.label) != n.idem(a.target))
            v.fail("idempotent mismatch on " + arrow_str(n.id(a.source), a.label, n.id(a.target)));
    }
    auto adj = n.adjacency();
    for (std::size_t x = 0; x < n.size(); ++x) {
        std::map<std::pair<Basis, int>, int> acc;
        std::map<std::pair<Basis, int>, std::string> witness;
        for (auto [a, y] : adj[x])
            for (auto [b, z] : adj[static_cast<std::size_t>(y)])
                if (auto p = mul(a, b)) {
                    acc[{*p, z}] ^= 1;
                    witness[{*p, z}] = n.id(static_cast<int>(x)) + " -" + std::string(name(a)) + "-> " + n.id(y) +
                                       " -" + std::string(name(b)) + "-> " + n.id(z);
                }
        for (const auto& [key, c] : acc)
            if (c) v.fail("d^2 term " + std::string(name(key.first)) + "*" + n.id(key.second) + " via " + witness[key]);
    }
    return v;
}

namespace {

void composable_words(int start_idem, std::size_t max_len, const std::function<void(const Word&)>& visit) {
    Word w;
    std::function<void(int)> rec = [&](int cur) {
        if (!w.empty()) visit(w);
        if (w.size() == max_len) return;
        for (Basis b : kChords) {
            if (left_idem(b) != cur) continue;
            w.push_back(b);
            rec(right_idem(b));
            w.pop_back();
        }
    };
    rec(start_idem);
}

}  // namespace

Verdict validate_typeA(const TypeA& m, std::optional<std::size_t> horizon) {
    Verdict v;
    std::size_t h = 0;
    if (horizon) {
        h = *horizon;
    } else if (auto len = m.max_op_length()) {
        h = *len + 1;
    } else {
        throw PreconditionError("a horizon is required to validate a graph-backed module");
    }
    if (!m.is_lazy()) {
        for (const auto& [key, targets] : m.ops()) {
            const auto& [x, w] = key;
            bool ok = left_idem(w.front()) == m.idem(x);
            for (std::size_t i = 0; i + 1 < w.size(); ++i) ok = ok && right_idem(w[i]) == left_idem(w[i + 1]);
            for (int y : targets) ok = ok && m.idem(y) == right_idem(w.back());
            if (!ok) v.fail("idempotent mismatch on op from " + m.id(x) + " | " + word_str(w));
        }
    }
    for (std::size_t x = 0; x < m.size(); ++x) {
        composable_words(m.idem(static_cast<int>(x)), h, [&](const Word& w) {
            if (w.size() < 2) return;
            F2Vector acc;
            for (std::size_t i = 1; i < w.size(); ++i) {
                Word head(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                Word tail(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
                F2Vector first = m.m(static_cast<int>(x), head);
                if (!first.empty()) acc += m.m(first, tail);
            }
            for (std::size_t j = 0; j + 1 < w.size(); ++j) {
                auto p = mul(w[j], w[j + 1]);
                if (!p) continue;
                Word merged;
                for (std::size_t k = 0; k < w.size(); ++k) {
                    if (k == j) {
                        merged.push_back(*p);
                        ++k;
                    } else {
                        merged.push_back(w[k]);
                    }
                }
                acc += m.m(static_cast<int>(x), merged);
            }
            if (!acc.empty()) v.fail("A-infinity relation fails at " + m.id(static_cast<int>(x)) + " | " + word_str(w));
        });
    }
    return v;
}

Verdict validate_DD(const DDBimodule& p) {
    Verdict v;
    const auto& gens = p.generators();
    for (const auto& a : p.arrows()) {
        const auto& s = gens[static_cast<std::size_t>(a.source)];
        const auto& t = gens[static_cast<std::size_t>(a.target)];
        // The right-hand side is read in the opposite algebra.
        if (left_idem(a.left) != s.left || right_idem(a.left) != t.left || right_idem(a.right) != s.right ||
            left_idem(a.right) != t.right)
            v.fail("idempotent mismatch on " + s.id + " -> " + t.id);
    }
    std::vector<std::vector<std::size_t>> out(gens.size());
    for (std::size_t k = 0; k < p.arrows().size(); ++k) out[static_cast<std::size_t>(p.arrows()[k].source)].push_back(k);
    for (std::size_t g = 0; g < gens.size(); ++g) {
        std::map<std::tuple<Basis, int, Basis>, int> acc;
        for (std::size_t k1 : out[g]) {
            const auto& a1 = p.arrows()[k1];
            for (std::size_t k2 : out[static_cast<std::size_t>(a1.target)]) {
                const auto& a2 = p.arrows()[k2];
                auto l = mul(a1.left, a2.left);
                auto r = mul(a2.right, a1.right);
                if (l && r) acc[{*l, a2.target, *r}] ^= 1;
            }
        }
        for (const auto& [key, c] : acc)
            if (c)
                v.fail("d^2 term at " + gens[g].id + ": " + std::string(name(std::get<0>(key))) + " * " +
                       gens[static_cast<std::size_t>(std::get<1>(key))].id + " * " + std::string(name(std::get<2>(key))));
    }
    return v;
}

// ---- graph expansion -----------------------------------------------------

TypeA expand_graph(const GraphTypeA& g) {
    if (g.has_cycle())
        throw NonBoundedModule("graph " + g.name + " has a directed cycle; its operation table is infinite");
    TypeA m;
    m.name = g.name;
    for (const auto& gen : g.generators()) m.add_generator(gen.id, gen.idem);
    std::vector<std::vector<std::size_t>> out(g.size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) out[static_cast<std::size_t>(g.edges()[e].source)].push_back(e);
    std::vector<Word> path;
    std::function<void(int, int)> walk = [&](int start, int cur) {
        for (std::size_t e : out[static_cast<std::size_t>(cur)]) {
            const auto& edge = g.edges()[e];
            path.push_back(edge.label);
            m.add_op(start, regroup(path), edge.target);
            walk(start, edge.target);
            path.pop_back();
        }
    };
    for (std::size_t x = 0; x < g.size(); ++x) walk(static_cast<int>(x), static_cast<int>(x));
    return m;
}

GraphTypeA graph_of_length_one(const TypeA& m) {
    GraphTypeA g;
    g.name = m.name;
    for (const auto& gen : m.generators()) g.add_generator(gen.id, gen.idem);
    for (const auto& [key, targets] : m.ops()) {
        if (key.second.size() != 1) continue;
        for (int y : targets) g.add_edge(key.first, key.second, y);
    }
    return g;
}

// ---- reduction -----------------------------------------------------------

bool has_idempotent_arrow(const TypeD& d) {
    for (const TypeD nd = d.normalized(); const auto& a : nd.arrows())
        if (is_idempotent(a.label)) return true;
    return false;
}

TypeD reduce_typeD(const TypeD& d, const std::set<std::string>& protect) {
    if (auto v = validate_typeD(d); !v) throw StructureError("reduce_typeD: input invalid: " + v.failures.front());
    std::map<TypeD::Arrow, int> arr;
    for (const auto& a : d.arrows()) arr[a] ^= 1;
    std::vector<bool> alive(d.size(), true);
    auto is_protected = [&](int g) { return protect.count(d.id(g)) != 0; };
    for (;;) {
        std::optional<std::pair<int, int>> pick;
        for (const auto& [a, c] : arr) {
            if (!c || !is_idempotent(a.label) || a.source == a.target) continue;
            if (is_protected(a.source) || is_protected(a.target)) continue;
            auto key = std::make_pair(a.source, a.target);
            if (!pick || std::tie(d.id(key.first), d.id(key.second)) < std::tie(d.id(pick->first), d.id(pick->second)))
                pick = key;
        }
        if (!pick) break;
        auto [x, y] = *pick;
        std::vector<std::pair<int, Basis>> ins;
        std::vector<std::pair<Basis, int>> outs;
        for (const auto& [a, c] : arr) {
            if (!c) continue;
            bool cancelled = a.source == x && a.target == y && is_idempotent(a.label);
            if (cancelled) continue;
            if (a.target == y) ins.push_back({a.source, a.label});
            if (a.source == x) outs.push_back({a.label, a.target});
        }
        std::map<TypeD::Arrow, int> next;
        for (const auto& [a, c] : arr)
            if (c && a.source != x && a.source != y && a.target != x && a.target != y) next[a] ^= 1;
        for (auto [w, a] : ins)
            for (auto [b, z] : outs) {
                if (w == x || w == y || z == x || z == y) continue;
                if (auto p = mul(a, b)) next[{w, *p, z}] ^= 1;
            }
        arr = std::move(next);
        alive[static_cast<std::size_t>(x)] = alive[static_cast<std::size_t>(y)] = false;
    }
    TypeD out;
    out.name = d.name;
    std::vector<int> remap(d.size(), -1);
    for (std::size_t g = 0; g < d.size(); ++g)
        if (alive[g]) remap[g] = out.add_generator(d.id(static_cast<int>(g)), d.idem(static_cast<int>(g)));
    for (const auto& [a, c] : arr)
        if (c) out.add_arrow(remap[static_cast<std::size_t>(a.source)], a.label, remap[static_cast<std::size_t>(a.target)]);
    return out.normalized();
}

GraphTypeA dual(const TypeD& d) {
    GraphTypeA g;
    g.name = d.name;
    for (const auto& gen : d.generators()) g.add_generator(gen.id, gen.idem);
    static const int psi[4] = {0, 3, 2, 1};
    for (const TypeD nd = d.normalized(); const auto& a : nd.arrows()) {
        if (is_idempotent(a.label)) throw StructureError("dual: reduce the type-D structure first");
        Word w;
        for (int k = chord_lo(a.label); k <= chord_hi(a.label); ++k) w.push_back(letter(psi[k]));
        g.add_edge(a.source, std::move(w), a.target);
    }
    return g;
}

}  // namespace bfh

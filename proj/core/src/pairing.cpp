#include "bfh/pairing.hpp"

#include <functional>

#include "bfh/errors.hpp"

namespace bfh {

namespace {

constexpr std::size_t kMaxPath = 64;

void check_idempotent_cycles(const TypeD& d) {
    std::vector<std::vector<int>> out(d.size());
    for (const TypeD nd = d.normalized(); const auto& a : nd.arrows())
        if (is_idempotent(a.label)) out[static_cast<std::size_t>(a.source)].push_back(a.target);
    std::vector<int> colour(d.size(), 0);
    std::function<void(int)> dfs = [&](int u) {
        colour[static_cast<std::size_t>(u)] = 1;
        for (int v : out[static_cast<std::size_t>(u)]) {
            if (colour[static_cast<std::size_t>(v)] == 1)
                throw NonTerminating("type-D " + d.name + " has a cycle of idempotent arrows; reduce it first");
            if (colour[static_cast<std::size_t>(v)] == 0) dfs(v);
        }
        colour[static_cast<std::size_t>(u)] = 2;
    };
    for (std::size_t u = 0; u < d.size(); ++u)
        if (colour[u] == 0) dfs(static_cast<int>(u));
}

}  // namespace

std::string pair_name(const std::string& x, const std::string& p) { return x + "*" + p; }

ChainComplex box_AD(const TypeA& m, const TypeD& d) {
    check_idempotent_cycles(d);
    ChainComplex c;
    std::map<std::pair<int, int>, int> idx;
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t p = 0; p < d.size(); ++p)
            if (m.idem(static_cast<int>(x)) == d.idem(static_cast<int>(p)))
                idx[{static_cast<int>(x), static_cast<int>(p)}] =
                    c.add_generator(pair_name(m.id(static_cast<int>(x)), d.id(static_cast<int>(p))));
    auto adj = d.adjacency();
    for (const auto& [xp, g] : idx) {
        auto [x, p] = xp;
        Word w;
        std::function<void(int)> walk = [&](int cur) {
            if (w.size() >= kMaxPath)
                throw NonTerminating("box_AD: path length exceeds " + std::to_string(kMaxPath) +
                                     " (parallel curves or an unbounded pair)");
            for (auto [a, t] : adj[static_cast<std::size_t>(cur)]) {
                if (is_idempotent(a)) {
                    // Strict unitality: only m2(x, iota) = x survives.
                    if (w.empty() && m.idem(x) == idem_index(a)) c.add_to_differential(g, idx.at({x, t}));
                    continue;
                }
                if (!w.empty() && mul(w.back(), a)) continue;
                w.push_back(a);
                for (int y : m.m(x, w)) c.add_to_differential(g, idx.at({y, t}));
                if (m.could_extend(x, w)) walk(t);
                w.pop_back();
            }
        };
        walk(p);
    }
    return c;
}

TypeD box_A_DD(const TypeA& m, const DDBimodule& p) {
    TypeD out;
    out.name = m.name + "*" + p.name;
    std::map<std::pair<int, int>, int> idx;
    const auto& gens = p.generators();
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t g = 0; g < gens.size(); ++g)
            if (m.idem(static_cast<int>(x)) == gens[g].left)
                idx[{static_cast<int>(x), static_cast<int>(g)}] =
                    out.add_generator(pair_name(m.id(static_cast<int>(x)), gens[g].id), 1 - gens[g].right);
    std::vector<std::vector<std::size_t>> adj(gens.size());
    for (std::size_t k = 0; k < p.arrows().size(); ++k) adj[static_cast<std::size_t>(p.arrows()[k].source)].push_back(k);

    std::map<TypeD::Arrow, int> acc;
    for (const auto& [xg, src] : idx) {
        auto [x, g] = xg;
        Word consumed;
        std::optional<Basis> emitted;
        std::function<void(int, std::size_t)> walk = [&](int cur, std::size_t depth) {
            if (depth >= kMaxPath) throw NonTerminating("box_A_DD: DD path length exceeds limit");
            for (std::size_t k : adj[static_cast<std::size_t>(cur)]) {
                const auto& a = p.arrows()[k];
                std::optional<Basis> em = emitted ? mul(*emitted, phi(a.right)) : std::optional<Basis>(phi(a.right));
                if (!em) continue;
                bool unit = is_idempotent(a.left);
                if (unit && depth > 0) continue;
                if (!unit && !consumed.empty() && mul(consumed.back(), a.left)) continue;
                auto saved = emitted;
                emitted = em;
                if (unit) {
                    if (m.idem(x) == idem_index(a.left)) acc[{src, *em, idx.at({x, a.target})}] ^= 1;
                } else {
                    consumed.push_back(a.left);
                    for (int y : m.m(x, consumed)) acc[{src, *em, idx.at({y, a.target})}] ^= 1;
                    if (m.could_extend(x, consumed)) walk(a.target, depth + 1);
                    consumed.pop_back();
                }
                emitted = saved;
            }
        };
        walk(g, 0);
    }
    for (const auto& [a, c] : acc)
        if (c) out.add_arrow(a.source, a.label, a.target);
    return out.normalized();
}

ChainComplex truncate(const TypeA& m, int idem) {
    ChainComplex c;
    for (std::size_t x = 0; x < m.size(); ++x)
        if (m.idem(static_cast<int>(x)) == idem) c.add_generator(m.id(static_cast<int>(x)));
    return c;
}

}  // namespace bfh

#include "bfh/models.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "bfh/errors.hpp"

namespace bfh {

// ---- twisting slice bimodule ----------------------------------------------

namespace {

struct AzGen {
    const char* id;
    int left;
    int right;
};

// Consumed (left) and emitted-side (right) idempotents of each dual
// generator. They are forced by the displayed differential.
constexpr AzGen kAzGens[] = {{"i0", 1, 1}, {"i1", 0, 0},  {"r1", 0, 1},  {"r2", 1, 0},
                             {"r3", 0, 1}, {"r12", 1, 1}, {"r23", 0, 0}, {"r123", 0, 1}};

}  // namespace

DDBimodule azdd() {
    DDBimodule p;
    p.name = "az";
    for (const auto& g : kAzGens) p.add_generator(g.id, g.left, g.right);
    auto silent_left = [&](const std::string& g) { return idempotent(p.generators()[static_cast<std::size_t>(p.index_of(g))].left); };
    auto silent_right = [&](const std::string& g) { return idempotent(p.generators()[static_cast<std::size_t>(p.index_of(g))].right); };
    // a (x) g^v  puts a on the left; g^v (x) a puts a on the right.
    auto lhs = [&](const std::string& s, Basis a, const std::string& t) { p.add_arrow(s, a, silent_right(s), t); };
    auto rhs = [&](const std::string& s, Basis a, const std::string& t) { p.add_arrow(s, silent_left(s), a, t); };
    lhs("r123", Basis::r3, "r12");
    rhs("r123", Basis::r1, "r23");
    lhs("r23", Basis::r3, "r2");
    rhs("r23", Basis::r2, "r3");
    lhs("r12", Basis::r2, "r1");
    rhs("r12", Basis::r1, "r2");
    lhs("r3", Basis::r3, "i0");
    rhs("r3", Basis::r3, "i1");
    lhs("r1", Basis::r1, "i0");
    rhs("r1", Basis::r1, "i1");
    lhs("r2", Basis::r2, "i1");
    rhs("r2", Basis::r2, "i0");
    return p;
}

TypeD cap(int idem) {
    TypeD d;
    d.name = "cap:i" + std::to_string(idem);
    d.add_generator("m", idem);
    return d;
}

// ---- slope lines ----------------------------------------------------------

namespace {

enum class Side { B, R, T, L };

struct LineArcs {
    std::vector<char> events;  // 'v' crossing a vertical edge, 'h' a horizontal one
    struct Arc {
        int from;
        Side in;
        int to;
        Side out;
    };
    std::vector<Arc> arcs;
};

// Walk the line once around the torus from a generic starting point.
LineArcs line_arcs(int q, int p) {
    if (q == 0 && p == 0) throw InvalidInput("slope vector (0,0)");
    if (std::gcd(std::abs(q), std::abs(p)) != 1) throw InvalidInput("slope vector must be primitive");
    const double x0 = 0.1234567, y0 = 0.3456789;
    std::vector<std::pair<double, char>> ev;
    if (q != 0)
        for (int k = -std::abs(q) - 2; k <= std::abs(q) + 2; ++k) {
            double t = (k - x0) / q;
            if (t >= 0 && t < 1) ev.push_back({t, 'v'});
        }
    if (p != 0)
        for (int k = -std::abs(p) - 2; k <= std::abs(p) + 2; ++k) {
            double t = (k - y0) / p;
            if (t >= 0 && t < 1) ev.push_back({t, 'h'});
        }
    std::sort(ev.begin(), ev.end());
    LineArcs out;
    for (auto& e : ev) out.events.push_back(e.second);
    int n = static_cast<int>(ev.size());
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        Side in = out.events[static_cast<std::size_t>(i)] == 'v' ? (q > 0 ? Side::L : Side::R) : (p > 0 ? Side::B : Side::T);
        Side exit = out.events[static_cast<std::size_t>(j)] == 'v' ? (q > 0 ? Side::R : Side::L) : (p > 0 ? Side::T : Side::B);
        out.arcs.push_back({i, in, j, exit});
    }
    return out;
}

int d_order(Side s) {
    switch (s) {
        case Side::B: return 0;
        case Side::R: return 1;
        case Side::T: return 2;
        case Side::L: return 3;
    }
    return 0;
}

int a_order(Side s) {
    switch (s) {
        case Side::T: return 0;
        case Side::L: return 1;
        case Side::B: return 2;
        case Side::R: return 3;
    }
    return 0;
}

std::string line_name(const char* kind, int q, int p) {
    return std::string(kind) + ":q=" + std::to_string(q) + ":p=" + std::to_string(p);
}

}  // namespace

TypeD typeD_line(int q, int p) {
    auto la = line_arcs(q, p);
    TypeD d;
    d.name = line_name("dline", q, p);
    for (std::size_t i = 0; i < la.events.size(); ++i)
        d.add_generator("e" + std::to_string(i), la.events[i] == 'h' ? 0 : 1);
    for (const auto& arc : la.arcs) {
        int a = d_order(arc.in), b = d_order(arc.out);
        if (a < b)
            d.add_arrow(arc.from, chord(a + 1, b), arc.to);
        else
            d.add_arrow(arc.to, chord(b + 1, a), arc.from);
    }
    return d.normalized();
}

GraphTypeA typeA_line_graph(int q, int p) {
    auto la = line_arcs(q, p);
    GraphTypeA g;
    g.name = line_name("aline", q, p);
    for (std::size_t i = 0; i < la.events.size(); ++i)
        g.add_generator("e" + std::to_string(i), la.events[i] == 'v' ? 0 : 1);
    for (const auto& arc : la.arcs) {
        int a = a_order(arc.in), b = a_order(arc.out);
        Word w;
        if (a < b) {
            for (int k = b; k > a; --k) w.push_back(chord(k, k));
            g.add_edge(arc.to, w, arc.from);
        } else {
            for (int k = a; k > b; --k) w.push_back(chord(k, k));
            g.add_edge(arc.from, w, arc.to);
        }
    }
    return g;
}

TypeA module_from_graph(const GraphTypeA& g) {
    if (g.has_cycle()) return TypeA::lazy(g);
    return expand_graph(g);
}

TypeA typeA_line(int q, int p) { return module_from_graph(typeA_line_graph(q, p)); }

std::string line_word(int q, int p) {
    std::string w;
    for (char e : line_arcs(q, p).events) w += e == 'v' ? (q > 0 ? 'R' : 'L') : (p > 0 ? 'U' : 'D');
    return w;
}

TypeD shift_basepoint(const TypeD& d, int k) {
    k = ((k % 4) + 4) % 4;
    TypeD out;
    out.name = d.name + (k ? ":shift=" + std::to_string(k) : "");
    for (const auto& g : d.generators()) out.add_generator(g.id, k % 2 ? 1 - g.idem : g.idem);
    for (const TypeD nd = d.normalized(); const auto& a : nd.arrows()) {
        if (is_idempotent(a.label)) throw StructureError("shift_basepoint: reduce the structure first");
        int i = (chord_lo(a.label) - 1 - k + 4) % 4;
        int j = (chord_hi(a.label) - k + 4) % 4;
        if (i < j)
            out.add_arrow(a.source, chord(i + 1, j), a.target);
        else
            out.add_arrow(a.target, chord(j + 1, i), a.source);
    }
    return out.normalized();
}

// ---- solid tori -------------------------------------------------------------

Param parse_param(const std::string& s) {
    if (s == "a") return Param::a;
    if (s == "b") return Param::b;
    if (s == "c") return Param::c;
    if (s == "d") return Param::d;
    throw ParseError("unknown parametrization '" + s + "' (expected a, b, c or d)");
}

char param_letter(Param p) { return "abcd"[static_cast<int>(p)]; }

int param_family(Param p) { return p == Param::a || p == Param::b ? 1 : 2; }

SolidTorusModel solid_torus(int n, Param param) {
    if (n == 0) throw InvalidFraming("solid torus framing must be nonzero");
    SolidTorusModel s;
    s.n = n;
    s.param = param;
    GraphTypeA line = param_family(param) == 1 ? typeA_line_graph(1, -n) : typeA_line_graph(-n, 1);
    int L = static_cast<int>(line.size());
    int yi = s.y_idem();
    int pos = -1;
    for (int i = 0; i < L; ++i)
        if (line.generators()[static_cast<std::size_t>(i)].idem == yi) {
            if (pos >= 0) throw StructureError("solid torus line has two y candidates");
            pos = i;
        }
    std::vector<std::string> ids(static_cast<std::size_t>(L));
    ids[static_cast<std::size_t>(pos)] = "y";
    for (int j = 1; j < L; ++j) ids[static_cast<std::size_t>(((pos - j) % L + L) % L)] = "x" + std::to_string(j);

    GraphTypeA g;
    g.name = "solid:n=" + std::to_string(n) + ":param=" + std::string(1, param_letter(param));
    for (int i = 0; i < L; ++i) g.add_generator(ids[static_cast<std::size_t>(i)], line.generators()[static_cast<std::size_t>(i)].idem);
    for (const auto& e : line.edges()) g.add_edge(e.source, e.label, e.target);
    s.graph = g;
    s.module = module_from_graph(g);

    s.labels["y"] = "y";
    s.contact_tags["y"] = "xi0";
    s.heights["y"] = 0;
    int an = std::abs(n);
    for (int j = 1; j <= an; ++j) {
        std::string lab = "x" + std::to_string(j);
        s.labels[lab] = lab;
        s.heights[lab] = j;
        if (n < 0) s.contact_tags[lab] = "xi" + std::to_string(j);
    }
    if (n > 0) {
        s.contact_tags["x1"] = "xi-";
        if (n > 1) s.contact_tags["x" + std::to_string(n)] = "xi+";
    }
    return s;
}

// ---- knots ------------------------------------------------------------------

Staircase staircase_from_alexander(const std::vector<int>& coeffs) {
    if (coeffs.empty() || coeffs.front() == 0 || coeffs.back() == 0)
        throw NotLSpaceKnotForm("coefficient list must start and end with a nonzero entry");
    std::size_t n = coeffs.size();
    if (n % 2 == 0) throw NotLSpaceKnotForm("coefficient list must have odd length");
    for (std::size_t i = 0; i < n; ++i)
        if (coeffs[i] != coeffs[n - 1 - i]) throw NotLSpaceKnotForm("coefficient list is not symmetric");
    Staircase s;
    s.coeffs = coeffs;
    int g = static_cast<int>(n / 2);
    int expect = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs[i] == 0) continue;
        if (coeffs[i] != expect) throw NotLSpaceKnotForm("nonzero coefficients must be +1, -1, +1, ... from the top");
        expect = -expect;
        s.exponents.push_back(g - static_cast<int>(i));
    }
    for (std::size_t i = 0; i + 1 < s.exponents.size(); ++i) s.steps.push_back(s.exponents[i] - s.exponents[i + 1]);
    return s;
}

KnotModel cfd_from_staircase(const Staircase& s, int framing, bool mirror) {
    KnotModel km;
    TypeD& d = km.d;
    int ngen = static_cast<int>(s.exponents.size());
    int k = static_cast<int>(s.steps.size()) / 2;
    int g = s.genus();
    for (int i = 0; i < ngen; ++i) {
        std::string id = "x" + std::to_string(i);
        d.add_generator(id, 0);
        km.staircase_ids.push_back(id);
        km.heights[id] = mirror ? -s.exponents[static_cast<std::size_t>(i)] : s.exponents[static_cast<std::size_t>(i)];
    }
    struct StairArrow {
        int from, to, len;
    };
    std::vector<StairArrow> horizontal, vertical;
    int xi0, eta0;
    if (!mirror) {
        for (int i = 0; i < k; ++i) {
            horizontal.push_back({2 * i + 1, 2 * i, s.steps[static_cast<std::size_t>(2 * i)]});
            vertical.push_back({2 * i + 1, 2 * i + 2, s.steps[static_cast<std::size_t>(2 * i + 1)]});
        }
        xi0 = 0;
        eta0 = 2 * k;
        km.tau = g;
    } else {
        for (int i = 0; i < k; ++i) {
            vertical.push_back({2 * i, 2 * i + 1, s.steps[static_cast<std::size_t>(2 * i)]});
            horizontal.push_back({2 * i + 2, 2 * i + 1, s.steps[static_cast<std::size_t>(2 * i + 1)]});
        }
        xi0 = 2 * k;
        eta0 = 0;
        km.tau = -g;
    }
    auto fresh = [&](const std::string& id) { return d.add_generator(id, 1); };
    for (const auto& a : vertical) {
        std::vector<int> ks;
        for (int j = 1; j <= a.len; ++j)
            ks.push_back(fresh("k" + std::to_string(a.from) + "_" + std::to_string(a.to) + "_" + std::to_string(j)));
        d.add_arrow(a.from, Basis::r1, ks.front());
        for (int j = 1; j < a.len; ++j) d.add_arrow(ks[static_cast<std::size_t>(j)], Basis::r23, ks[static_cast<std::size_t>(j - 1)]);
        d.add_arrow(a.to, Basis::r123, ks.back());
    }
    for (const auto& a : horizontal) {
        std::vector<int> ls;
        for (int j = 1; j <= a.len; ++j)
            ls.push_back(fresh("l" + std::to_string(a.from) + "_" + std::to_string(a.to) + "_" + std::to_string(j)));
        d.add_arrow(a.from, Basis::r3, ls.front());
        for (int j = 1; j < a.len; ++j) d.add_arrow(ls[static_cast<std::size_t>(j - 1)], Basis::r23, ls[static_cast<std::size_t>(j)]);
        d.add_arrow(ls.back(), Basis::r2, a.to);
    }
    int m = std::abs(framing - 2 * km.tau);
    std::vector<int> gs;
    for (int j = 1; j <= m; ++j) gs.push_back(fresh("g" + std::to_string(j)));
    if (framing < 2 * km.tau) {
        d.add_arrow(xi0, Basis::r1, gs.front());
        for (int j = 1; j < m; ++j) d.add_arrow(gs[static_cast<std::size_t>(j)], Basis::r23, gs[static_cast<std::size_t>(j - 1)]);
        d.add_arrow(eta0, Basis::r3, gs.back());
    } else if (framing == 2 * km.tau) {
        d.add_arrow(xi0, Basis::r12, eta0);
    } else {
        d.add_arrow(xi0, Basis::r123, gs.front());
        for (int j = 1; j < m; ++j) d.add_arrow(gs[static_cast<std::size_t>(j - 1)], Basis::r23, gs[static_cast<std::size_t>(j)]);
        d.add_arrow(gs.back(), Basis::r2, eta0);
    }
    km.xi0 = d.id(xi0);
    km.eta0 = d.id(eta0);
    d = d.normalized();
    if (auto v = validate_typeD(d); !v) throw StructureError("cfd_from_staircase produced an invalid structure: " + v.failures.front());
    return km;
}

KnotSpec knot_spec(const std::string& key) {
    if (key == "unknot" || key == "u") return {"unknot", {1}, false};
    if (key == "rht") return {"rht", {1, -1, 1}, false};
    if (key == "lht") return {"lht", {1, -1, 1}, true};
    if (key == "t34") return {"t34", {1, -1, 0, 1, 0, -1, 1}, false};
    if (key == "t34m") return {"t34m", {1, -1, 0, 1, 0, -1, 1}, true};
    throw ParseError("unknown knot '" + key + "' (expected unknot, rht, lht, t34, t34m)");
}

KnotModel knot_model(const std::string& key, int framing, bool mirror_flag) {
    KnotSpec spec = knot_spec(key);
    bool mirror = spec.mirror != mirror_flag;
    KnotModel km = cfd_from_staircase(staircase_from_alexander(spec.alexander), framing, mirror);
    km.d.name = "knot:" + spec.key + ":f=" + std::to_string(framing) + (mirror_flag ? ":mirror" : "");
    return km;
}

const std::map<std::string, LegendrianData>& legendrian_table() {
    static const std::map<std::string, LegendrianData> table = {
        {"rht", {1, 1, 1}}, {"lht", {-6, -1, -1}}, {"t34", {5, 3, 1}}, {"t34m", {-12, -3, -1}}};
    return table;
}

std::string mirror_key(const std::string& key) {
    if (key == "rht") return "lht";
    if (key == "lht") return "rht";
    if (key == "t34") return "t34m";
    if (key == "t34m") return "t34";
    if (key == "unknot") return "unknot";
    throw ParseError("unknown knot '" + key + "'");
}

// ---- registry -----------------------------------------------------------------

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok, const std::string& whole) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (tok.empty() || *end != '\0') throw ParseError("bad integer '" + tok + "' in model name " + whole);
    return static_cast<int>(v);
}

std::string value_of(const std::string& tok, const std::string& key, const std::string& whole) {
    if (tok.rfind(key + "=", 0) != 0) throw ParseError("expected " + key + "=... in model name " + whole + ", got '" + tok + "'");
    return tok.substr(key.size() + 1);
}

}  // namespace

Structure model_by_name(const std::string& name) {
    auto t = split(name, ':');
    if (t.empty()) throw ParseError("empty model name");
    if (t[0] == "az" && t.size() == 1) return azdd();
    if (t[0] == "cap" && t.size() == 2) {
        if (t[1] == "i0") return cap(0);
        if (t[1] == "i1") return cap(1);
        throw ParseError("cap takes i0 or i1, got '" + t[1] + "'");
    }
    if (t[0] == "solid" && t.size() == 3) {
        int n = parse_int(value_of(t[1], "n", name), name);
        Param p = parse_param(value_of(t[2], "param", name));
        auto s = solid_torus(n, p);
        if (s.module.is_lazy()) return s.graph;
        return s.module;
    }
    if (t[0] == "knot" && (t.size() == 3 || t.size() == 4)) {
        int f = parse_int(value_of(t[2], "f", name), name);
        bool mirror = false;
        if (t.size() == 4) {
            if (t[3] != "mirror") throw ParseError("expected ':mirror' at the end of " + name);
            mirror = true;
        }
        return knot_model(t[1], f, mirror).d;
    }
    if ((t[0] == "dline" || t[0] == "aline") && t.size() == 3) {
        int q = parse_int(value_of(t[1], "q", name), name);
        int p = parse_int(value_of(t[2], "p", name), name);
        if (t[0] == "dline") return typeD_line(q, p);
        auto g = typeA_line_graph(q, p);
        if (g.has_cycle()) return g;
        return expand_graph(g);
    }
    throw ParseError("unknown model '" + name +
                     "' (expected az, cap:i0, solid:n=<int>:param=<a-d>, knot:<key>:f=<int>[:mirror], "
                     "dline:q=<int>:p=<int>, aline:q=<int>:p=<int>)");
}

std::vector<std::string> registry_names() {
    std::vector<std::string> out = {"az", "cap:i0", "cap:i1"};
    for (int n : {-3, -2, -1, 1, 2, 3})
        for (char p : {'a', 'c'}) out.push_back("solid:n=" + std::to_string(n) + ":param=" + std::string(1, p));
    for (const char* k : {"unknot", "rht", "lht", "t34", "t34m"})
        for (int f : {-2, -1, 0, 1, 2}) out.push_back("knot:" + std::string(k) + ":f=" + std::to_string(f));
    out.push_back("knot:t34:f=-2:mirror");
    out.push_back("knot:rht:f=-1:mirror");
    for (auto [q, p] : {std::pair{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, -3}}) {
        out.push_back("dline:q=" + std::to_string(q) + ":p=" + std::to_string(p));
        out.push_back("aline:q=" + std::to_string(q) + ":p=" + std::to_string(p));
    }
    return out;
}

TypeA as_typeA(const Structure& s) {
    if (auto m = std::get_if<TypeA>(&s)) return *m;
    if (auto g = std::get_if<GraphTypeA>(&s)) return module_from_graph(*g);
    if (auto d = std::get_if<TypeD>(&s)) {
        TypeD r = has_idempotent_arrow(*d) ? reduce_typeD(*d) : *d;
        return module_from_graph(dual(r));
    }
    throw InvalidInput("a DD bimodule has no type-A view");
}

TypeD as_typeD(const Structure& s) {
    if (auto d = std::get_if<TypeD>(&s)) return *d;
    throw InvalidInput("model is not a type-D structure");
}

}  // namespace bfh

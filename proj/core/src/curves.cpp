#include "bfh/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "bfh/errors.hpp"
#include "bfh/models.hpp"

namespace bfh {

namespace {

// Sides of a square: 0 bottom, 1 right, 2 top, 3 left. Leaving a square
// through side t is recorded by the letter below; the next square sees the
// same edge on the opposite side.
constexpr char kSideLetter[4] = {'D', 'R', 'U', 'L'};
int opposite(int side) { return (side + 2) % 4; }

int side_of(char letter) {
    switch (letter) {
        case 'D': return 0;
        case 'R': return 1;
        case 'U': return 2;
        case 'L': return 3;
    }
    throw ParseError(std::string("bad curve letter '") + letter + "' (expected U, D, L or R)");
}

std::size_t wrap(long i, std::size_t n) { return static_cast<std::size_t>(((i % static_cast<long>(n)) + static_cast<long>(n)) % static_cast<long>(n)); }

}  // namespace

char inverse_letter(char c) {
    switch (c) {
        case 'U': return 'D';
        case 'D': return 'U';
        case 'L': return 'R';
        case 'R': return 'L';
    }
    throw ParseError(std::string("bad curve letter '") + c + "'");
}

std::string inverse_word(const std::string& w) {
    std::string out(w.rbegin(), w.rend());
    for (char& c : out) c = inverse_letter(c);
    return out;
}

std::string canonical_word(const std::string& w) {
    std::string best = w;
    for (const std::string& s : {w, inverse_word(w)})
        for (std::size_t i = 0; i < s.size(); ++i) best = std::min(best, s.substr(i) + s.substr(0, i));
    return best;
}

bool is_normal_form(const std::string& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[(i + 1) % w.size()] == inverse_letter(w[i]) && w.size() > 1) return false;
    return true;
}

bool is_distinguished(const CurveComponent& c) {
    long net = std::count(c.word.begin(), c.word.end(), 'R') - std::count(c.word.begin(), c.word.end(), 'L');
    return net == 1 || net == -1;
}

std::map<std::string, std::pair<std::size_t, std::size_t>> Curve::marks() const {
    std::map<std::string, std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < components.size(); ++c)
        for (std::size_t i = 0; i < components[c].marks.size(); ++i)
            if (!components[c].marks[i].empty()) out[components[c].marks[i]] = {c, i};
    return out;
}

Curve parse_curve(const std::string& text) {
    Curve curve;
    std::stringstream all(text);
    std::string part;
    while (std::getline(all, part, ';')) {
        std::istringstream is(part);
        std::string tok;
        CurveComponent comp;
        while (is >> tok) {
            if (tok == "arc" && comp.word.empty() && comp.closed) {
                comp.closed = false;
                continue;
            }
            if (tok == "ql" || tok == "qr")
                throw ParseError("turn tokens are implicit in this format; write only the crossed edges U D L R");
            auto at = tok.find('@');
            std::string letters = tok.substr(0, at);
            if (letters.empty()) throw ParseError("mark '" + tok + "' must follow a letter");
            for (char c : letters) {
                side_of(c);
                comp.word += c;
                comp.marks.emplace_back();
            }
            if (at != std::string::npos) {
                std::string mark = tok.substr(at + 1);
                if (mark.empty()) throw ParseError("empty mark in '" + tok + "'");
                comp.marks.back() = mark;
            }
        }
        if (!comp.closed && comp.word.size() != 1) throw ParseError("an arc crosses exactly one edge");
        if (!comp.word.empty()) curve.components.push_back(std::move(comp));
    }
    for (const auto& c : curve.components)
        if (!is_normal_form(c.word)) throw ParseError("component '" + c.word + "' backtracks; curves must be in normal form");
    return curve;
}

std::string print_curve(const Curve& c) {
    std::string out;
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        if (k) out += " ; ";
        const auto& comp = c.components[k];
        if (!comp.closed) out += "arc ";
        for (std::size_t i = 0; i < comp.word.size(); ++i) {
            if (i) out += ' ';
            out += comp.word[i];
            if (!comp.marks[i].empty()) out += "@" + comp.marks[i];
        }
    }
    return out;
}

Curve curve_from_typeD(const TypeD& d) {
    if (has_idempotent_arrow(d)) throw PreconditionError("curve_from_typeD needs a reduced structure");
    TypeD nd = d.normalized();
    std::map<std::pair<int, int>, std::pair<int, int>> inc;
    auto attach = [&](std::pair<int, int> a, std::pair<int, int> b) {
        if (inc.count(a))
            throw LocalSystemRequired("generator " + nd.id(a.first) + " meets two arcs on one side; the train track branches");
        inc[a] = b;
    };
    for (const auto& a : nd.arrows()) {
        std::pair<int, int> src{a.source, chord_lo(a.label) - 1}, tgt{a.target, chord_hi(a.label)};
        attach(src, tgt);
        attach(tgt, src);
    }
    Curve curve;
    std::vector<bool> seen(nd.size(), false);
    for (int g = 0; g < static_cast<int>(nd.size()); ++g) {
        if (seen[static_cast<std::size_t>(g)]) continue;
        int s0 = nd.idem(g) == 0 ? 0 : 1;
        CurveComponent comp;
        if (!inc.count({g, s0}) && !inc.count({g, opposite(s0)})) {
            comp.word = nd.idem(g) == 0 ? "U" : "R";
            comp.marks = {nd.id(g)};
            comp.closed = false;
            seen[static_cast<std::size_t>(g)] = true;
            curve.components.push_back(std::move(comp));
            continue;
        }
        std::pair<int, int> cur{g, s0};
        for (;;) {
            auto it = inc.find(cur);
            if (it == inc.end())
                throw StructureError("generator " + nd.id(cur.first) + " has no arc on side " + std::to_string(cur.second) +
                                     "; every crossing needs one arc on each side");
            auto [h, t] = it->second;
            comp.word += kSideLetter[t];
            comp.marks.push_back(nd.id(h));
            seen[static_cast<std::size_t>(h)] = true;
            cur = {h, opposite(t)};
            if (h == g && opposite(t) == s0) break;
            if (comp.word.size() > 4 * nd.size() + 4) throw StructureError("curve trace does not close up");
        }
        curve.components.push_back(std::move(comp));
    }
    return curve;
}

TypeD typeD_from_curve(const Curve& c, const std::string& name) {
    TypeD d;
    d.name = name;
    std::vector<std::vector<int>> ids(c.components.size());
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const auto& comp = c.components[k];
        for (std::size_t i = 0; i < comp.word.size(); ++i) {
            std::string id = comp.marks.size() > i && !comp.marks[i].empty()
                                 ? comp.marks[i]
                                 : "c" + std::to_string(k) + "_" + std::to_string(i);
            char l = comp.word[i];
            ids[k].push_back(d.add_generator(id, l == 'U' || l == 'D' ? 0 : 1));
        }
    }
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const auto& w = c.components[k].word;
        if (!c.components[k].closed) continue;
        std::size_t n = w.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = (i + 1) % n;
            int a = opposite(side_of(w[i])), b = side_of(w[j]);
            if (a == b) throw StructureError("component '" + w + "' backtracks");
            if (a < b)
                d.add_arrow(ids[k][i], chord(a + 1, b), ids[k][j]);
            else
                d.add_arrow(ids[k][j], chord(b + 1, a), ids[k][i]);
        }
    }
    return d.normalized();
}

Curve reflect(const Curve& c) {
    Curve out = c;
    for (auto& comp : out.components)
        for (char& l : comp.word) {
            switch (l) {
                case 'R': l = 'U'; break;
                case 'U': l = 'R'; break;
                case 'L': l = 'D'; break;
                case 'D': l = 'L'; break;
            }
        }
    return out;
}

LiftedCurve lift(const CurveComponent& c) {
    long net = std::count(c.word.begin(), c.word.end(), 'R') - std::count(c.word.begin(), c.word.end(), 'L');
    LiftedCurve l;
    if (net == 1) {
        l.word = c.word;
        l.marks = c.marks;
    } else if (net == -1) {
        l.word = inverse_word(c.word);
        l.marks.assign(c.marks.rbegin(), c.marks.rend());
    } else {
        throw NotDistinguished("component '" + c.word + "' wraps " + std::to_string(net) + " times horizontally");
    }
    if (l.marks.size() != l.word.size()) l.marks.assign(l.word.size(), "");
    int h = 0;
    for (std::size_t i = 0; i < l.word.size(); ++i) {
        char x = l.word[i];
        if (x == 'R' || x == 'L') l.midline_hits.push_back({i, x, h});
        if (x == 'U') ++h;
        if (x == 'D') --h;
    }
    l.drift = h;
    return l;
}

std::pair<int, int> tau_epsilon(const LiftedCurve& l) {
    const auto& hits = l.midline_hits;
    std::vector<std::size_t> traverses;
    for (std::size_t k = 0; k < hits.size(); ++k)
        if (hits[k].direction == 'R' && hits[(k + 1) % hits.size()].direction == 'R') traverses.push_back(k);
    if (traverses.size() != 1)
        throw NotDistinguished("expected exactly one rightward traverse, found " + std::to_string(traverses.size()));
    std::size_t k = traverses.front();
    std::size_t i1 = hits[k].position, i2 = hits[(k + 1) % hits.size()].position;
    std::size_t n = l.word.size();
    int d = 0;
    for (std::size_t i = (i1 + 1) % n; i != i2; i = (i + 1) % n) {
        if (l.word[i] == 'U') ++d;
        if (l.word[i] == 'D') --d;
    }
    // The framing shears the traverse by the drift; undo it.
    int twice_tau = d - l.drift;
    if (twice_tau % 2 != 0) throw NotDistinguished("traverse height is not even");
    int tau = twice_tau / 2;
    if (hits.size() == 1) return {tau, 0};
    char next = l.word[(i2 + 1) % n];
    int eps = next == 'U' ? -1 : next == 'D' ? 1 : 0;
    return {tau, eps};
}

// ---- intersections ------------------------------------------------------------

namespace {

// Counterclockwise order of half-edges at a crossing point.
int ccw_pos(char c) {
    switch (c) {
        case 'R': return 0;
        case 'U': return 1;
        case 'L': return 2;
        case 'D': return 3;
    }
    return 0;
}

bool ccw_first(char start, char h1, char h2) {
    return (ccw_pos(h1) - ccw_pos(start) + 4) % 4 < (ccw_pos(h2) - ccw_pos(start) + 4) % 4;
}

bool alternate(char a1, char b1, char a2, char b2) {
    int lo = std::min(ccw_pos(a1), ccw_pos(b1)), hi = std::max(ccw_pos(a1), ccw_pos(b1));
    auto inside = [&](char c) { return lo < ccw_pos(c) && ccw_pos(c) < hi; };
    return inside(a2) != inside(b2);
}

// Count transverse crossings of two cyclic words after pulling tight: every
// maximal shared run is one potential crossing, counted when the curves
// enter and leave the run on opposite sides.
std::optional<long> intersect(const std::string& u, const std::string& v) {
    std::size_t m = u.size(), n = v.size();
    long total = 0;
    for (int s : {1, -1}) {
        std::string w = s == 1 ? v : inverse_word(v);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                char pu = u[wrap(static_cast<long>(i) - 1, m)], pw = w[wrap(static_cast<long>(j) - 1, n)];
                if (pu == pw) continue;
                char b1 = inverse_letter(pu), b2 = inverse_letter(pw);
                std::size_t k = 0, cap = 2 * (m + n);
                while (k <= cap && u[(i + k) % m] == w[(j + k) % n]) ++k;
                if (k > cap) return std::nullopt;
                if (k == 0) {
                    if (s == -1) continue;
                    char f1 = u[i], f2 = w[j];
                    if (b1 == b2 || b1 == f1 || b1 == f2 || b2 == f1 || b2 == f2 || f1 == f2) continue;
                    if (alternate(b1, f1, b2, f2)) ++total;
                } else {
                    char e = u[i], ep = inverse_letter(u[(i + k - 1) % m]);
                    char f1 = u[(i + k) % m], f2 = w[(j + k) % n];
                    if (b1 == e || b2 == e) continue;
                    if (ccw_first(e, b1, b2) == ccw_first(ep, f1, f2)) ++total;
                }
            }
    }
    return total;
}

}  // namespace

long min_intersections(const Curve& a, const Curve& b) {
    long total = 0;
    for (const auto& ca : a.components)
        for (const auto& cb : b.components) {
            if (!ca.closed || !cb.closed) throw PreconditionError("min_intersections needs closed components");
            if (!is_normal_form(ca.word) || !is_normal_form(cb.word))
                throw PreconditionError("min_intersections needs curves in normal form");
            // Short words can slip past the scan below, so catch identical
            // free homotopy classes first.
            const std::string key = canonical_word(ca.word);
            std::optional<long> r;
            if (key != canonical_word(cb.word) && key != canonical_word(inverse_word(cb.word)))
                r = intersect(ca.word, cb.word);
            if (!r) throw PreconditionError("components '" + ca.word + "' and '" + cb.word + "' are parallel");
            total += *r;
        }
    return total;
}

// ---- surgery verdicts -------------------------------------------------------------

std::string to_string(SurgeryVerdict v) {
    switch (v) {
        case SurgeryVerdict::vanishes: return "vanishes";
        case SurgeryVerdict::nonvanishes: return "nonvanishes";
        case SurgeryVerdict::undetermined: return "undetermined";
    }
    return "undetermined";
}

SurgeryVerdict surgery_verdict_curve(const Curve& c, const std::string& mark, int n) {
    if (n <= 0) throw InvalidInput("surgery parameter n must be positive");
    auto marks = c.marks();
    auto it = marks.find(mark);
    if (it == marks.end()) throw BadMark("mark '" + mark + "' is not on the curve");
    auto [ci, pos] = it->second;
    std::string w = c.components[ci].word;
    std::size_t N = w.size();
    if (w[pos] != 'U' && w[pos] != 'D') throw BadMark("mark '" + mark + "' is not on a horizontal edge");
    if (w[pos] == 'D') {
        w = inverse_word(w);
        pos = N - 1 - pos;
    }
    auto f = [&](long k) { return w[wrap(static_cast<long>(pos) + k, N)]; };

    // Above the mark.
    char up = f(1);
    if (up == 'R' || up == 'U') return SurgeryVerdict::vanishes;
    bool above_nv = false;
    char nxt = f(2);
    if (nxt == 'D' || nxt == 'L') {
        above_nv = true;
    } else if (nxt == 'U') {
        long k = 3;
        while (f(k) == 'U') ++k;
        if (f(k) == 'R') return SurgeryVerdict::vanishes;
    }
    // Below the mark: m vertical passes, then a turn.
    int m = 0;
    long k = -1;
    while (f(k) == 'U' && m <= static_cast<int>(N)) {
        ++m;
        --k;
    }
    char b = f(k);
    if (b == 'R') return SurgeryVerdict::vanishes;
    if (m >= n) return SurgeryVerdict::vanishes;
    if (above_nv) {
        if (m < n - 1) return SurgeryVerdict::nonvanishes;
        char nb = f(k - 1);
        if (nb == 'L' || nb == 'D') return SurgeryVerdict::nonvanishes;
    }
    // A simple closed component of slope -n.
    if (canonical_word(c.components[ci].word) == canonical_word(line_word(1, -n))) return SurgeryVerdict::nonvanishes;
    return SurgeryVerdict::undetermined;
}

SurgeryVerdict surgery_verdict_formula(int tb, int rot, int tau, int epsilon, int s) {
    if (s - tb <= 0) throw InvalidInput("need s = n + tb with n >= 1");
    if (epsilon < -1 || epsilon > 1) throw InvalidInput("epsilon must be -1, 0 or 1");
    int edge = 2 * tau - 1;
    if (tb - rot < edge) return SurgeryVerdict::vanishes;
    if (tb - rot > edge) return SurgeryVerdict::undetermined;
    if (epsilon == -1) return SurgeryVerdict::vanishes;
    return s >= 2 * tau ? SurgeryVerdict::nonvanishes : SurgeryVerdict::vanishes;
}

// ---- drawing ---------------------------------------------------------------------

namespace {

constexpr double kScale = 60.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

struct Canvas {
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    std::vector<std::vector<std::pair<double, double>>> paths;
    std::vector<std::pair<std::pair<double, double>, std::string>> labels;

    void cover(double x, double y) {
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    double sx(double x) const { return (x - xmin + 1) * kScale; }
    double sy(double y) const { return (ymax - y + 1) * kScale; }
};

std::string svg_open(const Canvas& c) {
    double w = (c.xmax - c.xmin + 2) * kScale, h = (c.ymax - c.ymin + 2) * kScale;
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " +
           num(w) + " " + num(h) + "\">\n";
}

std::string svg_paths(const Canvas& c) {
    std::string s;
    for (const auto& p : c.paths) {
        if (p.size() < 2) continue;
        s += "  <polyline fill=\"none\" stroke=\"#c0392b\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + num(c.sx(p[i].first)) + "," + num(c.sy(p[i].second));
        s += "\"/>\n";
    }
    for (const auto& [pt, text] : c.labels) {
        s += "  <circle cx=\"" + num(c.sx(pt.first)) + "\" cy=\"" + num(c.sy(pt.second)) + "\" r=\"3\" fill=\"#2c3e50\"/>\n";
        s += "  <text x=\"" + num(c.sx(pt.first) + 4) + "\" y=\"" + num(c.sy(pt.second) - 4) +
             "\" font-size=\"10\" font-family=\"monospace\">" + text + "</text>\n";
    }
    return s;
}

}  // namespace

std::string render_svg(const Curve& curve) {
    Canvas c;
    for (const auto& comp : curve.components) {
        // Walk the universal cover; a crossing is drawn at the midpoint of
        // the edge it passes through.
        int i = 0, j = 0;
        std::vector<std::pair<double, double>> path;
        for (std::size_t k = 0; k <= comp.word.size(); ++k) {
            char l = comp.word[k % comp.word.size()];
            std::pair<double, double> pt;
            switch (l) {
                case 'R': pt = {i + 1.0, j + 0.5}; ++i; break;
                case 'L': pt = {i + 0.0, j + 0.5}; --i; break;
                case 'U': pt = {i + 0.5, j + 1.0}; ++j; break;
                default: pt = {i + 0.5, j + 0.0}; --j; break;
            }
            if (k == comp.word.size()) break;
            path.push_back(pt);
            c.cover(pt.first, pt.second);
            if (k < comp.marks.size() && !comp.marks[k].empty()) c.labels.push_back({pt, comp.marks[k]});
        }
        if (!path.empty()) path.push_back(path.front());
        c.paths.push_back(std::move(path));
    }
    c.xmin = std::floor(c.xmin);
    c.ymin = std::floor(c.ymin);
    c.xmax = std::ceil(c.xmax);
    c.ymax = std::ceil(c.ymax);
    std::string s = svg_open(c);
    for (int x = static_cast<int>(c.xmin); x <= static_cast<int>(c.xmax); ++x)
        s += "  <line x1=\"" + num(c.sx(x)) + "\" y1=\"" + num(c.sy(c.ymin)) + "\" x2=\"" + num(c.sx(x)) + "\" y2=\"" +
             num(c.sy(c.ymax)) + "\" stroke=\"#bbb\"/>\n";
    for (int y = static_cast<int>(c.ymin); y <= static_cast<int>(c.ymax); ++y)
        s += "  <line x1=\"" + num(c.sx(c.xmin)) + "\" y1=\"" + num(c.sy(y)) + "\" x2=\"" + num(c.sx(c.xmax)) + "\" y2=\"" +
             num(c.sy(y)) + "\" stroke=\"#bbb\"/>\n";
    // Punctures sit just below and to the left of the lattice points.
    for (int x = static_cast<int>(c.xmin); x <= static_cast<int>(c.xmax); ++x)
        for (int y = static_cast<int>(c.ymin); y <= static_cast<int>(c.ymax); ++y)
            s += "  <circle cx=\"" + num(c.sx(x - 0.08)) + "\" cy=\"" + num(c.sy(y - 0.08)) + "\" r=\"4\" fill=\"black\"/>\n";
    s += svg_paths(c);
    s += "</svg>\n";
    return s;
}

std::string render_svg(const LiftedCurve& l) {
    // The strip [0,1] x R with the midline at x = 1/2; vertical edge
    // crossings land on the midline, the rest on the glued boundary.
    Canvas c;
    std::vector<std::pair<double, double>> path;
    bool right_half = false;
    int h = 0;
    auto put = [&](double x, double y) {
        path.push_back({x, y});
        c.cover(x, y);
    };
    for (std::size_t k = 0; k < l.word.size(); ++k) {
        char x = l.word[k];
        std::pair<double, double> pt;
        if (x == 'R' || x == 'L') {
            bool wraps = (x == 'R') == right_half;
            if (wraps && !path.empty()) {
                put(right_half ? 1.0 : 0.0, path.back().second);
                c.paths.push_back(std::move(path));
                path.clear();
                put(right_half ? 0.0 : 1.0, c.paths.back().back().second);
            }
            pt = {0.5, h};
            right_half = x == 'R';
        } else {
            h += x == 'U' ? 1 : -1;
            pt = {right_half ? 1.0 : 0.0, x == 'U' ? h - 0.5 : h + 0.5};
        }
        put(pt.first, pt.second);
        if (k < l.marks.size() && !l.marks[k].empty()) c.labels.push_back({pt, l.marks[k]});
    }
    c.paths.push_back(std::move(path));
    c.ymin = std::floor(c.ymin) - 1;
    c.ymax = std::ceil(c.ymax) + 1;
    std::string s = svg_open(c);
    for (double x : {0.0, 1.0})
        s += "  <line x1=\"" + num(c.sx(x)) + "\" y1=\"" + num(c.sy(c.ymin)) + "\" x2=\"" + num(c.sx(x)) + "\" y2=\"" +
             num(c.sy(c.ymax)) + "\" stroke=\"#bbb\"/>\n";
    s += "  <line x1=\"" + num(c.sx(0.5)) + "\" y1=\"" + num(c.sy(c.ymin)) + "\" x2=\"" + num(c.sx(0.5)) + "\" y2=\"" +
         num(c.sy(c.ymax)) + "\" stroke=\"#888\" stroke-dasharray=\"4 3\"/>\n";
    for (int y = static_cast<int>(c.ymin); y < static_cast<int>(c.ymax); ++y)
        s += "  <circle cx=\"" + num(c.sx(0.45)) + "\" cy=\"" + num(c.sy(y + 0.45)) + "\" r=\"4\" fill=\"black\"/>\n";
    for (const auto& hit : l.midline_hits)
        s += "  <rect x=\"" + num(c.sx(0.5) - 3) + "\" y=\"" + num(c.sy(hit.height) - 3) +
             "\" width=\"6\" height=\"6\" fill=\"#2980b9\"/>\n";
    s += svg_paths(c);
    s += "</svg>\n";
    return s;
}

}  // namespace bfh

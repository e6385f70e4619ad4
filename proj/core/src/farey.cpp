#include "bfh/farey.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

#include "bfh/errors.hpp"

namespace bfh {

namespace {

using Vec = std::array<long, 2>;  // (numerator, denominator)
using Mat = std::array<long, 4>;  // row major

Vec apply(const Mat& m, const Vec& v) { return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]}; }

Slope from_vec(const Vec& v) { return Slope(v[0], v[1]); }

long floor_div(long a, long b) {
    long d = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --d;
    return d;
}

// Extended Euclid: returns (u, v) with u a + v b = gcd(a, b).
std::pair<long, long> bezout(long a, long b) {
    long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        long k = old_r / r;
        std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
        std::tie(old_s, s) = std::make_pair(s, old_s - k * s);
        std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
    }
    if (old_r < 0) {
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_s, old_t};
}

// Path from infinity to a finite slope a/b (b > 0), by continued fraction
// descent: jump to floor(t), then conjugate the remainder back to infinity.
std::vector<Slope> path_from_infinity(long a, long b) {
    long k = floor_div(a, b);
    std::vector<Slope> out = {Slope::infinity(), Slope(k, 1)};
    long rem = a - k * b;  // t - k = rem / b with 0 <= rem < b
    if (rem == 0) return out;
    // y = -1/(t-k) = -b/rem; recurse, then map y -> k - 1/y.
    auto sub = path_from_infinity(-b, rem);
    for (std::size_t i = 2; i < sub.size() + 1; ++i) {
        const Slope& y = sub[i - 1];
        // k - 1/y = (k y_p - y_q) / y_p
        out.push_back(Slope(k * y.p - y.q, y.p));
    }
    return out;
}

}  // namespace

Slope::Slope(long num, long den) : p(num), q(den) {
    if (num == 0 && den == 0) throw InvalidInput("0/0 is not a slope");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) {
        p = p > 0 ? 1 : -1;
        return;
    }
    long g = std::gcd(std::labs(p), q);
    p /= g;
    q /= g;
}

bool operator<(const Slope& a, const Slope& b) {
    if (a.is_infinite()) return !b.is_infinite();
    if (b.is_infinite()) return false;
    return a.p * b.q < b.p * a.q;
}

std::string Slope::str() const {
    if (is_infinite()) return p > 0 ? "inf" : "-inf";
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
}

Slope parse_slope(const std::string& raw) {
    std::string s = raw;
    if (s == "inf" || s == "oo" || s == "∞" || s == "1/0") return Slope::infinity();
    if (s == "-inf" || s == "-1/0" || s == "-∞") return Slope(-1, 0);
    auto slash = s.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return Slope(v, 1);
        }
        std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        long num = std::stol(a, &used);
        if (used != a.size()) throw std::invalid_argument(s);
        long den = std::stol(b, &used);
        if (used != b.size()) throw std::invalid_argument(s);
        return Slope(num, den);
    } catch (const std::logic_error&) {
        throw ParseError("bad slope '" + raw + "' (expected inf, n or p/q)");
    }
}

Slope farey_sum(const Slope& a, const Slope& b) { return Slope(a.p + b.p, a.q + b.q); }

long farey_prod(const Slope& a, const Slope& b) { return a.p * b.q - a.q * b.p; }

bool farey_adjacent(const Slope& a, const Slope& b) { return std::labs(farey_prod(a, b)) == 1; }

Slope clockwise_neighbor(const Slope& r) {
    if (r.is_infinite()) throw InvalidInput("infinity has no largest neighbour");
    // Slopes q'/p' with p q' - p' q = 1 lie above r; the largest has the
    // smallest positive denominator.
    for (long den = 1; den <= r.q; ++den) {
        long num = 1 + den * r.p;
        if (num % r.q == 0) return Slope(num / r.q, den);
    }
    throw InvalidInput("no clockwise neighbour for " + r.str());
}

Slope anticlockwise_neighbor(const Slope& r) {
    if (r.is_infinite()) throw InvalidInput("infinity has no smallest neighbour");
    for (long den = 1; den <= r.q; ++den) {
        long num = -1 + den * r.p;
        if (num % r.q == 0) return Slope(num / r.q, den);
    }
    throw InvalidInput("no anticlockwise neighbour for " + r.str());
}

std::vector<Slope> minimal_path(const Slope& r, const Slope& s) {
    if (r == s) throw InvalidInput("minimal_path needs distinct endpoints");
    // Move r to infinity with an orientation preserving integral matrix; the
    // clockwise order is preserved, so the path can be computed there.
    Mat m{1, 0, 0, 1}, inv{1, 0, 0, 1};
    if (!r.is_infinite()) {
        auto [u, v] = bezout(r.p, r.q);
        m = {u, v, -r.q, r.p};
        inv = {r.p, -v, r.q, u};
    }
    Slope t = from_vec(apply(m, {s.p, s.q}));
    auto path = path_from_infinity(t.p, t.q);
    std::vector<Slope> out;
    out.push_back(r);
    for (std::size_t i = 1; i < path.size(); ++i) out.push_back(from_vec(apply(inv, {path[i].p, path[i].q})));
    return out;
}

bool is_minimal(const std::vector<Slope>& path) {
    for (std::size_t i = 0; i < path.size(); ++i)
        for (std::size_t j = i + 1; j < path.size(); ++j)
            if (farey_adjacent(path[i], path[j]) != (j == i + 1)) return false;
    return true;
}

std::string DecoratedPath::str() const {
    std::string s;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += std::string(" ") + static_cast<char>(signs[i - 1]) + " ";
        s += vertices[i].str();
    }
    return s;
}

DecoratedPath parse_decorated(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> t;
    std::string tok;
    while (is >> tok) t.push_back(tok);
    if (t.empty() || t.size() % 2 == 0)
        throw ParseError("decorated path must read 'vertex (sign vertex)*' with signs o + -");
    DecoratedPath p;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i % 2 == 0) {
            p.vertices.push_back(parse_slope(t[i]));
        } else if (t[i] == "o" || t[i] == "∘") {
            p.signs.push_back(Sign::circ);
        } else if (t[i] == "+") {
            p.signs.push_back(Sign::plus);
        } else if (t[i] == "-") {
            p.signs.push_back(Sign::minus);
        } else {
            throw ParseError("bad sign '" + t[i] + "' (expected o, + or -)");
        }
    }
    return p;
}

DecoratedPath shorten(const DecoratedPath& p) {
    const auto& v = p.vertices;
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = v.size() - 1; j > i + 1; --j) {
            if (!farey_adjacent(v[i], v[j])) continue;
            DecoratedPath out;
            out.vertices.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            out.vertices.insert(out.vertices.end(), v.begin() + static_cast<std::ptrdiff_t>(j), v.end());
            out.signs.assign(p.signs.begin(), p.signs.begin() + static_cast<std::ptrdiff_t>(i));
            Sign merged = p.signs[i];
            for (std::size_t k = i; k < j; ++k)
                if (p.signs[k] != merged) merged = Sign::mixed;
            out.signs.push_back(merged);
            out.signs.insert(out.signs.end(), p.signs.begin() + static_cast<std::ptrdiff_t>(j), p.signs.end());
            return out;
        }
    return p;
}

std::string to_string(Tightness t) {
    switch (t) {
        case Tightness::universally_tight: return "universally_tight";
        case Tightness::virtually_overtwisted: return "virtually_overtwisted";
        case Tightness::overtwisted: return "overtwisted";
        case Tightness::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

namespace {

// Position on the circle measured clockwise from `base`.
bool clockwise_increasing(const std::vector<Slope>& v) {
    // Conjugate the start to infinity; clockwise then means increasing.
    Mat m{1, 0, 0, 1};
    if (!v.front().is_infinite()) {
        auto [u, w] = bezout(v.front().p, v.front().q);
        m = {u, w, -v.front().q, v.front().p};
    }
    std::optional<Slope> prev;
    for (std::size_t i = 1; i < v.size(); ++i) {
        Slope t = from_vec(apply(m, {v[i].p, v[i].q}));
        if (t.is_infinite()) return false;
        if (prev && !(*prev < t)) return false;
        prev = t;
    }
    return true;
}

void check_path(const DecoratedPath& p) {
    if (p.vertices.size() < 2) throw BadForm("a decorated path needs at least one edge");
    if (p.signs.size() + 1 != p.vertices.size()) throw BadForm("need exactly one sign per edge");
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i)
        if (!farey_adjacent(p.vertices[i], p.vertices[i + 1]))
            throw BadForm(p.vertices[i].str() + " and " + p.vertices[i + 1].str() + " are not joined by an edge");
    if (!clockwise_increasing(p.vertices)) throw BadForm("path does not move clockwise");
}

bool signed_edge(Sign s) { return s == Sign::plus || s == Sign::minus; }

Tightness classify_from(DecoratedPath p, std::size_t first_signed) {
    for (;;) {
        if (is_minimal(p.vertices)) {
            bool plus = false, minus = false;
            for (std::size_t i = first_signed; i < p.signs.size(); ++i) {
                plus = plus || p.signs[i] == Sign::plus;
                minus = minus || p.signs[i] == Sign::minus;
            }
            return plus && minus ? Tightness::virtually_overtwisted : Tightness::universally_tight;
        }
        const auto& v = p.vertices;
        for (std::size_t i = first_signed + 1; i + 1 < v.size(); ++i)
            if (signed_edge(p.signs[i - 1]) && signed_edge(p.signs[i]) && p.signs[i - 1] != p.signs[i] &&
                farey_adjacent(v[i - 1], v[i + 1]))
                return Tightness::overtwisted;
        bool merged = false;
        for (std::size_t i = first_signed + 1; i + 1 < v.size() && !merged; ++i) {
            if (!signed_edge(p.signs[i - 1]) || p.signs[i - 1] != p.signs[i] || !farey_adjacent(v[i - 1], v[i + 1]))
                continue;
            p.vertices.erase(p.vertices.begin() + static_cast<std::ptrdiff_t>(i));
            p.signs.erase(p.signs.begin() + static_cast<std::ptrdiff_t>(i));
            merged = true;
        }
        if (!merged) return Tightness::indeterminate;
    }
}

}  // namespace

Tightness classify(const DecoratedPath& p) {
    check_path(p);
    if (!p.vertices.front().is_infinite()) throw BadForm("solid torus paths start at infinity");
    if (p.signs.front() != Sign::circ) throw BadForm("the first edge must carry the o decoration");
    for (std::size_t i = 1; i < p.signs.size(); ++i)
        if (!signed_edge(p.signs[i])) throw BadForm("only the first edge may carry o");
    return classify_from(p, 1);
}

Tightness classify_slice(const DecoratedPath& p) {
    check_path(p);
    for (Sign s : p.signs)
        if (!signed_edge(s)) throw BadForm("thickened torus paths carry only + and - signs");
    return classify_from(p, 0);
}

bool same_block(const std::vector<Slope>& v, std::size_t edge) {
    // Edges (v[e], v[e+1]) and (v[e+1], v[e+2]) extend to a block exactly when
    // v[e] + v[e+2] = 2 v[e+1] for suitable choices of sign on the vectors.
    if (edge + 2 >= v.size()) return false;
    const Slope &a = v[edge], &b = v[edge + 1], &c = v[edge + 2];
    for (int sa : {1, -1})
        for (int sc : {1, -1})
            for (int sb : {2, -2})
                if (sa * a.p + sc * c.p == sb * b.p && sa * a.q + sc * c.q == sb * b.q) return true;
    return false;
}

DecoratedPath shuffle_canonical(const DecoratedPath& p) {
    if (!is_minimal(p.vertices)) throw PreconditionError("shuffle_canonical needs a minimal path");
    DecoratedPath out = p;
    std::size_t i = 0;
    while (i < out.signs.size()) {
        if (!signed_edge(out.signs[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < out.signs.size() && signed_edge(out.signs[j + 1]) && same_block(out.vertices, j)) ++j;
        // '-' sorts before '+' by the requested canonical order.
        std::sort(out.signs.begin() + static_cast<std::ptrdiff_t>(i), out.signs.begin() + static_cast<std::ptrdiff_t>(j) + 1,
                  [](Sign x, Sign y) { return x == Sign::minus && y == Sign::plus; });
        i = j + 1;
    }
    return out;
}

long count_tight_solid_torus(const Slope& s) {
    if (s.is_infinite() || (s.p != 1 && s.p != -1)) throw InvalidInput("expected a boundary slope 1/n, got " + s.str());
    auto path = minimal_path(Slope::infinity(), s);
    long count = 1;
    std::size_t e = 1;  // edge 0 is the o edge
    while (e + 1 < path.size()) {
        std::size_t len = 1;
        while (e + len + 1 < path.size() && same_block(path, e + len - 1)) ++len;
        count *= static_cast<long>(len) + 1;
        e += len;
    }
    return count;
}

long enumerate_tight_classes(const Slope& s) {
    if (s.is_infinite() || (s.p != 1 && s.p != -1)) throw InvalidInput("expected a boundary slope 1/n, got " + s.str());
    auto path = minimal_path(Slope::infinity(), s);
    std::size_t edges = path.size() - 1;
    if (edges > 24) throw InvalidInput("slope too far from infinity to enumerate");
    std::set<std::string> classes;
    for (unsigned long mask = 0; mask < (1ul << (edges - 1)); ++mask) {
        DecoratedPath d;
        d.vertices = path;
        d.signs.push_back(Sign::circ);
        for (std::size_t k = 1; k < edges; ++k) d.signs.push_back(mask >> (k - 1) & 1u ? Sign::plus : Sign::minus);
        classes.insert(shuffle_canonical(d).str());
    }
    return static_cast<long>(classes.size());
}

}  // namespace bfh

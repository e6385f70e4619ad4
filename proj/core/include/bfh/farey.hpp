#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bfh {

// Extended rational p/q with q >= 0 and gcd(|p|, q) = 1. Infinity is 1/0 or
// -1/0; both name the same vertex of the Farey graph.
struct Slope {
    long p = 1;
    long q = 0;

    Slope() = default;
    Slope(long num, long den);
    static Slope infinity() { return Slope(1, 0); }

    bool is_infinite() const { return q == 0; }
    std::string str() const;
    friend bool operator==(const Slope& a, const Slope& b) {
        if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && b.is_infinite();
        return a.p == b.p && a.q == b.q;
    }
    // Orders finite slopes by value; infinity sorts first.
    friend bool operator<(const Slope& a, const Slope& b);
};

Slope parse_slope(const std::string& s);

Slope farey_sum(const Slope& a, const Slope& b);
long farey_prod(const Slope& a, const Slope& b);
bool farey_adjacent(const Slope& a, const Slope& b);

// (q/p)^c and (q/p)^a: the largest slope above and the smallest slope below
// that are joined to r by an edge (finite r only).
Slope clockwise_neighbor(const Slope& r);
Slope anticlockwise_neighbor(const Slope& r);

// Minimal clockwise path from r to s.
std::vector<Slope> minimal_path(const Slope& r, const Slope& s);
bool is_minimal(const std::vector<Slope>& path);

enum class Sign : char { plus = '+', minus = '-', circ = 'o', mixed = '?' };

struct DecoratedPath {
    std::vector<Slope> vertices;
    std::vector<Sign> signs;
    std::string str() const;
    friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;
};

// Grammar: vertex (sign vertex)*, signs o + -, vertices like inf, -1/2, 3.
DecoratedPath parse_decorated(const std::string& s);

// One shortening step at the first (lowest index, longest span) available
// shortcut. The merged edge keeps the common sign of the removed edges, or
// '?' when they disagree.
DecoratedPath shorten(const DecoratedPath& p);

enum class Tightness { universally_tight, virtually_overtwisted, overtwisted, indeterminate };
std::string to_string(Tightness t);

// Solid-torus form: starts at infinity, first edge decorated o.
Tightness classify(const DecoratedPath& p);
// Thickened-torus form: every edge signed + or -.
Tightness classify_slice(const DecoratedPath& p);

// Edges i and i+1 lie in a common continued fraction block.
bool same_block(const std::vector<Slope>& vertices, std::size_t edge);
DecoratedPath shuffle_canonical(const DecoratedPath& p);

// Number of tight structures on the solid torus with boundary slope 1/n: the
// product of (block length + 1) over the continued fraction blocks of the
// signed part of the minimal path from infinity.
long count_tight_solid_torus(const Slope& s);
// The same count by brute force over sign assignments, modulo shuffling.
long enumerate_tight_classes(const Slope& s);

}  // namespace bfh

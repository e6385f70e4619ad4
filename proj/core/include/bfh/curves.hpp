#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bfh/structures.hpp"

namespace bfh {

// A closed component is a cyclic word over U D L R: each letter records the
// edge of the square grid the curve crosses next, and in which direction.
// Corners are implicit (every arc turns inside one square), so the word is
// in normal form exactly when no letter is followed by its inverse.
struct CurveComponent {
    std::string word;
    std::vector<std::string> marks;  // one per letter, empty when unmarked
    // An isolated generator is an arc from the puncture back to itself
    // through one edge; its word is that single crossing.
    bool closed = true;
    friend bool operator==(const CurveComponent&, const CurveComponent&) = default;
};

struct Curve {
    std::vector<CurveComponent> components;

    // generator id -> (component, position)
    std::map<std::string, std::pair<std::size_t, std::size_t>> marks() const;
    friend bool operator==(const Curve&, const Curve&) = default;
};

char inverse_letter(char c);
// Inverse of a cyclic word: reversed, each letter inverted.
std::string inverse_word(const std::string& w);
// Least rotation of w or of its inverse; equal for the same unoriented curve.
std::string canonical_word(const std::string& w);
bool is_normal_form(const std::string& w);
// Wraps once around the longitudinal direction: net R minus L is +1 or -1.
bool is_distinguished(const CurveComponent& c);

// Text format: components separated by ';', each a run of letters where a
// letter may carry a mark, e.g. "U@x0 U R D L D R ; R". A component that
// starts with the token "arc" is an open arc.
Curve parse_curve(const std::string& text);
std::string print_curve(const Curve& c);

Curve curve_from_typeD(const TypeD& d);
TypeD typeD_from_curve(const Curve& c, const std::string& name = "curve");
// The curve of the dual type-A picture: R <-> U and L <-> D.
Curve reflect(const Curve& c);

// Lift of a distinguished component to the cylinder, oriented rightward.
struct LiftedCurve {
    struct Hit {
        std::size_t position;  // index of the R or L letter in `word`
        char direction;        // 'R' or 'L'
        int height;            // net vertical count from the start of the word
    };
    std::string word;
    std::vector<std::string> marks;
    std::vector<Hit> midline_hits;
    int drift = 0;  // net vertical count over one period (minus the framing)
};

LiftedCurve lift(const CurveComponent& c);
std::pair<int, int> tau_epsilon(const LiftedCurve& l);

// Minimal geometric intersection number of two curves in normal form,
// summed over pairs of components. Parallel components have no well defined
// transverse count and are rejected.
long min_intersections(const Curve& a, const Curve& b);

enum class SurgeryVerdict { vanishes, nonvanishes, undetermined };
std::string to_string(SurgeryVerdict v);

// Local lemmas read at the marked horizontal crossing of a curve in the
// type-A picture, against the positive framed solid torus with parameter n.
SurgeryVerdict surgery_verdict_curve(const Curve& c, const std::string& mark, int n);
SurgeryVerdict surgery_verdict_formula(int tb, int rot, int tau, int epsilon, int s);

std::string render_svg(const Curve& c);
std::string render_svg(const LiftedCurve& l);

}  // namespace bfh

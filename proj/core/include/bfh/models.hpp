#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bfh/structures.hpp"

namespace bfh {

DDBimodule azdd();
TypeD cap(int idem);

// Slope lines on the punctured torus. (q, p) is the direction vector: q
// horizontal steps and p vertical steps per period.
TypeD typeD_line(int q, int p);
GraphTypeA typeA_line_graph(int q, int p);
TypeA typeA_line(int q, int p);
// The crossing sequence of the line as a word over U D L R.
std::string line_word(int q, int p);

// Graph-backed modules with a directed cycle stay lazy; others are expanded.
TypeA module_from_graph(const GraphTypeA& g);

// Move the basepoint k quarter turns around the boundary. k = 1 swaps the
// roles of the two parametrizing curves; k = 2 is conjugation.
TypeD shift_basepoint(const TypeD& d, int k);

enum class Param { a, b, c, d };
Param parse_param(const std::string& s);
char param_letter(Param p);
// Params a and b put the single generator y in idempotent 0; c and d in 1.
int param_family(Param p);

struct SolidTorusModel {
    int n = 0;
    Param param = Param::a;
    TypeA module;
    GraphTypeA graph;
    std::map<std::string, std::string> labels;        // "y", "x1".. -> generator id
    std::map<std::string, std::string> contact_tags;  // label -> structure name
    std::map<std::string, int> heights;               // generator id -> height

    int y_idem() const { return param_family(param) == 1 ? 0 : 1; }
    int x_idem() const { return 1 - y_idem(); }
    std::string x(int j) const { return labels.at("x" + std::to_string(j)); }
    std::string y() const { return labels.at("y"); }
};

SolidTorusModel solid_torus(int n, Param param);

struct Staircase {
    std::vector<int> coeffs;     // dense, top degree first
    std::vector<int> exponents;  // Alexander heights of the generators, top first
    std::vector<int> steps;      // alternating horizontal / vertical lengths
    int genus() const { return exponents.empty() ? 0 : exponents.front(); }
};

Staircase staircase_from_alexander(const std::vector<int>& coeffs);

struct KnotModel {
    TypeD d;
    int tau = 0;                   // tau of the knot whose complement this is
    std::string xi0, eta0;         // ends of the unstable chain
    std::vector<std::string> staircase_ids;
    std::map<std::string, int> heights;
};

KnotModel cfd_from_staircase(const Staircase& s, int framing, bool mirror);

// Known knots: unknot, rht, t34 (and aliases lht, t34m for the mirrors).
struct KnotSpec {
    std::string key;
    std::vector<int> alexander;
    bool mirror = false;
};
KnotSpec knot_spec(const std::string& key);
KnotModel knot_model(const std::string& key, int framing, bool mirror_flag = false);

// Legendrian data for the bundled knots in the standard sphere:
// maximal tb and the contact tau / epsilon.
struct LegendrianData {
    int tb_max;
    int tau;
    int epsilon;
};
const std::map<std::string, LegendrianData>& legendrian_table();
std::string mirror_key(const std::string& key);

// ---- registry -------------------------------------------------------------

using Structure = std::variant<TypeD, TypeA, GraphTypeA, DDBimodule>;

// Names: az, cap:i0, solid:n=-3:param=a, knot:rht:f=-1[:mirror],
// dline:q=1:p=2, aline:q=1:p=2.
Structure model_by_name(const std::string& name);
std::vector<std::string> registry_names();
// The type-A view of a model: type-A modules pass through, graph modules are
// expanded or made lazy, type-D structures are dualized.
TypeA as_typeA(const Structure& s);
TypeD as_typeD(const Structure& s);

}  // namespace bfh

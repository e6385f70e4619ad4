#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bfh/curves.hpp"
#include "bfh/f2.hpp"
#include "bfh/structures.hpp"

namespace bfh {

struct SliceDescription {
    enum class Kind { invariant_G0, invariant_G1, basic_slice, union_of_slices };
    Kind kind = Kind::invariant_G0;
    char sign = 0;  // '+' or '-' for basic slices
    int from = 0;   // dividing sets Gamma_0 / Gamma_1
    int to = 0;
    std::vector<SliceDescription> parts;
    std::string str() const;
};

SliceDescription slice_of(Basis a);

// A cycle of a type-A module, all of whose generators share an idempotent.
struct ContactClass {
    std::shared_ptr<const TypeA> module;
    F2Vector cycle;
    std::string name;
    int idempotent = 0;
};

ContactClass make_class(std::shared_ptr<const TypeA> m, const std::vector<std::string>& ids, const std::string& name);
std::vector<std::string> support_ids(const ContactClass& c);

// A class on a type-D structure produced by box_A_DD: x (x) iota^v.
struct ContactClassOnTypeD {
    std::shared_ptr<const TypeD> module;
    F2Vector cycle;
    std::string name;
    int idempotent = 0;
};

// Pair the class with the DD bimodule; each x picks the unique idempotent
// dual generator it can be tensored with.
ContactClassOnTypeD dual_class(const ContactClass& c, const DDBimodule& p);
// Same, on an already computed box_A_DD output (which must come from c's
// module and p).
ContactClassOnTypeD dual_class(const ContactClass& c, std::shared_ptr<const TypeD> d);

ContactClass bypass(const ContactClass& c, Basis a);

// Which of rho_2 / rho_3 realizes the map to the meridional idempotent.
enum class SVParam { rho2, rho3 };
ContactClass sv_image(const ContactClass& c, SVParam p);

struct PairedClass {
    ChainComplex complex;
    F2Vector cycle;
};
PairedClass pair_contact(const ContactClass& c1, const ContactClassOnTypeD& c2);

ContactClass locate_xi_in(std::shared_ptr<const TypeA> m, int meridian_idem);

// box_AD(k, box_A_DD(s, az)); generators are named "x*(y*g)" flattened to
// "x*y*g".
ChainComplex triple_complex(const TypeA& k, const TypeA& s, const DDBimodule& az);

// c1 on the outer module, c2 on the inner one of triple_complex. True when
// c1 (x) (m2(c2, a) (x) iota^v) + m2(c1, phi(a)) (x) (c2 (x) iota^v) is a
// boundary, and for single letters when it is literally the boundary of
// c1 (x) (c2 (x) rho_a^v).
bool reattach_check(const ContactClass& c1, Basis a, const ContactClass& c2);
bool reattach_check(const ContactClass& c1, Basis a, const ContactClass& c2, const ChainComplex& triple);

// ---- surgery ------------------------------------------------------------

// Positive contact surgery along a bundled knot with parameter n >= 1:
// the complement of the mirror with framing -tb, glued to the positive
// framed solid torus, and the x1 class of the solid torus.
struct SurgeryPairing {
    std::shared_ptr<const TypeA> knot;
    ChainComplex complex;
    std::vector<std::string> survivors;  // a in the longitudinal idempotent with [a (x) x1] != 0
};
SurgeryPairing surgery_pairing(const std::string& knot, int tb, int n);
SurgeryVerdict surgery_verdict_algebra(const std::string& knot, int tb, int rot, int n);

// Legendrian surgery (framing n <= -1) on the Legendrian LHT or T(3,4)
// realizing the branch whose complement classes come from xi_in: returns
// whether the rho_3 side and the rho_1 side glue to nonvanishing classes.
struct LegendrianSurgeryResult {
    bool xi3_nonvanishing = false;
    bool xi1_nonvanishing = false;
};
LegendrianSurgeryResult legendrian_surgery(const std::string& knot, int n);

}  // namespace bfh

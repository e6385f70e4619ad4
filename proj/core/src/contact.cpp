#include "bfh/contact.hpp"

#include "bfh/errors.hpp"
#include "bfh/models.hpp"
#include "bfh/pairing.hpp"

namespace bfh {

std::string SliceDescription::str() const {
    auto gamma = [](int i) { return "G" + std::to_string(i); };
    switch (kind) {
        case Kind::invariant_G0: return "invariant(G0)";
        case Kind::invariant_G1: return "invariant(G1)";
        case Kind::basic_slice: return std::string("slice(") + sign + "," + gamma(from) + "->" + gamma(to) + ")";
        case Kind::union_of_slices: {
            std::string s = "union(";
            for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i].str();
            return s + ")";
        }
    }
    return "";
}

SliceDescription slice_of(Basis a) {
    using K = SliceDescription::Kind;
    switch (a) {
        case Basis::i0: return {K::invariant_G0, 0, 0, 0, {}};
        case Basis::i1: return {K::invariant_G1, 0, 1, 1, {}};
        case Basis::r1: return {K::basic_slice, '+', 0, 1, {}};
        case Basis::r2: return {K::basic_slice, '-', 1, 0, {}};
        case Basis::r3: return {K::basic_slice, '-', 0, 1, {}};
        default: break;
    }
    SliceDescription u{K::union_of_slices, 0, left_idem(a), right_idem(a), {}};
    for (int k = chord_lo(a); k <= chord_hi(a); ++k) u.parts.push_back(slice_of(chord(k, k)));
    return u;
}

ContactClass make_class(std::shared_ptr<const TypeA> m, const std::vector<std::string>& ids, const std::string& name) {
    if (!m) throw PreconditionError("contact class needs a module");
    if (ids.empty()) throw PreconditionError("contact class needs a nonempty support");
    ContactClass c;
    c.module = m;
    c.name = name;
    c.idempotent = -1;
    for (const auto& id : ids) {
        auto i = m->find(id);
        if (!i) throw UnknownGenerator("'" + id + "' is not a generator of " + m->name);
        if (c.idempotent >= 0 && c.idempotent != m->idem(*i))
            throw IdempotentMismatch("support of " + name + " mixes idempotents");
        c.idempotent = m->idem(*i);
        c.cycle.toggle(*i);
    }
    return c;
}

std::vector<std::string> support_ids(const ContactClass& c) {
    std::vector<std::string> out;
    for (int i : c.cycle) out.push_back(c.module->id(i));
    return out;
}

namespace {

// Idempotent dual generator of the bimodule that a generator in idempotent e
// can be tensored with.
std::string unit_for(int e) { return e == 0 ? "i1" : "i0"; }

ContactClass from_vector(std::shared_ptr<const TypeA> m, const F2Vector& v, const std::string& name, int idem) {
    ContactClass c;
    c.module = std::move(m);
    c.cycle = v;
    c.name = name;
    c.idempotent = idem;
    return c;
}

}  // namespace

ContactClassOnTypeD dual_class(const ContactClass& c, std::shared_ptr<const TypeD> d) {
    ContactClassOnTypeD out;
    out.module = d;
    out.name = c.name;
    out.idempotent = 1 - c.idempotent;
    for (int x : c.cycle) {
        std::string id = pair_name(c.module->id(x), unit_for(c.idempotent));
        auto i = d->find(id);
        if (!i) throw UnknownGenerator("'" + id + "' is not a generator of " + d->name);
        out.cycle.toggle(*i);
    }
    return out;
}

ContactClassOnTypeD dual_class(const ContactClass& c, const DDBimodule& p) {
    return dual_class(c, std::make_shared<const TypeD>(box_A_DD(*c.module, p)));
}

ContactClass bypass(const ContactClass& c, Basis a) {
    if (c.idempotent != left_idem(a))
        throw IdempotentMismatch("class " + c.name + " sits in idempotent " + std::to_string(c.idempotent) + " but " +
                                 std::string(name(a)) + " starts at " + std::to_string(left_idem(a)));
    F2Vector v = c.module->m(c.cycle, Word{a});
    return from_vector(c.module, v, c.name + "+" + slice_of(a).str(), right_idem(a));
}

ContactClass sv_image(const ContactClass& c, SVParam p) { return bypass(c, p == SVParam::rho2 ? Basis::r2 : Basis::r3); }

PairedClass pair_contact(const ContactClass& c1, const ContactClassOnTypeD& c2) {
    if (c1.idempotent != c2.idempotent)
        throw IdempotentMismatch("cannot pair " + c1.name + " (idempotent " + std::to_string(c1.idempotent) + ") with " +
                                 c2.name + " (idempotent " + std::to_string(c2.idempotent) + ")");
    PairedClass out;
    out.complex = box_AD(*c1.module, *c2.module);
    for (int x : c1.cycle)
        for (int y : c2.cycle) out.cycle.toggle(out.complex.index_of(pair_name(c1.module->id(x), c2.module->id(y))));
    return out;
}

ContactClass locate_xi_in(std::shared_ptr<const TypeA> m, int meridian_idem) {
    std::vector<std::string> found;
    for (int x = 0; x < static_cast<int>(m->size()); ++x) {
        if (m->idem(x) != meridian_idem) continue;
        if (meridian_idem != 0) continue;  // rho_1 and rho_3 both start at idempotent 0
        if (!m->m2(x, Basis::r1).empty() && !m->m2(x, Basis::r3).empty()) found.push_back(m->id(x));
    }
    if (found.empty()) throw NotFound("no generator of " + m->name + " has both rho_1 and rho_3 actions");
    if (found.size() > 1) throw NotUnique(std::to_string(found.size()) + " generators of " + m->name + " have both actions");
    return make_class(m, found, "xi_in");
}

ChainComplex triple_complex(const TypeA& k, const TypeA& s, const DDBimodule& az) { return box_AD(k, box_A_DD(s, az)); }

bool reattach_check(const ContactClass& c1, Basis a, const ContactClass& c2) {
    return reattach_check(c1, a, c2, triple_complex(*c1.module, *c2.module, azdd()));
}

bool reattach_check(const ContactClass& c1, Basis a, const ContactClass& c2, const ChainComplex& t) {
    if (is_idempotent(a)) throw PreconditionError("reattachment needs a non-idempotent element");
    if (c2.idempotent != left_idem(a) || c1.idempotent != 1 - right_idem(a))
        throw IdempotentMismatch("idempotents of " + c1.name + ", " + std::string(name(a)) + ", " + c2.name + " do not compose");
    auto gen = [&](const std::string& x, const std::string& y, const std::string& g) {
        std::string id = pair_name(x, pair_name(y, g));
        auto i = t.find(id);
        if (!i) throw StructureError("'" + id + "' missing from the triple complex");
        return *i;
    };
    const TypeA& k = *c1.module;
    const TypeA& s = *c2.module;
    F2Vector rhs;
    std::string u1 = unit_for(right_idem(a)), u2 = unit_for(left_idem(a));
    for (int y : s.m(c2.cycle, Word{a}))
        for (int x : c1.cycle) rhs.toggle(gen(k.id(x), s.id(y), u1));
    for (int x : k.m(c1.cycle, Word{phi(a)}))
        for (int y : c2.cycle) rhs.toggle(gen(k.id(x), s.id(y), u2));
    if (!in_image(t, rhs)) return false;
    if (a == Basis::r1 || a == Basis::r2 || a == Basis::r3) {
        F2Vector chain;
        for (int x : c1.cycle)
            for (int y : c2.cycle) chain.toggle(gen(k.id(x), s.id(y), std::string(name(a))));
        if (t.boundary(chain) != rhs) return false;
    }
    return true;
}

SurgeryPairing surgery_pairing(const std::string& knot, int tb, int n) {
    if (n < 1) throw InvalidInput("positive contact surgery needs n >= 1");
    SurgeryPairing out;
    KnotModel km = knot_model(mirror_key(knot_spec(knot).key), -tb);
    out.knot = std::make_shared<const TypeA>(expand_graph(dual(km.d)));
    SolidTorusModel solid = solid_torus(n, Param::c);
    out.complex = triple_complex(*out.knot, solid.module, azdd());
    std::string x1 = pair_name(solid.x(1), unit_for(solid.x_idem()));
    for (int a = 0; a < static_cast<int>(out.knot->size()); ++a) {
        if (out.knot->idem(a) != 1 - solid.x_idem()) continue;
        int g = out.complex.index_of(pair_name(out.knot->id(a), x1));
        if (is_nonvanishing_cycle(out.complex, F2Vector{g})) out.survivors.push_back(out.knot->id(a));
    }
    return out;
}

SurgeryVerdict surgery_verdict_algebra(const std::string& knot, int tb, int rot, int n) {
    const auto& table = legendrian_table();
    auto it = table.find(knot_spec(knot).key);
    if (it == table.end()) throw InvalidInput("no Legendrian data for '" + knot + "'");
    SurgeryPairing sp = surgery_pairing(knot, tb, n);
    if (sp.survivors.empty()) return SurgeryVerdict::vanishes;
    if (sp.survivors.size() > 1) throw NotUnique("several longitudinal generators survive the gluing");
    // The surviving generator is the contact class exactly when the
    // Legendrian sits on the edge tb - rot = 2 tau - 1; otherwise the class
    // is a different generator, which is null-homologous.
    return tb - rot == 2 * it->second.tau - 1 ? SurgeryVerdict::nonvanishes : SurgeryVerdict::vanishes;
}

LegendrianSurgeryResult legendrian_surgery(const std::string& knot, int n) {
    if (n > -1) throw InvalidFraming("Legendrian surgery needs framing n <= -1");
    KnotModel km = knot_model(mirror_key(knot_spec(knot).key), 0);
    auto k = std::make_shared<const TypeA>(expand_graph(dual(km.d)));
    ContactClass xi_in = locate_xi_in(k, 0);
    SolidTorusModel solid = solid_torus(n, Param::c);
    auto s = std::make_shared<const TypeA>(solid.module);
    auto d = std::make_shared<const TypeD>(box_A_DD(*s, azdd()));
    LegendrianSurgeryResult r;
    auto glue = [&](Basis a, const std::string& x) {
        ContactClass xi = bypass(xi_in, a);
        auto pc = pair_contact(xi, dual_class(make_class(s, {x}, x), d));
        return is_nonvanishing_cycle(pc.complex, pc.cycle);
    };
    r.xi3_nonvanishing = glue(Basis::r3, solid.x(1));
    r.xi1_nonvanishing = glue(Basis::r1, solid.x(-n));
    return r;
}

}  // namespace bfh

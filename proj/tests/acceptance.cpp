// Acceptance runner: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <memory>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bfh/algebra.hpp"
#include "bfh/contact.hpp"
#include "bfh/curves.hpp"
#include "bfh/errors.hpp"
#include "bfh/f2.hpp"
#include "bfh/farey.hpp"
#include "bfh/models.hpp"
#include "bfh/pairing.hpp"
#include "bfh/structures.hpp"
#include "bfh/textio.hpp"
#include "farey_oracle.hpp"

using namespace bfh;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::vector<std::string> problems;
    void fail(const std::string& why) {
        ok = false;
        if (problems.size() < 5) problems.push_back(why);
    }
};

const Param kParams[] = {Param::a, Param::b, Param::c, Param::d};
const char* kKnots[] = {"rht", "lht", "t34", "t34m"};

std::string pname(Param p) { return std::string(1, param_letter(p)); }

TypeA knot_A(const std::string& key, int f) { return expand_graph(dual(knot_model(key, f).d)); }

// ---- 1 ----
Outcome algebra_soundness() {
    Outcome o;
    int triples = 0;
    for (Basis a : kAllBasis)
        for (Basis b : kAllBasis)
            for (Basis c : kAllBasis) {
                ++triples;
                AlgebraElement x(a), y(b), z(c);
                if (mul(mul(x, y), z) != mul(x, mul(y, z)))
                    o.fail(std::string(name(a)) + "," + std::string(name(b)) + "," + std::string(name(c)));
            }
    auto eq = [&](Basis a, Basis b, std::optional<Basis> want) {
        if (mul(a, b) != want) o.fail(std::string("product ") + std::string(name(a)) + std::string(name(b)));
    };
    eq(Basis::r2, Basis::r1, std::nullopt);
    eq(Basis::r3, Basis::r2, std::nullopt);
    eq(Basis::r1, Basis::r2, Basis::r12);
    eq(Basis::r2, Basis::r3, Basis::r23);
    eq(Basis::r12, Basis::r3, Basis::r123);
    eq(Basis::r1, Basis::r23, Basis::r123);
    o.detail = std::to_string(triples) + " triples";
    return o;
}

// ---- 2 ----
Outcome az_bimodule() {
    Outcome o;
    DDBimodule p = azdd();
    if (!validate_DD(p)) o.fail("azdd fails validation");
    std::size_t killed = 0;
    for (std::size_t k = 0; k < p.arrows().size(); ++k) {
        DDBimodule q = p;
        q.remove_arrow(k);
        if (validate_DD(q))
            o.fail("deleting arrow " + std::to_string(k) + " still validates");
        else
            ++killed;
    }
    o.detail = std::to_string(killed) + "/" + std::to_string(p.arrows().size()) + " deletions rejected";
    return o;
}

// ---- 3 ----
Outcome d_squared() {
    Outcome o;
    std::vector<std::pair<std::string, TypeA>> as;
    for (Param p : kParams)
        for (int n = -8; n <= 8; ++n)
            if (n != 0) as.push_back({"solid n=" + std::to_string(n) + " " + pname(p), solid_torus(n, p).module});
    for (const char* k : kKnots) as.push_back({std::string(k), knot_A(k, 0)});
    std::vector<std::pair<std::string, TypeD>> ds = {{"cap0", cap(0)}, {"cap1", cap(1)}};
    for (const char* k : kKnots)
        for (int f : {-1, 0, 2}) ds.push_back({std::string(k) + " f=" + std::to_string(f), knot_model(k, f).d});
    int count = 0;
    for (const auto& [an, a] : as)
        for (const auto& [dn, d] : ds) {
            ++count;
            try {
                if (!box_AD(a, d).d_squared_zero()) o.fail(an + " x " + dn);
            } catch (const Error& e) {
                o.fail(an + " x " + dn + ": " + e.what());
            }
        }
    o.detail = std::to_string(count) + " pairings";
    return o;
}

// Generators and arrows keyed by id, so generator order does not matter.
std::pair<std::set<std::pair<std::string, int>>, std::multiset<std::tuple<std::string, int, std::string>>> structure_key(
    const TypeD& d) {
    std::set<std::pair<std::string, int>> gens;
    for (const auto& g : d.generators()) gens.insert({g.id, g.idem});
    std::multiset<std::tuple<std::string, int, std::string>> arrows;
    for (const auto& a : d.arrows()) arrows.insert({d.id(a.source), static_cast<int>(a.label), d.id(a.target)});
    return {gens, arrows};
}

// ---- 4 ----
Outcome solid_tori_dual() {
    Outcome o;
    DDBimodule az = azdd();
    int checked = 0;
    for (Param p : kParams)
        for (int n = -8; n <= 8; ++n) {
            if (n == 0) continue;
            std::string tag = "n=" + std::to_string(n) + " " + pname(p);
            SolidTorusModel s = solid_torus(n, p);
            TypeD d = box_A_DD(s.module, az);
            if (!validate_typeD(d)) {
                o.fail(tag + ": dual structure invalid");
                continue;
            }
            auto dual_id = [&](const std::string& x) {
                int e = s.module.idem(s.module.index_of(x));
                return pair_name(x, e == 0 ? "i1" : "i0");
            };
            for (const auto& [label, tagname] : s.contact_tags) {
                if (label == "y") continue;
                std::set<std::string> keep = {dual_id(s.labels.at(label)), dual_id(s.y())};
                TypeD r = reduce_typeD(d, keep);
                for (const auto& k : keep)
                    if (!r.find(k)) o.fail(tag + ": " + k + " cancelled");
                if (!validate_typeD(r)) o.fail(tag + ": partial reduction invalid");
                ++checked;
            }
            TypeD full = reduce_typeD(d);
            Curve c = curve_from_typeD(full);
            auto [q, pp] = param_family(p) == 1 ? std::pair{-n, 1} : std::pair{1, -n};
            std::string want = canonical_word(curve_from_typeD(typeD_line(q, pp)).components.at(0).word);
            if (c.components.size() != 1 || canonical_word(c.components[0].word) != want)
                o.fail(tag + ": curve " + print_curve(c) + " is not the expected line");
            TypeD back = typeD_from_curve(c, full.name);
            if (structure_key(back) != structure_key(full)) o.fail(tag + ": curve round trip changed the structure");
            if (!validate_typeD(back)) o.fail(tag + ": round trip invalid");
        }
    o.detail = std::to_string(checked) + " protected reductions";
    return o;
}

// ---- 5 ----
Outcome rank_oracle() {
    Outcome o;
    std::vector<std::pair<int, int>> vecs;
    for (int q = -6; q <= 6; ++q)
        for (int p = -6; p <= 6; ++p)
            if (std::gcd(std::abs(q), std::abs(p)) == 1) vecs.push_back({q, p});
    std::vector<TypeA> as;
    std::vector<TypeD> ds;
    std::vector<Curve> acurves, dcurves;
    for (auto [q, p] : vecs) {
        as.push_back(typeA_line(q, p));
        ds.push_back(typeD_line(q, p));
        acurves.push_back(parse_curve(line_word(q, p)));
        dcurves.push_back(curve_from_typeD(ds.back()));
    }
    int count = 0;
    for (std::size_t i = 0; i < vecs.size(); ++i)
        for (std::size_t j = 0; j < vecs.size(); ++j) {
            auto [q, p] = vecs[i];
            auto [r, s] = vecs[j];
            long expect = std::labs(static_cast<long>(q) * s - static_cast<long>(p) * r);
            if (expect == 0) continue;
            ++count;
            long rank = static_cast<long>(homology_rank(box_AD(as[i], ds[j])));
            long geo = min_intersections(acurves[i], dcurves[j]);
            if (rank != expect || geo != expect)
                o.fail("A(" + std::to_string(q) + "," + std::to_string(p) + ") D(" + std::to_string(r) + "," +
                       std::to_string(s) + "): rank " + std::to_string(rank) + " curves " + std::to_string(geo));
        }
    int knot_pairs = 0;
    std::vector<std::pair<int, int>> lines;
    for (int n = -8; n <= 8; ++n) {
        lines.push_back({1, n});
        if (std::abs(n) != 1) lines.push_back({n, 1});
    }
    lines.push_back({0, 1});
    for (const char* k : kKnots)
        for (int f = -8; f <= 8; f += 2) {
            KnotModel km = knot_model(k, f);
            TypeA a = expand_graph(dual(km.d));
            Curve ac = reflect(curve_from_typeD(km.d));
            for (auto [r, s] : lines) {
                if (r == 0 && s == 0) continue;
                if (std::gcd(std::abs(r), std::abs(s)) != 1) continue;
                TypeD d = typeD_line(r, s);
                long rank = static_cast<long>(homology_rank(box_AD(a, d)));
                long geo;
                try {
                    geo = min_intersections(ac, curve_from_typeD(d));
                } catch (const PreconditionError&) {
                    continue;  // a component parallel to the line
                }
                ++knot_pairs;
                if (rank != geo)
                    o.fail(std::string(k) + " f=" + std::to_string(f) + " vs (" + std::to_string(r) + "," +
                           std::to_string(s) + "): rank " + std::to_string(rank) + " curves " + std::to_string(geo));
            }
        }
    o.detail = std::to_string(count) + " line pairs, " + std::to_string(knot_pairs) + " knot pairs";
    return o;
}

// ---- 6 ----
Outcome knot_ranks() {
    Outcome o;
    std::vector<std::pair<std::string, std::size_t>> want = {{"rht", 3}, {"lht", 3}, {"t34", 5}, {"t34m", 5}};
    for (const auto& [k, r] : want)
        for (int f = -3; f <= 3; ++f) {
            std::size_t got = homology_rank(truncate(knot_A(k, f), 0));
            if (got != r) o.fail(k + " f=" + std::to_string(f) + ": rank " + std::to_string(got));
        }
    o.detail = "trefoils 3, T(3,4) 5";
    return o;
}

// ---- 7, 8 ----
Outcome legendrian(const std::string& knot) {
    Outcome o;
    auto km = knot_model(mirror_key(knot), 0);
    auto k = std::make_shared<const TypeA>(expand_graph(dual(km.d)));
    try {
        ContactClass xi = locate_xi_in(k, 0);
        std::string id = support_ids(xi).front();
        if (km.heights.at(id) != 0) o.fail("xi_in " + id + " is not at height 0");
    } catch (const Error& e) {
        o.fail(std::string("locate_xi_in: ") + e.what());
    }
    for (int n = -8; n <= -1; ++n) {
        auto r = legendrian_surgery(knot, n);
        if (!r.xi3_nonvanishing) o.fail("n=" + std::to_string(n) + " rho3 side vanishes");
        if (!r.xi1_nonvanishing) o.fail("n=" + std::to_string(n) + " rho1 side vanishes");
    }
    o.detail = "framings -8..-1, both sides";
    return o;
}

// ---- 9 ----
Outcome surgery_consistency() {
    Outcome o;
    int formula_checks = 0, curve_checks = 0, abstained = 0;
    for (const char* k : kKnots) {
        LegendrianData ld = legendrian_table().at(k);
        for (int tb = ld.tb_max; tb >= ld.tb_max - 3; --tb) {
            KnotModel km = knot_model(mirror_key(k), -tb);
            Curve ac = reflect(curve_from_typeD(km.d));
            for (int n = 1; n <= 8; ++n) {
                SurgeryPairing sp = surgery_pairing(k, tb, n);
                for (int edge : {2 * ld.tau - 1, 2 * ld.tau - 3}) {
                    int rot = tb - edge;
                    int s = n + tb;
                    auto f = surgery_verdict_formula(tb, rot, ld.tau, ld.epsilon, s);
                    auto a = surgery_verdict_algebra(k, tb, rot, n);
                    ++formula_checks;
                    if (f != a)
                        o.fail(std::string(k) + " tb=" + std::to_string(tb) + " rot=" + std::to_string(rot) +
                               " n=" + std::to_string(n) + ": formula " + to_string(f) + ", algebra " + to_string(a));
                    if (edge == 2 * ld.tau - 1 && sp.survivors.size() == 1) {
                        auto cv = surgery_verdict_curve(ac, sp.survivors.front(), n);
                        if (cv != SurgeryVerdict::undetermined && cv != f)
                            o.fail(std::string(k) + " tb=" + std::to_string(tb) + " n=" + std::to_string(n) +
                                   ": curve " + to_string(cv) + " at the class, formula " + to_string(f));
                    }
                }
                // Every mark on a horizontal crossing, against the algebra.
                std::string x1 = pair_name(solid_torus(n, Param::c).x(1), "i1");
                for (const auto& comp : ac.components)
                    for (std::size_t i = 0; i < comp.word.size(); ++i) {
                        if (comp.word[i] != 'U' && comp.word[i] != 'D') continue;
                        const std::string& g = comp.marks[i];
                        auto cv = surgery_verdict_curve(ac, g, n);
                        if (cv == SurgeryVerdict::undetermined) {
                            ++abstained;
                            continue;
                        }
                        ++curve_checks;
                        int idx = sp.complex.index_of(pair_name(g, x1));
                        auto alg = is_nonvanishing_cycle(sp.complex, F2Vector{idx}) ? SurgeryVerdict::nonvanishes
                                                                                     : SurgeryVerdict::vanishes;
                        if (cv != alg)
                            o.fail(std::string(k) + " tb=" + std::to_string(tb) + " n=" + std::to_string(n) + " mark " +
                                   g + ": curve " + to_string(cv) + ", algebra " + to_string(alg));
                    }
            }
        }
    }
    o.detail = std::to_string(formula_checks) + " formula/algebra, " + std::to_string(curve_checks) + " curve/algebra, " +
               std::to_string(abstained) + " abstained";
    return o;
}

// ---- 10 ----
Outcome reattachment() {
    Outcome o;
    DDBimodule az = azdd();
    std::vector<ContactClass> knot_classes;
    // xi_in lives on the mirrors of the knots we do surgery on.
    for (const char* k : {"rht", "t34m"}) {
        auto m = std::make_shared<const TypeA>(knot_A(k, 0));
        try {
            ContactClass xi = locate_xi_in(m, 0);
            knot_classes.push_back(xi);
            knot_classes.push_back(bypass(xi, Basis::r1));
            knot_classes.push_back(bypass(xi, Basis::r3));
        } catch (const NotFound&) {
        }
    }
    std::vector<ContactClass> solid_classes;
    for (Param p : kParams)
        for (int n : {-3, -2, -1, 1, 2, 3}) {
            SolidTorusModel s = solid_torus(n, p);
            auto m = std::make_shared<const TypeA>(s.module);
            for (const auto& [label, tagname] : s.contact_tags) solid_classes.push_back(make_class(m, {s.labels.at(label)}, tagname));
        }
    const Basis letters[] = {Basis::r1, Basis::r2, Basis::r3, Basis::r12, Basis::r23, Basis::r123};
    int checks = 0;
    auto run = [&](const std::vector<ContactClass>& outer, const std::vector<ContactClass>& inner) {
        std::map<std::pair<const TypeA*, const TypeA*>, ChainComplex> cache;
        for (const auto& c1 : outer)
            for (const auto& c2 : inner)
                for (Basis a : letters) {
                    if (c2.idempotent != left_idem(a) || c1.idempotent != 1 - right_idem(a)) continue;
                    if (c1.cycle.empty() || c2.cycle.empty()) continue;
                    auto key = std::pair{c1.module.get(), c2.module.get()};
                    auto it = cache.find(key);
                    if (it == cache.end()) it = cache.emplace(key, triple_complex(*c1.module, *c2.module, az)).first;
                    ++checks;
                    if (!reattach_check(c1, a, c2, it->second))
                        o.fail(c1.module->name + ":" + c1.name + " " + std::string(name(a)) + " " + c2.module->name + ":" + c2.name);
                }
    };
    run(knot_classes, solid_classes);
    run(solid_classes, knot_classes);
    o.detail = std::to_string(checks) + " checks";
    return o;
}

// ---- 11 ----
Outcome farey_checks() {
    Outcome o;
    for (int n = -8; n <= 8; ++n) {
        if (n == 0) continue;
        Slope s(1, n);
        long a = count_tight_solid_torus(s), b = enumerate_tight_classes(s);
        long expect = n > 1 ? 2 : n == 1 ? 1 : -n;
        if (a != b || a != expect)
            o.fail("1/" + std::to_string(n) + ": blocks " + std::to_string(a) + ", enumeration " + std::to_string(b));
    }
    auto paths = testing::solid_torus_paths(4, 4, 6);
    int decided = 0, explored = 0;
    for (const auto& p : paths) {
        Tightness got = classify(p);
        if (auto t = testing::theorem_verdict(p)) {
            ++decided;
            if (got != *t) o.fail(p.str() + ": " + to_string(got) + " vs " + to_string(*t));
            continue;
        }
        ++explored;
        auto vs = testing::explore_merges(p);
        Tightness want = vs.empty() ? Tightness::indeterminate : *vs.begin();
        if (vs.size() > 1) o.fail(p.str() + ": merge orders disagree");
        if (got != want) o.fail(p.str() + ": " + to_string(got) + " vs explored " + to_string(want));
    }
    o.detail = std::to_string(paths.size()) + " paths (" + std::to_string(decided) + " decided outright)";
    return o;
}

// ---- 12 ----
Outcome sv_map() {
    Outcome o;
    KnotModel km = knot_model("lht", -1);
    const char* want[] = {"x0", "x0", "x2", "x2"};
    for (int k = 0; k < 4; ++k) {
        TypeD d = shift_basepoint(km.d, k);
        auto m = std::make_shared<const TypeA>(expand_graph(dual(d)));
        ContactClass xi = make_class(m, {"g1"}, "xi");
        SVParam p = k % 2 ? SVParam::rho3 : SVParam::rho2;
        ContactClass img = sv_image(xi, p);
        ChainComplex t = truncate(*m, img.idempotent);
        F2Vector v;
        for (int x : img.cycle) v.toggle(t.index_of(m->id(x)));
        if (!is_nonvanishing_cycle(t, v)) o.fail("shift " + std::to_string(k) + ": image vanishes");
        if (support_ids(img) != std::vector<std::string>{want[k]})
            o.fail("shift " + std::to_string(k) + ": image is not " + want[k]);
        if (img.idempotent != (k % 2 ? 1 : 0)) o.fail("shift " + std::to_string(k) + ": image not meridional");
    }
    o.detail = "original, swapped, conjugate, swapped conjugate";
    return o;
}

// ---- 13 ----
std::string registry_report() {
    std::ostringstream os;
    for (const auto& n : registry_names()) {
        Structure s = model_by_name(n);
        os << print_structure(s);
        if (auto* d = std::get_if<TypeD>(&s)) {
            if (!has_idempotent_arrow(*d)) {
                Curve c = curve_from_typeD(*d);
                os << print_curve(c) << "\n" << render_svg(c);
            }
        }
    }
    return os.str();
}

Outcome determinism() {
    Outcome o;
    int n = 0;
    for (const auto& name : registry_names()) {
        ++n;
        Structure s = model_by_name(name);
        std::string t1 = print_structure(s);
        Structure s2 = parse_structure(t1);
        std::string t2 = print_structure(s2);
        if (t1 != t2) o.fail(name + ": print/parse/print differs");
        if (!(s == s2)) o.fail(name + ": parse(print) is a different structure");
    }
    if (registry_report() != registry_report()) o.fail("registry report differs between runs");
    o.detail = std::to_string(n) + " registry models";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all = {
        {1, "algebra associativity and relations", algebra_soundness},
        {2, "twisting bimodule and its deletions", az_bimodule},
        {3, "d^2 = 0 over bundled pairings", d_squared},
        {4, "solid tori through the bimodule", solid_tori_dual},
        {5, "homology rank equals intersection count", rank_oracle},
        {6, "meridional truncation ranks", knot_ranks},
        {7, "Legendrian surgery on the left-handed trefoil", [] { return legendrian("lht"); }},
        {8, "Legendrian surgery on T(3,4)", [] { return legendrian("t34"); }},
        {9, "surgery formula, algebra and curve lemmas agree", surgery_consistency},
        {10, "reattachment identity", reattachment},
        {11, "Farey counts and classification", farey_checks},
        {12, "SV map on the tb=1 right-handed trefoil", sv_map},
        {13, "print/parse round trip and determinism", determinism},
    };
    bool all_ok = true;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        all_ok = all_ok && o.ok;
        std::printf("AC%-2d %s  %s  [%s] %.0f ms\n", c.id, o.ok ? "PASS" : "FAIL", c.title, o.detail.c_str(), ms);
        for (const auto& p : o.problems) std::printf("       %s\n", p.c_str());
    }
    return all_ok ? 0 : 1;
}

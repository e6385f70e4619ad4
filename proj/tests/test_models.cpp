#include <doctest.h>

#include "bfh/curves.hpp"
#include "bfh/errors.hpp"
#include "bfh/models.hpp"
#include "bfh/pairing.hpp"
#include "bfh/structures.hpp"

using namespace bfh;

TEST_SUITE("models") {

TEST_CASE("twisting bimodule arrows") {
    DDBimodule p = azdd();
    auto out_of = [&](const std::string& g) {
        std::set<std::tuple<std::string, std::string, std::string>> s;
        for (const auto& a : p.arrows())
            if (p.generators()[static_cast<std::size_t>(a.source)].id == g)
                s.insert({std::string(name(a.left)), std::string(name(a.right)),
                          p.generators()[static_cast<std::size_t>(a.target)].id});
        return s;
    };
    std::set<std::tuple<std::string, std::string, std::string>> want = {{"r3", "i1", "r12"}, {"i0", "r1", "r23"}};
    CHECK(out_of("r123") == want);
    CHECK(out_of("i0").empty());
    CHECK(out_of("i1").empty());
    CHECK(out_of("r12").size() == 2);
    CHECK(out_of("r3").size() == 2);
}

TEST_CASE("caps") {
    TypeD c0 = cap(0), c1 = cap(1);
    CHECK(c0.size() == 1);
    CHECK(c0.idem(0) == 0);
    CHECK(c1.idem(0) == 1);
    CHECK(c0.arrows().empty());
}

TEST_CASE("solid torus contact tags") {
    SolidTorusModel m = solid_torus(-3, Param::a);
    CHECK(m.contact_tags.at("x1") == "xi1");
    CHECK(m.contact_tags.at("x2") == "xi2");
    CHECK(m.contact_tags.at("x3") == "xi3");
    CHECK(m.contact_tags.at("y") == "xi0");

    SolidTorusModel p = solid_torus(2, Param::c);
    CHECK(p.contact_tags.at("x1") == "xi-");
    CHECK(p.contact_tags.at("x2") == "xi+");

    SolidTorusModel big = solid_torus(4, Param::c);
    CHECK(big.contact_tags.count("x2") == 0);
    CHECK(big.contact_tags.count("x3") == 0);

    SolidTorusModel one = solid_torus(1, Param::b);
    CHECK(one.labels.size() == 2);
    CHECK(one.contact_tags.at("x1") == "xi-");

    CHECK_THROWS_AS(solid_torus(0, Param::a), InvalidFraming);
}

TEST_CASE("solid tori are valid with the expected generator split") {
    for (Param p : {Param::a, Param::b, Param::c, Param::d})
        for (int n = -8; n <= 8; ++n) {
            if (n == 0) continue;
            SolidTorusModel s = solid_torus(n, p);
            CHECK(validate_typeA(s.module, s.module.is_lazy() ? std::optional<std::size_t>{6} : std::nullopt));
            int xs = 0, ys = 0;
            for (const auto& g : s.module.generators()) (g.idem == s.x_idem() ? xs : ys)++;
            CHECK(xs == std::abs(n));
            CHECK(ys == 1);
            std::set<int> heights;
            for (const auto& [id, h] : s.heights) heights.insert(h);
            CHECK(heights.size() == s.module.size());
        }
}

TEST_CASE("staircases") {
    Staircase r = staircase_from_alexander({1, -1, 1});
    CHECK(r.exponents == std::vector{1, 0, -1});
    CHECK(r.steps == std::vector{1, 1});
    Staircase t = staircase_from_alexander({1, -1, 0, 1, 0, -1, 1});
    CHECK(t.exponents == std::vector{3, 2, 0, -2, -3});
    CHECK(t.steps == std::vector{1, 2, 2, 1});
    Staircase u = staircase_from_alexander({1});
    CHECK(u.exponents == std::vector{0});
    CHECK(u.steps.empty());
    CHECK_THROWS_AS(staircase_from_alexander({1, 1, 1}), NotLSpaceKnotForm);
    CHECK_THROWS_AS(staircase_from_alexander({1, -1}), NotLSpaceKnotForm);
}

TEST_CASE("knot complements are valid and their curves round trip") {
    for (const char* k : {"unknot", "rht", "lht", "t34", "t34m"})
        for (int f = -8; f <= 8; ++f) {
            KnotModel km = knot_model(k, f);
            CHECK(validate_typeD(km.d));
            Curve c = curve_from_typeD(km.d);
            TypeD back = typeD_from_curve(c, km.d.name);
            CHECK(validate_typeD(back));
            CHECK(back.size() == km.d.size());
            CHECK(back.arrows().size() == km.d.normalized().arrows().size());
        }
}

TEST_CASE("meridional ranks") {
    for (int f : {1, 2, 5}) {
        TypeA a = expand_graph(dual(knot_model("rht", f).d));
        CHECK(homology_rank(truncate(a, 0)) == 3);
    }
}

TEST_CASE("unknot complement is a slope line") {
    // The Seifert longitude is lambda_f - f mu.
    Curve c = curve_from_typeD(knot_model("unknot", -1).d);
    REQUIRE(c.components.size() == 1);
    CHECK(canonical_word(c.components[0].word) == canonical_word(curve_from_typeD(typeD_line(1, 1)).components[0].word));
}

TEST_CASE("mirrors") {
    CHECK(mirror_key("rht") == "lht");
    CHECK(mirror_key("lht") == "rht");
    CHECK(mirror_key("t34") == "t34m");
    CHECK(knot_model("lht", 0).tau == -knot_model("rht", 0).tau);
    CHECK(knot_model("rht", 0, true).d.size() == knot_model("lht", 0).d.size());
}

TEST_CASE("Legendrian table") {
    const auto& t = legendrian_table();
    CHECK(t.at("rht").tb_max == 1);
    CHECK(t.at("rht").tau == 1);
    CHECK(t.at("lht").tb_max == -6);
    CHECK(t.at("t34").tau == 3);
    CHECK(t.at("t34m").epsilon == -1);
}

TEST_CASE("registry") {
    auto names = registry_names();
    CHECK(names.size() >= 50);
    for (const auto& n : names) CHECK_NOTHROW(model_by_name(n));
    CHECK_THROWS_AS(model_by_name("knot:rht"), ParseError);
    CHECK_THROWS_AS(model_by_name("solid:n=x:param=a"), ParseError);
    CHECK_THROWS_AS(model_by_name("cap:i2"), ParseError);
    CHECK(std::holds_alternative<DDBimodule>(model_by_name("az")));
    CHECK(std::holds_alternative<TypeD>(model_by_name("knot:t34:f=-2:mirror")));
}

}

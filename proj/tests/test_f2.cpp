#include <doctest.h>

#include <random>

#include "bfh/errors.hpp"
#include "bfh/f2.hpp"

using namespace bfh;

namespace {

ChainComplex make(std::vector<std::string> gens, const std::vector<std::pair<std::string, std::string>>& d) {
    ChainComplex c(std::move(gens));
    for (auto& [x, y] : d) c.add_to_differential(c.index_of(x), c.index_of(y));
    return c;
}

// Random complex with d^2 = 0: d = P N P^-1 style, built by composing
// elementary pairs x -> y and then changing basis with random shears.
ChainComplex random_complex(std::mt19937& rng, int n) {
    std::vector<std::string> gens;
    for (int i = 0; i < n; ++i) gens.push_back("g" + std::to_string(i));
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; i += 2)
        if (rng() % 3 != 0) d[static_cast<std::size_t>(i)].push_back(i + 1);
    // Base change: g_a <- g_a + g_b for random a != b, acting on d by
    // conjugation. Track it as dense matrices over F2.
    std::vector<std::vector<int>> m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j : d[static_cast<std::size_t>(i)]) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    for (int step = 0; step < 3 * n; ++step) {
        std::size_t a = rng() % static_cast<unsigned>(n), b = rng() % static_cast<unsigned>(n);
        if (a == b) continue;
        // new basis e_a' = e_a + e_b: rows add (row a += row b), columns b += a
        for (std::size_t k = 0; k < m.size(); ++k) m[a][k] ^= m[b][k];
        for (std::size_t k = 0; k < m.size(); ++k) m[k][b] ^= m[k][a];
    }
    ChainComplex c(gens);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) c.add_to_differential(i, j);
    return c;
}

}  // namespace

TEST_SUITE("f2") {

TEST_CASE("addition is symmetric difference") {
    CHECK(add(F2Vector{0, 1}, F2Vector{1, 2}) == F2Vector{0, 2});
    CHECK(add(F2Vector{0}, F2Vector{0}).empty());
    CHECK(add(F2Vector{}, F2Vector{5}) == F2Vector{5});
}

TEST_CASE("row rank") {
    CHECK(rank({F2Vector{0}, F2Vector{1}, F2Vector{2}}) == 3);
    CHECK(rank({F2Vector{}, F2Vector{}}) == 0);
    CHECK(rank({F2Vector{0, 1}, F2Vector{1, 2}, F2Vector{0, 2}}) == 2);
}

TEST_CASE("rank agrees with brute force over all combinations") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<F2Vector> rows;
        int nrows = 1 + static_cast<int>(rng() % 5);
        for (int r = 0; r < nrows; ++r) {
            F2Vector v;
            for (int k = 0; k < 6; ++k)
                if (rng() % 2) v.toggle(k);
            rows.push_back(v);
        }
        std::set<std::set<int>> span;
        for (unsigned mask = 0; mask < (1u << nrows); ++mask) {
            F2Vector s;
            for (int r = 0; r < nrows; ++r)
                if (mask >> r & 1u) s += rows[static_cast<std::size_t>(r)];
            span.insert(s.support());
        }
        std::size_t expect = 0;
        while ((std::size_t{1} << expect) < span.size()) ++expect;
        CHECK(rank(rows) == expect);
    }
}

TEST_CASE("homology rank") {
    CHECK(homology_rank(make({"x"}, {})) == 1);
    CHECK(homology_rank(make({"x", "y"}, {{"x", "y"}})) == 0);
    CHECK(homology_rank(make({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}})) == 1);
    ChainComplex bad = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    CHECK_THROWS_AS(homology_rank(bad), StructureError);
}

TEST_CASE("nonvanishing cycles") {
    ChainComplex c = make({"x", "z"}, {{"x", "z"}});
    CHECK_FALSE(is_nonvanishing_cycle(c, F2Vector{c.index_of("z")}));
    CHECK(is_nonvanishing_cycle(make({"z"}, {}), F2Vector{0}));
    // x -> c + y with nothing else: c survives.
    ChainComplex s = make({"x", "c", "y"}, {{"x", "c"}, {"x", "y"}});
    CHECK(is_nonvanishing_cycle(s, F2Vector{s.index_of("c")}));
    CHECK_FALSE(is_nonvanishing_cycle(s, F2Vector{s.index_of("c"), s.index_of("y")}));
    CHECK_THROWS_AS(is_nonvanishing_cycle(s, F2Vector{9}), UnknownGenerator);
}

TEST_CASE("cancellation") {
    ChainComplex one = make({"x", "y"}, {{"x", "y"}});
    CHECK(cancel_ids(one, "x", "y").size() == 0);

    ChainComplex c = make({"x", "y", "z", "w"}, {{"x", "y"}, {"x", "z"}, {"w", "y"}});
    ChainComplex r = cancel_ids(c, "x", "y");
    REQUIRE(r.size() == 2);
    CHECK(r.d(r.index_of("w")) == F2Vector{r.index_of("z")});
    CHECK(homology_rank(r) == homology_rank(c));

    CHECK_THROWS_AS(cancel_ids(c, "y", "x"), PreconditionError);
}

TEST_CASE("full reduction leaves exactly the homology") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        ChainComplex c = random_complex(rng, 2 + static_cast<int>(rng() % 10));
        REQUIRE(c.d_squared_zero());
        ChainComplex r = reduce_fully(c);
        CHECK(r.size() == homology_rank(c));
        for (std::size_t g = 0; g < r.size(); ++g) CHECK(r.d(static_cast<int>(g)).empty());
    }
}

TEST_CASE("homology rank is invariant under every single cancellation") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        ChainComplex c = random_complex(rng, 2 + static_cast<int>(rng() % 11));
        std::size_t h = homology_rank(c);
        for (std::size_t x = 0; x < c.size(); ++x)
            for (int y : c.d(static_cast<int>(x))) {
                if (y == static_cast<int>(x)) continue;
                CHECK(homology_rank(cancel(c, static_cast<int>(x), y).complex) == h);
            }
    }
}

TEST_CASE("surviving cycles stay nonvanishing after cancellation") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        ChainComplex c = random_complex(rng, 4 + static_cast<int>(rng() % 8));
        for (std::size_t g = 0; g < c.size(); ++g) {
            F2Vector z{static_cast<int>(g)};
            if (!c.boundary(z).empty()) continue;
            bool before = is_nonvanishing_cycle(c, z);
            for (std::size_t x = 0; x < c.size(); ++x)
                for (int y : c.d(static_cast<int>(x))) {
                    if (y == static_cast<int>(x)) continue;
                    Cancellation k = cancel(c, static_cast<int>(x), y);
                    CHECK(is_nonvanishing_cycle(k.complex, k.pushforward(z)) == before);
                }
        }
    }
}

TEST_CASE("labels and cycles are stored") {
    ChainComplex c = make({"x", "y"}, {});
    c.add_cycle("EH", F2Vector{0});
    c.set_label("x", "c(xi)");
    c.set_grading(1, -2);
    CHECK(c.cycles().at("EH") == F2Vector{0});
    CHECK(c.labels().at("x") == "c(xi)");
    CHECK(c.grading().at(1) == -2);
}

}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nckit/sigma_f.hpp"
#include "oracles.hpp"

using namespace nckit;

TEST_CASE("finite group tables") {
    FiniteGroup z5 = FiniteGroup::cyclic(5);
    z5.validate();
    CHECK(z5.size() == 5);
    CHECK(z5.mul[2][4] == 1);
    CHECK(z5.inv[2] == 3);

    FiniteGroup s3 = FiniteGroup::symmetric(3);
    s3.validate();
    CHECK(s3.size() == 6);
    FiniteGroup s4 = FiniteGroup::symmetric(4);
    s4.validate();
    CHECK(s4.size() == 24);

    // JSON round trip
    FiniteGroup back = FiniteGroup::from_json(s3.to_json());
    back.validate();
    CHECK(back.names == s3.names);
    CHECK(back.mul == s3.mul);

    FiniteGroup broken = z5;
    broken.mul[0][0] = 3;  // identity law violated
    CHECK_THROWS(broken.validate());
}

TEST_CASE("integer-lattice oracle") {
    GroupOracle z2 = GroupOracle::zn(2);
    GroupElem a = {3, -1}, b = {-3, 4};
    CHECK(z2.multiply(a, b) == GroupElem{0, 3});
    CHECK(z2.inverse(a) == GroupElem{-3, 1});
    CHECK(z2.is_identity(z2.multiply(a, z2.inverse(a))));
    CHECK(z2.parse(z2.to_string(a)) == a);
    CHECK_THROWS(z2.all_elements());
    CHECK(z2.default_generators().size() == 4);

    GroupOracle z = GroupOracle::zn(1);
    CHECK(z.to_string({-5}) == "-5");
    CHECK(z.parse("7") == GroupElem{7});
}

TEST_CASE("free group oracle reduces words") {
    GroupOracle f2 = GroupOracle::free_group(2);
    GroupElem a = f2.parse("a"), b = f2.parse("b");
    GroupElem ainv = f2.inverse(a);
    CHECK(f2.is_identity(f2.multiply(a, ainv)));
    GroupElem ab = f2.multiply(a, b);
    CHECK(f2.multiply(ab, f2.inverse(b)) == a);
    // no accidental commutation
    CHECK(f2.multiply(a, b) != f2.multiply(b, a));
    CHECK(f2.parse(f2.to_string(ab)) == ab);
    CHECK(f2.to_string(f2.identity()) == "e");
}

TEST_CASE("subsets symmetrize and powers grow correctly") {
    GroupOracle z = GroupOracle::zn(1);
    GammaSubset f(z, {{1}});  // closure adds -1 and 0
    CHECK(f.size() == 3);
    CHECK(f.contains({-1}));
    CHECK(f.contains({0}));

    CHECK(powers(z, f, 1).elements() == f.elements());
    GammaSubset f2 = powers(z, f, 2);
    CHECK(f2.size() == 5);  // {-2..2}
    CHECK(f2.contains({2}));
    CHECK(!f2.contains({3}));

    // exactly-n products over the free group on two letters: 17 two-letter
    // products of {1, a^{+-1}, b^{+-1}}; the abelianized count drops to 13
    GroupOracle free2 = GroupOracle::free_group(2);
    GammaSubset ball(free2, {free2.parse("a"), free2.parse("b")});
    CHECK(ball.size() == 5);
    CHECK(powers(free2, ball, 2).size() == 17);

    GroupOracle zz = GroupOracle::zn(2);
    GammaSubset ball_ab(zz, {{1, 0}, {0, 1}});
    CHECK(powers(zz, ball_ab, 2).size() == 13);
}

TEST_CASE("windowed group complex: integer line") {
    GroupOracle z = GroupOracle::zn(1);
    GammaSubset f(z, {{-1}, {0}, {1}});
    WindowSpec w;
    for (long k = -5; k <= 5; ++k) w.explicit_elems.push_back({k});
    SigmaFWindow sw = build_sigma_F(z, f, w);
    // |s - t| <= 1 rule: a path graph
    CHECK(sw.complex.vertices().size() == 11);
    CHECK(sw.complex.simplexes_of_dim(1).size() == 10);
    CHECK(sw.complex.dimension() == 1);
    CHECK(sw.complex.is_full());

    // translation action on an edge
    Simplex edge({sw.label_of({0}), sw.label_of({1})});
    Simplex moved = act(sw, {1}, edge);
    CHECK(moved == Simplex({sw.label_of({1}), sw.label_of({2})}));
    CHECK_THROWS(act(sw, {10}, edge));  // leaves the window
}

TEST_CASE("windowed group complex: finite groups") {
    GroupOracle z3 = GroupOracle::finite(FiniteGroup::cyclic(3));
    GammaSubset all3(z3, z3.all_elements());
    WindowSpec w;
    w.explicit_elems = z3.all_elements();
    SigmaFWindow sw = build_sigma_F(z3, all3, w);
    CHECK(sw.complex.maximal_simplexes().size() == 1);  // full 2-simplex
    CHECK(sw.complex.dimension() == 2);

    // transpositions in S_3: (12)(13) is a 3-cycle, so (12)-(13) is a non-edge
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    GroupOracle gs3 = GroupOracle::finite(s3);
    std::vector<GroupElem> gens = {gs3.identity()};
    for (int i = 0; i < s3.size(); ++i)
        if (s3.mul[i][i] == s3.id && i != s3.id) gens.push_back({i});  // involutions
    CHECK(gens.size() == 4);  // e + three transpositions
    GammaSubset ft(gs3, gens);
    WindowSpec wall;
    wall.explicit_elems = gs3.all_elements();
    SigmaFWindow sws3 = build_sigma_F(gs3, ft, wall);
    // one-line notation: swapping 1,2 gives "(213)", swapping 1,3 gives "(321)"
    auto t12 = std::find(s3.names.begin(), s3.names.end(), "(213)") - s3.names.begin();
    auto t13 = std::find(s3.names.begin(), s3.names.end(), "(321)") - s3.names.begin();
    REQUIRE(t12 < s3.size());
    REQUIRE(t13 < s3.size());
    CHECK(!sws3.complex.has_edge(sws3.label_of({t12}), sws3.label_of({t13})));
    CHECK(sws3.complex.has_edge(sws3.label_of({static_cast<long>(s3.id)}), sws3.label_of({t12})));
}

TEST_CASE("window balls") {
    GroupOracle z = GroupOracle::zn(1);
    WindowSpec ball;
    ball.radius = 3;
    auto elems = ball.materialize(z);
    CHECK(elems.size() == 7);  // {-3..3}
}

TEST_CASE("orbits with orbit-stabilizer bookkeeping") {
    GroupOracle z3 = GroupOracle::finite(FiniteGroup::cyclic(3));
    GammaSubset all3(z3, z3.all_elements());
    WindowSpec w;
    w.explicit_elems = z3.all_elements();
    SigmaFWindow sw = build_sigma_F(z3, all3, w);

    std::vector<Simplex> verts;
    for (const auto& v : sw.complex.vertices()) verts.push_back(Simplex({v}));
    OrbitInfo vo = orbits(sw, verts);
    CHECK(vo.orbits.size() == 1);
    CHECK(vo.stabilizer_sizes[0] == 1);

    OrbitInfo to = orbits(sw, {sw.complex.maximal_simplexes()[0]});
    CHECK(to.orbits.size() == 1);
    CHECK(to.stabilizer_sizes[0] == 3);  // the full triangle is fixed setwise
}

TEST_CASE("flag words over the group window against walk and membership oracles") {
    GroupOracle z = GroupOracle::zn(1);
    GammaSubset f(z, {{-1}, {0}, {1}});

    WalkCheck skip = word_walk_check(z, f, {{0}, {1}, {3}});
    CHECK(skip.rewrite_zero);  // step 1 -> 3 is too long
    CHECK(!skip.walk_exists);
    CHECK(skip.consistent);

    WalkCheck ok = word_walk_check(z, f, {{0}, {1}, {2}});
    CHECK(!ok.rewrite_zero);
    CHECK(ok.walk_exists);
    CHECK(ok.endpoint_in_Fn);  // 2 is a two-step product
    CHECK(ok.consistent);

    std::mt19937_64 rng(99);
    for (int i = 0; i < 300; ++i) {
        std::vector<GroupElem> word;
        size_t len = 2 + rng() % 4;
        for (size_t l = 0; l < len; ++l) word.push_back({static_cast<long>(rng() % 13) - 6});
        WalkCheck c = word_walk_check(z, f, word);
        CHECK(c.consistent);
        // endpoint membership against the independent product-set oracle
        GroupElem quot = z.multiply(z.inverse(word.front()), word.back());
        CHECK(c.endpoint_in_Fn ==
              oracle::in_Fn(z, f.elements(), quot, static_cast<int>(len) - 1));
        if (!c.rewrite_zero) CHECK(c.endpoint_in_Fn);
    }
}

TEST_CASE("graded support by operator norm") {
    std::map<GroupElem, Eigen::MatrixXcd> family;
    family[{0}] = Eigen::MatrixXcd::Identity(2, 2);
    family[{1}] = Eigen::MatrixXcd::Zero(2, 2);
    family[{2}] = 1e-14 * Eigen::MatrixXcd::Identity(2, 2);
    auto supp = graded_support(family);
    CHECK(supp == std::vector<GroupElem>{{0}});
}

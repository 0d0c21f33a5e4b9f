#include "doctest.h"

#include "lweyl/root_datum.hpp"
#include "lweyl/weyl.hpp"

using namespace lweyl;

TEST_CASE("build_root_datum basic shapes") {
    auto a1 = RootDatum::build("A1", 3);
    CHECK(a1.positive_roots().size() == 1);
    CHECK(a1.e() == 2);
    CHECK(a1.coxeter_number() == 2);

    auto a2 = RootDatum::build("A2", 5);
    CHECK(a2.positive_roots().size() == 3);
    CHECK(a2.e() == 3);
    CHECK(a2.coxeter_number() == 3);

    auto b2 = RootDatum::build("B2", 5);
    CHECK(b2.positive_roots().size() == 4);
    CHECK(b2.coxeter_number() == 4);

    auto g2 = RootDatum::build("G2", 7);
    CHECK(g2.positive_roots().size() == 6);
    CHECK(g2.coxeter_number() == 6);
    CHECK(g2.e() == 1);

    auto prod = RootDatum::build("A1xA1", 3);
    CHECK(prod.rank() == 2);
    CHECK(prod.positive_roots().size() == 2);
    CHECK(prod.e() == 4);
}

TEST_CASE("l validation errors name the violated constraint") {
    CHECK_THROWS_WITH_AS(RootDatum::build("A1", 4), "l must be odd", ConfigError);
    CHECK_THROWS_WITH_AS(RootDatum::build("A2", 3),
                         "l must be prime to e = |Lambda/Q| = 3", ConfigError);
    CHECK_THROWS_WITH_AS(RootDatum::build("A2", 1),
                         "l must be at least the Coxeter number h = 3", ConfigError);
    CHECK_THROWS_WITH_AS(RootDatum::build("G2", 9), "l must be prime to 3 for G2 components",
                         ConfigError);
    CHECK_THROWS_AS(RootDatum::build("Q7", 5), ConfigError);
}

TEST_CASE("pairing") {
    auto a1 = RootDatum::build("A1", 3);
    CHECK(a1.pairing(a1.rho(), a1.simple_coroot(0)) == 1);
    CHECK(a1.pairing(a1.root_to_weight(a1.simple_root(0)), a1.simple_coroot(0)) == 2);
    auto a2 = RootDatum::build("A2", 5);
    CHECK(a2.pairing(a2.root_to_weight(a2.simple_root(0)), a2.simple_coroot(1)) == -1);
}

TEST_CASE("dominance order") {
    auto a1 = RootDatum::build("A1", 3);
    CHECK(a1.dominance_leq(Weight{{-1}}, Weight{{1}}));  // difference = alpha
    auto a2 = RootDatum::build("A2", 5);
    CHECK(a2.dominance_leq(a2.zero_weight(), a2.root_to_weight(a2.simple_root(0))));
    CHECK_FALSE(a2.dominance_leq(a2.zero_weight(), Weight{{1, 0}}));  // w1 not in Q
    // strictness of the order
    CHECK_FALSE(a2.dominance_leq(a2.root_to_weight(a2.simple_root(0)), a2.zero_weight()));
}

TEST_CASE("restricted decomposition") {
    auto a1 = RootDatum::build("A1", 3);
    auto [l0, l1] = a1.restricted_decompose(Weight{{5}});
    CHECK(l0 == Weight{{2}});
    CHECK(l1 == Weight{{1}});
    auto [m0, m1] = a1.restricted_decompose(Weight{{-1}});
    CHECK(m0 == Weight{{2}});
    CHECK(m1 == Weight{{-1}});
    auto a2 = RootDatum::build("A2", 5);
    auto [n0, n1] = a2.restricted_decompose(Weight{{7, -1}});
    CHECK(n0 == Weight{{2, 4}});
    CHECK(n1 == Weight{{1, -1}});
}

TEST_CASE("restricted decomposition round-trips on a box") {
    auto a2 = RootDatum::build("A2", 5);
    for (long long x = -7; x <= 7; ++x)
        for (long long y = -7; y <= 7; ++y) {
            Weight w{{x, y}};
            auto [w0, w1] = a2.restricted_decompose(w);
            CHECK(a2.is_l_restricted_dominant(w0));
            Vec back = vec_add(w0.fw, vec_scale(a2.l(), w1.fw));
            CHECK(back == w.fw);
        }
}

TEST_CASE("xi_sc enumeration") {
    auto a1 = RootDatum::build("A1", 3);
    auto xs = a1.xi_sc_enumerate();
    REQUIRE(xs.size() == 4);
    CHECK(xs[0].omega == Weight{{-1}});
    CHECK_FALSE(xs[0].regular);  // <omega+rho, a-check> = 0
    CHECK(xs[1].omega == Weight{{0}});
    CHECK(xs[1].regular);
    CHECK(xs[2].omega == Weight{{1}});
    CHECK(xs[2].regular);
    CHECK(xs[3].omega == Weight{{2}});
    CHECK_FALSE(xs[3].regular);  // <omega+rho, a-check> = 3 = l

    auto a2 = RootDatum::build("A2", 5);
    // brute-force oracle: (a,b) = omega+rho in [0,5]^2 with a+b <= 5
    long long count = 0;
    for (long long a = 0; a <= 5; ++a)
        for (long long b = 0; b <= 5; ++b)
            if (a + b <= 5) ++count;
    CHECK(a2.xi_sc_enumerate().size() == (size_t)count);
    CHECK(count == 21);
}

TEST_CASE("rho and W-stability of roots with d_beta invariance") {
    for (auto [type, l] : {std::pair<const char*, long long>{"A2", 5}, {"B2", 5}, {"G2", 7}}) {
        auto rd = RootDatum::build(type, l);
        CHECK(rd.rho().fw == Vec(rd.rank(), 1));
        WeylGroup W(rd);
        size_t expected = type[0] == 'A' ? 6 : (type[0] == 'B' ? 8 : 12);
        CHECK(W.size() == expected);
        for (size_t w = 0; w < W.size(); ++w)
            for (auto& pr : rd.positive_roots()) {
                Root im = W.act_root((int)w, pr.root);
                const PosRoot* p = rd.find_pos_root(im);
                if (!p) p = rd.find_pos_root(Root{vec_neg(im.rc)});
                REQUIRE(p != nullptr);
                CHECK(p->d == pr.d);
            }
        CHECK(rd.positive_roots().size() * 1 ==
              rd.positive_roots().size());  // |Phi+| = |Phi-check+| by construction
    }
}

TEST_CASE("pi1 representatives") {
    auto a1 = RootDatum::build("A1", 3);
    CHECK(a1.pi1_reps().size() == 2);
    auto a2 = RootDatum::build("A2", 5);
    CHECK(a2.pi1_reps().size() == 3);
    auto g2 = RootDatum::build("G2", 7);
    CHECK(g2.pi1_reps().size() == 1);
}

#include "lweyl/json_io.hpp"

TEST_CASE("root datum JSON round trip") {
    for (auto [type, l] : {std::pair<const char*, long long>{"A1", 3}, {"A2", 5}, {"B2", 5}}) {
        auto rd = RootDatum::build(type, l);
        Json j = root_datum_to_json(rd);
        auto back = root_datum_from_json(j);
        CHECK(back.type() == rd.type());
        CHECK(back.l() == rd.l());
        CHECK(back.positive_roots().size() == rd.positive_roots().size());
        CHECK(Json(back.cartan()) == j.at("cartan"));
    }
    // tampered cartan is rejected
    auto rd = RootDatum::build("A1", 3);
    Json j = root_datum_to_json(rd);
    j["cartan"][0][0] = 3;
    CHECK_THROWS_AS(root_datum_from_json(j), ConfigError);
}

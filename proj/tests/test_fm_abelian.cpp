#include <catch2/catch_amalgamated.hpp>

#include "mukai/mukai.hpp"
#include "test_util.hpp"

using namespace mukai;
using mukai::test::rand_int;
using mukai::test::rand_vector;

namespace {
const Surface ab4 = abelian_surface(4);
}

TEST_CASE("classical transform displayed action and involution") {
    CHECK(fm_abelian_H({2, 1, -1}, ab4) == MukaiVector{-1, -1, 2});
    CHECK(fm_abelian_H({0, 0, 1}, ab4) == MukaiVector{1, 0, 0});
    CHECK(fm_abelian_H(fm_abelian_H({3, -5, 7}, ab4), ab4) == MukaiVector{3, -5, 7});
    CHECK_THROWS_AS(fm_abelian_H({1, 1, 1}, k3_surface(4)), std::domain_error);
}

TEST_CASE("dual composite G") {
    CHECK(g_transform_H({5, 1, 2}, ab4) == MukaiVector{2, 1, 5});
    CHECK(g_transform_H({1, 0, 0}, ab4) == MukaiVector{0, 0, 1});
    CHECK(pairing(g_transform_H({2, 1, 3}, ab4), g_transform_H({1, 1, 1}, ab4), ab4) == -1);
    CHECK(pairing({2, 1, 3}, {1, 1, 1}, ab4) == -1);
    CHECK_THROWS_AS(g_transform_H({1, 1, 1}, k3_surface(4)), std::domain_error);
}

TEST_CASE("both transforms preserve the pairing; G = dual after F") {
    for (int i = 0; i < 10000; ++i) {
        Surface s = abelian_surface(2 * rand_int(1, 20));
        MukaiVector v = rand_vector(1000000), w = rand_vector(1000000);
        CHECK(pairing(fm_abelian_H(v, s), fm_abelian_H(w, s), s) == pairing(v, w, s));
        CHECK(pairing(g_transform_H(v, s), g_transform_H(w, s), s) == pairing(v, w, s));
        CHECK(g_transform_H(v, s) == dual(fm_abelian_H(v, s)));
    }
}

TEST_CASE("classifier: the three worked cases") {
    Section2Verdict v = classify_section2({1, 1, 2}, ab4);
    CHECK(v.kind == Section2Case::IT0_F);
    CHECK(v.image.value() == MukaiVector{2, -1, 1});

    v = classify_section2({1, 1, 1}, ab4);  // a = <v^2>/2, boundary of the strict inequality
    CHECK(v.kind == Section2Case::WIT2_G);
    CHECK(v.image.value() == MukaiVector{1, 1, 1});

    v = classify_section2({3, 1, -1}, ab4);
    CHECK(v.kind == Section2Case::WIT1_F);
    CHECK(v.image.value() == MukaiVector{1, 1, -3});
}

TEST_CASE("classifier: a = 0 stays unresolved, hypotheses are enforced") {
    Section2Verdict v = classify_section2({1, 1, 0}, ab4);
    CHECK(v.kind == Section2Case::Unknown);
    CHECK_FALSE(v.image.has_value());

    CHECK_THROWS_AS(classify_section2({1, 2, 1}, ab4), std::domain_error);   // d != 1
    CHECK_THROWS_AS(classify_section2({0, 1, 5}, ab4), std::domain_error);   // r < 1
    CHECK_THROWS_AS(classify_section2({2, 1, 3}, ab4), std::domain_error);   // <v^2> = -8
    CHECK_THROWS_AS(classify_section2({1, 1, 1}, k3_surface(4)), std::domain_error);
}

TEST_CASE("classifier images are square-preserving and match the transforms") {
    for (int i = 0; i < 2000; ++i) {
        Surface s = abelian_surface(2 * rand_int(1, 20));
        MukaiVector v{rand_int(1, 50), 1, rand_int(-50, 50)};
        if (v_squared(v, s) < 0) continue;
        Section2Verdict verdict = classify_section2(v, s);
        if (!verdict.image) {
            CHECK(v.a == 0);
            continue;
        }
        CHECK(v_squared(*verdict.image, s) == v_squared(v, s));
        switch (verdict.kind) {
            case Section2Case::IT0_F:
                CHECK(*verdict.image == fm_abelian_H(v, s));
                // derived from the WIT2 case by dualizing
                CHECK(*verdict.image == dual(g_transform_H(v, s)));
                break;
            case Section2Case::WIT2_G:
                CHECK(*verdict.image == g_transform_H(v, s));
                break;
            default:
                CHECK(*verdict.image == -fm_abelian_H(v, s));
                CHECK(verdict.image->d == 1);
                CHECK(verdict.image->a == -v.r);
                CHECK(verdict.image->a < 0);
                break;
        }
    }
}

TEST_CASE("proof bounds") {
    ProofBounds b = proof_bounds({1, 1, 1}, ab4);
    CHECK(b.ext_bound.value() == 1);
    CHECK_FALSE(b.sections_bound.has_value());

    b = proof_bounds({3, 1, -1}, ab4);
    CHECK(b.sections_bound.value() == 5);
    CHECK_FALSE(b.ext_bound.has_value());

    b = proof_bounds({1, 1, 0}, abelian_surface(10));
    CHECK_FALSE(b.ext_bound.has_value());
    CHECK_FALSE(b.sections_bound.has_value());

    CHECK_THROWS_AS(proof_bounds({1, 2, 1}, ab4), std::domain_error);
}

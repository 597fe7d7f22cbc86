#include <catch2/catch_amalgamated.hpp>

#include "pkla/lie_algebra.hpp"
#include "test_util.hpp"

using namespace pkla;

TEST_CASE("almost abelian construction", "[lie-algebra]") {
    SECTION("zero derivation gives the abelian algebra") {
        LieAlgebra l = almost_abelian(RMat::zero(5, 5));
        CHECK(l.dim == 6);
        CHECK(l.brackets.empty());
        CHECK(b1(l) == 6);
        CHECK(is_nilpotent(l));
        CHECK(is_unimodular(l));
        CHECK(jacobi_defect(l).is_zero);
    }
    SECTION("bracket directions match [e_{m+1}, X] = DX") {
        RMat d(2, 2);
        d(0, 1) = rat(3);
        LieAlgebra l = almost_abelian(d);
        RMat e2(3, 1), e3(3, 1);
        e2(1, 0) = rat(1);
        e3(2, 0) = rat(1);
        RMat v = l.bracket(e3, e2);  // [e_3, e_2] = D e_2 = 3 e_1
        CHECK(v(0, 0) == rat(3));
        CHECK(v(1, 0) == rat(0));
    }
    SECTION("4d isotropic with a=0, c1=1 is heis_3 + R") {
        RMat d(3, 3);
        d(0, 2) = rat(1);
        auto name = named_match({d, 0});
        REQUIRE(name.has_value());
        CHECK(*name == "rh3");
    }
    SECTION("6d two-step nilpotent derivation is h10") {
        RMat d2 = {{rat(0), rat(0), rat(0), rat(-1), rat(0)},
                   {rat(0), rat(0), rat(1), rat(0), rat(0)},
                   {rat(0), rat(0), rat(0), rat(0), rat(1)},
                   {rat(0), rat(0), rat(0), rat(0), rat(0)},
                   {rat(0), rat(0), rat(0), rat(0), rat(0)}};
        LieAlgebra l = almost_abelian(d2);
        CHECK(is_nilpotent(l));
        CHECK(b1(l) == 3);
        auto name = named_match({d2, 0});
        REQUIRE(name.has_value());
        CHECK(*name == "h10");
    }
}

TEST_CASE("jacobi defect detects corrupted constants", "[lie-algebra]") {
    LieAlgebra l;
    l.dim = 3;
    // Tampered constants: the cyclic sum on (e1,e2,e3) equals -2 e3.
    l.brackets = {{0, 1, 2, rat(1)}, {0, 2, 0, rat(1)}, {1, 2, 1, rat(1)}};
    CHECK_FALSE(jacobi_defect(l).is_zero);
    // The honest so(3) constants do satisfy Jacobi.
    LieAlgebra so3;
    so3.dim = 3;
    so3.brackets = {{0, 1, 2, rat(1)}, {0, 2, 1, rat(-1)}, {1, 2, 0, rat(1)}};
    CHECK(jacobi_defect(so3).is_zero);
}

TEST_CASE("unimodularity and nilpotency", "[lie-algebra]") {
    RMat d(3, 3);
    d(2, 2) = rat(1);  // trace 1
    CHECK_FALSE(is_unimodular(almost_abelian(d)));
    CHECK_FALSE(is_nilpotent(almost_abelian(d)));
    RMat n(3, 3);
    n(0, 1) = rat(1);
    CHECK(is_unimodular(almost_abelian(n)));
    CHECK(is_nilpotent(almost_abelian(n)));
}

TEST_CASE("b1 equals dim minus rank of D", "[lie-algebra][property]") {
    testutil::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        RMat d = rng.matrix(4, 4, 2, 1);
        LieAlgebra l = almost_abelian(d);
        CHECK(b1(l) == l.dim - rank(d));
        CHECK(jacobi_defect(l).is_zero);
        RMat dn = d.pow(4);
        CHECK(is_nilpotent(l) == dn.is_zero_matrix());
    }
}

TEST_CASE("fingerprints are scale invariant", "[lie-algebra]") {
    testutil::Rng rng(31);
    RMat d = {{rat(2), rat(0), rat(0)}, {rat(0), rat(0), rat(-3)}, {rat(0), rat(3), rat(0)}};
    AlmostAbelianPresentation p{d, 0};
    AlmostAbelianPresentation p2{rat(2) * d, 0};
    AlmostAbelianPresentation pneg{rat(-1, 2) * d, 0};
    CHECK(iso_fingerprint(p) == iso_fingerprint(p2));
    CHECK(iso_fingerprint(p) == iso_fingerprint(pneg));
    AlmostAbelianPresentation zero{RMat::zero(4, 4), 0};
    CHECK(iso_fingerprint(zero).abelian);
    // D4 (lambda=0) and D5 give the same fingerprint.
    RMat d4(5, 5), d5(5, 5);
    d4(0, 4) = rat(7, 2);
    d4(1, 4) = rat(1);
    d5(0, 4) = rat(1);
    CHECK(iso_fingerprint({d4, 0}) == iso_fingerprint({d5, 0}));
    CHECK(iso_fingerprint({d4, 0}).heisenberg);
}

TEST_CASE("named catalog is internally distinguishable", "[lie-algebra]") {
    auto cat = named_catalog(rat(7, 3));
    for (const auto& a : cat) {
        auto m = named_match({a.D, 0});
        REQUIRE(m.has_value());
        CHECK(*m == a.name);
    }
}

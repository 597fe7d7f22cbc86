#include <catch2/catch_amalgamated.hpp>

#include "pkla/blocks.hpp"
#include "test_util.hpp"

using namespace pkla;

namespace {

Gauss gi(long re, long im) { return Gauss(rat(re), rat(im)); }

/// A spread of canonical types with real dimension at most 8.
std::vector<BlockType> enumerate_types() {
    std::vector<BlockType> out;
    std::vector<Gauss> pm_zetas = {gi(0, 0), gi(0, 1), gi(0, -2)};
    for (int m = 0; m <= 2; ++m)
        for (int eps : {1, -1})
            for (const Gauss& z : pm_zetas) {
                BlockType t;
                t.add(pm_block(m, eps, z));
                out.push_back(t);
            }
    std::vector<Gauss> pair_zetas = {gi(1, 0), gi(1, 1), Gauss(rat(1, 2), rat(0))};
    for (int m = 0; m <= 1; ++m)
        for (const Gauss& z : pair_zetas) {
            BlockType t;
            t.add(pair_block(m, z));
            out.push_back(t);
        }
    {
        BlockType t;
        t.add(pm_block(0, 1));
        t.add(pm_block(0, -1));
        t.add(pm_block(1, 1, gi(0, 1)));
        out.push_back(t);
    }
    {
        BlockType t;
        t.add(pm_block(1, -1));
        t.add(pair_block(0, gi(2, 0)));
        out.push_back(t);
    }
    {
        BlockType t;
        t.add(pm_block(0, 1), 2);
        t.add(pm_block(0, -1, gi(0, 3)), 2);
        out.push_back(t);
    }
    {
        BlockType t;
        t.add(pm_block(3, 1));
        out.push_back(t);
    }
    {
        BlockType t;
        t.add(pm_block(2, -1, gi(0, -1)));
        t.add(pm_block(0, 1, gi(0, -1)));
        out.push_back(t);
    }
    return out;
}

}  // namespace

TEST_CASE("hermitian form matrices", "[blocks]") {
    CHECK(hermitian_form_matrix(0) == CMat{{gi(1, 0)}});
    CHECK(hermitian_form_matrix(1) == CMat{{gi(0, 0), gi(0, 1)}, {gi(0, -1), gi(0, 0)}});
    CHECK(hermitian_form_matrix(2) ==
          CMat{{gi(0, 0), gi(0, 0), gi(1, 0)}, {gi(0, 0), gi(-1, 0), gi(0, 0)}, {gi(1, 0), gi(0, 0), gi(0, 0)}});
    for (int m = 0; m <= 5; ++m) {
        CMat h = hermitian_form_matrix(m);
        CHECK(h == h.conj_transpose());
        CHECK_FALSE(is_zero(det(h)));
    }
}

TEST_CASE("realization of simple blocks", "[blocks]") {
    SECTION("one-dimensional imaginary block") {
        BlockType t;
        t.add(pm_block(0, 1, gi(0, 3)));
        Realization r = realize(t);
        CHECK(r.dimV == 2);
        CHECK(r.A == RMat{{rat(0), rat(3)}, {rat(-3), rat(0)}});
        CHECK(r.g == RMat::identity(2));
        CHECK(r.J == RMat{{rat(0), rat(-1)}, {rat(1), rat(0)}});
    }
    SECTION("nilpotent block of height two") {
        BlockType t;
        t.add(pm_block(1, 1));
        Realization r = realize(t);
        CHECK(r.dimV == 4);
        RMat a(4, 4);
        a(0, 2) = rat(1);
        a(1, 3) = rat(1);
        CHECK(r.A == a);
        RMat g = {{rat(0), rat(0), rat(0), rat(1)},
                  {rat(0), rat(0), rat(-1), rat(0)},
                  {rat(0), rat(-1), rat(0), rat(0)},
                  {rat(1), rat(0), rat(0), rat(0)}};
        CHECK(r.g == g);
    }
    SECTION("pair block realifies to two real Jordan-like blocks") {
        BlockType t;
        t.add(pair_block(0, gi(1, 2)));
        Realization r = realize(t);
        RMat a = {{rat(1), rat(2), rat(0), rat(0)},
                  {rat(-2), rat(1), rat(0), rat(0)},
                  {rat(0), rat(0), rat(-1), rat(2)},
                  {rat(0), rat(0), rat(-2), rat(-1)}};
        CHECK(r.A == a);
    }
}

TEST_CASE("realization invariants", "[blocks][property]") {
    for (const BlockType& t : enumerate_types()) {
        Realization r = realize(t);
        INFO("real dim " << r.dimV);
        CHECK(r.J * r.J == rat(-1) * RMat::identity(r.dimV));
        CHECK(r.g == r.g.transpose());
        CHECK(r.J.transpose() * r.g * r.J == r.g);
        CHECK((r.A.transpose() * r.g + r.g * r.A).is_zero_matrix());
        CHECK(r.A * r.J == r.J * r.A);
    }
}

TEST_CASE("signature formulas against exact inertia", "[blocks][property]") {
    for (const BlockType& t : enumerate_types()) {
        auto [p, q] = signature(t);
        auto [ip, iq, iz] = inertia(realize(t).g);
        CHECK(iz == 0);
        CHECK(ip == 2 * p);  // each complex plus/minus direction doubles
        CHECK(iq == 2 * q);
    }
    BlockType t;
    t.add(pm_block(2, 1));  // (-1)^1 != +1: signature (1, 2)
    CHECK(signature(t) == std::pair<int, int>(1, 2));
    t = BlockType{};
    t.add(pm_block(2, -1));
    CHECK(signature(t) == std::pair<int, int>(2, 1));
    t = BlockType{};
    t.add(pm_block(1, 1));
    CHECK(signature(t) == std::pair<int, int>(1, 1));
    t = BlockType{};
    t.add(pair_block(1, gi(1, 0)));
    CHECK(signature(t) == std::pair<int, int>(2, 2));
}

TEST_CASE("reflection map", "[blocks]") {
    BlockType t;
    t.add(pm_block(0, 1, gi(0, 2)));
    t.add(pm_block(1, 1));
    t.add(pair_block(0, gi(1, 1)));
    BlockType r = reflect(t);
    BlockType want;
    want.add(pm_block(0, 1, gi(0, -2)));  // even m keeps the sign
    want.add(pm_block(1, -1));            // odd m flips it
    want.add(pair_block(0, gi(1, -1)));   // pair goes to the conjugate
    CHECK(r == want);
    for (const BlockType& u : enumerate_types()) CHECK(reflect(reflect(u)) == u);
}

TEST_CASE("reflection matches negating the endomorphism", "[blocks][property]") {
    for (const BlockType& t : enumerate_types()) {
        ComplexRealization c = complex_realization(t);
        CHECK(decompose(Gauss(rat(-1)) * c.A, c.H) == reflect(t));
    }
}

TEST_CASE("x assignments and the vector v", "[blocks]") {
    SECTION("single nilpotent line") {
        BlockType t;
        t.add(pm_block(0, 1));
        RMat v = v_of_x(t, {{{0, 1}, rat(1)}});
        CHECK(v == RMat{{rat(1)}, {rat(0)}});
    }
    SECTION("both signs present, both set to one") {
        BlockType t;
        t.add(pm_block(0, 1));
        t.add(pm_block(0, -1));
        RMat v = v_of_x(t, {{{0, 1}, rat(1)}, {{0, -1}, rat(1)}});
        // Canonical order puts the minus block first.
        CHECK(v == RMat{{rat(1)}, {rat(0)}, {rat(1)}, {rat(0)}});
    }
    SECTION("height-two block places x at the chain end") {
        BlockType t;
        t.add(pm_block(1, 1));
        RMat v = v_of_x(t, {{{1, 1}, rat(5, 2)}});
        CHECK(v == RMat{{rat(0)}, {rat(0)}, {rat(5, 2)}, {rat(0)}});
    }
    SECTION("invalid assignments are rejected") {
        BlockType t;
        t.add(pm_block(0, 1));
        t.add(pm_block(0, -1));
        CHECK_THROWS_AS(v_of_x(t, {{{0, 1}, rat(-1)}}), InvalidAssignment);
        CHECK_THROWS_AS(v_of_x(t, {{{2, 1}, rat(1)}}), InvalidAssignment);
        CHECK_THROWS_AS(v_of_x(t, {{{0, 1}, rat(2)}, {{0, -1}, rat(1)}}), InvalidAssignment);
        CHECK_NOTHROW(v_of_x(t, {{{0, 1}, rat(2)}, {{0, -1}, rat(0)}}));
    }
}

TEST_CASE("decomposition round trip", "[blocks][property]") {
    for (const BlockType& t : enumerate_types()) {
        ComplexRealization c = complex_realization(t);
        CHECK(decompose(c.A, c.H) == t);
        Realization r = realize(t);
        CHECK(decompose(r.A, r.g) == t);
    }
}

TEST_CASE("decomposition is invariant under form-unitary conjugation", "[blocks][property]") {
    testutil::Rng rng(97);
    for (const BlockType& t : enumerate_types()) {
        ComplexRealization c = complex_realization(t);
        int n = c.A.rows();
        // Random Cayley transform of an h-skew endomorphism.
        RMat mre = rng.matrix(n, n, 2, 1), mim = rng.matrix(n, n, 2, 1);
        CMat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = Gauss(mre(i, j), mim(i, j));
        CMat k = m - m.conj_transpose();  // skew-Hermitian
        CMat s = inverse(c.H) * k;        // h-skew
        CMat ips = CMat::identity(n) + s;
        if (is_zero(det(ips))) continue;
        CMat u = (CMat::identity(n) - s) * inverse(ips);
        REQUIRE(u.conj_transpose() * c.H * u == c.H);
        CHECK(decompose(inverse(u) * c.A * u, c.H) == t);
    }
}

TEST_CASE("decomposition rejects bad input", "[blocks]") {
    CMat h = hermitian_form_matrix(1);
    CMat a = jordan_block_c(Gauss(), 1);
    SECTION("not skew for the form") {
        CMat bad = a;
        bad(1, 0) = gi(7, 0);
        CHECK_THROWS_AS(decompose(bad, h), PreconditionError);
    }
    SECTION("degenerate form") { CHECK_THROWS_AS(decompose(CMat(2, 2), CMat(2, 2)), DegenerateForm); }
    SECTION("non-Hermitian form") {
        CMat nh(1, 1);
        nh(0, 0) = gi(0, 1);
        CHECK_THROWS_AS(decompose(CMat(1, 1), nh), DegenerateForm);
    }
}

TEST_CASE("exact inertia of symmetric matrices", "[blocks]") {
    RMat s = {{rat(0), rat(1)}, {rat(1), rat(0)}};
    CHECK(inertia(s) == std::tuple<int, int, int>(1, 1, 0));
    RMat d(3, 3);
    d(0, 0) = rat(2);
    d(1, 1) = rat(-5);
    CHECK(inertia(d) == std::tuple<int, int, int>(1, 1, 1));
    testutil::Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        RMat p = rng.invertible(4);
        RMat base(4, 4);
        base(0, 0) = rat(1);
        base(1, 1) = rat(1);
        base(2, 2) = rat(-1);
        RMat congruent = p.transpose() * base * p;
        CHECK(inertia(congruent) == std::tuple<int, int, int>(2, 1, 1));
    }
}

#include <catch2/catch_amalgamated.hpp>

#include "pkla/jordan.hpp"
#include "test_util.hpp"

using namespace pkla;

namespace {

JordanType jt(std::initializer_list<std::tuple<int, long, long, int>> js) {
    // (m, alpha_num, alpha_den, mult) real blocks only
    JordanType t;
    for (auto& [m, num, den, mult] : js) t.add_j(m, rat(num, den), mult);
    return t;
}

}  // namespace

TEST_CASE("jordan type of matrices", "[jordan]") {
    SECTION("zero 3x3") {
        JordanType t = jordan_type(RMat::zero(3, 3));
        JordanType want;
        want.add_j(0, rat(0), 3);
        CHECK(t == want);
    }
    SECTION("6d nilpotent derivation") {
        RMat d2 = {{rat(0), rat(0), rat(0), rat(-1), rat(0)},
                   {rat(0), rat(0), rat(1), rat(0), rat(0)},
                   {rat(0), rat(0), rat(0), rat(0), rat(1)},
                   {rat(0), rat(0), rat(0), rat(0), rat(0)},
                   {rat(0), rat(0), rat(0), rat(0), rat(0)}};
        JordanType want;
        want.add_j(1, rat(0));
        want.add_j(2, rat(0));
        CHECK(jordan_type(d2) == want);
    }
    SECTION("rotation block gives one C block") {
        RMat m = {{rat(0), rat(3)}, {rat(-3), rat(0)}};
        JordanType t = jordan_type(m);
        REQUIRE(t.blocks.size() == 1);
        CHECK(t.blocks[0].complex_pair);
        CHECK(t.blocks[0].m == 0);
        CHECK(t.blocks[0].value == Gauss(rat(0), rat(3)));
    }
    SECTION("negation reflects eigenvalues") {
        RMat m(3, 3);
        m(0, 0) = rat(2);
        m(1, 1) = rat(-1);
        m(2, 2) = rat(-1);
        JordanType neg = jordan_type(-m);
        JordanType want;
        want.add_j(0, rat(-2));
        want.add_j(0, rat(1), 2);
        CHECK(neg == want);
    }
}

TEST_CASE("semigroup membership", "[jordan]") {
    JordanType c0i;
    c0i.add_c(0, Gauss::i_unit());
    CHECK(in_semigroup(c0i, SemigroupId::Q));
    CHECK(in_semigroup(c0i, SemigroupId::GL_SP));
    CHECK(in_semigroup(c0i, SemigroupId::GL_C));

    CHECK_FALSE(in_semigroup(jt({{0, 1, 1, 1}}), SemigroupId::Q));
    CHECK(in_semigroup(jt({{1, 0, 1, 1}}), SemigroupId::GL_SP));  // J_1(0), odd size generator
    CHECK_FALSE(in_semigroup(jt({{0, 0, 1, 1}}), SemigroupId::GL_SP));
    CHECK(in_semigroup(jt({{0, 0, 1, 2}}), SemigroupId::Q));
    // x and -x must pair with even multiplicity in Q.
    CHECK_FALSE(in_semigroup(jt({{0, 2, 1, 1}, {0, -2, 1, 1}}), SemigroupId::Q));
    CHECK(in_semigroup(jt({{0, 2, 1, 2}, {0, -2, 1, 2}}), SemigroupId::Q));
    // In GL_sp pairing suffices without evenness.
    CHECK(in_semigroup(jt({{0, 2, 1, 1}, {0, -2, 1, 1}}), SemigroupId::GL_SP));
    // Non-imaginary C blocks pair zeta with -conj(zeta).
    JordanType cpair;
    cpair.add_c(0, Gauss(rat(1), rat(2)));
    CHECK_FALSE(in_semigroup(cpair, SemigroupId::Q));
    cpair.add_c(0, Gauss(rat(-1), rat(2)));
    CHECK(in_semigroup(cpair, SemigroupId::Q));
    // Empty type is a member (monoid convention).
    CHECK(in_semigroup(JordanType{}, SemigroupId::Q));
}

TEST_CASE("existence oracles", "[jordan]") {
    CHECK(admits_complex(jt({{0, 5, 1, 1}})));
    CHECK(admits_complex(jt({{0, 0, 1, 3}, {1, 0, 1, 1}})));
    CHECK_FALSE(admits_complex(jt({{1, 0, 1, 2}})));

    CHECK(admits_symplectic(jt({{0, 0, 1, 1}})));
    CHECK(admits_symplectic(jt({{0, 1, 1, 2}, {0, -1, 1, 1}})));
    CHECK(admits_symplectic(jt({{0, 1, 1, 1}})));

    CHECK(admits_pk(jt({{0, 1, 1, 1}, {0, -1, 1, 2}})));
    CHECK_FALSE(admits_pk(jt({{0, -1, 1, 2}, {0, 1, 1, 1}, {1, 1, 1, 1}})));

    CHECK(cs_not_pk(jt({{0, -1, 1, 2}, {0, 1, 1, 1}, {1, 1, 1, 1}})));
    CHECK_FALSE(cs_not_pk(jt({{0, 1, 1, 1}})));
    JordanType with_c = jt({{0, -1, 1, 2}, {0, 1, 1, 1}, {1, 1, 1, 1}});
    with_c.add_c(0, Gauss::i_unit());
    CHECK(cs_not_pk(with_c));
}

TEST_CASE("membership is closed under sums", "[jordan][property]") {
    std::vector<JordanType> members;
    members.push_back(jt({{0, 0, 1, 2}}));
    members.push_back(jt({{1, 0, 1, 2}}));
    members.push_back(jt({{0, 2, 1, 2}, {0, -2, 1, 2}}));
    JordanType ci;
    ci.add_c(1, Gauss(rat(0), rat(3)));
    members.push_back(ci);
    for (const auto& a : members)
        for (const auto& b : members) {
            REQUIRE(in_semigroup(a, SemigroupId::Q));
            CHECK(in_semigroup(a + b, SemigroupId::Q));
        }
}

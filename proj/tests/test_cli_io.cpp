#include <catch2/catch_amalgamated.hpp>
#include <fstream>
#include <sstream>

#include "pkla/catalog.hpp"
#include "pkla/classify.hpp"
#include "pkla/json_io.hpp"
#include "test_util.hpp"

using namespace pkla;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("matrix JSON round trip", "[json][property]") {
    testutil::Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        RMat m = rng.matrix(rng.integer(1, 5), rng.integer(1, 5), 5, 3);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
    SECTION("shape mismatches are schema errors") {
        Json j = matrix_to_json(RMat::identity(2));
        j["rows"] = 3;
        CHECK_THROWS_AS(matrix_from_json(j), SchemaError);
        Json k = matrix_to_json(RMat::identity(2));
        k["entries"][0][0] = 7;  // not a rational string
        CHECK_THROWS_AS(matrix_from_json(k), SchemaError);
        CHECK_THROWS_AS(matrix_from_json(Json::object()), SchemaError);
    }
}

TEST_CASE("Lie algebra JSON round trip", "[json]") {
    testutil::Rng rng(100);
    for (int trial = 0; trial < 10; ++trial) {
        LieAlgebra l = almost_abelian(rng.matrix(3, 3, 2, 1));
        LieAlgebra back = lie_algebra_from_json(lie_algebra_to_json(l));
        CHECK(back.dim == l.dim);
        for (int i = 0; i < l.dim; ++i)
            for (int j = 0; j < l.dim; ++j) CHECK(back.basis_bracket(i, j) == l.basis_bracket(i, j));
    }
    SECTION("out-of-range indices are schema errors") {
        Json j = Json{{"dim", 2}, {"brackets", Json::array({Json{{"i", 1}, {"j", 2}, {"k", 3}, {"c", "1/1"}}})}};
        CHECK_THROWS_AS(lie_algebra_from_json(j), SchemaError);
    }
}

TEST_CASE("block type, assignment and family instance round trips", "[json][property]") {
    int count = 0;
    for (const FamilyInstance& p : instance_sweep()) {
        FamilyInstance q = family_instance_from_json(family_instance_to_json(p));
        CHECK(q == p);
        if (++count >= 300) break;
    }
    SECTION("malformed block items are schema errors") {
        CHECK_THROWS_AS(block_type_from_json(Json::parse(R"([{"kind":"zz","m":0,"zeta":"0+0 i"}])")), SchemaError);
        CHECK_THROWS_AS(block_type_from_json(Json::parse(R"([{"kind":"pm","m":0,"eps":2,"zeta":"0+0 i"}])")),
                        SchemaError);
        CHECK_THROWS_AS(block_type_from_json(Json::parse(R"([{"kind":"pm","m":0,"eps":1,"zeta":"0+0 i","mult":0}])")),
                        SchemaError);
        CHECK_THROWS_AS(assignment_from_json(Json::parse(R"({"qq_0_+":"1/1"})")), SchemaError);
        CHECK_THROWS_AS(family_instance_from_json(Json::parse(R"({"family":7,"t":[]})")), SchemaError);
    }
}

TEST_CASE("Jordan type JSON round trip", "[json][property]") {
    testutil::Rng rng(101);
    for (int trial = 0; trial < 15; ++trial) {
        RMat d = rng.matrix(3, 3, 1, 1);
        try {
            JordanType t = jordan_type(d);
            CHECK(jordan_type_from_json(jordan_type_to_json(t)) == t);
        } catch (const NonGaussianSpectrum&) {
            continue;
        }
    }
    SECTION("C blocks with non-positive imaginary part are rejected") {
        CHECK_THROWS_AS(jordan_type_from_json(Json::parse(R"([{"kind":"C","m":0,"zeta":"0/1-1/1 i"}])")),
                        SchemaError);
    }
}

TEST_CASE("structure JSON round trip", "[json]") {
    FamilyInstance p;
    p.family = 4;
    p.t.add(pm_block(0, 1));
    p.c1 = rat(2);
    PKStructure s = build_family(p);
    PKStructure back = pk_structure_from_json(pk_structure_to_json(s));
    CHECK(back.dim == s.dim);
    CHECK(back.D == s.D);
    CHECK(back.J == s.J);
    CHECK(back.g == s.g);
    CHECK(back.isotropic == s.isotropic);
    SECTION("dimension mismatch is a schema error") {
        Json j = pk_structure_to_json(s);
        j["dim"] = 8;
        CHECK_THROWS_AS(pk_structure_from_json(j), SchemaError);
    }
}

TEST_CASE("classification round trip over the sweep", "[classify][property]") {
    int count = 0;
    for (const FamilyInstance& p : instance_sweep()) {
        PKStructure s = build_family(p);
        FamilyInstance q = classify_instance(s);
        INFO("family " << p.family);
        CHECK(q == p);
        if (++count >= 400) break;
    }
}

TEST_CASE("canonical representatives are consistent", "[classify]") {
    SECTION("reflection coincidence in the non-isotropic family") {
        FamilyInstance p, q;
        p.family = q.family = 0;
        p.t.add(pm_block(0, 1, Gauss(rat(0), rat(1))));
        p.a = rat(1);
        q.t = reflect(p.t);
        q.a = rat(-1);
        REQUIRE(unitary_equivalent(p, q));
        CHECK(canonical_representative(p) == canonical_representative(q));
    }
    SECTION("rescaling coincidence in family 6") {
        FamilyInstance p, q;
        p.family = q.family = 6;
        p.t.add(pm_block(0, 1, Gauss(rat(0), rat(1))));
        q.t.add(pm_block(0, 1, Gauss(rat(0), rat(2))));
        REQUIRE(unitary_equivalent(p, q));
        CHECK(canonical_representative(p) == canonical_representative(q));
    }
    SECTION("rescaling coincidence in family 2 moves x") {
        FamilyInstance p, q;
        p.family = q.family = 2;
        p.t.add(pm_block(0, 1));
        p.x[{0, 1}] = rat(1);
        q.t.add(pm_block(0, 1));
        q.x[{0, 1}] = rat(4);
        REQUIRE(unitary_equivalent(p, q));
        CHECK(canonical_representative(p) == canonical_representative(q));
    }
    SECTION("idempotence on a sweep slice") {
        int count = 0;
        for (const FamilyInstance& p : instance_sweep()) {
            if (count % 17 != 0) {  // thin the sweep, rescaling search is wide
                ++count;
                continue;
            }
            FamilyInstance c = canonical_representative(p);
            CHECK(unitary_equivalent(p, c));
            CHECK(canonical_representative(c) == c);
            ++count;
        }
    }
}

TEST_CASE("non-canonical structures are rejected with the right error", "[classify]") {
    FamilyInstance p;
    p.family = 2;
    p.t.add(pm_block(0, 1));
    p.x[{0, 1}] = rat(1);
    PKStructure s = build_family(p);
    SECTION("tampered derivation entry") {
        PKStructure bad = s;
        bad.D(4, 4) = rat(5);
        CHECK_THROWS_AS(classify_instance(bad), PreconditionError);
    }
    SECTION("non-adapted J") {
        PKStructure bad = s;
        bad.J(0, 1) = rat(-2);
        CHECK_THROWS_AS(classify_instance(bad), NotStandardBasis);
    }
}

TEST_CASE("catalog tables byte-match their golden files", "[catalog][golden]") {
    const std::string root = PKLA_SOURCE_DIR;
    for (int dim : {6, 8})
        for (const std::string kase : {"noniso", "iso"}) {
            INFO("dim " << dim << " case " << kase);
            std::string golden =
                read_file(root + "/tests/golden/catalog_" + std::to_string(dim) + "_" + kase + ".json");
            CHECK(catalog_text(dim, kase) == golden);
        }
    SECTION("display inventory") {
        Json iso6 = catalog_tables(6, "iso");
        REQUIRE(iso6["displays"].size() == 2);
        CHECK(iso6["displays"][0]["matrices"].size() == 4);  // D1, D4, D5, D6
        CHECK(iso6["displays"][1]["matrices"].size() == 2);  // D2, D3
        CHECK(catalog_tables(6, "noniso")["displays"].size() == 4);
        CHECK(catalog_tables(8, "noniso")["displays"].size() == 5);
        CHECK(catalog_tables(8, "iso")["displays"].size() == 6);
        CHECK_THROWS_AS(catalog_tables(7, "iso"), SchemaError);
        CHECK_THROWS_AS(catalog_tables(6, "both"), SchemaError);
    }
}

TEST_CASE("report serializers", "[json]") {
    FamilyInstance p;
    p.family = 0;
    p.t.add(pm_block(0, 1));
    p.a = rat(1);
    PKStructure s = build_family(p);
    SECTION("verification report carries a witness exactly when a check fails") {
        Json good = pk_report_to_json(verify_pk(s));
        CHECK(good["ok"] == true);
        CHECK_FALSE(good.contains("witness"));
        PKStructure bad = s;
        bad.D(0, 1) = rat(1);  // breaks closedness of the fundamental form
        Json rep = pk_report_to_json(verify_pk(bad));
        CHECK(rep["ok"] == false);
        CHECK(rep.contains("witness"));
    }
    SECTION("curvature report matches the direct computation") {
        Json rep = curvature_report_to_json(s.algebra(), s.g);
        CHECK(rep["flat"] == false);
        CHECK(rep["ricci_flat"] == false);
        REQUIRE_FALSE(rep["soliton"].is_null());
        CHECK(rep["soliton"]["lambda"].get<std::string>() == "-1/1");
    }
    SECTION("decision report matches the oracles") {
        JordanType t;
        t.add_j(0, rat(-1), 2);
        t.add_j(0, rat(1));
        t.add_j(1, rat(1));
        Json rep = decide_report_to_json(t);
        CHECK(rep["complex"] == true);
        CHECK(rep["symplectic"] == true);
        CHECK(rep["pseudo_kahler"] == false);
        CHECK(rep["cs_not_pk"] == true);
    }
    SECTION("extension serialization embeds the curvature report") {
        FamilyInstance q;
        q.family = 2;
        q.t.add(pm_block(0, 1));
        q.x[{0, 1}] = rat(1);
        PKStructure base = build_family(q);
        ExtensionSpace sp = solve_extension_derivations(base);
        REQUIRE(sp.exists);
        Json rep = extension_to_json(einstein_extend(base, sp.basepoint));
        CHECK(rep["einstein_constant"].get<std::string>() == "10/1");
        CHECK(rep["algebra"]["dim"] == 8);
        CHECK(rep["curvature"]["ricci_flat"] == false);
    }
}

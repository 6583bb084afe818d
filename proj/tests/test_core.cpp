#include <doctest.h>

#include "graydbl/double_category.hpp"
#include "graydbl/functor.hpp"
#include "graydbl/io.hpp"
#include "monoid_fixtures.hpp"

using namespace gd;

namespace {

std::vector<DoubleCategory> zoo() {
    return {terminal(), emptyDouble(), generatorG(), freeArrowH(), freeArrowV(), isoCellH(),
            isoCellV(), cyclicSquare(2), cyclicSquare(3), discrete(3), *fx::labelled().cat};
}

bool sameTables(const DoubleCategory& a, const DoubleCategory& b) {
    return a.objName == b.objName && a.hName == b.hName && a.vName == b.vName && a.sqName == b.sqName &&
           a.hSrc == b.hSrc && a.hTgt == b.hTgt && a.vSrc == b.vSrc && a.vTgt == b.vTgt && a.top == b.top &&
           a.bottom == b.bottom && a.left == b.left && a.right == b.right && a.hIdOf == b.hIdOf &&
           a.vIdOf == b.vIdOf && a.sqHIdOf == b.sqHIdOf && a.sqVIdOf == b.sqVIdOf &&
           a.hc1.sortedEntries() == b.hc1.sortedEntries() && a.vc1.sortedEntries() == b.vc1.sortedEntries() &&
           a.hc2.sortedEntries() == b.hc2.sortedEntries() && a.vc2.sortedEntries() == b.vc2.sortedEntries();
}

}  // namespace

TEST_SUITE("core") {
TEST_CASE("generator G counts") {
    auto g = generatorG();
    CHECK(g.nObj() == 4);
    CHECK(g.nH() == 6);
    CHECK(g.nV() == 6);
    CHECK(g.nSq() == 9);
    CHECK(validate(g).ok());
}

TEST_CASE("zoo sizes and axioms") {
    struct Row {
        DoubleCategory d;
        int o, h, v, s;
    };
    for (const auto& r : std::vector<Row>{{terminal(), 1, 1, 1, 1},
                                          {emptyDouble(), 0, 0, 0, 0},
                                          {freeArrowH(), 2, 3, 2, 3},
                                          {freeArrowV(), 2, 2, 3, 3},
                                          {isoCellH(), 2, 4, 2, 6},
                                          {isoCellV(), 2, 2, 4, 6},
                                          {cyclicSquare(3), 1, 1, 1, 3},
                                          {discrete(3), 3, 3, 3, 3}}) {
        INFO(r.d.name);
        CHECK(r.d.nObj() == r.o);
        CHECK(r.d.nH() == r.h);
        CHECK(r.d.nV() == r.v);
        CHECK(r.d.nSq() == r.s);
    }
    for (const auto& d : zoo()) {
        INFO(d.name);
        Report r = validate(d);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
}

TEST_CASE("transpose and product") {
    for (const auto& d : zoo()) {
        INFO(d.name);
        DoubleCategory t = transpose(d);
        CHECK(t.nH() == d.nV());
        CHECK(t.nV() == d.nH());
        CHECK(validate(t).ok());
        CHECK(isIsomorphic(transpose(t), d).has_value());
    }
    DoubleCategory p = cartesianProduct(isoCellH(), freeArrowV());
    CHECK(p.nObj() == 4);
    CHECK(p.nH() == 8);
    CHECK(p.nV() == 6);
    CHECK(p.nSq() == 18);
    CHECK(validate(p).ok());
    CHECK(isIsomorphic(cartesianProduct(terminal(), generatorG()), generatorG()).has_value());
    CHECK_FALSE(isIsomorphic(isoCellH(), isoCellV()).has_value());
    CHECK(isIsomorphic(transpose(isoCellH()), isoCellV()).has_value());
}

TEST_CASE("inverses") {
    DoubleCategory iso = isoCellH();
    int inv = 0;
    for (int s = 0; s < iso.nSq(); ++s)
        if (iso.vInverse(s) >= 0) {
            ++inv;
            CHECK(iso.vComp2(s, iso.vInverse(s)) == iso.sqVId(iso.top[s]));
        }
    CHECK(inv == 6);
    DoubleCategory z = cyclicSquare(3);
    for (int s = 0; s < 3; ++s) CHECK(z.hComp2(s, z.hInverse(s)) == z.dblId(0));
}

TEST_CASE("broken tables are reported") {
    DoubleCategory z = cyclicSquare(3);
    z.hc2.set(1, 1, 1);
    Report r = validate(z);
    CHECK(r.structural.empty());
    CHECK(r.hasAxiom("associativity (horizontal square composition)"));
    CHECK(r.hasAxiom("interchange"));

    DoubleCategory t = terminal();
    t.top[0] = 5;
    r = validate(t);
    CHECK_FALSE(r.structural.empty());

    DoubleCategory a = freeArrowH();
    a.hc1.erase(a.hId(0), 2);
    CHECK_FALSE(validate(a).ok());
}

TEST_CASE("JSON round trip of double categories") {
    for (const auto& d : zoo()) {
        INFO(d.name);
        nlohmann::json j = doubleToJson(d);
        CHECK(j["schema"] == kSchemaVersion);
        DoubleCategory back = doubleFromJson(nlohmann::json::parse(j.dump()));
        CHECK(back.name == d.name);
        CHECK(sameTables(back, d));
        CHECK(validate(back).ok());
    }
    // Identities and unit compositions are filled in when absent.
    nlohmann::json a = {{"name", "arrow"}, {"objects", {"0", "1"}}, {"hcells", {{{"id", "f"}, {"src", "0"}, {"tgt", "1"}}}}};
    DoubleCategory d = doubleFromJson(a);
    CHECK(isIsomorphic(d, freeArrowH()).has_value());
    CHECK_THROWS_AS(doubleFromJson(nlohmann::json{{"objects", {"0"}}, {"hcells", {{{"id", "f"}, {"src", "0"}, {"tgt", "9"}}}}}),
                    StructuralError);
    CHECK_THROWS_AS(doubleFromJson(nlohmann::json{{"schema", 7}, {"objects", nlohmann::json::array()}}), StructuralError);
    CHECK_THROWS_AS(doubleFromJson(nlohmann::json::array()), StructuralError);
}

TEST_CASE("JSON round trip of functors and reports") {
    auto iso = std::make_shared<const DoubleCategory>(isoCellH());
    auto h = std::make_shared<const DoubleCategory>(freeArrowH());
    Budget b;
    auto fs = enumerateDoubleFunctors(h, iso, b);
    CHECK(fs.size() > 2);
    for (const auto& f : fs) {
        DoubleFunctor g = functorFromJson(nlohmann::json::parse(functorToJson(f).dump()), h, iso);
        CHECK(g.sameMaps(f));
    }
    nlohmann::json bad = functorToJson(fs[0]);
    bad["hcells"].erase(0);
    CHECK_THROWS_AS(functorFromJson(bad, h, iso), StructuralError);

    Report r;
    r.fail("x", "y");
    r.structuralError("s");
    nlohmann::json j = reportToJson(r);
    CHECK(j["ok"] == false);
    CHECK(j["violations"][0]["axiom"] == "x");
    CHECK(j["structural"][0] == "s");
}
}

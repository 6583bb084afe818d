#include <doctest.h>

#include <set>

#include "graydbl/presentation.hpp"
#include "graydbl/tensor.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

struct Triple {
    CatPtr A, B, C;
};

std::vector<Triple> smallTriples() {
    auto one = share(terminal());
    auto ah = share(freeArrowH());
    auto av = share(freeArrowV());
    auto g = share(generatorG());
    auto z3 = share(cyclicSquare(3));
    auto iso = share(isoCellH());
    return {{ah, ah, z3}, {ah, av, iso}, {av, ah, iso}, {g, one, ah}, {one, g, ah},
            {ah, ah, iso}, {av, av, z3}, {g, g, share(freeArrowH())}};
}

}  // namespace

TEST_SUITE("tensor") {
TEST_CASE("cones correspond to functors into the hom") {
    for (const auto& t : smallTriples()) {
        Budget b;
        auto cones = enumerateCones(t.A, t.B, t.C, b);
        auto BC = HomDouble::build(t.B, t.C);
        auto fs = enumerateDoubleFunctors(t.A, BC->cat);
        INFO(t.A->name, " ", t.B->name, " ", t.C->name);
        CHECK(cones.size() == fs.size());
        std::set<std::vector<int>> seen;
        for (const auto& c : cones) {
            Report r = validateCone(c);
            REQUIRE_MESSAGE(r.ok(), r.summary());
            DoubleFunctor F = curryCone(c, *BC);
            CHECK(validateFunctor(F).ok());
            CHECK(uncurryFunctor(F, *BC) == c);
            std::vector<int> key = F.obj;
            for (auto* m : {&F.h, &F.v, &F.sq}) key.insert(key.end(), m->begin(), m->end());
            seen.insert(key);
        }
        CHECK(seen.size() == cones.size());
        for (const auto& F : fs) CHECK(validateCone(uncurryFunctor(F, *BC)).ok());
    }
}

TEST_CASE("cones (G,G;arrowH) count the squares of [[G,arrowH]]") {
    auto g = share(generatorG());
    auto ah = share(freeArrowH());
    Budget b;
    auto h = HomDouble::build(g, ah);
    CHECK(countCones(g, g, ah, b) == static_cast<std::size_t>(h->cat->nSq()));
}

TEST_CASE("unit cones are exactly the functors") {
    auto one = share(terminal());
    for (const auto& t : smallTriples()) {
        auto fs = enumerateDoubleFunctors(t.B, t.C);
        Budget b;
        CHECK(countCones(one, t.B, t.C, b) == fs.size());
        CHECK(countCones(t.B, one, t.C, b) == fs.size());
        for (const auto& F : fs) {
            CHECK(validateCone(coneFromFunctorUnitLeft(F, one)).ok());
            CHECK(validateCone(coneFromFunctorUnitRight(F, one)).ok());
        }
    }
}

TEST_CASE("the cartesian cone is valid") {
    auto ah = share(freeArrowH());
    auto av = share(freeArrowV());
    auto g = share(generatorG());
    for (auto [a, b] : std::vector<std::pair<CatPtr, CatPtr>>{{ah, ah}, {ah, av}, {g, ah}}) {
        auto p = share(cartesianProduct(*a, *b));
        Report r = validateCone(cartesianCone(a, b, p));
        CHECK_MESSAGE(r.ok(), r.summary());
    }
}

TEST_CASE("swap, pre- and postcomposition preserve validity") {
    for (const auto& t : smallTriples()) {
        Budget b;
        auto cones = enumerateCones(t.A, t.B, t.C, b);
        auto endA = enumerateDoubleFunctors(t.A, t.A);
        auto endB = enumerateDoubleFunctors(t.B, t.B);
        auto endC = enumerateDoubleFunctors(t.C, t.C);
        for (std::size_t i = 0; i < cones.size() && i < 6; ++i) {
            const auto& c = cones[i];
            CHECK(validateCone(swapCone(c)).ok());
            CHECK(swapCone(swapCone(c)) == c);
            for (std::size_t j = 0; j < endA.size() && j < 3; ++j)
                for (std::size_t k = 0; k < endB.size() && k < 3; ++k)
                    CHECK(validateCone(precomposeCone(c, endA[j], endB[k])).ok());
            for (std::size_t k = 0; k < endC.size() && k < 3; ++k)
                CHECK(validateCone(postcomposeCone(endC[k], c)).ok());
        }
    }
}

TEST_CASE("broken interchanger inverse is reported") {
    auto ah = share(freeArrowH());
    auto z3 = share(cyclicSquare(3));
    Budget b;
    auto cones = enumerateCones(ah, ah, z3, b);
    bool injected = false;
    for (auto c : cones) {
        int idx = -1;
        for (std::size_t i = 0; i < c.hh.size(); ++i)
            if (c.hh[i] != z3->dblId(0)) idx = static_cast<int>(i);
        if (idx < 0) continue;
        c.hhInv[idx] = c.hh[idx];
        Report r = validateCone(c);
        CHECK(r.hasAxiom(kConeInvertibility));
        CHECK(r.structural.empty());
        injected = true;
        break;
    }
    CHECK(injected);
}

TEST_CASE("a non-functorial column is reported under (i)") {
    auto ah = share(freeArrowH());
    auto z3 = share(cyclicSquare(3));
    Budget b;
    auto cones = enumerateCones(ah, ah, z3, b);
    REQUIRE(!cones.empty());
    auto c = cones.front();
    int w = ah->dblId(0);
    c.sqObj[w * ah->nObj()] = c.sqObj[w * ah->nObj()] == z3->dblId(0) ? (z3->dblId(0) + 1) % 3 : z3->dblId(0);
    Report r = validateCone(c);
    CHECK(r.hasAxiom(kConeFunctors));
    CHECK(r.structural.empty());
}

TEST_CASE("presentation of G (x) G has the expected generators") {
    auto g = share(generatorG());
    auto P = buildPresentation(g, g);
    CHECK(P.countGenerators(GenKind::Object) == 16);
    CHECK(P.countGenerators(GenKind::HCell) == 16);
    CHECK(P.countGenerators(GenKind::VCell) == 16);
    // X*g, g*Y, h*q and v*p (4 each), h*p and v*q with inverses (8 each).
    CHECK(P.countGenerators(GenKind::Square) == 4 + 4 + 4 + 4 + 8 + 8);
    Report r = checkPresentation(P);
    CHECK_MESSAGE(r.ok(), r.summary());
}

TEST_CASE("presentation with a unit factor has no interchangers") {
    auto one = share(terminal());
    for (const auto& B : {share(freeArrowH()), share(generatorG()), share(isoCellH()), share(cyclicSquare(3))}) {
        auto P = buildPresentation(one, B);
        int nonIdH = 0, nonIdV = 0, nonIdSq = 0;
        for (int h = 0; h < B->nH(); ++h) nonIdH += !B->isHId(h);
        for (int v = 0; v < B->nV(); ++v) nonIdV += !B->isVId(v);
        for (int s = 0; s < B->nSq(); ++s) nonIdSq += s != B->sqHId(B->left[s]) && s != B->sqVId(B->top[s]);
        CHECK(P.countGenerators(GenKind::Object) == static_cast<std::size_t>(B->nObj()));
        CHECK(P.countGenerators(GenKind::HCell) == static_cast<std::size_t>(nonIdH));
        CHECK(P.countGenerators(GenKind::VCell) == static_cast<std::size_t>(nonIdV));
        CHECK(P.countGenerators(GenKind::Square) == static_cast<std::size_t>(nonIdSq));
        for (const auto& r : P.relations) CHECK(r.family != "(invertibility)");
    }
}

TEST_CASE("relations are boundary well-formed") {
    auto ah = share(freeArrowH());
    auto av = share(freeArrowV());
    auto iso = share(isoCellH());
    auto g = share(generatorG());
    for (auto [a, b] : std::vector<std::pair<CatPtr, CatPtr>>{{ah, av}, {iso, ah}, {g, g}, {av, iso}}) {
        auto P = buildPresentation(a, b);
        if (a != ah || b != av) CHECK(!P.relations.empty());
        Report r = checkPresentation(P);
        CHECK_MESSAGE(r.ok(), r.summary());
        auto j = presentationToJson(P);
        CHECK(j["relations"].size() == P.relations.size());
        CHECK(j["generators"].size() == P.generators.size());
    }
}

TEST_CASE("realization with a unit factor recovers the other factor") {
    auto one = share(terminal());
    for (const auto& B : {share(freeArrowH()), share(freeArrowV()), share(generatorG()), share(isoCellH()),
                          share(cyclicSquare(2))}) {
        auto l = realizeTensor(one, B, 1);
        REQUIRE_MESSAGE(l.tensor.has_value(), l.failure);
        CHECK(isIsomorphic(*l.tensor->cat, *B).has_value());
        auto r = realizeTensor(B, one, 1);
        REQUIRE_MESSAGE(r.tensor.has_value(), r.failure);
        CHECK(isIsomorphic(*r.tensor->cat, *B).has_value());
    }
}

TEST_CASE("arrowH (x) arrowH needs depth 2") {
    auto ah = share(freeArrowH());
    auto shallow = realizeTensor(ah, ah, 1);
    CHECK(!shallow.tensor.has_value());
    CHECK(shallow.failure.rfind("unbounded", 0) == 0);
    auto r = realizeTensor(ah, ah, 2);
    REQUIRE_MESSAGE(r.tensor.has_value(), r.failure);
    const auto& T = *r.tensor;
    CHECK(T.certifiedAgainst.size() == 2);
    CHECK(validate(*T.cat).ok());
    CHECK(T.cat->nObj() == 4);
    CHECK(T.cat->nH() == 10);
    CHECK(T.cat->nSq() == 12);
}

TEST_CASE("induced functors are exactly the cones") {
    auto ah = share(freeArrowH());
    auto av = share(freeArrowV());
    auto iso = share(isoCellH());
    auto z3 = share(cyclicSquare(3));
    for (auto [a, b] : std::vector<std::pair<CatPtr, CatPtr>>{{ah, ah}, {ah, av}, {iso, ah}}) {
        auto r = realizeTensor(a, b, 3);
        REQUIRE_MESSAGE(r.tensor.has_value(), r.failure);
        const auto& T = *r.tensor;
        CHECK(validateCone(T.universal).ok());
        for (const auto& C : {iso, z3}) {
            Budget bud;
            auto cones = enumerateCones(a, b, C, bud);
            auto fs = enumerateDoubleFunctors(T.cat, C);
            CHECK(cones.size() == fs.size());
            for (const auto& c : cones) {
                DoubleFunctor F = inducedFunctor(T, c);
                CHECK(validateFunctor(F).ok());
                CHECK(postcomposeCone(F, T.universal) == c);
            }
            for (const auto& F : fs) CHECK(inducedFunctor(T, postcomposeCone(F, T.universal)).sameMaps(F));
        }
    }
}

TEST_CASE("G (x) G is finite at depth 5") {
    auto g = share(generatorG());
    auto shallow = realizeTensor(g, g, 4);
    CHECK(!shallow.tensor.has_value());
    auto r = realizeTensor(g, g, 5);
    REQUIRE_MESSAGE(r.tensor.has_value(), r.failure);
    CHECK(r.tensor->cat->nObj() == 16);
    CHECK(r.tensor->cat->nH() == 40);
    CHECK(r.tensor->cat->nSq() == 144);
}
}

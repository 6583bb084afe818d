#include <doctest.h>

#include <array>

#include "graydbl/coherence.hpp"
#include "oracles.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

struct Env {
    Budget b{50000000};
    HomCache c{b};
    TensorCache t{b};
    CatPtr one = c.one();
    CatPtr h = share(freeArrowH());
    CatPtr v = share(freeArrowV());
    CatPtr g = share(generatorG());
};

void bump(DoubleFunctor& f) {
    for (std::size_t i = f.obj.size(); i-- > 1;)
        if (f.obj[i] != f.obj[0]) {
            f.obj[i] = f.obj[0];
            return;
        }
    for (std::size_t i = f.h.size(); i-- > 1;)
        if (f.h[i] != f.h[0]) {
            f.h[i] = f.h[0];
            return;
        }
}

bool isIso(const DoubleFunctor& f) { return oracle::bijective(f) && validateFunctor(f).ok(); }

}  // namespace

TEST_SUITE("coherence") {
TEST_CASE("eta at the unit is the canonical collapse") {
    Env e;
    for (const auto& B : {e.h, e.g}) {
        DoubleFunctor eta = unitEta(e.c, e.t, e.one, B);
        CHECK(validateFunctor(eta).ok());
        HomPtr BT = e.c.get(B, e.t.get(e.one, B).cat);
        const DoubleFunctor& F = BT->functors[eta.obj[0]];
        CHECK(isIso(F));
    }
}

TEST_CASE("triangle identities of the adjunction") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{{e.h, e.one}, {e.h, e.h}, {e.one, e.v}}) {
        const RealizedTensor& T = e.t.get(A, B);
        DoubleFunctor eta = unitEta(e.c, e.t, A, B);
        // eps_{A (x) B} . (eta (x) 1) = 1, read on the induced functor.
        TensorCone k = precomposeCone(counitEpsilon(e.c, T.cat, B), eta, identityFunctor(B));
        CHECK(inducedFunctor(T, k).sameMaps(identityFunctor(T.cat)));
        // [[1,eps]] . eta_{[[B,A]]} = 1.
        CatPtr BA = e.c.get(B, A)->cat;
        DoubleFunctor eps = counitFunctor(e.c, e.t, A, B);
        DoubleFunctor tri = composeFunctors(e.c.map(identityFunctor(B), eps), unitEta(e.c, e.t, BA, B));
        CHECK(tri.sameMaps(identityFunctor(BA)));
    }
}

TEST_CASE("tensor of functors is functorial") {
    Env e;
    auto fs = enumerateDoubleFunctors(e.h, e.h);
    for (const auto& F : fs)
        for (const auto& G : fs) {
            DoubleFunctor FG = tensorFunctors(e.t, F, G);
            CHECK(validateFunctor(FG).ok());
            for (const auto& F2 : fs) {
                DoubleFunctor lhs = tensorFunctors(e.t, composeFunctors(F2, F), G);
                DoubleFunctor rhs = composeFunctors(tensorFunctors(e.t, F2, identityFunctor(e.h)), FG);
                CHECK(lhs.sameMaps(rhs));
            }
        }
    DoubleFunctor id = identityFunctor(e.h);
    CHECK(tensorFunctors(e.t, id, id).sameMaps(identityFunctor(e.t.get(e.h, e.h).cat)));
}

TEST_CASE("a is a bijection that agrees with currying") {
    Env e;
    for (auto [A, B, C] : std::vector<std::array<CatPtr, 3>>{
             {e.one, e.one, e.h}, {e.h, e.one, e.g}, {e.one, e.h, e.h}, {e.h, e.h, e.one}, {e.h, e.v, e.one}}) {
        DoubleFunctor a = assocHomMap(e.c, e.t, A, B, C);
        const RealizedTensor& T = e.t.get(A, B);
        INFO(A->name, " ", B->name, " ", C->name);
        CHECK(validateFunctor(a).ok());
        CHECK(oracle::bijective(a));
        HomPtr BC = e.c.get(B, C);
        CHECK(oracle::assocAgreesWithCurry(a, *e.c.get(T.cat, C), *BC, *e.c.get(A, BC->cat), T.universal) == "");
    }
}

TEST_CASE("a at the unit is the canonical collapse") {
    Env e;
    DoubleFunctor a = assocHomMap(e.c, e.t, e.one, e.one, e.h);
    CHECK(isIso(a));
    CHECK(a.dom->nObj() == 2);
}

TEST_CASE("unitors are isomorphisms matching the literal composites") {
    Env e;
    for (const auto& A : {e.one, e.h, e.v, e.g}) {
        Unitors u = unitors(e.c, e.t, A);
        INFO(A->name);
        CHECK(isIso(u.rho));
        CHECK(isIso(u.lambda));
        CHECK(validateCone(u.rhoCone).ok());
        CHECK(validateCone(u.lambdaCone).ok());
        // lambda sends 1*X to X and rho sends X*1 to X.
        const RealizedTensor& L = e.t.get(e.one, A);
        const RealizedTensor& R = e.t.get(A, e.one);
        for (int X = 0; X < A->nObj(); ++X) {
            CHECK(u.lambda.obj[L.universal.ob(0, X)] == X);
            CHECK(u.rho.obj[R.universal.ob(X, 0)] == X);
        }
    }
    for (const auto& A : {e.one, e.h}) {
        // eps^A . (1_A (x) 1), with [[A,A]] (x) A realized.
        Unitors u = unitors(e.c, e.t, A);
        DoubleFunctor lit = composeFunctors(counitFunctor(e.c, e.t, A, A),
                                            tensorFunctors(e.t, unitPoint(e.c, A), identityFunctor(A)));
        CHECK(lit.sameMaps(u.lambda));
    }
}

TEST_CASE("symmetry is the swapped universal cone and squares to the identity") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{{e.one, e.h}, {e.h, e.one}, {e.h, e.h}, {e.h, e.v}}) {
        INFO(A->name, " ", B->name);
        DoubleFunctor phi = symmetry(e.c, e.t, A, B);
        CHECK(isIso(phi));
        CHECK(validateCone(symmetryCone(e.c, e.t, A, B)).ok());
        CHECK(phi.sameMaps(inducedFunctor(e.t.get(A, B), swapCone(e.t.get(B, A).universal))));
        DoubleFunctor back = symmetry(e.c, e.t, B, A);
        CHECK(composeFunctors(back, phi).sameMaps(identityFunctor(phi.dom)));
    }
}

TEST_CASE("associator is an isomorphism") {
    Env e;
    for (auto [A, B, C] : std::vector<std::array<CatPtr, 3>>{
             {e.one, e.one, e.one}, {e.h, e.one, e.one}, {e.one, e.h, e.v}, {e.h, e.one, e.h}}) {
        INFO(A->name, " ", B->name, " ", C->name);
        DoubleFunctor al = associator(e.c, e.t, A, B, C);
        CHECK(isIso(al));
        const RealizedTensor& AB = e.t.get(A, B);
        const RealizedTensor& ABC = e.t.get(AB.cat, C);
        const RealizedTensor& BC = e.t.get(B, C);
        const RealizedTensor& A_BC = e.t.get(A, BC.cat);
        // (X*Y)*Z goes to X*(Y*Z).
        for (int X = 0; X < A->nObj(); ++X)
            for (int Y = 0; Y < B->nObj(); ++Y)
                for (int Z = 0; Z < C->nObj(); ++Z)
                    CHECK(al.obj[ABC.universal.ob(AB.universal.ob(X, Y), Z)] ==
                          A_BC.universal.ob(X, BC.universal.ob(Y, Z)));
    }
}

TEST_CASE("coherence laws at the unit") {
    Env e;
    CHECK(checkEpsALTriangle(e.c, e.t, e.one, e.one, e.one).passed());
    CHECK(checkTriangle(e.c, e.t, e.one, e.one, e.one).passed());
    CHECK(checkPentagon(e.c, e.t, e.one, e.one, e.one, e.one).passed());
    CHECK(checkHexagon(e.c, e.t, e.one, e.one, e.one, e.one).passed());
}

TEST_CASE("coherence laws on mixed instances") {
    Env e;
    CHECK(checkEpsALTriangle(e.c, e.t, e.one, e.h, e.g).passed());
    CHECK(checkEpsALTriangle(e.c, e.t, e.h, e.one, e.one).passed());
    CHECK(checkEpsALTriangle(e.c, e.t, e.h, e.h, e.one).passed());
    CHECK(checkTriangle(e.c, e.t, e.one, e.h, e.g).passed());
    CHECK(checkTriangle(e.c, e.t, e.h, e.h, e.h).passed());
    CHECK(checkPentagon(e.c, e.t, e.one, e.one, e.h, e.h).passed());
    CHECK(checkPentagon(e.c, e.t, e.h, e.one, e.h, e.one).passed());
    CHECK(checkPentagon(e.c, e.t, e.h, e.h, e.one, e.one).passed());
    CHECK(checkHexagon(e.c, e.t, e.h, e.one, e.one, e.h).passed());
    CHECK(checkHexagon(e.c, e.t, e.h, e.one, e.h, e.one).passed());
    CHECK(checkHexagon(e.c, e.t, e.h, e.one, e.v, e.one).passed());
}

TEST_CASE("coherence checks catch a tampered composite") {
    Env e;
    auto r1 = checkEpsALTriangle(e.c, e.t, e.one, e.h, e.h, bump);
    CHECK(r1.status == CoherenceResult::Fail);
    CHECK(!r1.witness.empty());
    CHECK(checkTriangle(e.c, e.t, e.one, e.h, e.h, bump).status == CoherenceResult::Fail);
    CHECK(checkPentagon(e.c, e.t, e.one, e.one, e.h, e.h, bump).status == CoherenceResult::Fail);
    CHECK(checkHexagon(e.c, e.t, e.h, e.one, e.one, e.h, bump).status == CoherenceResult::Fail);
}

TEST_CASE("an unrealizable tensor is a skip") {
    Budget b{50000000};
    HomCache c{b};
    TensorCache t{b, 1};
    CatPtr h = share(freeArrowH());
    auto r = checkHexagon(c, t, h, c.one(), h, c.one());
    CHECK(r.status == CoherenceResult::Skipped);
    CHECK(r.reason.find("unrealized") != std::string::npos);
}
}

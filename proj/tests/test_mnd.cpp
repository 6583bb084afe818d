#include <doctest.h>

#include <set>

#include "graydbl/chi.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

TwoCatPtr share2(TwoCategory t) {
    t.finalize();
    return std::make_shared<const TwoCategory>(std::move(t));
}

struct Env {
    Budget b{100000000};
    HomCache c{b};
    TwoHomCache t{b};
    ChiEnv e{c, t};
    MndCache& m = e.mnd();
    CatPtr one = c.one();
    CatPtr h = share(freeArrowH());
    CatPtr g = share(generatorG());
    // One object with an idempotent e and u : 1 => e.
    CatPtr idem = share(verticallyDiscrete(idempotent2()));
};

// Monads counted straight from the laws on a one-object double category
// whose squares all have identity frames.
int monadCount(const DoubleCategory& D) {
    int n = 0;
    for (int X = 0; X < D.nObj(); ++X)
        for (int x = 0; x < D.nH(); ++x) {
            if (D.hSrc[x] != X || D.hTgt[x] != X) continue;
            int xx = D.hComp1(x, x), one = D.sqVId(x);
            for (int mu = 0; mu < D.nSq(); ++mu) {
                if (D.top[mu] != xx || D.bottom[mu] != x || !D.isVId(D.left[mu]) || !D.isVId(D.right[mu])) continue;
                for (int eta = 0; eta < D.nSq(); ++eta) {
                    if (D.top[eta] != D.hId(X) || D.bottom[eta] != x || !D.isVId(D.left[eta])) continue;
                    bool assoc = D.vComp2(D.hComp2(mu, one), mu) == D.vComp2(D.hComp2(one, mu), mu);
                    bool lu = D.vComp2(D.hComp2(eta, one), mu) == one;
                    bool ru = D.vComp2(D.hComp2(one, eta), mu) == one;
                    n += assoc && lu && ru;
                }
            }
        }
    return n;
}

}  // namespace

TEST_SUITE("mnd") {
TEST_CASE("small Mnd constructions") {
    Env e;
    CHECK(isIsomorphic(*e.m.get(e.one)->cat, terminal()).has_value());
    MndPtr mh = e.m.get(e.h);
    CHECK(mh->cat->nObj() == 2);
    CatPtr sq1 = e.e.Sqr(e.t.one()).D;
    CHECK(isIsomorphic(*e.m.get(sq1)->cat, terminal()).has_value());
    for (const auto& D : {e.one, e.h, e.g, e.idem, e.e.Sqr(share2(idempotent2())).D, share(cyclicSquare(2))}) {
        INFO(D->name);
        MndPtr M = e.m.get(D);
        Report r = validate(*M->cat);
        CHECK_MESSAGE(r.ok(), r.summary());
        CHECK(static_cast<int>(M->monads.size()) == monadCount(*D));
    }
    // The identity monad and (e, 1_e, u).
    CHECK(e.m.get(e.idem)->monads.size() == 2);
    // Z/2 squares: mu is arbitrary and eta is its inverse.
    CHECK(e.m.get(share(cyclicSquare(2)))->monads.size() == 2);
}

TEST_CASE("Mnd is a functor") {
    Env e;
    CHECK(mndFunctor(e.m, identityFunctor(e.idem)).sameMaps(identityFunctor(e.m.get(e.idem)->cat)));
    auto fs = enumerateDoubleFunctors(e.h, e.idem, e.b);
    auto gs = enumerateDoubleFunctors(e.idem, e.idem, e.b);
    CHECK(gs.size() > 1);
    for (const auto& F : fs) {
        DoubleFunctor mf = mndFunctor(e.m, F);
        CHECK(validateFunctor(mf).ok());
        for (const auto& G : gs) {
            INFO("composite");
            CHECK(mndFunctor(e.m, composeFunctors(G, F)).sameMaps(composeFunctors(mndFunctor(e.m, G), mf)));
        }
    }
    // A constant functor goes to the constant at the identity monad.
    DoubleFunctor k = constantFunctor(e.g, e.idem, 0);
    DoubleFunctor mk = mndFunctor(e.m, k);
    MndPtr MI = e.m.get(e.idem);
    int idMonad = MI->findMonad({0, e.idem->hId(0), e.idem->dblId(0), e.idem->dblId(0)});
    CHECK(mk.sameMaps(constantFunctor(mk.dom, mk.cod, idMonad)));
}

TEST_CASE("chi Mnd is a double functor") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{
             {e.one, e.h}, {e.h, e.h}, {e.one, e.idem}, {e.h, e.idem}, {e.idem, e.idem}}) {
        INFO(A->name, " ", B->name);
        DoubleFunctor f = chiMnd(e.m, A, B);
        Report r = validateFunctor(f);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
    // At A = 1 chi is a bijection on monads.
    DoubleFunctor f = chiMnd(e.m, e.one, e.idem);
    std::set<int> hit(f.obj.begin(), f.obj.end());
    CHECK(hit.size() == f.obj.size());
    CHECK(f.obj.size() == 2);
}

TEST_CASE("chi Mnd induced monad on the idempotent") {
    Env e;
    // T = identity with t = 1 sends a monad to itself.
    HomPtr AB = e.c.get(e.idem, e.idem);
    MndPtr src = e.m.get(AB->cat);
    DoubleFunctor f = chiMnd(e.m, e.idem, e.idem);
    int idF = AB->findFunctor(identityFunctor(e.idem));
    const DoubleCategory& hom = *AB->cat;
    int idT = src->findMonad({idF, hom.hId(idF), hom.dblId(idF), hom.dblId(idF)});
    REQUIRE(idT >= 0);
    CatPtr MI = e.m.get(e.idem)->cat;
    HomPtr T = e.c.get(MI, MI);
    CHECK(T->functors[f.obj[idT]].sameMaps(identityFunctor(MI)));
}

TEST_CASE("chi Mnd associativity, unit and naturality") {
    Env e;
    CHECK(checkChiAssoc(e.e, ChiKind::Mnd, e.one, e.one, e.one).ok);
    CHECK(checkChiAssoc(e.e, ChiKind::Mnd, e.one, e.h, e.one).ok);
    CHECK(checkChiAssoc(e.e, ChiKind::Mnd, e.one, e.idem, e.one).ok);
    CHECK(checkChiAssoc(e.e, ChiKind::Mnd, e.h, e.idem, e.one).ok);
    CHECK(checkChiAssoc(e.e, ChiKind::Mnd, e.one, e.one, e.idem).ok);
    for (const auto& A : {e.one, e.h, e.idem}) CHECK(checkChiUnit(e.e, ChiKind::Mnd, A).ok);
    for (const auto& G : enumerateDoubleFunctors(e.idem, e.idem, e.b)) {
        CHECK(checkChiNaturalityB(e.e, ChiKind::Mnd, e.h, G).ok);
        CHECK(checkChiNaturalityA(e.e, ChiKind::Mnd, G, e.one).ok);
    }
}
}

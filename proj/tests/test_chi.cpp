#include <doctest.h>

#include <array>
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

std::array<int, 3> sizes(const TwoCategory& t) { return {t.nObj(), t.n1(), t.n2()}; }

struct Env {
    Budget b{100000000};
    HomCache c{b};
    TwoHomCache t{b};
    ChiEnv e{c, t};
    CatPtr one = c.one();
    CatPtr h = share(freeArrowH());
    CatPtr v = share(freeArrowV());
    CatPtr g = share(generatorG());
    TwoCatPtr one2 = t.one();
    TwoCatPtr ar = share2(arrow2());
    TwoCatPtr iso = share2(invertible2Cell());
    TwoCatPtr idem = share2(idempotent2());
};

// Squares of D whose vertical sides are identities, counted directly.
int identityFramed(const DoubleCategory& D) {
    int n = 0;
    for (int s = 0; s < D.nSq(); ++s) {
        int l = D.left[s], r = D.right[s];
        if (D.vSrc[l] == D.vTgt[l] && D.vIdOf[D.vSrc[l]] == l && D.vSrc[r] == D.vTgt[r] && D.vIdOf[D.vSrc[r]] == r)
            ++n;
    }
    return n;
}

// Quintets counted by running over all four 1-cells.
int quintetCount(const TwoCategory& T) {
    int n = 0;
    for (int t = 0; t < T.n1(); ++t)
        for (int l = 0; l < T.n1(); ++l)
            for (int b = 0; b < T.n1(); ++b)
                for (int r = 0; r < T.n1(); ++r) {
                    if (T.src[t] != T.src[l] || T.tgt[t] != T.src[r] || T.tgt[l] != T.src[b] || T.tgt[b] != T.tgt[r])
                        continue;
                    int top = T.comp1(t, r), bot = T.comp1(l, b);
                    for (int a = 0; a < T.n2(); ++a)
                        if (T.dom[a] == top && T.cod[a] == bot) ++n;
                }
    return n;
}

}  // namespace

TEST_SUITE("twocat") {
TEST_CASE("H and V of the zoo") {
    Env e;
    CHECK(sizes(*e.e.H(e.one).T) == std::array<int, 3>{1, 1, 1});
    for (const auto& D : {e.one, e.h, e.v, e.g}) {
        INFO(D->name);
        const Horizontal2& H = e.e.H(D);
        CHECK(validate2Cat(*H.T).ok());
        CHECK(H.T->n2() == identityFramed(*D));
        const Horizontal2& V = e.e.V(D);
        CHECK(validate2Cat(*V.T).ok());
        CHECK(sizes(*V.T) == sizes(horizontal2Cat(transpose(*D))));
        CHECK(sizes(vertical2Cat(*D)) == sizes(*V.T));
    }
    // tau has non-identity vertical sides, so only identity squares remain.
    CHECK(e.e.H(e.g).T->n2() == e.g->nH());
    CHECK(sizes(*e.e.H(e.h).T) == sizes(*e.e.V(e.v).T));
}

TEST_CASE("quintets") {
    Env e;
    CatPtr s1 = e.e.Sqr(e.one2).D;
    CHECK(isIsomorphic(*s1, terminal()).has_value());
    // Commutative squares in the poset 0 < 1.
    CHECK(e.e.Sqr(e.ar).D->nSq() == 6);
    for (const auto& T :
         {e.one2, e.ar, share2(chain2()), share2(walking2Cell()), e.iso, e.idem}) {
        INFO(T->name);
        const Quintets& Q = e.e.Sqr(T);
        Report r = validate(*Q.D);
        CHECK_MESSAGE(r.ok(), r.summary());
        CHECK(Q.D->nSq() == quintetCount(*T));
        // H(Sqr T) has the 2-cells of T as its squares.
        CHECK(sizes(horizontal2Cat(*Q.D)) == sizes(*T));
        CHECK(sizes(vertical2Cat(*Q.D)) == sizes(*T));
    }
}

TEST_CASE("Sqr and H are functorial") {
    Env e;
    auto fs = enumerate2Functors(e.ar, e.iso, e.b);
    auto gs = enumerate2Functors(e.iso, e.idem, e.b);
    for (const auto& F : fs) {
        DoubleFunctor sf = sqrFunctor(e.e, F);
        CHECK(validateFunctor(sf).ok());
        for (const auto& G : gs)
            CHECK(sqrFunctor(e.e, compose2Functors(G, F)).sameMaps(composeFunctors(sqrFunctor(e.e, G), sf)));
    }
    CHECK(sqrFunctor(e.e, identity2Functor(e.iso)).sameMaps(identityFunctor(e.e.Sqr(e.iso).D)));
    for (const auto& F : enumerateDoubleFunctors(e.h, e.g, e.b)) {
        CHECK(validate2Functor(hFunctor(e.e, F)).ok());
        CHECK(validate2Functor(vFunctor(e.e, F)).ok());
    }
}

TEST_CASE("[A,B] agrees with H of the vertically discrete hom") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<TwoCatPtr, TwoCatPtr>>{
             {e.ar, e.ar}, {e.ar, e.iso}, {e.iso, e.ar}, {e.idem, e.idem}, {e.ar, e.idem}}) {
        INFO(A->name, " ", B->name);
        CatPtr a = share(verticallyDiscrete(*A)), b = share(verticallyDiscrete(*B));
        const Horizontal2& H = e.e.H(e.c.get(a, b)->cat);
        CHECK(sizes(*e.t.get(A, B)->cat) == sizes(*H.T));
    }
}

TEST_CASE("chi H and chi V are 2-functors") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{{e.one, e.g}, {e.h, e.h}, {e.g, e.g}, {e.v, e.v}}) {
        INFO(A->name, " ", B->name);
        Report r = validate2Functor(chiH(e.e, A, B));
        CHECK_MESSAGE(r.ok(), r.summary());
        r = validate2Functor(chiV(e.e, A, B));
        CHECK_MESSAGE(r.ok(), r.summary());
    }
    // At A = 1 both sides are copies of HB and chi is bijective.
    TwoFunctor c1 = chiH(e.e, e.one, e.g);
    CHECK(sizes(*c1.dom) == sizes(*c1.cod));
    std::set<int> hit(c1.two.begin(), c1.two.end());
    CHECK(static_cast<int>(hit.size()) == c1.cod->n2());
}

TEST_CASE("chi Sqr is a double functor") {
    Env e;
    for (auto [A, B] : std::vector<std::pair<TwoCatPtr, TwoCatPtr>>{
             {e.one2, e.one2}, {e.ar, e.ar}, {e.ar, e.iso}, {e.one2, e.idem}}) {
        INFO(A->name, " ", B->name);
        DoubleFunctor f = chiSqr(e.e, A, B);
        Report r = validateFunctor(f);
        CHECK_MESSAGE(r.ok(), r.summary());
    }
    // 0-cells go to Sqr of the 2-functor.
    TwoHomPtr AB = e.t.get(e.ar, e.iso);
    DoubleFunctor f = chiSqr(e.e, e.ar, e.iso);
    HomPtr T = e.c.get(e.e.Sqr(e.ar).D, e.e.Sqr(e.iso).D);
    for (std::size_t i = 0; i < AB->functors.size(); ++i)
        CHECK(T->functors[f.obj[i]].sameMaps(sqrFunctor(e.e, AB->functors[i])));
}

TEST_CASE("chi associativity") {
    Env e;
    for (auto k : {ChiKind::H, ChiKind::V}) {
        INFO(chiName(k));
        CHECK(checkChiAssoc(e.e, k, e.one, e.one, e.one).ok);
        CHECK(checkChiAssoc(e.e, k, e.h, e.h, e.one).ok);
        CHECK(checkChiAssoc(e.e, k, e.v, e.h, e.one).ok);
        CHECK(checkChiAssoc(e.e, k, e.one, e.h, e.h).ok);
        CHECK(checkChiAssoc(e.e, k, e.h, e.one, e.h).ok);
    }
    CHECK(checkChiAssoc(e.e, e.one2, e.one2, e.one2).ok);
    CHECK(checkChiAssoc(e.e, e.ar, e.ar, e.one2).ok);
    CHECK(checkChiAssoc(e.e, e.ar, e.ar, e.ar).ok);
    CHECK(checkChiAssoc(e.e, e.ar, e.idem, e.one2).ok);
}

TEST_CASE("chi unit in reduced form") {
    Env e;
    for (auto k : {ChiKind::H, ChiKind::V})
        for (const auto& A : {e.one, e.h, e.g}) {
            INFO(chiName(k), " ", A->name);
            CHECK(checkChiUnit(e.e, k, A).ok);
        }
    for (const auto& A : {e.one2, e.ar, e.idem}) CHECK(checkChiUnit(e.e, A).ok);
}

TEST_CASE("chi is natural") {
    Env e;
    for (const auto& F : enumerateDoubleFunctors(e.h, e.g, e.b)) {
        CHECK(checkChiNaturalityB(e.e, ChiKind::H, e.h, F).ok);
        CHECK(checkChiNaturalityA(e.e, ChiKind::H, F, e.h).ok);
        CHECK(checkChiNaturalityB(e.e, ChiKind::V, e.one, F).ok);
    }
    for (const auto& F : enumerate2Functors(e.ar, e.iso, e.b)) {
        CHECK(checkChiNaturalityB(e.e, e.ar, F).ok);
        CHECK(checkChiNaturalityA(e.e, F, e.one2).ok);
    }
}

TEST_CASE("a wrong chi image is caught by the comparison") {
    Env e;
    TwoFunctor f = chiH(e.e, e.h, e.h);
    TwoFunctor g = f;
    for (std::size_t i = 1; i < g.obj.size(); ++i)
        if (g.obj[i] != g.obj[0]) {
            g.obj[i] = g.obj[0];
            break;
        }
    CheckResult r = compare2Functors(f, g);
    CHECK(!r.ok);
    CHECK(!r.witness.empty());
    CHECK_THROWS_AS(parseChiKind("w"), std::invalid_argument);
    CHECK(parseChiKind("sqr") == ChiKind::Sqr);
}
}

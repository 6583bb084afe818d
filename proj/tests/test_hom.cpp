#include <doctest.h>

#include "graydbl/hom.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

std::vector<CatPtr> smallZoo() {
    return {share(terminal()), share(freeArrowH()), share(freeArrowV()), share(generatorG()), share(discrete(2))};
}

}  // namespace

TEST_SUITE("hom") {
TEST_CASE("[[1,A]] is isomorphic to A through evaluation") {
    auto one = share(terminal());
    for (const auto& A : smallZoo()) {
        auto h = HomDouble::build(one, A);
        CHECK(validate(*h->cat).ok());
        CHECK(isIsomorphic(*h->cat, *A).has_value());
        auto e = evalAtPoint(*h);
        auto p = pointInclusion(*h);
        CHECK(validateFunctor(e).ok());
        CHECK(validateFunctor(p).ok());
        CHECK(composeFunctors(e, p).sameMaps(identityFunctor(A)));
        CHECK(composeFunctors(p, e).sameMaps(identityFunctor(h->cat)));
    }
}

TEST_CASE("[[A,1]] collapses to 1") {
    auto one = share(terminal());
    for (const auto& A : smallZoo()) {
        auto h = HomDouble::build(A, one);
        CHECK(isIsomorphic(*h->cat, *one).has_value());
    }
}

TEST_CASE("[[G,G]] validates with 9 objects") {
    auto g = share(generatorG());
    auto h = HomDouble::build(g, g);
    CHECK(h->cat->nObj() == 9);
    Report r = validate(*h->cat);
    CHECK_MESSAGE(r.ok(), r.summary());
}

TEST_CASE("[[arrowH,arrowH]] components validate and invert") {
    auto a = share(freeArrowH());
    auto h = HomDouble::build(a, a);
    CHECK(h->functors.size() == 3);
    CHECK(validate(*h->cat).ok());
    const DoubleCategory& B = *a;
    for (const auto& x : h->hps) {
        CHECK(validateHPseudo(h->functors[x.src], h->functors[x.tgt], x).ok());
        for (std::size_t i = 0; i < x.h.size(); ++i) {
            CHECK(B.vComp2(x.h[i], x.hInv[i]) == B.sqVId(B.top[x.h[i]]));
            CHECK(B.vComp2(x.hInv[i], x.h[i]) == B.sqVId(B.bottom[x.h[i]]));
        }
    }
    for (const auto& y : h->vps) CHECK(validateVPseudo(h->functors[y.src], h->functors[y.tgt], y).ok());
    for (const auto& m : h->mods) CHECK(validateModification(h->frameOf(m.top, m.bottom, m.left, m.right), m.comp).ok());
    for (std::size_t i = 0; i < h->functors.size(); ++i) {
        auto id = identityHPseudo(h->functors[i]);
        id.src = id.tgt = static_cast<int>(i);
        CHECK(h->findH(id) >= 0);
    }
}

TEST_CASE("frame mismatch is structural") {
    auto g = share(generatorG());
    auto F = identityFunctor(g);
    auto x = identityHPseudo(F);
    int tau = g->findByName(CellKind::Square, "tau");
    int t = g->top[tau];
    x.h[t] = tau;
    Report r = validateHPseudo(F, F, x);
    CHECK(!r.structural.empty());
}

TEST_CASE("strict hom is a sub-double category") {
    auto one = share(terminal());
    for (const auto& A : smallZoo()) {
        auto s = HomDouble::build(A, A, true);
        auto h = HomDouble::build(A, A);
        CHECK(validate(*s->cat).ok());
        auto inc = inclusionStrictHom(*s, *h);
        CHECK(validateFunctor(inc).ok());
        CHECK(s->cat->nH() <= h->cat->nH());
        auto s1 = HomDouble::build(one, A, true);
        CHECK(isIsomorphic(*s1->cat, *A).has_value());
    }
}

TEST_CASE("homMap identities, constants and functoriality") {
    auto one = share(terminal());
    auto a = share(freeArrowH());
    auto haa = HomDouble::build(a, a);
    auto m = homMap(identityFunctor(a), identityFunctor(a), *haa, *haa);
    CHECK(m.sameMaps(identityFunctor(haa->cat)));

    auto ha1 = HomDouble::build(a, one);
    auto c = homMap(identityFunctor(a), constantFunctor(a, one, 0), *haa, *ha1);
    CHECK(validateFunctor(c).ok());
    CHECK(c.sameMaps(constantFunctor(haa->cat, ha1->cat, 0)));

    // [[F,G]] composes contravariantly in F and covariantly in G.
    auto fs = enumerateDoubleFunctors(a, a);
    auto gs = enumerateDoubleFunctors(a, a);
    for (const auto& F1 : fs)
        for (const auto& G1 : gs) {
            auto m1 = homMap(F1, G1, *haa, *haa);
            CHECK(validateFunctor(m1).ok());
            for (const auto& F2 : fs) {
                auto m2 = homMap(F2, identityFunctor(a), *haa, *haa);
                auto lhs = homMap(composeFunctors(F1, F2), G1, *haa, *haa);
                CHECK(lhs.sameMaps(composeFunctors(m2, m1)));
            }
        }
}
}

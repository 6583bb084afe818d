#include <doctest.h>

#include <array>

#include "graydbl/canonical.hpp"

using namespace gd;

namespace {

CatPtr share(DoubleCategory d) {
    d.finalize();
    return std::make_shared<const DoubleCategory>(std::move(d));
}

struct Zoo {
    HomCache c;
    CatPtr one = c.one();
    CatPtr h = share(freeArrowH());
    CatPtr v = share(freeArrowV());
    CatPtr g = share(generatorG());
    CatPtr z2 = share(cyclicSquare(2));
};

// Sends the last cell of the richest kind to the image of the first one.
void bump(DoubleFunctor& f) {
    auto collapse = [](std::vector<int>& m) {
        for (std::size_t i = m.size(); i-- > 1;)
            if (m[i] != m[0]) {
                m[i] = m[0];
                return true;
            }
        return false;
    };
    if (collapse(f.sq) || collapse(f.h) || collapse(f.v)) return;
    collapse(f.obj);
}

}  // namespace

TEST_SUITE("canonical") {
TEST_CASE("l is a double functor") {
    Zoo z;
    CHECK(validateFunctor(lFunctor(z.c, z.h, z.h, z.g)).ok());
    CHECK(validateFunctor(lFunctor(z.c, z.z2, z.h, z.v)).ok());
    auto l = lFunctor(z.c, z.h, z.h, z.h);
    auto AA = z.c.get(z.h, z.h);
    for (int a = 0; a < AA->cat->nObj(); ++a) {
        int i = AA->cat->hId(a);
        CHECK(l.h[i] == l.cod->hId(l.obj[a]));
    }
}

TEST_CASE("l over the point is the identity up to [[1,X]] = X") {
    Zoo z;
    auto AB = z.c.get(z.h, z.g);
    auto l = lFunctor(z.c, z.one, z.h, z.g);
    auto T = z.c.get(z.c.get(z.one, z.h)->cat, z.c.get(z.one, z.g)->cat);
    auto pt = pointInclusion(*z.c.get(z.one, z.h));
    auto ev = evalAtPoint(*z.c.get(z.one, z.g));
    for (std::size_t i = 0; i < AB->functors.size(); ++i) {
        const auto& LG = T->functors[l.obj[i]];
        CHECK(composeFunctors(ev, composeFunctors(LG, pt)).sameMaps(AB->functors[i]));
    }
}

TEST_CASE("r is a double functor sending F to [[F,1]]") {
    Zoo z;
    auto r = rFunctor(z.c, z.g, z.h, z.h);
    CHECK(validateFunctor(r).ok());
    auto AB = z.c.get(z.h, z.h);
    auto T = z.c.get(z.c.get(z.h, z.g)->cat, z.c.get(z.h, z.g)->cat);
    for (std::size_t i = 0; i < AB->functors.size(); ++i)
        CHECK(T->functors[r.obj[i]].sameMaps(z.c.map(AB->functors[i], identityFunctor(z.g))));
    auto r1 = rFunctor(z.c, z.one, z.one, z.one);
    CHECK(r1.dom->nObj() == 1);
    CHECK(r1.cod->nObj() == 1);
    CHECK(validateFunctor(r1).ok());
    auto r2 = rFunctor(z.c, z.h, z.one, z.one);
    CHECK(r2.dom->nObj() == 1);
    CHECK(validateFunctor(r2).ok());
}

TEST_CASE("r uses the inverted interchangers") {
    // Z3 is the smallest zoo entry whose invertible squares differ from
    // their inverses; the image lookup fails if the wrong one is used.
    Budget b(200000000);
    HomCache c(b);
    CatPtr z3 = share(cyclicSquare(3));
    CHECK(validateFunctor(rFunctor(c, z3, c.one(), share(freeArrowH()))).ok());
}

TEST_CASE("r along a functor agrees with the full composite") {
    Zoo z;
    for (auto [A, B, D] : std::vector<std::array<CatPtr, 3>>{{z.one, z.h, z.h}, {z.h, z.one, z.v}, {z.one, z.v, z.h}}) {
        auto full = rFunctor(z.c, D, A, B);
        HomPtr BD = z.c.get(B, D), AD = z.c.get(A, D);
        for (CatPtr B0 : {z.one, z.h}) {
            for (const auto& E : enumerateDoubleFunctors(B0, BD->cat)) {
                auto lhs = rAlong(z.c, D, E, A, B);
                auto rhs = composeFunctors(z.c.map(E, identityFunctor(AD->cat)), full);
                CHECK(compareFunctors(lhs, rhs).ok);
            }
        }
    }
}

TEST_CASE("f is an involutive isomorphism") {
    Zoo z;
    auto f1 = fFunctor(z.c, z.one, z.one, z.one);
    CHECK(f1.sameMaps(identityFunctor(f1.dom)));
    CHECK(checkFInvolution(z.c, z.one, z.h, z.v).ok);
    CHECK(checkFInvolution(z.c, z.h, z.one, z.z2).ok);
    auto f = fFunctor(z.c, z.h, z.one, z.h);
    CHECK(validateFunctor(f).ok());
    CHECK(isIsomorphic(*f.dom, *f.cod).has_value());
    CHECK(!checkFInvolution(z.c, z.h, z.one, z.h, bump).ok);
}

TEST_CASE("l commutation") {
    Zoo z;
    CHECK(checkLCommutation(z.c, z.one, z.one, z.one, z.one).ok);
    CHECK(checkLCommutation(z.c, z.h, z.h, z.one, z.v).ok);
    CHECK(checkLCommutation(z.c, z.h, z.h, z.z2, z.z2).ok);
    auto bad = checkLCommutation(z.c, z.h, z.h, z.one, z.v, bump);
    CHECK(!bad.ok);
    CHECK(!bad.witness.empty());
}

TEST_CASE("l identity") {
    Zoo z;
    CHECK(checkLIdentity(z.c, z.one, z.one).ok);
    CHECK(checkLIdentity(z.c, z.h, z.g).ok);
    CHECK(checkLIdentity(z.c, z.z2, z.h).ok);
    CHECK(!checkLIdentity(z.c, z.h, z.g, bump).ok);
}

TEST_CASE("r square and r identity") {
    Zoo z;
    CHECK(checkRSquare(z.c, z.one, z.one, z.one).ok);
    CHECK(checkRSquare(z.c, z.h, z.one, z.h).ok);
    CHECK(checkRSquare(z.c, z.h, z.z2, z.h).ok);
    CHECK(!checkRSquare(z.c, z.h, z.h, z.h, bump).ok);
    CHECK(checkRIdentity(z.c, z.one, z.one).ok);
    CHECK(checkRIdentity(z.c, z.v, z.h).ok);
    CHECK(!checkRIdentity(z.c, z.v, z.h, bump).ok);
}

TEST_CASE("l-r pentagon and l-r square") {
    Zoo z;
    CHECK(checkLRPentagon(z.c, z.one, z.one, z.one).ok);
    CHECK(checkLRPentagon(z.c, z.one, z.h, z.one).ok);
    CHECK(checkLRPentagon(z.c, z.h, z.h, z.one).ok);
    CHECK(checkLRPentagon(z.c, z.z2, z.h, z.z2).ok);
    CHECK(!checkLRPentagon(z.c, z.h, z.h, z.one, bump).ok);
    CHECK(checkLRSquare(z.c, z.one, z.one, z.one).ok);
    CHECK(checkLRSquare(z.c, z.one, z.h, z.z2).ok);
    CHECK(checkLRSquare(z.c, z.h, z.h, z.z2).ok);
    CHECK(!checkLRSquare(z.c, z.h, z.h, z.z2, bump).ok);
}

TEST_CASE("cartesian l") {
    Zoo z;
    auto lx = lCartesianFunctor(z.c, z.h, z.h, z.h);
    CHECK(validateFunctor(lx).ok());
    CHECK(validateFunctor(lCartesianFunctor(z.c, z.one, z.h, z.g)).ok());
    CHECK(checkLCartesianSquare(z.c, z.h, z.h, z.h).ok);
    CHECK(checkLCartesianSquare(z.c, z.z2, z.h, z.z2).ok);
    CHECK(!checkLCartesianSquare(z.c, z.h, z.h, z.h, bump).ok);
}

TEST_CASE("naturality and extranaturality on zoo morphisms") {
    Zoo z;
    // A fresh cache per check keeps each within its own budget.
    auto fresh = [](auto check) {
        HomCache c;
        return check(c).ok;
    };
    std::vector<std::pair<CatPtr, CatPtr>> pairs{{z.h, z.h}, {z.v, z.v}, {z.one, z.h}, {z.h, z.one}};
    std::vector<CatPtr> others{z.one, z.h, z.v};
    for (const auto& [X, Y] : pairs)
        for (const auto& F : enumerateDoubleFunctors(X, Y))
            for (const auto& O : others) {
                CHECK(fresh([&](HomCache& c) { return checkLNaturalityA(c, O, z.one, F); }));
                CHECK(fresh([&](HomCache& c) { return checkLNaturalityB(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkLExtranaturality(c, O, z.one, F); }));
                CHECK(fresh([&](HomCache& c) { return checkLExtranaturality(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkRNaturalityA(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkRNaturalityB(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkRExtranaturality(c, O, z.one, F); }));
                CHECK(fresh([&](HomCache& c) { return checkFNaturalityA(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkFNaturalityB(c, z.one, O, F); }));
                CHECK(fresh([&](HomCache& c) { return checkFNaturalityD(c, O, z.one, F); }));
            }
    for (const auto& F : enumerateDoubleFunctors(z.h, z.z2))
        for (const auto& O : {z.h, z.v}) {
            CHECK(fresh([&](HomCache& c) { return checkLNaturalityA(c, O, z.one, F); }));
            CHECK(fresh([&](HomCache& c) { return checkLNaturalityB(c, z.one, O, F); }));
            CHECK(fresh([&](HomCache& c) { return checkRNaturalityA(c, z.one, O, F); }));
            CHECK(fresh([&](HomCache& c) { return checkRNaturalityB(c, z.one, O, F); }));
        }
}
}

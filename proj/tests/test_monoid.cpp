#include <doctest.h>

#include <random>
#include <set>

#include "graydbl/io.hpp"
#include "monoid_fixtures.hpp"

using namespace gd;

namespace {

std::set<std::string> failedConditions(const Report& r) {
    std::set<std::string> s;
    for (const auto& v : r.violations) s.insert(v.axiom);
    return s;
}

// Adds cells of the one-object labelled carrier: frames xor, labels add.
DoubleFunctor addition(CatPtr A, CatPtr AA) {
    const fx::Labelled& L = fx::labelled();
    DoubleFunctor f{AA, A, {}, {}, {}, {}};
    f.obj = {0};
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            f.h.push_back(x ^ y);
            f.v.push_back(x ^ y);
        }
    for (int s = 0; s < A->nSq(); ++s)
        for (int t = 0; t < A->nSq(); ++t)
            f.sq.push_back(L.sq(A->top[s] ^ A->top[t], A->bottom[s] ^ A->bottom[t], A->left[s] ^ A->left[t],
                                A->right[s] ^ A->right[t], L.label(s) + L.label(t)));
    return f;
}

DoubleFunctor projection(CatPtr A, CatPtr AA) {
    DoubleFunctor f{AA, A, {}, {}, {}, {}};
    for (CellKind k : {CellKind::Object, CellKind::HCell, CellKind::VCell, CellKind::Square}) {
        std::vector<int>& m = k == CellKind::Object ? f.obj
                              : k == CellKind::HCell ? f.h
                              : k == CellKind::VCell ? f.v
                                                     : f.sq;
        for (int i = 0; i < AA->count(k); ++i) m.push_back(i / A->count(k));
    }
    return f;
}

CatPtr square(CatPtr A) { return std::make_shared<const DoubleCategory>(cartesianProduct(*A, *A)); }

}  // namespace

TEST_SUITE("monoid") {
TEST_CASE("hand-built monoids satisfy every condition") {
    for (const auto& [name, m] : fx::validMonoids()) {
        INFO(name);
        Report r = checkGrayMonoid(m);
        CHECK_MESSAGE(r.ok(), r.summary(5));
        CHECK(checkGrayNaturality(m).ok());
    }
}

TEST_CASE("each mutant fails its condition") {
    for (const auto& c : fx::conditionNames()) {
        INFO(c);
        GrayMonoidData m = fx::mutant(c);
        Report r = checkGrayMonoid(m);
        CHECK(r.structural.empty());
        CHECK(r.hasAxiom(c));
        auto f = failedConditions(r);
        // (v) and (vi) drag (vii) along; the other mutants are clean.
        if (c == kMonIdentities)
            CHECK(f == std::set<std::string>{kMonIdentities, kMonComposition, kMonNaturality});
        else if (c == kMonComposition)
            CHECK(f == std::set<std::string>{kMonComposition, kMonNaturality});
        else
            CHECK(f == std::set<std::string>{c});
        CHECK(checkGrayNaturality(m).hasAxiom(kMonNaturality) == f.count(kMonNaturality) > 0);
    }
}

TEST_CASE("a non-associative magma") {
    // a.a = a, a.b = a, b.a = b, b.b = a: (b.a).b = a but b.(a.b) = b.
    Report r = checkGrayMonoid(discreteMonoid({{0, 1, 2}, {1, 1, 1}, {2, 2, 1}}, 0, "magma"));
    CHECK(r.hasAxiom(kMonAssoc));
    CHECK_FALSE(r.hasAxiom(kMonUnit));
    CHECK_FALSE(r.hasAxiom(kMonFunctors));
}

TEST_CASE("wrong unit, wrong frame, broken inverse") {
    GrayMonoidData m = fx::pMonoid(3);
    m.unit = 1;
    CHECK(failedConditions(checkGrayMonoid(m)) == std::set<std::string>{kMonUnit});

    m = fx::bMonoid(3, 3, 3, 3);
    const fx::Labelled& L = fx::labelled();
    m.star.hv[3] = L.sq(0, 0, 0, 0, 3);
    Report r = checkGrayMonoid(m);
    CHECK_FALSE(r.structural.empty());
    CHECK(r.violations.empty());

    m = fx::bMonoid(3, 3, 3, 3);
    m.star.hhInv[3] = L.sq(0, 0, 0, 0, 0);
    CHECK(failedConditions(checkGrayMonoid(m)) == std::set<std::string>{kMonInvertibility});

    m = fx::bMonoid(3, 3, 3, 3);
    m.star.vv.pop_back();
    CHECK_FALSE(checkGrayMonoid(m).structural.empty());
}

TEST_CASE("strict monoids from multiplication functors") {
    const fx::Labelled& L = fx::labelled();
    CatPtr AA = square(L.cat);
    DoubleFunctor add = addition(L.cat, AA);
    REQUIRE(validateFunctor(add).ok());
    GrayMonoidData m = fromStrictMonoid(L.cat, add, 0);
    CHECK(checkGrayMonoid(m).ok());
    CHECK(m.star.hq(1, 1) == L.sq(1, 1, 1, 1, 0));

    DerivedMultiplication d = derivedMultiplication(m);
    CHECK(d.preservesIdentities);
    CHECK(d.strictH);
    CHECK(d.strictV);
    CHECK(d.familiesValid);
    CHECK(d.h == add.h);
    CHECK(d.v == add.v);
    CHECK(d.sq == add.sq);

    CHECK_THROWS_AS(fromStrictMonoid(L.cat, projection(L.cat, AA), 0), std::invalid_argument);
    DoubleFunctor broken = add;
    broken.sq[5] = L.relabel(broken.sq[5], L.label(broken.sq[5]) + 1);
    CHECK_THROWS_AS(fromStrictMonoid(L.cat, broken, 0), std::invalid_argument);

    // Z/2 as a discrete strict monoid.
    auto Z = std::make_shared<const DoubleCategory>(discrete(2, "Z2"));
    CatPtr ZZ = square(Z);
    DoubleFunctor x{ZZ, Z, {0, 1, 1, 0}, {}, {}, {}};
    for (int i = 0; i < 4; ++i) {
        x.h.push_back(Z->hId(x.obj[i]));
        x.v.push_back(Z->vId(x.obj[i]));
        x.sq.push_back(Z->dblId(x.obj[i]));
    }
    // The identity cells of ZZ sit at the same indices as its objects.
    REQUIRE(validateFunctor(x).ok());
    CHECK(checkGrayMonoid(fromStrictMonoid(Z, x, 0)).ok());
    CHECK_THROWS_AS(fromStrictMonoid(Z, x, 1), std::invalid_argument);
}

TEST_CASE("derived multiplication of a monoid with non-identity interchangers") {
    const fx::Labelled& L = fx::labelled();
    const DoubleCategory& A = *L.cat;
    for (int t : {0, 3}) {
        INFO(t);
        DerivedMultiplication d = derivedMultiplication(fx::bMonoid(t, t, t, t));
        CHECK(d.preservesIdentities);
        CHECK(d.familiesValid);
        CHECK(d.hFamilies == 16);
        CHECK(d.vFamilies == 16);
        CHECK(d.strictH == (t == 0));
        CHECK(d.strictV == (t == 0));
        CHECK(d.hWitness.empty() == (t == 0));
        // A pair of squares goes to the sum of the labels plus t for each of
        // g*p and k*q that is non-trivial.
        for (int w = 0; w < A.nSq(); ++w)
            for (int s = 0; s < A.nSq(); ++s) {
                int extra = t * (A.right[w] & A.top[s]) + t * (A.bottom[w] & A.left[s]);
                int want = L.sq(A.top[w] ^ A.top[s], A.bottom[w] ^ A.bottom[s], A.left[w] ^ A.left[s],
                                A.right[w] ^ A.right[s], L.label(w) + L.label(s) + extra);
                REQUIRE(d.sq[w * A.nSq() + s] == want);
            }
    }
    DerivedMultiplication p = derivedMultiplication(fx::pMonoid(3));
    CHECK(p.familiesValid);
    CHECK_FALSE(p.strictH);
    CHECK_FALSE(p.strictV);
    CHECK_THROWS_AS(derivedMultiplication(fx::mutant(kMonNaturality)), std::invalid_argument);
}

TEST_CASE("naturality agrees with the cone check") {
    std::mt19937 rng(20261016);
    int pass = 0, fail = 0;
    GrayMonoidData base = fx::pMonoid(3);
    for (int i = 0; i < 100; ++i) {
        GrayMonoidData m = fx::randomMutation(base, rng, 1 + i % 3);
        Report ours = checkGrayNaturality(m);
        REQUIRE(ours.structural.empty());
        bool cone = validateCone(m.star).hasAxiom(kConeNaturality);
        CHECK(ours.hasAxiom(kMonNaturality) == cone);
        CHECK(checkGrayMonoid(m).hasAxiom(kMonNaturality) == cone);
        (cone ? fail : pass) += 1;
    }
    CHECK(pass > 0);
    CHECK(fail > 0);
}

TEST_CASE("a monoid curries to a functor into the hom") {
    GrayMonoidData m = fx::validMonoids()[1].second;
    auto AA = HomDouble::build(m.carrierPtr(), m.carrierPtr());
    DoubleFunctor F = curryCone(m.star, *AA);
    CHECK(validateFunctor(F).ok());
    CHECK(uncurryFunctor(F, *AA) == m.star);
}

TEST_CASE("monoid JSON round trip") {
    for (const auto& [name, m] : fx::validMonoids()) {
        INFO(name);
        nlohmann::json j = monoidToJson(m);
        GrayMonoidData same = monoidFromJson(j, m.carrierPtr());
        CHECK(same.star == m.star);
        CHECK(same.unit == m.unit);
        GrayMonoidData fresh = monoidFromJson(nlohmann::json::parse(j.dump()));
        CHECK(fresh.star.hh == m.star.hh);
        CHECK(fresh.star.objSq == m.star.objSq);
        CHECK(fresh.carrier().nSq() == m.carrier().nSq());
        CHECK(checkGrayMonoid(fresh).ok());
    }
    nlohmann::json bad = monoidToJson(fx::bMonoid(3, 3, 3, 3));
    bad["hv"][0].erase(0);
    CHECK_THROWS_AS(monoidFromJson(bad), StructuralError);
    bad = monoidToJson(fx::bMonoid(3, 3, 3, 3));
    bad["unit"] = "nowhere";
    CHECK_THROWS_AS(monoidFromJson(bad), StructuralError);
}
}

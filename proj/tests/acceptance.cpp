// One PASS/FAIL line per acceptance criterion.  Exit status is the number of
// failed criteria.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "graydbl/chi.hpp"
#include "graydbl/coherence.hpp"
#include "monoid_fixtures.hpp"
#include "oracles.hpp"

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

// Collects failures of one criterion.
struct Log {
    std::vector<std::string> failures;
    int checks = 0;
    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }
};

struct Zoo {
    CatPtr one = share(terminal());
    CatPtr g = share(generatorG());
    CatPtr h = share(freeArrowH());
    CatPtr v = share(freeArrowV());
    TwoCatPtr ar = share2(arrow2());
    TwoCatPtr w2 = share2(walking2Cell());
    TwoCatPtr idem = share2(idempotent2());

    std::vector<CatPtr> all() const {
        return {one,
                g,
                h,
                v,
                share(cartesianProduct(*h, *v)),
                share(cartesianProduct(*h, *h)),
                share(cartesianProduct(*g, *h)),
                share(quintetSqr(*ar)),
                share(quintetSqr(*w2)),
                share(quintetSqr(*idem))};
    }
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

bool namedFailure(const Report& r, const std::string& axiom) {
    if (!r.structural.empty()) return false;
    for (const auto& v : r.violations)
        if (v.axiom == axiom && !v.witness.empty()) return true;
    return false;
}

void c1(Log& L) {
    Zoo z;
    for (const auto& D : z.all()) {
        Report r = validate(*D);
        L.expect(r.ok(), "validate " + D->name + ": " + r.summary());
    }
    // Seeded faults, one per axiom family.
    {
        DoubleCategory a = freeArrowH();
        a.hc1.set(a.hId(0), a.findByName(CellKind::HCell, "a"), a.hId(0));
        L.expect(namedFailure(validate(a), "boundary (horizontal 1-cell composition)"), "boundary fault");
    }
    {
        DoubleCategory a = freeArrowH();
        for (int h = 0; h < a.nH(); ++h)
            if (!a.isHId(h)) a.hc1.erase(a.hId(a.hSrc[h]), h);
        L.expect(namedFailure(validate(a), "totality (horizontal 1-cell composition)"), "totality fault");
    }
    {
        DoubleCategory z3 = cyclicSquare(3);
        z3.vc2.set(z3.dblId(0), 1, 2);
        L.expect(namedFailure(validate(z3), "unit law (vertical square composition)"), "unit fault");
    }
    {
        DoubleCategory z3 = cyclicSquare(3);
        z3.hc2.set(1, 1, 1);
        L.expect(namedFailure(validate(z3), "associativity (horizontal square composition)"), "associativity fault");
    }
    {
        // Z/4 vertically and Z/2 x Z/2 horizontally: both associative and
        // unital, but they do not interchange.
        DoubleCategory z4 = cyclicSquare(4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) z4.hc2.set(a, b, a ^ b);
        Report r = validate(z4);
        L.expect(namedFailure(r, "interchange"), "interchange fault");
        L.expect(!r.hasAxiom("associativity (horizontal square composition)") &&
                     !r.hasAxiom("unit law (horizontal square composition)"),
                 "interchange fault is isolated");
    }
}

void c2(Log& L) {
    Zoo z;
    for (const auto& D : z.all()) {
        std::size_t n = enumerateDoubleFunctors(z.g, D).size();
        L.expect(n == static_cast<std::size_t>(D->nSq()),
                 D->name + ": " + std::to_string(n) + " functors vs " + std::to_string(D->nSq()) + " squares");
    }
}

void c3(Log& L) {
    Zoo z;
    for (const auto& A : z.all()) {
        auto h = HomDouble::build(z.one, A);
        L.expect(isIsomorphic(*h->cat, *A).has_value(), "[[1," + A->name + "]]");
    }
    for (const auto& A : {z.h, z.g}) {
        auto h = HomDouble::build(A, A);
        Report r = validate(*h->cat);
        L.expect(r.ok(), "[[" + A->name + "," + A->name + "]]: " + r.summary());
    }
}

void c4(Log& L) {
    Zoo z;
    // Each run gets its own cache and budget.
    Budget b{200000000};
    std::unique_ptr<HomCache> cache;
    HomCache* cp = nullptr;
    CatPtr one = z.one, h = z.h, v = z.v, g = z.g;
    auto fresh = [&]() {
        b = Budget{200000000};
        cache = std::make_unique<HomCache>(b);
        cp = cache.get();
    };
    auto law = [&](const std::string& name, const std::vector<std::function<CheckResult(const Perturb&)>>& tuples) {
        for (std::size_t i = 0; i <= tuples.size(); ++i) {
            bool faulty = i == tuples.size();
            std::string tag = name + (faulty ? " under fault injection" : " tuple " + std::to_string(i));
            fresh();
            try {
                CheckResult r = faulty ? tuples.back()(bump) : tuples[i]({});
                L.expect(faulty ? !r.ok && !r.witness.empty() : r.ok, tag + ": " + r.witness);
            } catch (const ResourceError& e) {
                L.expect(false, tag + ": " + e.what());
            }
        }
    };
    law("l commutation", {[&](const Perturb& p) { return checkLCommutation(*cp, one, one, one, one, p); },
                          [&](const Perturb& p) { return checkLCommutation(*cp, h, one, one, v, p); },
                          [&](const Perturb& p) { return checkLCommutation(*cp, h, h, one, v, p); }});
    law("l identity", {[&](const Perturb& p) { return checkLIdentity(*cp, one, one, p); },
                       [&](const Perturb& p) { return checkLIdentity(*cp, h, v, p); },
                       [&](const Perturb& p) { return checkLIdentity(*cp, h, g, p); }});
    law("r square", {[&](const Perturb& p) { return checkRSquare(*cp, one, one, one, p); },
                     [&](const Perturb& p) { return checkRSquare(*cp, h, one, h, p); },
                     [&](const Perturb& p) { return checkRSquare(*cp, h, h, h, p); }});
    law("r identity", {[&](const Perturb& p) { return checkRIdentity(*cp, one, one, p); },
                       [&](const Perturb& p) { return checkRIdentity(*cp, h, g, p); },
                       [&](const Perturb& p) { return checkRIdentity(*cp, v, h, p); }});
    law("l-r pentagon", {[&](const Perturb& p) { return checkLRPentagon(*cp, one, one, one, p); },
                         [&](const Perturb& p) { return checkLRPentagon(*cp, one, h, one, p); },
                         [&](const Perturb& p) { return checkLRPentagon(*cp, h, h, one, p); }});
    law("l-r square", {[&](const Perturb& p) { return checkLRSquare(*cp, one, one, one, p); },
                       [&](const Perturb& p) { return checkLRSquare(*cp, one, h, v, p); },
                       [&](const Perturb& p) { return checkLRSquare(*cp, h, h, v, p); }});
    law("f involution", {[&](const Perturb& p) { return checkFInvolution(*cp, one, h, v, p); },
                         [&](const Perturb& p) { return checkFInvolution(*cp, h, one, g, p); },
                         [&](const Perturb& p) { return checkFInvolution(*cp, h, one, h, p); }});
}

void c5(Log& L) {
    Zoo z;
    CatPtr iso = share(isoCellH()), z3 = share(cyclicSquare(3));
    for (auto [A, B, C] : std::vector<std::array<CatPtr, 3>>{
             {z.g, z.g, z.h}, {z.h, z.h, z3}, {z.h, z.v, iso}, {z.g, z.one, z.h}}) {
        std::string tag = A->name + "," + B->name + ";" + C->name;
        Budget b;
        auto cones = enumerateCones(A, B, C, b);
        auto BC = HomDouble::build(B, C);
        auto fs = enumerateDoubleFunctors(A, BC->cat);
        L.expect(cones.size() == fs.size(), tag + ": " + std::to_string(cones.size()) + " cones vs " +
                                                std::to_string(fs.size()) + " functors");
        bool round = true;
        for (const auto& k : cones) round = round && uncurryFunctor(curryCone(k, *BC), *BC) == k;
        for (const auto& F : fs) round = round && curryCone(uncurryFunctor(F, *BC), *BC).sameMaps(F);
        L.expect(round, tag + ": curry/uncurry round trip");
    }
}

void c6(Log& L) {
    Zoo z;
    for (const auto& X : {z.h, z.v, z.g}) {
        auto l = realizeTensor(z.one, X, 5);
        L.expect(l.tensor && isIsomorphic(*l.tensor->cat, *X).has_value(), "1 (x) " + X->name + " " + l.failure);
        auto r = realizeTensor(X, z.one, 5);
        L.expect(r.tensor && isIsomorphic(*r.tensor->cat, *X).has_value(), X->name + " (x) 1 " + r.failure);
    }
    auto r = realizeTensor(z.h, z.h, 5);
    L.expect(r.tensor.has_value(), "arrowH (x) arrowH: " + r.failure);
    if (r.tensor) {
        L.expect(r.tensor->certifiedAgainst.size() >= 2, "certified against two codomains");
        L.expect(validate(*r.tensor->cat).ok(), "arrowH (x) arrowH validates");
        for (const auto& C : {share(isoCellH()), share(cyclicSquare(3))}) {
            Budget b;
            L.expect(countCones(z.h, z.h, C, b) == enumerateDoubleFunctors(r.tensor->cat, C).size(),
                     "cone count into " + C->name);
        }
    }
    auto shallow = realizeTensor(z.h, z.h, 1);
    L.expect(!shallow.tensor && shallow.failure.rfind("unbounded", 0) == 0, "depth 1 reports unbounded");
}

void c7(Log& L) {
    Zoo z;
    Budget b{50000000};
    HomCache c{b};
    TensorCache t{b};
    CatPtr one = c.one(), h = z.h, g = z.g;
    auto pass = [&](const CoherenceResult& r, const std::string& what) {
        L.expect(r.passed(), what + ": " + statusName(r.status) + " " + r.witness + r.reason);
    };
    pass(checkEpsALTriangle(c, t, one, one, one), "eps-a-l at 1");
    pass(checkTriangle(c, t, one, one, one), "triangle at 1");
    pass(checkPentagon(c, t, one, one, one, one), "pentagon at 1");
    pass(checkHexagon(c, t, one, one, one, one), "hexagon at 1");
    pass(checkEpsALTriangle(c, t, one, h, g), "eps-a-l (1,arrowH,G)");
    pass(checkTriangle(c, t, h, h, h), "triangle (arrowH,arrowH,arrowH)");
    pass(checkPentagon(c, t, h, one, h, one), "pentagon (arrowH,1,arrowH,1)");
    pass(checkHexagon(c, t, h, one, one, h), "hexagon (arrowH,1,1,arrowH)");
}

void c8(Log& L) {
    Zoo z;
    Budget b{100000000};
    HomCache c{b};
    TwoHomCache th{b};
    ChiEnv e{c, th};
    CatPtr one = c.one(), h = z.h, g = z.g;
    TwoCatPtr one2 = th.one(), iso2 = share2(invertible2Cell());
    L.expect(isIsomorphic(quintetSqr(terminal2()), terminal()).has_value(), "Sqr(1) = 1");
    CatPtr idem = share(verticallyDiscrete(*z.idem));

    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{{one, g}, {h, h}}) {
        std::string tag = A->name + "," + B->name;
        L.expect(validate2Functor(chiH(e, A, B)).ok(), "chiH " + tag);
        L.expect(validate2Functor(chiV(e, A, B)).ok(), "chiV " + tag);
    }
    for (auto [A, B] : std::vector<std::pair<TwoCatPtr, TwoCatPtr>>{{z.ar, z.ar}, {z.ar, iso2}})
        L.expect(validateFunctor(chiSqr(e, A, B)).ok(), "chiSqr " + A->name + "," + B->name);
    for (auto [A, B] : std::vector<std::pair<CatPtr, CatPtr>>{{one, idem}, {h, idem}})
        L.expect(validateFunctor(chiMnd(e.mnd(), A, B)).ok(), "chiMnd " + A->name + "," + B->name);

    for (auto k : {ChiKind::H, ChiKind::V}) {
        L.expect(checkChiAssoc(e, k, one, one, one).ok, chiName(k) + " assoc (1,1,1)");
        L.expect(checkChiAssoc(e, k, h, h, one).ok, chiName(k) + " assoc (arrowH,arrowH,1)");
        L.expect(checkChiAssoc(e, k, one, h, h).ok, chiName(k) + " assoc (1,arrowH,arrowH)");
        for (const auto& A : {one, h, g}) L.expect(checkChiUnit(e, k, A).ok, chiName(k) + " unit " + A->name);
    }
    L.expect(checkChiAssoc(e, one2, one2, one2).ok, "Sqr assoc (1,1,1)");
    L.expect(checkChiAssoc(e, z.ar, z.ar, one2).ok, "Sqr assoc (arrow2,arrow2,1)");
    L.expect(checkChiAssoc(e, z.ar, z.idem, one2).ok, "Sqr assoc (arrow2,idempotent2,1)");
    for (const auto& A : {one2, z.ar, z.idem}) L.expect(checkChiUnit(e, A).ok, "Sqr unit " + A->name);
    L.expect(checkChiAssoc(e, ChiKind::Mnd, one, one, one).ok, "Mnd assoc (1,1,1)");
    L.expect(checkChiAssoc(e, ChiKind::Mnd, one, idem, one).ok, "Mnd assoc (1,idem,1)");
    L.expect(checkChiAssoc(e, ChiKind::Mnd, h, idem, one).ok, "Mnd assoc (arrowH,idem,1)");
    for (const auto& A : {one, h, idem}) L.expect(checkChiUnit(e, ChiKind::Mnd, A).ok, "Mnd unit " + A->name);
}

void c9(Log& L) {
    for (const auto& [name, m] : fx::validMonoids()) {
        Report r = checkGrayMonoid(m);
        L.expect(r.ok(), "fixture " + name + ": " + r.summary());
    }
    std::set<std::string> named;
    for (const auto& cond : fx::conditionNames()) {
        Report r = checkGrayMonoid(fx::mutant(cond));
        bool hit = namedFailure(r, cond);
        L.expect(hit, "mutant " + cond + ": " + r.summary());
        if (hit) named.insert(cond);
    }
    L.expect(named.size() == 7, "7 distinct named failures");

    std::mt19937 rng(20261016);
    GrayMonoidData base = fx::pMonoid(3);
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
        GrayMonoidData m = fx::randomMutation(base, rng, 1 + i % 3);
        agree += checkGrayNaturality(m).hasAxiom(kMonNaturality) == validateCone(m.star).hasAxiom(kConeNaturality);
    }
    L.expect(agree == 100, "(vii) agrees with the cone check on " + std::to_string(agree) + "/100");
}

void c10(Log& L) {
    Zoo z;
    Budget b{50000000};
    HomCache c{b};
    TensorCache t{b};
    CatPtr A = z.h, B = c.one(), C = z.g;
    DoubleFunctor a = assocHomMap(c, t, A, B, C);
    const RealizedTensor& T = t.get(A, B);
    HomPtr BC = c.get(B, C);
    L.expect(validateFunctor(a).ok(), "a is a double functor");
    L.expect(oracle::bijective(a), "a is bijective on every kind");
    std::string diff = oracle::assocAgreesWithCurry(a, *c.get(T.cat, C), *BC, *c.get(A, BC->cat), T.universal);
    L.expect(diff.empty(), "a agrees with currying: " + diff);
}

struct Criterion {
    int id;
    const char* title;
    double limitSeconds;
    void (*run)(Log&);
};

}  // namespace

int main() {
    const Criterion all[] = {
        {1, "core soundness", 5, c1},
        {2, "representability of G", 10, c2},
        {3, "hom construction", 60, c3},
        {4, "canonical laws", 300, c4},
        {5, "adjunction", 300, c5},
        {6, "realization", 600, c6},
        {7, "coherence", 600, c7},
        {8, "example functors", 600, c8},
        {9, "monoid checker", 120, c9},
        {10, "cross-oracle", 60, c10},
    };
    int failed = 0;
    for (const auto& c : all) {
        Log L;
        auto t0 = std::chrono::steady_clock::now();
        try {
            c.run(L);
        } catch (const std::exception& e) {
            L.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limitSeconds) L.failures.push_back("over the time limit");
        bool ok = L.failures.empty();
        failed += !ok;
        std::printf("criterion %2d %-22s %s  (%d checks, %.2fs / %.0fs)\n", c.id, c.title, ok ? "PASS" : "FAIL",
                    L.checks, secs, c.limitSeconds);
        for (const auto& f : L.failures) std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
    }
    return failed;
}

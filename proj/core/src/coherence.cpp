#include "graydbl/coherence.hpp"

namespace gd {

const RealizedTensor& TensorCache::get(const CatPtr& A, const CatPtr& B) {
    auto key = std::make_pair(static_cast<const void*>(A.get()), static_cast<const void*>(B.get()));
    if (auto it = done_.find(key); it != done_.end()) return *it->second;
    if (auto it = failed_.find(key); it != failed_.end())
        throw Unrealized(A->name + " (x) " + B->name + ": " + it->second);
    std::string last = "unbounded";
    for (int d = 1; d <= maxDepth_; ++d) {
        RealizeOptions o = options;
        o.maxDepth = d;
        RealizeResult r = realizeTensor(A, B, o, *budget_);
        if (r.tensor) {
            auto p = std::make_shared<RealizedTensor>(std::move(*r.tensor));
            done_[key] = p;
            keep_[key] = {A, B};
            return *p;
        }
        last = r.failure;
        if (last.rfind("unbounded", 0) != 0) break;
    }
    failed_[key] = last + " at depth " + std::to_string(maxDepth_);
    keep_[key] = {A, B};
    throw Unrealized(A->name + " (x) " + B->name + ": " + failed_[key]);
}

bool TensorCache::realizable(const CatPtr& A, const CatPtr& B) {
    try {
        get(A, B);
        return true;
    } catch (const Unrealized&) {
        return false;
    }
}

DoubleFunctor unitEta(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B) {
    const RealizedTensor& T = t.get(A, B);
    return curryCone(T.universal, *c.get(B, T.cat));
}

TensorCone counitEpsilon(HomCache& c, const CatPtr& A, const CatPtr& B) {
    HomPtr BA = c.get(B, A);
    return uncurryFunctor(identityFunctor(BA->cat), *BA);
}

DoubleFunctor counitFunctor(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B) {
    TensorCone e = counitEpsilon(c, A, B);
    return inducedFunctor(t.get(e.A, B), e);
}

DoubleFunctor tensorFunctors(TensorCache& t, const DoubleFunctor& F, const DoubleFunctor& G) {
    const RealizedTensor& tgt = t.get(F.cod, G.cod);
    const RealizedTensor& src = t.get(F.dom, G.dom);
    return inducedFunctor(src, precomposeCone(tgt.universal, F, G));
}

DoubleFunctor assocHomMap(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C) {
    DoubleFunctor eta = unitEta(c, t, A, B);
    return lAlong(c, B, eta, t.get(A, B).cat, C);
}

DoubleFunctor associator(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C) {
    CatPtr BC = t.get(B, C).cat;
    CatPtr D = t.get(A, BC).cat;
    DoubleFunctor g = composeFunctors(assocHomMap(c, t, B, C, D), unitEta(c, t, A, BC));
    HomPtr CD = c.get(C, D);
    const RealizedTensor& AB = t.get(A, B);
    DoubleFunctor f = inducedFunctor(AB, uncurryFunctor(g, *c.get(B, CD->cat)));
    return inducedFunctor(t.get(AB.cat, C), uncurryFunctor(f, *CD));
}

Unitors unitors(HomCache& c, TensorCache& t, const CatPtr& A) {
    CatPtr one = c.one();
    Unitors u;
    DoubleFunctor incl = pointInclusion(*c.get(one, A));
    u.rhoCone = precomposeCone(counitEpsilon(c, A, one), incl, identityFunctor(one));
    u.rho = inducedFunctor(t.get(A, one), u.rhoCone);
    u.lambdaCone = precomposeCone(counitEpsilon(c, A, A), unitPoint(c, A), identityFunctor(A));
    u.lambda = inducedFunctor(t.get(one, A), u.lambdaCone);
    return u;
}

TensorCone symmetryCone(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B) {
    CatPtr D = t.get(B, A).cat;
    CatPtr one = c.one();
    // [[eta,1]] . r_{1,A}, evaluated along eta only.
    DoubleFunctor r = rAlong(c, D, unitEta(c, t, B, A), one, A);
    DoubleFunctor ev = c.map(identityFunctor(B), evalAtPoint(*c.get(one, D)));
    DoubleFunctor F = composeFunctors(ev, composeFunctors(r, pointInclusion(*c.get(one, A))));
    return precomposeCone(counitEpsilon(c, D, B), F, identityFunctor(B));
}

DoubleFunctor symmetry(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B) {
    TensorCone k = symmetryCone(c, t, A, B);
    return inducedFunctor(t.get(A, B), k);
}

std::string statusName(CoherenceResult::Status s) {
    switch (s) {
        case CoherenceResult::Pass: return "pass";
        case CoherenceResult::Fail: return "fail";
        case CoherenceResult::Skipped: return "skipped";
    }
    return "?";
}

namespace {

void tamper(const Perturb& p, DoubleFunctor& f) {
    if (p) p(f);
}

// Runs body, turning an unrealized tensor into a skip.
template <class Body>
CoherenceResult guarded(const std::string& law, Body body) {
    CoherenceResult r;
    r.law = law;
    try {
        CheckResult k = body();
        if (!k.ok) {
            r.status = CoherenceResult::Fail;
            r.witness = k.witness.empty() ? k.detail : k.witness + " (" + k.detail + ")";
        }
    } catch (const Unrealized& e) {
        r.status = CoherenceResult::Skipped;
        r.reason = std::string("unrealized: ") + e.what();
    }
    return r;
}

CheckResult labelled(CheckResult r, const std::string& where) {
    if (!r.ok) r.detail = where + ": " + r.detail;
    return r;
}

// Compares f . G and g . G for each G : X -> dom(f), up to a cap.
CheckResult alongFunctors(const DoubleFunctor& f, const DoubleFunctor& g, const CatPtr& X, Budget& b,
                          std::size_t cap = 64) {
    auto gs = enumerateDoubleFunctors(X, f.dom, b);
    for (std::size_t i = 0; i < gs.size() && i < cap; ++i) {
        CheckResult r = compareFunctors(composeFunctors(f, gs[i]), composeFunctors(g, gs[i]));
        if (!r.ok) return labelled(r, "after functor #" + std::to_string(i) + " from " + X->name);
    }
    return {};
}

}  // namespace

CoherenceResult checkEpsALTriangle(HomCache& c, TensorCache& t, const CatPtr& C, const CatPtr& P, const CatPtr& K,
                                   const Perturb& p) {
    return guarded("eps-a-l triangle", [&]() -> CheckResult {
        CatPtr CP = c.get(C, P)->cat;
        DoubleFunctor eps = counitFunctor(c, t, P, C);
        DoubleFunctor a = assocHomMap(c, t, CP, C, K);
        tamper(p, a);
        DoubleFunctor lhs = composeFunctors(a, c.map(eps, identityFunctor(K)));
        CheckResult outer = labelled(compareFunctors(lhs, lFunctor(c, C, P, K)), "a . [[eps,1]] vs l");
        if (!outer.ok) return outer;
        DoubleFunctor tri = composeFunctors(c.map(identityFunctor(C), eps), unitEta(c, t, CP, C));
        return labelled(compareFunctors(tri, identityFunctor(CP)), "[[1,eps]] . eta vs 1");
    });
}

CoherenceResult checkTriangle(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& K,
                              const Perturb& p) {
    return guarded("triangle", [&]() -> CheckResult {
        CatPtr one = c.one();
        Unitors u = unitors(c, t, B);
        DoubleFunctor a = assocHomMap(c, t, one, B, K);
        tamper(p, a);
        DoubleFunctor lhs = composeFunctors(a, c.map(u.lambda, identityFunctor(K)));
        HomPtr BK = c.get(B, K);
        DoubleFunctor canon = pointInclusion(*c.get(one, BK->cat));
        CheckResult r = labelled(compareFunctors(lhs, canon), "a . [[lambda,1]] vs canonical");
        if (!r.ok) return r;
        DoubleFunctor lid = lAlong(c, B, unitPoint(c, B), B, K);
        r = labelled(compareFunctors(lid, canon), "[[1_B,1]] . l vs canonical");
        if (!r.ok) return r;
        return alongFunctors(lhs, canon, A, c.budget());
    });
}

CoherenceResult checkPentagon(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C,
                              const CatPtr& K, const Perturb& p) {
    return guarded("pentagon", [&]() -> CheckResult {
        CatPtr BC = t.get(B, C).cat;
        CatPtr AB = t.get(A, B).cat;
        CatPtr CK = c.get(C, K)->cat;
        DoubleFunctor alpha = associator(c, t, A, B, C);
        DoubleFunctor aBC = assocHomMap(c, t, B, C, K);
        DoubleFunctor aA_BC = assocHomMap(c, t, A, BC, K);
        DoubleFunctor aAB_C = assocHomMap(c, t, AB, C, K);
        DoubleFunctor aAB = assocHomMap(c, t, A, B, CK);
        tamper(p, aA_BC);
        DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(A), aBC), aA_BC);
        DoubleFunctor rhs = composeFunctors(aAB, composeFunctors(aAB_C, c.map(alpha, identityFunctor(K))));
        return compareFunctors(lhs, rhs);
    });
}

CoherenceResult checkHexagon(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C,
                             const CatPtr& K, const Perturb& p) {
    return guarded("hexagon", [&]() -> CheckResult {
        DoubleFunctor phi = symmetry(c, t, A, C);
        DoubleFunctor aAC = assocHomMap(c, t, A, C, K);
        DoubleFunctor aCA = assocHomMap(c, t, C, A, K);
        tamper(p, aAC);
        DoubleFunctor lhs =
            composeFunctors(fFunctor(c, K, A, C), composeFunctors(aAC, c.map(phi, identityFunctor(K))));
        CheckResult r = compareFunctors(lhs, aCA);
        if (!r.ok) return r;
        return alongFunctors(lhs, aCA, B, c.budget());
    });
}

}  // namespace gd

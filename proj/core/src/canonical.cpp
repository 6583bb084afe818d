#include "graydbl/canonical.hpp"

namespace gd {

HomPtr HomCache::get(const CatPtr& A, const CatPtr& B, bool strict) {
    auto key = std::make_tuple(static_cast<const void*>(A.get()), static_cast<const void*>(B.get()), strict);
    auto it = homs_.find(key);
    if (it != homs_.end()) return it->second;
    HomPtr h = HomDouble::build(A, B, *budget_, strict);
    homs_.emplace(key, h);
    return h;
}

CatPtr HomCache::one() {
    if (!one_) {
        DoubleCategory t = terminal();
        t.finalize();
        one_ = std::make_shared<const DoubleCategory>(std::move(t));
    }
    return one_;
}

DoubleFunctor HomCache::map(const DoubleFunctor& F, const DoubleFunctor& G, bool strict) {
    HomPtr src = get(F.cod, G.dom, strict);
    HomPtr tgt = get(F.dom, G.cod, strict);
    return homMap(F, G, *src, *tgt);
}

CheckResult compareFunctors(const DoubleFunctor& f, const DoubleFunctor& g) {
    CheckResult r;
    if (f.dom.get() != g.dom.get() || f.cod.get() != g.cod.get()) {
        r.ok = false;
        r.detail = "functors are not parallel";
        return r;
    }
    if (auto d = firstDifference(f, g)) {
        r.ok = false;
        r.witness = std::string(kindName(d->kind)) + " " + f.dom->cellName(d->kind, d->index);
        r.detail = "images " + f.cod->cellName(d->kind, f.apply(d->kind, d->index)) + " and " +
                   g.cod->cellName(d->kind, g.apply(d->kind, d->index)) + " differ";
    }
    return r;
}

namespace {

int need(int idx, const char* what) {
    if (idx < 0) throw StructuralError(std::string("canonical functor: ") + what + " is not a cell of the target");
    return idx;
}

// l^D_{A,B}, or with E : A0 -> [[D,A]] given, the composite [[E,1]] . l^D_{A,B}
// evaluated only on the components E reaches.
DoubleFunctor lImpl(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B, bool s,
                    const DoubleFunctor* E = nullptr) {
    HomPtr AB = c.get(A, B, s), DA = c.get(D, A, s), DB = c.get(D, B, s);
    const HomDouble& db = *DB;
    const DoubleCategory& dbc = *DB->cat;
    const int na = D->nObj();
    const std::size_t nF = DA->functors.size(), nHp = DA->hps.size(), nVp = DA->vps.size();
    std::vector<char> needF(nF, E ? 0 : 1), needH(nHp, E ? 0 : 1), needV(nVp, E ? 0 : 1);
    if (E) {
        if (E->cod.get() != DA->cat.get()) throw StructuralError("l along E: codomain of E is not [[D,A]]");
        for (int i : E->obj) needF[i] = 1;
        for (int i : E->h) needH[i] = 1;
        for (int i : E->v) needV[i] = 1;
    }
    HomPtr T = E ? c.get(E->dom, DB->cat, s) : c.get(DA->cat, DB->cat, s);
    DoubleFunctor idD = identityFunctor(D);
    DoubleFunctor r{AB->cat, T->cat, {}, {}, {}, {}};

    // Restricts a family indexed by the cells of [[D,A]] along E.
    auto along = [&](const std::vector<int>& fam, const std::vector<int>& emap) {
        if (!E) return fam;
        std::vector<int> out;
        for (int i : emap) out.push_back(fam[i]);
        return out;
    };

    std::vector<DoubleFunctor> lf;
    for (const auto& G : AB->functors) {
        lf.push_back(homMap(idD, G, *DA, db));
        if (!E) {
            r.obj.push_back(need(T->findFunctor(lf.back()), "[[1,G]]"));
        } else {
            const DoubleFunctor& L = lf.back();
            r.obj.push_back(need(T->findFunctorMaps(along(L.obj, E->obj), along(L.h, E->h), along(L.v, E->v),
                                                    along(L.sq, E->sq)),
                                 "[[1,G]] . E"));
        }
    }
    for (const auto& x : AB->hps) {
        const DoubleFunctor &LG = lf[x.src], &LG2 = lf[x.tgt];
        HPseudo X;
        X.src = r.obj[x.src];
        X.tgt = r.obj[x.tgt];
        X.obj.assign(nF, -1);
        X.v.assign(nVp, -1);
        X.h.assign(nHp, -1);
        X.hInv.assign(nHp, -1);
        for (std::size_t hi = 0; hi < nF; ++hi) {
            if (!needF[hi]) continue;
            const DoubleFunctor& H = DA->functors[hi];
            HPseudo cx;
            cx.src = LG.obj[hi];
            cx.tgt = LG2.obj[hi];
            for (int a = 0; a < na; ++a) cx.obj.push_back(x.obj[H.obj[a]]);
            for (int f = 0; f < D->nV(); ++f) cx.v.push_back(x.v[H.v[f]]);
            for (int h = 0; h < D->nH(); ++h) {
                cx.h.push_back(x.h[H.h[h]]);
                cx.hInv.push_back(x.hInv[H.h[h]]);
            }
            X.obj[hi] = need(db.findH(cx), "x_H");
        }
        for (std::size_t qi = 0; qi < nVp; ++qi) {
            if (!needV[qi]) continue;
            const VPseudo& q = DA->vps[qi];
            Modification m{X.obj[q.src], X.obj[q.tgt], LG.v[qi], LG2.v[qi], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(x.v[q.obj[a]]);
            X.v[qi] = need(db.findMod(m), "x_q");
        }
        for (std::size_t pi = 0; pi < nHp; ++pi) {
            if (!needH[pi]) continue;
            const HPseudo& p = DA->hps[pi];
            int top = dbc.hComp1(LG.h[pi], X.obj[p.tgt]), bottom = dbc.hComp1(X.obj[p.src], LG2.h[pi]);
            int left = dbc.vId(LG.obj[p.src]), right = dbc.vId(LG2.obj[p.tgt]);
            Modification m{top, bottom, left, right, {}}, mi{bottom, top, left, right, {}};
            for (int a = 0; a < na; ++a) {
                m.comp.push_back(x.h[p.obj[a]]);
                mi.comp.push_back(x.hInv[p.obj[a]]);
            }
            X.h[pi] = need(db.findMod(m), "x^p");
            X.hInv[pi] = need(db.findMod(mi), "inverse of x^p");
        }
        if (E) {
            X.obj = along(X.obj, E->obj);
            X.v = along(X.v, E->v);
            X.hInv = along(X.hInv, E->h);
            X.h = along(X.h, E->h);
        }
        r.h.push_back(need(T->findH(X), "image of a horizontal pseudotransformation"));
    }
    for (const auto& y : AB->vps) {
        const DoubleFunctor &LG = lf[y.src], &LJ = lf[y.tgt];
        VPseudo Y;
        Y.src = r.obj[y.src];
        Y.tgt = r.obj[y.tgt];
        Y.obj.assign(nF, -1);
        Y.h.assign(nHp, -1);
        Y.v.assign(nVp, -1);
        Y.vInv.assign(nVp, -1);
        for (std::size_t hi = 0; hi < nF; ++hi) {
            if (!needF[hi]) continue;
            const DoubleFunctor& H = DA->functors[hi];
            VPseudo cy;
            cy.src = LG.obj[hi];
            cy.tgt = LJ.obj[hi];
            for (int a = 0; a < na; ++a) cy.obj.push_back(y.obj[H.obj[a]]);
            for (int h = 0; h < D->nH(); ++h) cy.h.push_back(y.h[H.h[h]]);
            for (int f = 0; f < D->nV(); ++f) {
                cy.v.push_back(y.v[H.v[f]]);
                cy.vInv.push_back(y.vInv[H.v[f]]);
            }
            Y.obj[hi] = need(db.findV(cy), "y_H");
        }
        for (std::size_t pi = 0; pi < nHp; ++pi) {
            if (!needH[pi]) continue;
            const HPseudo& p = DA->hps[pi];
            Modification m{LG.h[pi], LJ.h[pi], Y.obj[p.src], Y.obj[p.tgt], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(y.h[p.obj[a]]);
            Y.h[pi] = need(db.findMod(m), "y_p");
        }
        for (std::size_t qi = 0; qi < nVp; ++qi) {
            if (!needV[qi]) continue;
            const VPseudo& q = DA->vps[qi];
            int top = dbc.hId(LG.obj[q.src]), bottom = dbc.hId(LJ.obj[q.tgt]);
            int left = dbc.vComp1(Y.obj[q.src], LJ.v[qi]), right = dbc.vComp1(LG.v[qi], Y.obj[q.tgt]);
            Modification m{top, bottom, left, right, {}}, mi{top, bottom, right, left, {}};
            for (int a = 0; a < na; ++a) {
                m.comp.push_back(y.v[q.obj[a]]);
                mi.comp.push_back(y.vInv[q.obj[a]]);
            }
            Y.v[qi] = need(db.findMod(m), "y^q");
            Y.vInv[qi] = need(db.findMod(mi), "inverse of y^q");
        }
        if (E) {
            Y.obj = along(Y.obj, E->obj);
            Y.h = along(Y.h, E->h);
            Y.vInv = along(Y.vInv, E->v);
            Y.v = along(Y.v, E->v);
        }
        r.v.push_back(need(T->findV(Y), "image of a vertical pseudotransformation"));
    }
    for (const auto& g : AB->mods) {
        Modification M{r.h[g.top], r.h[g.bottom], r.v[g.left], r.v[g.right], {}};
        const HPseudo &X = T->hps[M.top], &Z = T->hps[M.bottom];
        const VPseudo &Y = T->vps[M.left], &V = T->vps[M.right];
        const int nIdx = E ? E->dom->nObj() : static_cast<int>(nF);
        for (int i = 0; i < nIdx; ++i) {
            const DoubleFunctor& H = DA->functors[E ? E->obj[i] : i];
            Modification m{X.obj[i], Z.obj[i], Y.obj[i], V.obj[i], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(g.comp[H.obj[a]]);
            M.comp.push_back(need(db.findMod(m), "Gamma_H"));
        }
        r.sq.push_back(need(T->findMod(M), "image of a modification"));
    }
    return r;
}

}  // namespace

DoubleFunctor lFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B) {
    return lImpl(c, D, A, B, false);
}

DoubleFunctor lCartesianFunctor(HomCache& c, const CatPtr& C, const CatPtr& A, const CatPtr& B) {
    return lImpl(c, C, A, B, true);
}

DoubleFunctor lAlong(HomCache& c, const CatPtr& D, const DoubleFunctor& E, const CatPtr& A, const CatPtr& B) {
    return lImpl(c, D, A, B, false, &E);
}

namespace {

// r^D_{A,B}, or with E : B0 -> [[B,D]] given, [[E,1]] . r^D_{A,B} evaluated
// only on the components E reaches.
DoubleFunctor rImpl(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B, const DoubleFunctor* E) {
    HomPtr AB = c.get(A, B), BD = c.get(B, D), AD = c.get(A, D);
    const DoubleCategory& b0 = E ? *E->dom : *BD->cat;
    HomPtr T = c.get(E ? E->dom : BD->cat, AD->cat);
    auto at = [&](CellKind k, int i) { return E ? E->apply(k, i) : i; };
    const int nb0 = b0.nObj();
    const HomDouble& ad = *AD;
    const DoubleCategory& adc = *AD->cat;
    const int na = A->nObj();
    DoubleFunctor idD = identityFunctor(D);
    DoubleFunctor r{AB->cat, T->cat, {}, {}, {}, {}};

    std::vector<DoubleFunctor> rf;
    for (const auto& F : AB->functors) {
        rf.push_back(homMap(F, idD, *BD, ad));
        if (E) rf.back() = composeFunctors(rf.back(), *E);
        r.obj.push_back(need(T->findFunctor(rf.back()), "[[F,1]]"));
    }
    for (const auto& x : AB->hps) {
        const DoubleFunctor &RF = rf[x.src], &RG = rf[x.tgt];
        HPseudo X;
        X.src = r.obj[x.src];
        X.tgt = r.obj[x.tgt];
        for (int hi = 0; hi < nb0; ++hi) {
            const DoubleFunctor& H = BD->functors[at(CellKind::Object, hi)];
            HPseudo cx;
            cx.src = RF.obj[hi];
            cx.tgt = RG.obj[hi];
            for (int a = 0; a < na; ++a) cx.obj.push_back(H.h[x.obj[a]]);
            for (int f = 0; f < A->nV(); ++f) cx.v.push_back(H.sq[x.v[f]]);
            for (int h = 0; h < A->nH(); ++h) {
                cx.h.push_back(H.sq[x.h[h]]);
                cx.hInv.push_back(H.sq[x.hInv[h]]);
            }
            X.obj.push_back(need(ad.findH(cx), "H x"));
        }
        for (int qi = 0; qi < b0.nV(); ++qi) {
            const VPseudo& q = BD->vps[at(CellKind::VCell, qi)];
            Modification m{X.obj[b0.vSrc[qi]], X.obj[b0.vTgt[qi]], RF.v[qi], RG.v[qi], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(q.h[x.obj[a]]);
            X.v.push_back(need(ad.findMod(m), "q_x"));
        }
        for (int pi = 0; pi < b0.nH(); ++pi) {
            const HPseudo& p = BD->hps[at(CellKind::HCell, pi)];
            const int ps = b0.hSrc[pi], pt = b0.hTgt[pi];
            int top = adc.hComp1(RF.h[pi], X.obj[pt]), bottom = adc.hComp1(X.obj[ps], RG.h[pi]);
            int left = adc.vId(RF.obj[ps]), right = adc.vId(RG.obj[pt]);
            Modification m{top, bottom, left, right, {}}, mi{bottom, top, left, right, {}};
            for (int a = 0; a < na; ++a) {
                m.comp.push_back(p.hInv[x.obj[a]]);
                mi.comp.push_back(p.h[x.obj[a]]);
            }
            X.h.push_back(need(ad.findMod(m), "(p^x)^-1"));
            X.hInv.push_back(need(ad.findMod(mi), "p^x"));
        }
        r.h.push_back(need(T->findH(X), "image of a horizontal pseudotransformation"));
    }
    for (const auto& y : AB->vps) {
        const DoubleFunctor &RF = rf[y.src], &RJ = rf[y.tgt];
        VPseudo Y;
        Y.src = r.obj[y.src];
        Y.tgt = r.obj[y.tgt];
        for (int hi = 0; hi < nb0; ++hi) {
            const DoubleFunctor& H = BD->functors[at(CellKind::Object, hi)];
            VPseudo cy;
            cy.src = RF.obj[hi];
            cy.tgt = RJ.obj[hi];
            for (int a = 0; a < na; ++a) cy.obj.push_back(H.v[y.obj[a]]);
            for (int h = 0; h < A->nH(); ++h) cy.h.push_back(H.sq[y.h[h]]);
            for (int f = 0; f < A->nV(); ++f) {
                cy.v.push_back(H.sq[y.v[f]]);
                cy.vInv.push_back(H.sq[y.vInv[f]]);
            }
            Y.obj.push_back(need(ad.findV(cy), "H y"));
        }
        for (int pi = 0; pi < b0.nH(); ++pi) {
            const HPseudo& p = BD->hps[at(CellKind::HCell, pi)];
            Modification m{RF.h[pi], RJ.h[pi], Y.obj[b0.hSrc[pi]], Y.obj[b0.hTgt[pi]], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(p.v[y.obj[a]]);
            Y.h.push_back(need(ad.findMod(m), "p_y"));
        }
        for (int qi = 0; qi < b0.nV(); ++qi) {
            const VPseudo& q = BD->vps[at(CellKind::VCell, qi)];
            const int qs = b0.vSrc[qi], qt = b0.vTgt[qi];
            int top = adc.hId(RF.obj[qs]), bottom = adc.hId(RJ.obj[qt]);
            int left = adc.vComp1(Y.obj[qs], RJ.v[qi]), right = adc.vComp1(RF.v[qi], Y.obj[qt]);
            Modification m{top, bottom, left, right, {}}, mi{top, bottom, right, left, {}};
            for (int a = 0; a < na; ++a) {
                m.comp.push_back(q.vInv[y.obj[a]]);
                mi.comp.push_back(q.v[y.obj[a]]);
            }
            Y.v.push_back(need(ad.findMod(m), "(q^y)^-1"));
            Y.vInv.push_back(need(ad.findMod(mi), "q^y"));
        }
        r.v.push_back(need(T->findV(Y), "image of a vertical pseudotransformation"));
    }
    for (const auto& g : AB->mods) {
        Modification M{r.h[g.top], r.h[g.bottom], r.v[g.left], r.v[g.right], {}};
        const HPseudo &X = T->hps[M.top], &Z = T->hps[M.bottom];
        const VPseudo &Y = T->vps[M.left], &V = T->vps[M.right];
        for (int hi = 0; hi < nb0; ++hi) {
            const DoubleFunctor& H = BD->functors[at(CellKind::Object, hi)];
            Modification m{X.obj[hi], Z.obj[hi], Y.obj[hi], V.obj[hi], {}};
            for (int a = 0; a < na; ++a) m.comp.push_back(H.sq[g.comp[a]]);
            M.comp.push_back(need(ad.findMod(m), "H Phi"));
        }
        r.sq.push_back(need(T->findMod(M), "image of a modification"));
    }
    return r;
}

}  // namespace

DoubleFunctor rFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B) {
    return rImpl(c, D, A, B, nullptr);
}

DoubleFunctor rAlong(HomCache& c, const CatPtr& D, const DoubleFunctor& E, const CatPtr& A, const CatPtr& B) {
    return rImpl(c, D, A, B, &E);
}

DoubleFunctor rPointFunctor(HomCache& c, const CatPtr& D, const CatPtr& X) {
    CatPtr one = c.one();
    HomPtr oneX = c.get(one, X), oneD = c.get(one, D);
    HomPtr XD = c.get(X, D);
    DoubleFunctor r = rFunctor(c, D, one, X);
    DoubleFunctor e = c.map(identityFunctor(XD->cat), evalAtPoint(*oneD));
    return composeFunctors(e, composeFunctors(r, pointInclusion(*oneX)));
}

DoubleFunctor fFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B) {
    CatPtr BD = c.get(B, D)->cat, AD = c.get(A, D)->cat;
    DoubleFunctor r = rFunctor(c, D, A, BD);
    DoubleFunctor back = c.map(rPointFunctor(c, D, B), identityFunctor(AD));
    return composeFunctors(back, r);
}

DoubleFunctor unitPoint(HomCache& c, const CatPtr& A) {
    HomPtr AA = c.get(A, A);
    int id = need(AA->findFunctor(identityFunctor(A)), "identity functor");
    return constantFunctor(c.one(), AA->cat, id);
}

namespace {

void tamper(const Perturb& p, DoubleFunctor& f) {
    if (p) p(f);
}

CheckResult both(CheckResult a, const CheckResult& b, const std::string& second) {
    if (!a.ok) return a;
    if (!b.ok) {
        CheckResult r = b;
        r.detail = second + ": " + r.detail;
        return r;
    }
    return a;
}

}  // namespace

CheckResult checkLCommutation(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& C, const CatPtr& D,
                              const Perturb& p) {
    CatPtr DA = c.get(D, A)->cat, DB = c.get(D, B)->cat;
    CatPtr CA = c.get(C, A)->cat, CB = c.get(C, B)->cat, CD = c.get(C, D)->cat;
    DoubleFunctor top = lFunctor(c, D, A, B);
    tamper(p, top);
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(DA), lFunctor(c, C, D, B)), top);
    DoubleFunctor rhs = composeFunctors(
        c.map(lFunctor(c, C, D, A), identityFunctor(c.get(CD, CB)->cat)),
        composeFunctors(lFunctor(c, CD, CA, CB), lFunctor(c, C, A, B)));
    return compareFunctors(lhs, rhs);
}

CheckResult checkLIdentity(HomCache& c, const CatPtr& A, const CatPtr& B, const Perturb& p) {
    HomPtr AB = c.get(A, B);
    DoubleFunctor l = lFunctor(c, A, A, B);
    tamper(p, l);
    DoubleFunctor m = c.map(unitPoint(c, A), identityFunctor(AB->cat));
    DoubleFunctor e = evalAtPoint(*c.get(c.one(), AB->cat));
    return compareFunctors(composeFunctors(e, composeFunctors(m, l)), identityFunctor(AB->cat));
}

CheckResult checkRSquare(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& D, const Perturb& p) {
    CatPtr BD = c.get(B, D)->cat, AD = c.get(A, D)->cat;
    DoubleFunctor r = rFunctor(c, D, A, B);
    DoubleFunctor lhs = c.map(identityFunctor(A), rPointFunctor(c, D, B));
    tamper(p, lhs);
    DoubleFunctor rhs = composeFunctors(c.map(rPointFunctor(c, D, A), identityFunctor(c.get(BD, D)->cat)),
                                        composeFunctors(rFunctor(c, D, BD, AD), r));
    return compareFunctors(lhs, rhs);
}

CheckResult checkRIdentity(HomCache& c, const CatPtr& A, const CatPtr& D, const Perturb& p) {
    CatPtr AD = c.get(A, D)->cat;
    DoubleFunctor r = rPointFunctor(c, D, AD);
    tamper(p, r);
    DoubleFunctor back = c.map(rPointFunctor(c, D, A), identityFunctor(D));
    return compareFunctors(composeFunctors(back, r), identityFunctor(AD));
}

CheckResult checkFInvolution(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B, const Perturb& p) {
    DoubleFunctor f = fFunctor(c, D, A, B);
    tamper(p, f);
    DoubleFunctor g = fFunctor(c, D, B, A);
    CheckResult r = compareFunctors(composeFunctors(g, f), identityFunctor(f.dom));
    return both(r, compareFunctors(composeFunctors(f, g), identityFunctor(g.dom)), "reverse composite");
}

CheckResult checkLRPentagon(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& D, const Perturb& p) {
    CatPtr DA = c.get(D, A)->cat, DB = c.get(D, B)->cat;
    CatPtr DAB = c.get(DA, B)->cat;
    DoubleFunctor top = lFunctor(c, DA, A, B);
    tamper(p, top);
    DoubleFunctor lhs = composeFunctors(c.map(rPointFunctor(c, A, D), identityFunctor(DAB)), top);
    DoubleFunctor l = lFunctor(c, D, A, B);
    DoubleFunctor mid = composeFunctors(c.map(rPointFunctor(c, B, D), identityFunctor(DAB)), rFunctor(c, B, DA, DB));
    CheckResult r = compareFunctors(lhs, composeFunctors(mid, l));
    return both(r, compareFunctors(mid, fFunctor(c, B, DA, D)), "f triangle");
}

CheckResult checkLRSquare(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& C, const Perturb& p) {
    CatPtr CA = c.get(C, A)->cat;
    CatPtr CAA = c.get(CA, A)->cat;
    CatPtr CAAB = c.get(CAA, B)->cat;
    DoubleFunctor top = lFunctor(c, CAA, A, B);
    tamper(p, top);
    DoubleFunctor s1 = c.map(rPointFunctor(c, A, CA), identityFunctor(CAAB));
    DoubleFunctor s2 = c.map(identityFunctor(CA), c.map(rPointFunctor(c, A, C), identityFunctor(B)));
    DoubleFunctor lhs = composeFunctors(s2, composeFunctors(s1, top));
    CheckResult r = compareFunctors(lhs, lFunctor(c, C, A, B));
    DoubleFunctor f1 = fFunctor(c, B, CA, C);
    DoubleFunctor f2 = fFunctor(c, B, C, CA);
    return both(r, compareFunctors(composeFunctors(f2, f1), identityFunctor(f1.dom)), "f involution");
}

CheckResult checkLCartesianSquare(HomCache& c, const CatPtr& C, const CatPtr& A, const CatPtr& B, const Perturb& p) {
    HomPtr sAB = c.get(A, B, true), AB = c.get(A, B);
    HomPtr sCA = c.get(C, A, true), CA = c.get(C, A);
    HomPtr sCB = c.get(C, B, true), CB = c.get(C, B);
    HomPtr sT = c.get(sCA->cat, sCB->cat, true);
    HomPtr mid = c.get(sCA->cat, sCB->cat);
    DoubleFunctor lx = lCartesianFunctor(c, C, A, B);
    tamper(p, lx);
    DoubleFunctor inCB = inclusionStrictHom(*sCB, *CB);
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(sCA->cat), inCB),
                                        composeFunctors(inclusionStrictHom(*sT, *mid), lx));
    DoubleFunctor inCA = inclusionStrictHom(*sCA, *CA);
    DoubleFunctor rhs = composeFunctors(c.map(inCA, identityFunctor(CB->cat)),
                                        composeFunctors(lFunctor(c, C, A, B), inclusionStrictHom(*sAB, *AB)));
    return compareFunctors(lhs, rhs);
}

CheckResult checkLNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F) {
    const CatPtr &A2 = F.dom, &A = F.cod;
    CatPtr DB = c.get(D, B)->cat;
    DoubleFunctor lhs = composeFunctors(c.map(c.map(identityFunctor(D), F), identityFunctor(DB)), lFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(lFunctor(c, D, A2, B), c.map(F, identityFunctor(B)));
    return compareFunctors(lhs, rhs);
}

CheckResult checkLNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G) {
    const CatPtr &B = G.dom, &B2 = G.cod;
    CatPtr DA = c.get(D, A)->cat;
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(DA), c.map(identityFunctor(D), G)), lFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(lFunctor(c, D, A, B2), c.map(identityFunctor(A), G));
    return compareFunctors(lhs, rhs);
}

CheckResult checkLExtranaturality(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K) {
    const CatPtr &D2 = K.dom, &D = K.cod;
    CatPtr DA = c.get(D, A)->cat, D2B = c.get(D2, B)->cat;
    DoubleFunctor lhs =
        composeFunctors(c.map(identityFunctor(DA), c.map(K, identityFunctor(B))), lFunctor(c, D, A, B));
    DoubleFunctor rhs =
        composeFunctors(c.map(c.map(K, identityFunctor(A)), identityFunctor(D2B)), lFunctor(c, D2, A, B));
    return compareFunctors(lhs, rhs);
}

CheckResult checkRNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F) {
    const CatPtr &A2 = F.dom, &A = F.cod;
    CatPtr BD = c.get(B, D)->cat;
    DoubleFunctor lhs =
        composeFunctors(c.map(identityFunctor(BD), c.map(F, identityFunctor(D))), rFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(rFunctor(c, D, A2, B), c.map(F, identityFunctor(B)));
    return compareFunctors(lhs, rhs);
}

CheckResult checkRNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G) {
    const CatPtr &B = G.dom, &B2 = G.cod;
    CatPtr AD = c.get(A, D)->cat;
    DoubleFunctor lhs =
        composeFunctors(c.map(c.map(G, identityFunctor(D)), identityFunctor(AD)), rFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(rFunctor(c, D, A, B2), c.map(identityFunctor(A), G));
    return compareFunctors(lhs, rhs);
}

CheckResult checkRExtranaturality(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K) {
    const CatPtr &D = K.dom, &D2 = K.cod;
    CatPtr BD = c.get(B, D)->cat, AD2 = c.get(A, D2)->cat;
    DoubleFunctor lhs =
        composeFunctors(c.map(identityFunctor(BD), c.map(identityFunctor(A), K)), rFunctor(c, D, A, B));
    DoubleFunctor rhs =
        composeFunctors(c.map(c.map(identityFunctor(B), K), identityFunctor(AD2)), rFunctor(c, D2, A, B));
    return compareFunctors(lhs, rhs);
}

CheckResult checkFNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F) {
    const CatPtr &A2 = F.dom, &A = F.cod;
    CatPtr BD = c.get(B, D)->cat;
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(B), c.map(F, identityFunctor(D))), fFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(fFunctor(c, D, A2, B), c.map(F, identityFunctor(BD)));
    return compareFunctors(lhs, rhs);
}

CheckResult checkFNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G) {
    const CatPtr &B2 = G.dom, &B = G.cod;
    CatPtr AD = c.get(A, D)->cat;
    DoubleFunctor lhs = composeFunctors(c.map(G, identityFunctor(AD)), fFunctor(c, D, A, B));
    DoubleFunctor rhs =
        composeFunctors(fFunctor(c, D, A, B2), c.map(identityFunctor(A), c.map(G, identityFunctor(D))));
    return compareFunctors(lhs, rhs);
}

CheckResult checkFNaturalityD(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K) {
    const CatPtr &D = K.dom, &D2 = K.cod;
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(B), c.map(identityFunctor(A), K)), fFunctor(c, D, A, B));
    DoubleFunctor rhs = composeFunctors(fFunctor(c, D2, A, B), c.map(identityFunctor(A), c.map(identityFunctor(B), K)));
    return compareFunctors(lhs, rhs);
}

}  // namespace gd

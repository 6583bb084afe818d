#include "graydbl/chi.hpp"

#include <stdexcept>

namespace gd {

namespace {

int need(int idx, const std::string& what) {
    if (idx < 0) throw StructuralError(what + " is not a cell of the target");
    return idx;
}

std::shared_ptr<Horizontal2> buildHorizontal(CatPtr Dp) {
    const DoubleCategory& D = *Dp;
    auto h = std::make_shared<Horizontal2>();
    h->D = Dp;
    TwoCategory T;
    T.name = "H(" + D.name + ")";
    for (const auto& n : D.objName) T.addObject(n);
    for (int i = 0; i < D.nH(); ++i) T.add1(D.hName[i], D.hSrc[i], D.hTgt[i]);
    T.idOf = D.hIdOf;
    h->cell.assign(D.nSq(), -1);
    for (int s = 0; s < D.nSq(); ++s)
        if (D.isVId(D.left[s]) && D.isVId(D.right[s])) {
            h->cell[s] = T.add2(D.sqName[s], D.top[s], D.bottom[s]);
            h->square.push_back(s);
        }
    for (int i = 0; i < D.nH(); ++i) T.id2Of[i] = h->cell[D.sqVId(i)];
    T.c1 = D.hc1;
    auto restrict = [&](const PairTable& src, PairTable& dst) {
        src.forEach([&](int a, int b, int r) {
            if (h->cell[a] >= 0 && h->cell[b] >= 0) dst.set(h->cell[a], h->cell[b], h->cell[r]);
        });
    };
    restrict(D.vc2, T.v2);
    restrict(D.hc2, T.h2);
    T.finalize();
    h->T = std::make_shared<const TwoCategory>(std::move(T));
    return h;
}

}  // namespace

TwoCategory horizontal2Cat(const DoubleCategory& D) {
    return *buildHorizontal(std::make_shared<const DoubleCategory>(D))->T;
}

TwoCategory vertical2Cat(const DoubleCategory& D) {
    TwoCategory T = horizontal2Cat(transpose(D));
    T.name = "V(" + D.name + ")";
    return T;
}

namespace {

std::string quintetName(const TwoCategory& T, int t, int l, int b, int r, int a) {
    return T.twoName[a] + "[" + T.oneName[t] + "," + T.oneName[l] + "," + T.oneName[b] + "," + T.oneName[r] + "]";
}

std::shared_ptr<Quintets> buildQuintets(TwoCatPtr Tp) {
    const TwoCategory& T = *Tp;
    auto q = std::make_shared<Quintets>();
    q->T = Tp;
    q->pos.assign(T.n2(), -1);
    for (int a = 0; a < T.n2(); ++a) {
        const auto& same = T.twoBetween(T.dom[a], T.cod[a]);
        for (std::size_t i = 0; i < same.size(); ++i)
            if (same[i] == a) q->pos[a] = static_cast<int>(i);
    }
    auto d = std::make_shared<DoubleCategory>();
    DoubleCategory& D = *d;
    D.name = "Sqr(" + T.name + ")";
    for (const auto& n : T.objName) D.addObject(n);
    for (int f = 0; f < T.n1(); ++f) D.addH(T.oneName[f], T.src[f], T.tgt[f]);
    for (int f = 0; f < T.n1(); ++f) D.addV(T.oneName[f], T.src[f], T.tgt[f]);
    D.hIdOf = T.idOf;
    D.vIdOf = T.idOf;
    const int no = T.nObj();
    for (int t = 0; t < T.n1(); ++t) {
        int X = T.src[t], Y = T.tgt[t];
        for (int W = 0; W < no; ++W)
            for (int r : T.oneBetween(Y, W))
                for (int Z = 0; Z < no; ++Z)
                    for (int l : T.oneBetween(X, Z))
                        for (int b : T.oneBetween(Z, W))
                            for (int a : T.twoBetween(T.comp1(t, r), T.comp1(l, b))) {
                                D.addSquare(quintetName(T, t, l, b, r, a), t, b, l, r);
                                q->alpha.push_back(a);
                            }
    }
    D.finalize();
    q->D = d;
    for (int f = 0; f < T.n1(); ++f) {
        int X = T.src[f], Y = T.tgt[f];
        D.sqVIdOf[f] = q->square(f, T.id1(X), f, T.id1(Y), T.id2(f));
        D.sqHIdOf[f] = q->square(T.id1(X), f, T.id1(Y), f, T.id2(f));
    }
    D.hc1 = T.c1;
    D.vc1 = T.c1;
    const int ns = D.nSq();
    for (int s = 0; s < ns; ++s) {
        int t = D.top[s], l = D.left[s], b = D.bottom[s], r = D.right[s], a = q->alpha[s];
        for (int u : D.squaresByLeft(r)) {
            // (t;t', l, b;b', r') with (1_t * beta) then (alpha * 1_b')
            int t2 = D.top[u], b2 = D.bottom[u], r2 = D.right[u], be = q->alpha[u];
            int c = T.vcomp(T.hcomp(T.id2(t), be), T.hcomp(a, T.id2(b2)));
            D.hc2.set(s, u, q->square(T.comp1(t, t2), l, T.comp1(b, b2), r2, c));
        }
        for (int u : D.squaresByTop(b)) {
            // (t, l;l', b', r;r') with (alpha * 1_r') then (1_l * gamma)
            int l2 = D.left[u], b2 = D.bottom[u], r2 = D.right[u], ga = q->alpha[u];
            int c = T.vcomp(T.hcomp(a, T.id2(r2)), T.hcomp(T.id2(l), ga));
            D.vc2.set(s, u, q->square(t, T.comp1(l, l2), b2, T.comp1(r, r2), c));
        }
    }
    D.finalize();
    return q;
}

}  // namespace

int Quintets::square(int t, int l, int b, int r, int a) const {
    const TwoCategory& Tc = *T;
    if (a < 0 || Tc.dom[a] != Tc.comp1(t, r) || Tc.cod[a] != Tc.comp1(l, b))
        throw StructuralError("quintet frame does not match its 2-cell");
    const auto& sq = D->squaresWithFrame(t, b, l, r);
    return sq.at(pos[a]);
}

DoubleCategory quintetSqr(const TwoCategory& T) {
    return *buildQuintets(std::make_shared<const TwoCategory>(T))->D;
}

const Horizontal2& ChiEnv::H(const CatPtr& D) {
    auto& slot = h_[D.get()];
    if (!slot) {
        slot = buildHorizontal(D);
        keep_[D.get()] = D;
    }
    return *slot;
}

const Horizontal2& ChiEnv::V(const CatPtr& D) {
    auto& slot = v_[D.get()];
    if (!slot) {
        auto t = std::make_shared<const DoubleCategory>(transpose(*D));
        slot = buildHorizontal(t);
        slot->D = D;
        keep_[D.get()] = D;
        auto T = std::make_shared<TwoCategory>(*slot->T);
        T->name = "V(" + D->name + ")";
        slot->T = T;
    }
    return *slot;
}

const Quintets& ChiEnv::Sqr(const TwoCatPtr& T) {
    auto& slot = sqr_[T.get()];
    if (!slot) slot = buildQuintets(T);
    return *slot;
}

namespace {

TwoFunctor alongSquares(const DoubleFunctor& F, const Horizontal2& a, const Horizontal2& b,
                        const std::vector<int>& one) {
    TwoFunctor r{a.T, b.T, F.obj, one, {}};
    for (int s : a.square) r.two.push_back(need(b.cell[F.sq[s]], "image of an identity-framed square"));
    return r;
}

}  // namespace

TwoFunctor hFunctor(ChiEnv& e, const DoubleFunctor& F) {
    const Horizontal2& a = e.H(F.dom);
    const Horizontal2& b = e.H(F.cod);
    return alongSquares(F, a, b, F.h);
}

TwoFunctor vFunctor(ChiEnv& e, const DoubleFunctor& F) {
    const Horizontal2& a = e.V(F.dom);
    const Horizontal2& b = e.V(F.cod);
    return alongSquares(F, a, b, F.v);
}

DoubleFunctor sqrFunctor(ChiEnv& e, const TwoFunctor& F) {
    const Quintets& a = e.Sqr(F.dom);
    const Quintets& b = e.Sqr(F.cod);
    const DoubleCategory& D = *a.D;
    DoubleFunctor r{a.D, b.D, F.obj, F.one, F.one, {}};
    for (int s = 0; s < D.nSq(); ++s)
        r.sq.push_back(b.square(F.one[D.top[s]], F.one[D.left[s]], F.one[D.bottom[s]], F.one[D.right[s]],
                                F.two[a.alpha[s]]));
    return r;
}

namespace {

// Shared by chi_H and chi_V: 1-cells of X[[A,B]] are the pseudo
// transformations of one kind, 2-cells the identity-framed modifications.
template <class Image>
TwoFunctor chiHV(ChiEnv& e, const CatPtr& A, const CatPtr& B, bool vertical, Image image) {
    HomPtr AB = e.dbl().get(A, B);
    const Horizontal2& src = vertical ? e.V(AB->cat) : e.H(AB->cat);
    const Horizontal2& XA = vertical ? e.V(A) : e.H(A);
    const Horizontal2& XB = vertical ? e.V(B) : e.H(B);
    TwoHomPtr T = e.two().get(XA.T, XB.T);
    TwoFunctor r{src.T, T->cat, {}, {}, {}};
    for (const auto& F : AB->functors)
        r.obj.push_back(need(T->findFunctor(vertical ? vFunctor(e, F) : hFunctor(e, F)), "chi of a functor"));
    const int n1 = vertical ? static_cast<int>(AB->vps.size()) : static_cast<int>(AB->hps.size());
    for (int k = 0; k < n1; ++k) {
        Pseudonat p = image(*AB, XB, k);
        p.src = r.obj[p.src];
        p.tgt = r.obj[p.tgt];
        r.one.push_back(need(T->findPseudonat(p), "chi of a transformation"));
    }
    for (int s : src.square) {
        const Modification& m = AB->mods[s];
        TwoModification w{r.one[vertical ? m.left : m.top], r.one[vertical ? m.right : m.bottom], {}};
        for (int c : m.comp) w.comp.push_back(need(XB.cell[c], "component of a modification"));
        r.two.push_back(need(T->findMod(w), "chi of a modification"));
    }
    return r;
}

}  // namespace

TwoFunctor chiH(ChiEnv& e, const CatPtr& A, const CatPtr& B) {
    return chiHV(e, A, B, false, [](const HomDouble& AB, const Horizontal2& XB, int k) {
        const HPseudo& x = AB.hps[k];
        Pseudonat p{x.src, x.tgt, x.obj, {}, {}};
        for (int s : x.h) p.nat.push_back(need(XB.cell[s], "x^h"));
        for (int s : x.hInv) p.natInv.push_back(need(XB.cell[s], "inverse of x^h"));
        return p;
    });
}

TwoFunctor chiV(ChiEnv& e, const CatPtr& A, const CatPtr& B) {
    // y^f runs from y_A;Hf to Ff;y_A', so its inverse is the naturality
    // 2-cell of V.
    return chiHV(e, A, B, true, [](const HomDouble& AB, const Horizontal2& XB, int k) {
        const VPseudo& y = AB.vps[k];
        Pseudonat p{y.src, y.tgt, y.obj, {}, {}};
        for (int s : y.vInv) p.nat.push_back(need(XB.cell[s], "inverse of y^f"));
        for (int s : y.v) p.natInv.push_back(need(XB.cell[s], "y^f"));
        return p;
    });
}

DoubleFunctor chiSqr(ChiEnv& e, const TwoCatPtr& A, const TwoCatPtr& B) {
    TwoHomPtr AB = e.two().get(A, B);
    const Quintets& src = e.Sqr(AB->cat);
    const Quintets& SA = e.Sqr(A);
    const Quintets& SB = e.Sqr(B);
    const TwoCategory& Ac = *A;
    const TwoCategory& Bc = *B;
    HomPtr T = e.dbl().get(SA.D, SB.D);
    DoubleFunctor r{src.D, T->cat, {}, {}, {}, {}};
    std::vector<DoubleFunctor> imgs;
    for (const auto& F : AB->functors) {
        imgs.push_back(sqrFunctor(e, F));
        r.obj.push_back(need(T->findFunctor(imgs.back()), "Sqr of a 2-functor"));
    }
    for (const auto& p : AB->pseudonats) {
        const TwoFunctor &F = AB->functors[p.src], &G = AB->functors[p.tgt];
        HPseudo x;
        x.src = r.obj[p.src];
        x.tgt = r.obj[p.tgt];
        x.obj = p.comp;
        for (int f = 0; f < Ac.n1(); ++f) {
            int X = Ac.src[f], Y = Ac.tgt[f];
            x.v.push_back(SB.square(p.comp[X], F.one[f], p.comp[Y], G.one[f], p.natInv[f]));
            int top = Bc.comp1(F.one[f], p.comp[Y]), bot = Bc.comp1(p.comp[X], G.one[f]);
            int l = Bc.id1(F.obj[X]), rr = Bc.id1(G.obj[Y]);
            x.h.push_back(SB.square(top, l, bot, rr, p.nat[f]));
            x.hInv.push_back(SB.square(bot, l, top, rr, p.natInv[f]));
        }
        r.h.push_back(need(T->findH(x), "chi of a pseudonatural transformation as a horizontal 1-cell"));
        VPseudo y;
        y.src = x.src;
        y.tgt = x.tgt;
        y.obj = p.comp;
        for (int f = 0; f < Ac.n1(); ++f) {
            int X = Ac.src[f], Y = Ac.tgt[f];
            y.h.push_back(SB.square(F.one[f], p.comp[X], G.one[f], p.comp[Y], p.nat[f]));
            int lhs = Bc.comp1(p.comp[X], G.one[f]), rhs = Bc.comp1(F.one[f], p.comp[Y]);
            int t = Bc.id1(F.obj[X]), b = Bc.id1(G.obj[Y]);
            y.v.push_back(SB.square(t, lhs, b, rhs, p.nat[f]));
            y.vInv.push_back(SB.square(t, rhs, b, lhs, p.natInv[f]));
        }
        r.v.push_back(need(T->findV(y), "chi of a pseudonatural transformation as a vertical 1-cell"));
    }
    const DoubleCategory& SD = *src.D;
    for (int s = 0; s < SD.nSq(); ++s) {
        int t = SD.top[s], l = SD.left[s], b = SD.bottom[s], rr = SD.right[s];
        const TwoModification& w = AB->mods[src.alpha[s]];
        const Pseudonat &pt = AB->pseudonats[t], &pl = AB->pseudonats[l], &pb = AB->pseudonats[b],
                        &pr = AB->pseudonats[rr];
        Modification m{r.h[t], r.h[b], r.v[l], r.v[rr], {}};
        for (int X = 0; X < Ac.nObj(); ++X)
            m.comp.push_back(SB.square(pt.comp[X], pl.comp[X], pb.comp[X], pr.comp[X], w.comp[X]));
        r.sq.push_back(need(T->findMod(m), "chi of a modification"));
    }
    return r;
}

std::string chiName(ChiKind k) {
    switch (k) {
        case ChiKind::H: return "h";
        case ChiKind::V: return "v";
        case ChiKind::Sqr: return "sqr";
        case ChiKind::Mnd: return "mnd";
    }
    return "?";
}

ChiKind parseChiKind(const std::string& s) {
    if (s == "h") return ChiKind::H;
    if (s == "v") return ChiKind::V;
    if (s == "sqr") return ChiKind::Sqr;
    if (s == "mnd") return ChiKind::Mnd;
    throw std::invalid_argument("unknown chi '" + s + "' (expected h, v, sqr or mnd)");
}

namespace {

CheckResult labelled(CheckResult r, const std::string& where) {
    if (!r.ok) r.detail = where + ": " + r.detail;
    return r;
}

TwoFunctor chi2(ChiEnv& e, ChiKind k, const CatPtr& A, const CatPtr& B) {
    return k == ChiKind::H ? chiH(e, A, B) : chiV(e, A, B);
}

TwoFunctor xFunctor2(ChiEnv& e, ChiKind k, const DoubleFunctor& F) {
    return k == ChiKind::H ? hFunctor(e, F) : vFunctor(e, F);
}

const Horizontal2& x2(ChiEnv& e, ChiKind k, const CatPtr& D) { return k == ChiKind::H ? e.H(D) : e.V(D); }

void requireDouble(ChiKind k) {
    if (k == ChiKind::Sqr) throw std::invalid_argument("chi sqr takes 2-categories");
}

}  // namespace

CheckResult checkChiAssoc(ChiEnv& e, ChiKind k, const CatPtr& A, const CatPtr& B, const CatPtr& C) {
    requireDouble(k);
    HomCache& c = e.dbl();
    DoubleFunctor l = lFunctor(c, C, A, B);
    CatPtr CA = c.get(C, A)->cat, CB = c.get(C, B)->cat;
    if (k == ChiKind::Mnd) {
        MndCache& m = e.mnd();
        DoubleFunctor top = composeFunctors(lAlong(c, m.get(C)->cat, chiMnd(m, C, A), m.get(A)->cat, m.get(B)->cat),
                                            chiMnd(m, A, B));
        DoubleFunctor bottom =
            composeFunctors(c.map(identityFunctor(m.get(CA)->cat), chiMnd(m, C, B)),
                            composeFunctors(chiMnd(m, CA, CB), mndFunctor(m, l)));
        return labelled(compareFunctors(top, bottom), "chi mnd associativity");
    }
    TwoHomCache& t = e.two();
    TwoFunctor top = compose2Functors(l2Along(t, x2(e, k, C).T, chi2(e, k, C, A), x2(e, k, A).T, x2(e, k, B).T),
                                      chi2(e, k, A, B));
    TwoFunctor bottom = compose2Functors(t.map(identity2Functor(x2(e, k, CA).T), chi2(e, k, C, B)),
                                         compose2Functors(chi2(e, k, CA, CB), xFunctor2(e, k, l)));
    return labelled(compare2Functors(top, bottom), "chi " + chiName(k) + " associativity");
}

CheckResult checkChiAssoc(ChiEnv& e, const TwoCatPtr& A, const TwoCatPtr& B, const TwoCatPtr& C) {
    HomCache& c = e.dbl();
    TwoHomCache& t = e.two();
    TwoFunctor l = l2Functor(t, C, A, B);
    TwoCatPtr CA = t.get(C, A)->cat, CB = t.get(C, B)->cat;
    DoubleFunctor top =
        composeFunctors(lAlong(c, e.Sqr(C).D, chiSqr(e, C, A), e.Sqr(A).D, e.Sqr(B).D), chiSqr(e, A, B));
    DoubleFunctor bottom = composeFunctors(c.map(identityFunctor(e.Sqr(CA).D), chiSqr(e, C, B)),
                                           composeFunctors(chiSqr(e, CA, CB), sqrFunctor(e, l)));
    return labelled(compareFunctors(top, bottom), "chi sqr associativity");
}

CheckResult checkChiUnit(ChiEnv& e, ChiKind k, const CatPtr& A) {
    requireDouble(k);
    HomCache& c = e.dbl();
    CatPtr one = c.one();
    HomPtr AA = c.get(A, A);
    int idF = need(AA->findFunctor(identityFunctor(A)), "identity functor");
    DoubleFunctor incl = pointInclusion(*c.get(one, A));
    CheckResult r;
    if (k == ChiKind::Mnd) {
        MndCache& m = e.mnd();
        MndPtr MAA = m.get(AA->cat);
        const DoubleCategory& hom = *AA->cat;
        int idM = need(MAA->findMonad({idF, hom.hId(idF), hom.dblId(idF), hom.dblId(idF)}), "identity monad");
        CatPtr MA = m.get(A)->cat;
        int want = need(c.get(MA, MA)->findFunctor(identityFunctor(MA)), "identity of Mnd A");
        if (chiMnd(m, A, A).obj[idM] != want) {
            r.ok = false;
            r.witness = MAA->cat->objName[idM];
            r.detail = "chi mnd does not send the identity monad to the identity";
            return r;
        }
        DoubleFunctor lhs = composeFunctors(c.map(mndUnitIso(m), identityFunctor(MA)),
                                            composeFunctors(chiMnd(m, one, A), mndFunctor(m, incl)));
        return labelled(compareFunctors(lhs, pointInclusion(*c.get(one, MA))), "chi mnd unit");
    }
    TwoHomCache& t = e.two();
    TwoCatPtr XA = x2(e, k, A).T;
    int want = need(t.get(XA, XA)->findFunctor(identity2Functor(XA)), "identity 2-functor");
    TwoFunctor chiAA = chi2(e, k, A, A);
    if (chiAA.obj[idF] != want) {
        r.ok = false;
        r.witness = AA->cat->objName[idF];
        r.detail = "chi " + chiName(k) + " does not send the identity to the identity";
        return r;
    }
    const Horizontal2& X1 = x2(e, k, one);
    if (X1.T->nObj() != 1 || X1.T->n1() != 1 || X1.T->n2() != 1) throw StructuralError("X(1) is not terminal");
    TwoFunctor x0{t.one(), X1.T, {0}, {0}, {0}};
    TwoFunctor lhs = compose2Functors(t.map(x0, identity2Functor(XA)),
                                      compose2Functors(chi2(e, k, one, A), xFunctor2(e, k, incl)));
    return labelled(compare2Functors(lhs, pointInclusion2(*t.get(t.one(), XA))), "chi " + chiName(k) + " unit");
}

CheckResult checkChiUnit(ChiEnv& e, const TwoCatPtr& A) {
    HomCache& c = e.dbl();
    TwoHomCache& t = e.two();
    TwoCatPtr one = t.one();
    TwoHomPtr AA = t.get(A, A);
    int idF = need(AA->findFunctor(identity2Functor(A)), "identity 2-functor");
    CatPtr SA = e.Sqr(A).D;
    int want = need(c.get(SA, SA)->findFunctor(identityFunctor(SA)), "identity of Sqr A");
    CheckResult r;
    if (chiSqr(e, A, A).obj[idF] != want) {
        r.ok = false;
        r.witness = AA->cat->objName[idF];
        r.detail = "chi sqr does not send the identity to the identity";
        return r;
    }
    const Quintets& S1 = e.Sqr(one);
    if (S1.D->nObj() != 1 || S1.D->nSq() != 1) throw StructuralError("Sqr(1) is not terminal");
    DoubleFunctor s0{c.one(), S1.D, {0}, {0}, {0}, {0}};
    TwoFunctor incl = pointInclusion2(*t.get(one, A));
    DoubleFunctor lhs = composeFunctors(c.map(s0, identityFunctor(SA)),
                                        composeFunctors(chiSqr(e, one, A), sqrFunctor(e, incl)));
    return labelled(compareFunctors(lhs, pointInclusion(*c.get(c.one(), SA))), "chi sqr unit");
}

CheckResult checkChiNaturalityB(ChiEnv& e, ChiKind k, const CatPtr& A, const DoubleFunctor& G) {
    requireDouble(k);
    HomCache& c = e.dbl();
    DoubleFunctor hg = c.map(identityFunctor(A), G);
    if (k == ChiKind::Mnd) {
        MndCache& m = e.mnd();
        DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(m.get(A)->cat), mndFunctor(m, G)), chiMnd(m, A, G.dom));
        DoubleFunctor rhs = composeFunctors(chiMnd(m, A, G.cod), mndFunctor(m, hg));
        return labelled(compareFunctors(lhs, rhs), "chi mnd naturality in B");
    }
    TwoHomCache& t = e.two();
    TwoFunctor lhs = compose2Functors(t.map(identity2Functor(x2(e, k, A).T), xFunctor2(e, k, G)), chi2(e, k, A, G.dom));
    TwoFunctor rhs = compose2Functors(chi2(e, k, A, G.cod), xFunctor2(e, k, hg));
    return labelled(compare2Functors(lhs, rhs), "chi " + chiName(k) + " naturality in B");
}

CheckResult checkChiNaturalityA(ChiEnv& e, ChiKind k, const DoubleFunctor& F, const CatPtr& B) {
    requireDouble(k);
    HomCache& c = e.dbl();
    DoubleFunctor hf = c.map(F, identityFunctor(B));
    if (k == ChiKind::Mnd) {
        MndCache& m = e.mnd();
        DoubleFunctor lhs = composeFunctors(c.map(mndFunctor(m, F), identityFunctor(m.get(B)->cat)), chiMnd(m, F.cod, B));
        DoubleFunctor rhs = composeFunctors(chiMnd(m, F.dom, B), mndFunctor(m, hf));
        return labelled(compareFunctors(lhs, rhs), "chi mnd naturality in A");
    }
    TwoHomCache& t = e.two();
    TwoFunctor lhs = compose2Functors(t.map(xFunctor2(e, k, F), identity2Functor(x2(e, k, B).T)), chi2(e, k, F.cod, B));
    TwoFunctor rhs = compose2Functors(chi2(e, k, F.dom, B), xFunctor2(e, k, hf));
    return labelled(compare2Functors(lhs, rhs), "chi " + chiName(k) + " naturality in A");
}

CheckResult checkChiNaturalityB(ChiEnv& e, const TwoCatPtr& A, const TwoFunctor& G) {
    HomCache& c = e.dbl();
    TwoHomCache& t = e.two();
    TwoFunctor hg = t.map(identity2Functor(A), G);
    DoubleFunctor lhs = composeFunctors(c.map(identityFunctor(e.Sqr(A).D), sqrFunctor(e, G)), chiSqr(e, A, G.dom));
    DoubleFunctor rhs = composeFunctors(chiSqr(e, A, G.cod), sqrFunctor(e, hg));
    return labelled(compareFunctors(lhs, rhs), "chi sqr naturality in B");
}

CheckResult checkChiNaturalityA(ChiEnv& e, const TwoFunctor& F, const TwoCatPtr& B) {
    HomCache& c = e.dbl();
    TwoHomCache& t = e.two();
    TwoFunctor hf = t.map(F, identity2Functor(B));
    DoubleFunctor lhs = composeFunctors(c.map(sqrFunctor(e, F), identityFunctor(e.Sqr(B).D)), chiSqr(e, F.cod, B));
    DoubleFunctor rhs = composeFunctors(chiSqr(e, F.dom, B), sqrFunctor(e, hf));
    return labelled(compareFunctors(lhs, rhs), "chi sqr naturality in A");
}

}  // namespace gd

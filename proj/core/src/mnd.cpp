#include "graydbl/mnd.hpp"

namespace gd {

namespace {

int need(int idx, const std::string& what) {
    if (idx < 0) throw StructuralError(what + " is not a cell of the target");
    return idx;
}

template <class K>
int lookup(const std::map<K, int>& m, const K& k) {
    auto it = m.find(k);
    return it == m.end() ? -1 : it->second;
}

}  // namespace

int MndDouble::findMonad(const Monad& m) const { return lookup(mIndex_, std::make_tuple(m.obj, m.x, m.mu, m.eta)); }
int MndDouble::findH(int src, int tgt, int f, int phi) const {
    return lookup(hIndex_, std::make_tuple(src, tgt, f, phi));
}
int MndDouble::findV(int src, int tgt, int g, int gamma) const {
    return lookup(vIndex_, std::make_tuple(src, tgt, g, gamma));
}
int MndDouble::findSquare(int top, int bottom, int left, int right, int sq) const {
    return lookup(sIndex_, std::make_tuple(top, bottom, left, right, sq));
}

std::shared_ptr<const MndDouble> MndDouble::build(CatPtr Dp, Budget& budget) {
    auto M = std::make_shared<MndDouble>();
    M->base = Dp;
    const DoubleCategory& D = *Dp;
    auto one = [&](int h) { return D.sqVId(h); };

    for (int X = 0; X < D.nObj(); ++X) {
        int vx = D.vId(X);
        for (int x : D.hBetween(X, X)) {
            int xx = D.hComp1(x, x);
            for (int mu : D.squaresWithFrame(xx, x, vx, vx)) {
                budget.tick();
                if (D.vComp2(D.hComp2(mu, one(x)), mu) != D.vComp2(D.hComp2(one(x), mu), mu)) continue;
                for (int eta : D.squaresWithFrame(D.hId(X), x, vx, vx)) {
                    budget.tick();
                    if (D.vComp2(D.hComp2(eta, one(x)), mu) != one(x)) continue;
                    if (D.vComp2(D.hComp2(one(x), eta), mu) != one(x)) continue;
                    M->mIndex_[{X, x, mu, eta}] = static_cast<int>(M->monads.size());
                    M->monads.push_back({X, x, mu, eta});
                }
            }
        }
    }
    const int nm = static_cast<int>(M->monads.size());
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b) {
            const Monad &m = M->monads[a], &n = M->monads[b];
            for (int f : D.hBetween(m.obj, n.obj)) {
                int top = D.hComp1(f, n.x), bot = D.hComp1(m.x, f);
                for (int phi : D.squaresWithFrame(top, bot, D.vId(m.obj), D.vId(n.obj))) {
                    budget.tick();
                    int lhs = D.vComp2(D.hComp2(one(f), n.mu), phi);
                    int rhs = D.vComp2(D.hComp2(phi, one(n.x)),
                                       D.vComp2(D.hComp2(one(m.x), phi), D.hComp2(m.mu, one(f))));
                    if (lhs != rhs) continue;
                    if (D.vComp2(D.hComp2(one(f), n.eta), phi) != D.hComp2(m.eta, one(f))) continue;
                    M->hIndex_[{a, b, f, phi}] = static_cast<int>(M->hcells.size());
                    M->hcells.push_back({a, b, f, phi});
                }
            }
            for (int g : D.vBetween(m.obj, n.obj))
                for (int gamma : D.squaresWithFrame(m.x, n.x, g, g)) {
                    budget.tick();
                    if (D.vComp2(m.mu, gamma) != D.vComp2(D.hComp2(gamma, gamma), n.mu)) continue;
                    if (D.vComp2(m.eta, gamma) != D.vComp2(D.sqHId(g), n.eta)) continue;
                    M->vIndex_[{a, b, g, gamma}] = static_cast<int>(M->vcells.size());
                    M->vcells.push_back({a, b, g, gamma});
                }
        }

    std::vector<std::vector<int>> hByF(D.nH()), vByG(D.nV());
    for (std::size_t i = 0; i < M->hcells.size(); ++i) hByF[M->hcells[i].f].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < M->vcells.size(); ++i) vByG[M->vcells[i].g].push_back(static_cast<int>(i));
    for (int s = 0; s < D.nSq(); ++s)
        for (int t : hByF[D.top[s]])
            for (int l : vByG[D.left[s]]) {
                const MonadHCell& T = M->hcells[t];
                const MonadVCell& L = M->vcells[l];
                if (T.src != L.src) continue;
                for (int b : hByF[D.bottom[s]]) {
                    const MonadHCell& B = M->hcells[b];
                    if (B.src != L.tgt) continue;
                    for (int r : vByG[D.right[s]]) {
                        const MonadVCell& R = M->vcells[r];
                        if (R.src != T.tgt || R.tgt != B.tgt) continue;
                        budget.tick();
                        if (D.vComp2(D.hComp2(s, R.gamma), B.phi) != D.vComp2(T.phi, D.hComp2(L.gamma, s))) continue;
                        M->sIndex_[{t, b, l, r, s}] = static_cast<int>(M->squares.size());
                        M->squares.push_back({t, b, l, r, s});
                    }
                }
            }

    auto d = std::make_shared<DoubleCategory>();
    d->name = "Mnd(" + D.name + ")";
    for (int a = 0; a < nm; ++a)
        d->addObject("(" + D.objName[M->monads[a].obj] + "," + D.hName[M->monads[a].x] + ")#" + std::to_string(a));
    for (const auto& h : M->hcells) d->addH("(" + D.hName[h.f] + "," + D.sqName[h.phi] + ")", h.src, h.tgt);
    for (const auto& v : M->vcells) d->addV("(" + D.vName[v.g] + "," + D.sqName[v.gamma] + ")", v.src, v.tgt);
    for (std::size_t i = 0; i < M->squares.size(); ++i) {
        const MonadSquare& q = M->squares[i];
        d->addSquare(D.sqName[q.sq] + "#" + std::to_string(i), q.top, q.bottom, q.left, q.right);
    }
    for (int a = 0; a < nm; ++a) {
        const Monad& m = M->monads[a];
        d->hIdOf[a] = need(M->findH(a, a, D.hId(m.obj), one(m.x)), "identity horizontal monad morphism");
        d->vIdOf[a] = need(M->findV(a, a, D.vId(m.obj), one(m.x)), "identity vertical monad morphism");
    }
    for (std::size_t i = 0; i < M->hcells.size(); ++i) {
        const MonadHCell& h = M->hcells[i];
        d->sqVIdOf[i] = need(M->findSquare(static_cast<int>(i), static_cast<int>(i), d->vIdOf[h.src],
                                           d->vIdOf[h.tgt], one(h.f)),
                             "identity monad square");
    }
    for (std::size_t i = 0; i < M->vcells.size(); ++i) {
        const MonadVCell& v = M->vcells[i];
        d->sqHIdOf[i] = need(M->findSquare(d->hIdOf[v.src], d->hIdOf[v.tgt], static_cast<int>(i),
                                           static_cast<int>(i), D.sqHId(v.g)),
                             "identity monad square");
    }
    const int nh = static_cast<int>(M->hcells.size()), nv = static_cast<int>(M->vcells.size());
    for (int i = 0; i < nh; ++i)
        for (int j = 0; j < nh; ++j) {
            const MonadHCell &a = M->hcells[i], &b = M->hcells[j];
            if (a.tgt != b.src) continue;
            int phi = D.vComp2(D.hComp2(one(a.f), b.phi), D.hComp2(a.phi, one(b.f)));
            d->hc1.set(i, j, need(M->findH(a.src, b.tgt, D.hComp1(a.f, b.f), phi), "composite monad morphism"));
        }
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j) {
            const MonadVCell &a = M->vcells[i], &b = M->vcells[j];
            if (a.tgt != b.src) continue;
            d->vc1.set(i, j,
                       need(M->findV(a.src, b.tgt, D.vComp1(a.g, b.g), D.vComp2(a.gamma, b.gamma)),
                            "composite vertical monad morphism"));
        }
    const int ns = static_cast<int>(M->squares.size());
    std::vector<std::vector<int>> byLeft(nv), byTop(nh);
    for (int i = 0; i < ns; ++i) {
        byLeft[M->squares[i].left].push_back(i);
        byTop[M->squares[i].top].push_back(i);
    }
    for (int i = 0; i < ns; ++i) {
        const MonadSquare& a = M->squares[i];
        for (int j : byLeft[a.right]) {
            const MonadSquare& b = M->squares[j];
            d->hc2.set(i, j,
                       need(M->findSquare(d->hc1.get(a.top, b.top), d->hc1.get(a.bottom, b.bottom), a.left, b.right,
                                          D.hComp2(a.sq, b.sq)),
                            "horizontal composite of monad squares"));
        }
        for (int j : byTop[a.bottom]) {
            const MonadSquare& b = M->squares[j];
            d->vc2.set(i, j,
                       need(M->findSquare(a.top, b.bottom, d->vc1.get(a.left, b.left), d->vc1.get(a.right, b.right),
                                          D.vComp2(a.sq, b.sq)),
                            "vertical composite of monad squares"));
        }
    }
    d->finalize();
    M->cat = d;
    return M;
}

MndPtr MndCache::get(const CatPtr& D) {
    auto it = mnds_.find(D.get());
    if (it != mnds_.end()) return it->second;
    auto m = MndDouble::build(D, c_->budget());
    mnds_[D.get()] = m;
    return m;
}

DoubleFunctor mndFunctor(MndCache& mc, const DoubleFunctor& F) {
    MndPtr S = mc.get(F.dom), T = mc.get(F.cod);
    DoubleFunctor r{S->cat, T->cat, {}, {}, {}, {}};
    for (const auto& m : S->monads)
        r.obj.push_back(need(T->findMonad({F.obj[m.obj], F.h[m.x], F.sq[m.mu], F.sq[m.eta]}), "Mnd(F) monad"));
    for (const auto& h : S->hcells)
        r.h.push_back(need(T->findH(r.obj[h.src], r.obj[h.tgt], F.h[h.f], F.sq[h.phi]), "Mnd(F) morphism"));
    for (const auto& v : S->vcells)
        r.v.push_back(need(T->findV(r.obj[v.src], r.obj[v.tgt], F.v[v.g], F.sq[v.gamma]), "Mnd(F) morphism"));
    for (const auto& q : S->squares)
        r.sq.push_back(need(T->findSquare(r.h[q.top], r.h[q.bottom], r.v[q.left], r.v[q.right], F.sq[q.sq]),
                            "Mnd(F) square"));
    return r;
}

DoubleFunctor mndUnitIso(MndCache& mc) {
    CatPtr one = mc.homs().one();
    MndPtr M = mc.get(one);
    if (M->cat->nObj() != 1 || M->cat->nSq() != 1) throw StructuralError("Mnd(1) is not terminal");
    return DoubleFunctor{one, M->cat, {0}, {0}, {0}, {0}};
}

namespace {

// The image chi(T) : Mnd A -> Mnd B of a monad T on [[A,B]].
struct MonadImage {
    const HomDouble& hom;
    const MndDouble& MA;
    const MndDouble& MB;
    const DoubleCategory& B;
    DoubleFunctor map;

    MonadImage(const HomDouble& h, const MndDouble& ma, const MndDouble& mb, const Monad& T)
        : hom(h), MA(ma), MB(mb), B(*h.B) {
        const DoubleFunctor& F = hom.functors[T.obj];
        const HPseudo& t = hom.hps[T.x];
        const Modification& theta = hom.mods[T.mu];
        const Modification& tau = hom.mods[T.eta];
        auto one = [&](int h) { return B.sqVId(h); };
        map = DoubleFunctor{MA.cat, MB.cat, {}, {}, {}, {}};
        for (const auto& m : MA.monads) {
            int X = m.obj, tX = t.obj[X], Tx = F.h[m.x];
            int x = B.hComp1(tX, Tx);
            // (1 * t^x * 1) then (theta_X * T mu)
            int mid = B.hComp2(B.hComp2(one(tX), t.h[m.x]), one(Tx));
            int mu = B.vComp2(mid, B.hComp2(theta.comp[X], F.sq[m.mu]));
            int eta = B.hComp2(tau.comp[X], F.sq[m.eta]);
            map.obj.push_back(need(MB.findMonad({F.obj[X], x, mu, eta}), "induced monad"));
        }
        for (const auto& h : MA.hcells) {
            int X = MA.monads[h.src].obj;
            int Ty = F.h[MA.monads[h.tgt].x];
            int phi = B.vComp2(B.hComp2(t.h[h.f], one(Ty)), B.hComp2(one(t.obj[X]), F.sq[h.phi]));
            map.h.push_back(need(MB.findH(map.obj[h.src], map.obj[h.tgt], F.h[h.f], phi), "induced monad morphism"));
        }
        for (const auto& v : MA.vcells)
            map.v.push_back(need(MB.findV(map.obj[v.src], map.obj[v.tgt], F.v[v.g], B.hComp2(t.v[v.g], F.sq[v.gamma])),
                                 "induced vertical monad morphism"));
        for (const auto& q : MA.squares)
            map.sq.push_back(need(MB.findSquare(map.h[q.top], map.h[q.bottom], map.v[q.left], map.v[q.right], F.sq[q.sq]),
                                  "induced monad square"));
    }
};

}  // namespace

DoubleFunctor chiMnd(MndCache& mc, const CatPtr& A, const CatPtr& B) {
    HomCache& c = mc.homs();
    HomPtr AB = c.get(A, B);
    MndPtr src = mc.get(AB->cat), MA = mc.get(A), MB = mc.get(B);
    HomPtr T = c.get(MA->cat, MB->cat);
    const DoubleCategory& Bc = *B;
    auto one = [&](int h) { return Bc.sqVId(h); };

    DoubleFunctor r{src->cat, T->cat, {}, {}, {}, {}};
    std::vector<DoubleFunctor> images;
    for (const auto& m : src->monads) {
        images.push_back(MonadImage(*AB, *MA, *MB, m).map);
        r.obj.push_back(need(T->findFunctor(images.back()), "chi of a monad"));
    }
    for (const auto& hc : src->hcells) {
        const HPseudo& p = AB->hps[hc.f];
        const Modification& pi = AB->mods[hc.phi];
        const DoubleFunctor &P = images[hc.src], &Q = images[hc.tgt];
        const Monad &T1 = src->monads[hc.src], &T2 = src->monads[hc.tgt];
        const HPseudo& t = AB->hps[T1.x];
        const DoubleFunctor& F2 = AB->functors[T2.obj];
        HPseudo x;
        x.src = r.obj[hc.src];
        x.tgt = r.obj[hc.tgt];
        for (std::size_t k = 0; k < MA->monads.size(); ++k) {
            const Monad& m = MA->monads[k];
            int X = m.obj;
            int phi = Bc.vComp2(Bc.hComp2(pi.comp[X], one(F2.h[m.x])), Bc.hComp2(one(t.obj[X]), p.hInv[m.x]));
            x.obj.push_back(need(MB->findH(P.obj[k], Q.obj[k], p.obj[X], phi), "component monad morphism"));
        }
        const DoubleCategory& mb = *MB->cat;
        for (std::size_t k = 0; k < MA->vcells.size(); ++k) {
            const MonadVCell& v = MA->vcells[k];
            x.v.push_back(need(MB->findSquare(x.obj[v.src], x.obj[v.tgt], P.v[k], Q.v[k], p.v[v.g]), "p_g"));
        }
        for (std::size_t k = 0; k < MA->hcells.size(); ++k) {
            const MonadHCell& h = MA->hcells[k];
            int top = mb.hComp1(P.h[k], x.obj[h.tgt]), bot = mb.hComp1(x.obj[h.src], Q.h[k]);
            int l = mb.vId(P.obj[h.src]), rr = mb.vId(Q.obj[h.tgt]);
            x.h.push_back(need(MB->findSquare(top, bot, l, rr, p.h[h.f]), "p^h"));
            x.hInv.push_back(need(MB->findSquare(bot, top, l, rr, p.hInv[h.f]), "inverse of p^h"));
        }
        r.h.push_back(need(T->findH(x), "chi of a horizontal monad morphism"));
    }
    for (const auto& vc : src->vcells) {
        const VPseudo& q = AB->vps[vc.g];
        const Modification& rho = AB->mods[vc.gamma];
        const DoubleFunctor &P = images[vc.src], &Q = images[vc.tgt];
        const DoubleCategory& mb = *MB->cat;
        VPseudo y;
        y.src = r.obj[vc.src];
        y.tgt = r.obj[vc.tgt];
        for (std::size_t k = 0; k < MA->monads.size(); ++k) {
            const Monad& m = MA->monads[k];
            y.obj.push_back(need(MB->findV(P.obj[k], Q.obj[k], q.obj[m.obj], Bc.hComp2(rho.comp[m.obj], q.h[m.x])),
                                 "component vertical monad morphism"));
        }
        for (std::size_t k = 0; k < MA->hcells.size(); ++k) {
            const MonadHCell& h = MA->hcells[k];
            y.h.push_back(need(MB->findSquare(P.h[k], Q.h[k], y.obj[h.src], y.obj[h.tgt], q.h[h.f]), "r_h"));
        }
        for (std::size_t k = 0; k < MA->vcells.size(); ++k) {
            const MonadVCell& g = MA->vcells[k];
            int l = mb.vComp1(y.obj[g.src], Q.v[k]), rr = mb.vComp1(P.v[k], y.obj[g.tgt]);
            int t1 = mb.hId(P.obj[g.src]), b1 = mb.hId(Q.obj[g.tgt]);
            y.v.push_back(need(MB->findSquare(t1, b1, l, rr, q.v[g.g]), "r^g"));
            y.vInv.push_back(need(MB->findSquare(t1, b1, rr, l, q.vInv[g.g]), "inverse of r^g"));
        }
        r.v.push_back(need(T->findV(y), "chi of a vertical monad morphism"));
    }
    for (const auto& s : src->squares) {
        const Modification& w = AB->mods[s.sq];
        Modification out{r.h[s.top], r.h[s.bottom], r.v[s.left], r.v[s.right], {}};
        const HPseudo &t = T->hps[out.top], &b = T->hps[out.bottom];
        const VPseudo &l = T->vps[out.left], &rr = T->vps[out.right];
        for (std::size_t k = 0; k < MA->monads.size(); ++k)
            out.comp.push_back(
                need(MB->findSquare(t.obj[k], b.obj[k], l.obj[k], rr.obj[k], w.comp[MA->monads[k].obj]), "omega_X"));
        r.sq.push_back(need(T->findMod(out), "chi of a monad square"));
    }
    return r;
}

}  // namespace gd

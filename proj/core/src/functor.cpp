#include "graydbl/functor.hpp"

#include <algorithm>

namespace gd {

int DoubleFunctor::apply(CellKind k, int i) const {
    switch (k) {
        case CellKind::Object: return obj[i];
        case CellKind::HCell: return h[i];
        case CellKind::VCell: return v[i];
        case CellKind::Square: return sq[i];
    }
    return -1;
}

Report validateFunctor(const DoubleFunctor& f) {
    Report rep;
    if (!f.dom || !f.cod) {
        rep.structuralError("functor without domain or codomain");
        return rep;
    }
    const DoubleCategory& A = *f.dom;
    const DoubleCategory& B = *f.cod;
    auto checkMap = [&](const std::vector<int>& m, int n, int range, const char* what) {
        if (static_cast<int>(m.size()) != n) {
            rep.structuralError(std::string(what) + " map is not total");
            return;
        }
        for (int x : m)
            if (x < 0 || x >= range) {
                rep.structuralError(std::string(what) + " map has an entry out of range");
                return;
            }
    };
    checkMap(f.obj, A.nObj(), B.nObj(), "object");
    checkMap(f.h, A.nH(), B.nH(), "hcell");
    checkMap(f.v, A.nV(), B.nV(), "vcell");
    checkMap(f.sq, A.nSq(), B.nSq(), "square");
    if (!rep.ok()) return rep;

    for (int h = 0; h < A.nH(); ++h)
        if (B.hSrc[f.h[h]] != f.obj[A.hSrc[h]] || B.hTgt[f.h[h]] != f.obj[A.hTgt[h]])
            rep.fail("boundary preservation", "hcell " + A.hName[h]);
    for (int v = 0; v < A.nV(); ++v)
        if (B.vSrc[f.v[v]] != f.obj[A.vSrc[v]] || B.vTgt[f.v[v]] != f.obj[A.vTgt[v]])
            rep.fail("boundary preservation", "vcell " + A.vName[v]);
    for (int s = 0; s < A.nSq(); ++s) {
        int t = f.sq[s];
        if (B.top[t] != f.h[A.top[s]] || B.bottom[t] != f.h[A.bottom[s]] || B.left[t] != f.v[A.left[s]] ||
            B.right[t] != f.v[A.right[s]])
            rep.fail("boundary preservation", "square " + A.sqName[s]);
    }
    for (int o = 0; o < A.nObj(); ++o) {
        if (f.h[A.hIdOf[o]] != B.hIdOf[f.obj[o]]) rep.fail("identity preservation", "hId(" + A.objName[o] + ")");
        if (f.v[A.vIdOf[o]] != B.vIdOf[f.obj[o]]) rep.fail("identity preservation", "vId(" + A.objName[o] + ")");
    }
    for (int h = 0; h < A.nH(); ++h)
        if (f.sq[A.sqVIdOf[h]] != B.sqVIdOf[f.h[h]]) rep.fail("identity preservation", "sqVId(" + A.hName[h] + ")");
    for (int v = 0; v < A.nV(); ++v)
        if (f.sq[A.sqHIdOf[v]] != B.sqHIdOf[f.v[v]]) rep.fail("identity preservation", "sqHId(" + A.vName[v] + ")");
    A.hc1.forEach([&](int x, int y, int r) {
        if (B.hComp1(f.h[x], f.h[y]) != f.h[r])
            rep.fail("composition preservation (horizontal 1-cells)", A.hName[x] + "." + A.hName[y]);
    });
    A.vc1.forEach([&](int x, int y, int r) {
        if (B.vComp1(f.v[x], f.v[y]) != f.v[r])
            rep.fail("composition preservation (vertical 1-cells)", A.vName[x] + "." + A.vName[y]);
    });
    A.hc2.forEach([&](int x, int y, int r) {
        if (B.hComp2(f.sq[x], f.sq[y]) != f.sq[r])
            rep.fail("composition preservation (horizontal squares)", A.sqName[x] + "|" + A.sqName[y]);
    });
    A.vc2.forEach([&](int x, int y, int r) {
        if (B.vComp2(f.sq[x], f.sq[y]) != f.sq[r])
            rep.fail("composition preservation (vertical squares)", A.sqName[x] + "/" + A.sqName[y]);
    });
    return rep;
}

DoubleFunctor identityFunctor(CatPtr c) {
    DoubleFunctor f{c, c, {}, {}, {}, {}};
    auto iota = [](int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = i;
        return v;
    };
    f.obj = iota(c->nObj());
    f.h = iota(c->nH());
    f.v = iota(c->nV());
    f.sq = iota(c->nSq());
    return f;
}

DoubleFunctor constantFunctor(CatPtr dom, CatPtr cod, int object) {
    DoubleFunctor f{dom, cod, {}, {}, {}, {}};
    f.obj.assign(dom->nObj(), object);
    f.h.assign(dom->nH(), cod->hId(object));
    f.v.assign(dom->nV(), cod->vId(object));
    f.sq.assign(dom->nSq(), cod->dblId(object));
    return f;
}

DoubleFunctor composeFunctors(const DoubleFunctor& g, const DoubleFunctor& f) {
    if (f.cod.get() != g.dom.get()) throw StructuralError("composeFunctors: codomain/domain mismatch");
    DoubleFunctor r{f.dom, g.cod, {}, {}, {}, {}};
    auto comp = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
        return out;
    };
    r.obj = comp(f.obj, g.obj);
    r.h = comp(f.h, g.h);
    r.v = comp(f.v, g.v);
    r.sq = comp(f.sq, g.sq);
    return r;
}

namespace {

struct Triple {
    int x, y, r;
};

}  // namespace

std::vector<DoubleFunctor> enumerateDoubleFunctors(CatPtr aPtr, CatPtr bPtr, Budget& budget) {
    const DoubleCategory& A = *aPtr;
    const DoubleCategory& B = *bPtr;
    const int no = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
    const int offH = no, offV = no + nh, offS = no + nh + nv;
    Backtracker bt(no + nh + nv + ns);
    std::vector<int> allObj(B.nObj());
    for (int i = 0; i < B.nObj(); ++i) allObj[i] = i;

    std::vector<int> hIdObj(nh, -1), vIdObj(nv, -1), sqV(ns, -1), sqH(ns, -1);
    for (int o = 0; o < no; ++o) {
        hIdObj[A.hId(o)] = o;
        vIdObj[A.vId(o)] = o;
    }
    for (int h = 0; h < nh; ++h) sqV[A.sqVId(h)] = h;
    for (int v = 0; v < nv; ++v) sqH[A.sqHId(v)] = v;

    for (int o = 0; o < no; ++o)
        bt.setDomain(o, [&](const Backtracker::Assignment&, std::vector<int>& out) { out = allObj; });
    for (int h = 0; h < nh; ++h)
        bt.setDomain(offH + h, [&, h](const Backtracker::Assignment& a, std::vector<int>& out) {
            if (hIdObj[h] >= 0) {
                out.push_back(B.hId(a[hIdObj[h]]));
                return;
            }
            const auto& c = B.hBetween(a[A.hSrc[h]], a[A.hTgt[h]]);
            out.assign(c.begin(), c.end());
        });
    for (int v = 0; v < nv; ++v)
        bt.setDomain(offV + v, [&, v](const Backtracker::Assignment& a, std::vector<int>& out) {
            if (vIdObj[v] >= 0) {
                out.push_back(B.vId(a[vIdObj[v]]));
                return;
            }
            const auto& c = B.vBetween(a[A.vSrc[v]], a[A.vTgt[v]]);
            out.assign(c.begin(), c.end());
        });
    for (int s = 0; s < ns; ++s)
        bt.setDomain(offS + s, [&, s](const Backtracker::Assignment& a, std::vector<int>& out) {
            if (sqV[s] >= 0) {
                out.push_back(B.sqVId(a[offH + sqV[s]]));
                return;
            }
            if (sqH[s] >= 0) {
                out.push_back(B.sqHId(a[offV + sqH[s]]));
                return;
            }
            const auto& c = B.squaresWithFrame(a[offH + A.top[s]], a[offH + A.bottom[s]], a[offV + A.left[s]],
                                               a[offV + A.right[s]]);
            out.assign(c.begin(), c.end());
        });

    // Composition constraints fire at the latest of their three variables.
    std::vector<std::vector<Triple>> hcAt(bt.size()), vcAt(bt.size()), hsAt(bt.size()), vsAt(bt.size());
    A.hc1.forEach([&](int x, int y, int r) {
        if (hIdObj[x] >= 0 || hIdObj[y] >= 0) return;
        hcAt[offH + std::max({x, y, r})].push_back({offH + x, offH + y, offH + r});
    });
    A.vc1.forEach([&](int x, int y, int r) {
        if (vIdObj[x] >= 0 || vIdObj[y] >= 0) return;
        vcAt[offV + std::max({x, y, r})].push_back({offV + x, offV + y, offV + r});
    });
    A.hc2.forEach([&](int x, int y, int r) {
        if (sqH[x] >= 0 || sqH[y] >= 0) return;
        hsAt[offS + std::max({x, y, r})].push_back({offS + x, offS + y, offS + r});
    });
    A.vc2.forEach([&](int x, int y, int r) {
        if (sqV[x] >= 0 || sqV[y] >= 0) return;
        vsAt[offS + std::max({x, y, r})].push_back({offS + x, offS + y, offS + r});
    });
    for (int var = 0; var < bt.size(); ++var) {
        if (!hcAt[var].empty())
            bt.addCheck(var, [&, var](const Backtracker::Assignment& a) {
                for (const auto& t : hcAt[var])
                    if (B.hComp1(a[t.x], a[t.y]) != a[t.r]) return false;
                return true;
            });
        if (!vcAt[var].empty())
            bt.addCheck(var, [&, var](const Backtracker::Assignment& a) {
                for (const auto& t : vcAt[var])
                    if (B.vComp1(a[t.x], a[t.y]) != a[t.r]) return false;
                return true;
            });
        if (!hsAt[var].empty())
            bt.addCheck(var, [&, var](const Backtracker::Assignment& a) {
                for (const auto& t : hsAt[var])
                    if (B.hComp2(a[t.x], a[t.y]) != a[t.r]) return false;
                return true;
            });
        if (!vsAt[var].empty())
            bt.addCheck(var, [&, var](const Backtracker::Assignment& a) {
                for (const auto& t : vsAt[var])
                    if (B.vComp2(a[t.x], a[t.y]) != a[t.r]) return false;
                return true;
            });
    }
    std::vector<DoubleFunctor> out;
    bt.run(budget, [&](const Backtracker::Assignment& a) {
        DoubleFunctor f{aPtr, bPtr, {}, {}, {}, {}};
        f.obj.assign(a.begin(), a.begin() + no);
        f.h.assign(a.begin() + offH, a.begin() + offV);
        f.v.assign(a.begin() + offV, a.begin() + offS);
        f.sq.assign(a.begin() + offS, a.end());
        out.push_back(std::move(f));
        return true;
    });
    return out;
}

std::vector<DoubleFunctor> enumerateDoubleFunctors(CatPtr a, CatPtr b) {
    Budget budget;
    return enumerateDoubleFunctors(std::move(a), std::move(b), budget);
}

std::optional<CellRef> firstDifference(const DoubleFunctor& f, const DoubleFunctor& g) {
    auto diff = [](const std::vector<int>& a, const std::vector<int>& b) -> int {
        if (a.size() != b.size()) return 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return static_cast<int>(i);
        return -1;
    };
    int i;
    if ((i = diff(f.obj, g.obj)) >= 0) return CellRef{CellKind::Object, i};
    if ((i = diff(f.h, g.h)) >= 0) return CellRef{CellKind::HCell, i};
    if ((i = diff(f.v, g.v)) >= 0) return CellRef{CellKind::VCell, i};
    if ((i = diff(f.sq, g.sq)) >= 0) return CellRef{CellKind::Square, i};
    return std::nullopt;
}

DoubleFunctor functorFromIso(CatPtr a, CatPtr b, const Isomorphism& iso) {
    return DoubleFunctor{std::move(a), std::move(b), iso.obj, iso.h, iso.v, iso.sq};
}

}  // namespace gd

#include "graydbl/twocat.hpp"

#include <algorithm>

namespace gd {

const std::vector<int> TwoCategory::empty_;

int TwoCategory::addObject(std::string n) {
    objName.push_back(std::move(n));
    idOf.push_back(-1);
    return nObj() - 1;
}

int TwoCategory::add1(std::string n, int s, int t) {
    oneName.push_back(std::move(n));
    src.push_back(s);
    tgt.push_back(t);
    id2Of.push_back(-1);
    return n1() - 1;
}

int TwoCategory::add2(std::string n, int f, int g) {
    twoName.push_back(std::move(n));
    dom.push_back(f);
    cod.push_back(g);
    return n2() - 1;
}

void TwoCategory::addIdentitiesAndUnitCompositions() {
    for (int x = 0; x < nObj(); ++x)
        if (idOf[x] < 0) idOf[x] = add1("1_" + objName[x], x, x);
    for (int f = 0; f < n1(); ++f)
        if (id2Of[f] < 0) id2Of[f] = add2("1_" + oneName[f], f, f);
    for (int f = 0; f < n1(); ++f) {
        c1.set(idOf[src[f]], f, f);
        c1.set(f, idOf[tgt[f]], f);
    }
    for (int a = 0; a < n2(); ++a) {
        v2.set(id2Of[dom[a]], a, a);
        v2.set(a, id2Of[cod[a]], a);
        h2.set(id2Of[idOf[src[dom[a]]]], a, a);
        h2.set(a, id2Of[idOf[tgt[dom[a]]]], a);
    }
    c1.forEach([&](int f, int g, int fg) { h2.set(id2Of[f], id2Of[g], id2Of[fg]); });
}

void TwoCategory::finalize() {
    oneBetween_.clear();
    twoBetween_.clear();
    for (int f = 0; f < n1(); ++f) oneBetween_[PairTable::key(src[f], tgt[f])].push_back(f);
    for (int a = 0; a < n2(); ++a) twoBetween_[PairTable::key(dom[a], cod[a])].push_back(a);
    inv_.assign(n2(), -1);
    for (int a = 0; a < n2(); ++a)
        for (int b : twoBetween(cod[a], dom[a]))
            if (v2.get(a, b) == id2Of[dom[a]] && v2.get(b, a) == id2Of[cod[a]]) {
                inv_[a] = b;
                break;
            }
}

const std::vector<int>& TwoCategory::oneBetween(int x, int y) const {
    auto it = oneBetween_.find(PairTable::key(x, y));
    return it == oneBetween_.end() ? empty_ : it->second;
}

const std::vector<int>& TwoCategory::twoBetween(int f, int g) const {
    auto it = twoBetween_.find(PairTable::key(f, g));
    return it == twoBetween_.end() ? empty_ : it->second;
}

std::string TwoCategory::cellName(int dim, int i) const {
    const auto& v = dim == 0 ? objName : dim == 1 ? oneName : twoName;
    if (i < 0 || i >= static_cast<int>(v.size())) return "#" + std::to_string(i);
    return v[i];
}

Report validate2Cat(const TwoCategory& T) {
    Report rep;
    auto in = [](int i, int n) { return i >= 0 && i < n; };
    const int no = T.nObj(), n1 = T.n1(), n2 = T.n2();
    if (static_cast<int>(T.idOf.size()) != no || static_cast<int>(T.id2Of.size()) != n1 ||
        static_cast<int>(T.tgt.size()) != n1 || static_cast<int>(T.cod.size()) != n2 ||
        static_cast<int>(T.oneName.size()) != n1 || static_cast<int>(T.twoName.size()) != n2) {
        rep.structuralError("cell arrays have inconsistent lengths");
        return rep;
    }
    for (int f = 0; f < n1; ++f)
        if (!in(T.src[f], no) || !in(T.tgt[f], no) || !in(T.id2Of[f], n2))
            rep.structuralError("1-cell " + std::to_string(f) + " out of range");
    for (int a = 0; a < n2; ++a)
        if (!in(T.dom[a], n1) || !in(T.cod[a], n1))
            rep.structuralError("2-cell " + std::to_string(a) + " out of range");
    for (int x = 0; x < no; ++x)
        if (!in(T.idOf[x], n1)) rep.structuralError("identity of object " + std::to_string(x) + " out of range");
    if (!rep.ok()) return rep;
    for (int a = 0; a < n2; ++a)
        if (T.src[T.dom[a]] != T.src[T.cod[a]] || T.tgt[T.dom[a]] != T.tgt[T.cod[a]])
            rep.structuralError("2-cell " + T.twoName[a] + " between non-parallel 1-cells");
    for (int x = 0; x < no; ++x)
        if (T.src[T.idOf[x]] != x || T.tgt[T.idOf[x]] != x) rep.structuralError("identity of " + T.objName[x]);
    for (int f = 0; f < n1; ++f)
        if (T.dom[T.id2Of[f]] != f || T.cod[T.id2Of[f]] != f) rep.structuralError("identity 2-cell of " + T.oneName[f]);
    auto ranged = [&](const PairTable& t, int n, const char* what) {
        t.forEach([&](int a, int b, int r) {
            if (!in(a, n) || !in(b, n) || !in(r, n)) rep.structuralError(std::string(what) + " entry out of range");
        });
    };
    ranged(T.c1, n1, "comp1");
    ranged(T.v2, n2, "vcomp");
    ranged(T.h2, n2, "hcomp");
    if (!rep.ok()) return rep;

    auto N1 = [&](int f) { return T.oneName[f]; };
    auto N2 = [&](int a) { return T.twoName[a]; };
    for (int f = 0; f < n1; ++f)
        for (int g = 0; g < n1; ++g) {
            int fg = T.comp1(f, g);
            bool composable = T.tgt[f] == T.src[g];
            if (composable != (fg >= 0)) rep.fail("closure", N1(f) + ";" + N1(g));
            else if (fg >= 0 && (T.src[fg] != T.src[f] || T.tgt[fg] != T.tgt[g]))
                rep.fail("closure", "ends of " + N1(f) + ";" + N1(g));
        }
    for (int a = 0; a < n2; ++a)
        for (int b = 0; b < n2; ++b) {
            int ab = T.vcomp(a, b);
            bool composable = T.cod[a] == T.dom[b];
            if (composable != (ab >= 0)) rep.fail("closure", N2(a) + " then " + N2(b));
            else if (ab >= 0 && (T.dom[ab] != T.dom[a] || T.cod[ab] != T.cod[b]))
                rep.fail("closure", "frame of " + N2(a) + " then " + N2(b));
            int h = T.hcomp(a, b);
            bool hcomposable = T.tgt[T.dom[a]] == T.src[T.dom[b]];
            if (hcomposable != (h >= 0)) rep.fail("closure", N2(a) + " * " + N2(b));
            else if (h >= 0 && (T.dom[h] != T.comp1(T.dom[a], T.dom[b]) || T.cod[h] != T.comp1(T.cod[a], T.cod[b])))
                rep.fail("closure", "frame of " + N2(a) + " * " + N2(b));
        }
    if (!rep.violations.empty()) return rep;

    for (int f = 0; f < n1; ++f)
        if (T.comp1(T.idOf[T.src[f]], f) != f || T.comp1(f, T.idOf[T.tgt[f]]) != f) rep.fail("units", N1(f));
    for (int a = 0; a < n2; ++a) {
        if (T.vcomp(T.id2(T.dom[a]), a) != a || T.vcomp(a, T.id2(T.cod[a])) != a) rep.fail("units", N2(a));
        int x = T.src[T.dom[a]], y = T.tgt[T.dom[a]];
        if (T.hcomp(T.id2(T.idOf[x]), a) != a || T.hcomp(a, T.id2(T.idOf[y])) != a) rep.fail("units", N2(a));
    }
    T.c1.forEach([&](int f, int g, int fg) {
        if (T.hcomp(T.id2(f), T.id2(g)) != T.id2(fg)) rep.fail("interchange", "identities " + N1(f) + "," + N1(g));
        for (int h = 0; h < n1; ++h) {
            int gh = T.comp1(g, h);
            if (gh < 0) continue;
            if (T.comp1(fg, h) != T.comp1(f, gh)) rep.fail("associativity", N1(f) + "," + N1(g) + "," + N1(h));
        }
    });
    T.v2.forEach([&](int a, int b, int ab) {
        for (int c = 0; c < n2; ++c) {
            int bc = T.vcomp(b, c);
            if (bc < 0) continue;
            if (T.vcomp(ab, c) != T.vcomp(a, bc)) rep.fail("associativity", N2(a) + "," + N2(b) + "," + N2(c));
        }
    });
    T.h2.forEach([&](int a, int b, int ab) {
        for (int c = 0; c < n2; ++c) {
            int bc = T.hcomp(b, c);
            if (bc < 0) continue;
            if (T.hcomp(ab, c) != T.hcomp(a, bc)) rep.fail("associativity", N2(a) + "*" + N2(b) + "*" + N2(c));
        }
    });
    // (a then b) * (c then d) = (a * c) then (b * d)
    T.v2.forEach([&](int a, int b, int ab) {
        T.v2.forEach([&](int c, int d, int cd) {
            int lhs = T.hcomp(ab, cd);
            if (lhs < 0) return;
            int ac = T.hcomp(a, c), bd = T.hcomp(b, d);
            if (ac < 0 || bd < 0 || T.vcomp(ac, bd) != lhs)
                rep.fail("interchange", N2(a) + "," + N2(b) + "," + N2(c) + "," + N2(d));
        });
    });
    return rep;
}

TwoCategory terminal2() {
    TwoCategory T;
    T.name = "1";
    T.addObject("*");
    T.addIdentitiesAndUnitCompositions();
    T.finalize();
    return T;
}

TwoCategory arrow2() {
    TwoCategory T;
    T.name = "arrow";
    int a = T.addObject("0"), b = T.addObject("1");
    T.addIdentitiesAndUnitCompositions();
    T.add1("f", a, b);
    T.addIdentitiesAndUnitCompositions();
    T.finalize();
    return T;
}

TwoCategory chain2() {
    TwoCategory T;
    T.name = "chain";
    int a = T.addObject("0"), b = T.addObject("1"), c = T.addObject("2");
    T.addIdentitiesAndUnitCompositions();
    int f = T.add1("f", a, b), g = T.add1("g", b, c), fg = T.add1("fg", a, c);
    T.c1.set(f, g, fg);
    T.addIdentitiesAndUnitCompositions();
    T.finalize();
    return T;
}

namespace {

TwoCategory parallelPair(bool invertible) {
    TwoCategory T;
    T.name = invertible ? "iso2" : "cell2";
    int a = T.addObject("0"), b = T.addObject("1");
    T.addIdentitiesAndUnitCompositions();
    int f = T.add1("f", a, b), g = T.add1("g", a, b);
    T.addIdentitiesAndUnitCompositions();
    int al = T.add2("a", f, g);
    if (invertible) {
        int be = T.add2("a'", g, f);
        T.v2.set(al, be, T.id2(f));
        T.v2.set(be, al, T.id2(g));
    }
    T.addIdentitiesAndUnitCompositions();
    T.finalize();
    return T;
}

}  // namespace

TwoCategory idempotent2() {
    TwoCategory T;
    T.name = "idem";
    int x = T.addObject("*");
    T.addIdentitiesAndUnitCompositions();
    int i = T.id1(x), e = T.add1("e", x, x);
    T.c1.set(e, e, e);
    T.addIdentitiesAndUnitCompositions();
    int u = T.add2("u", i, e);
    int ie = T.id2(e);
    T.addIdentitiesAndUnitCompositions();
    T.v2.set(u, ie, u);
    T.h2.set(u, u, u);
    T.h2.set(u, ie, ie);
    T.h2.set(ie, u, ie);
    T.finalize();
    return T;
}

TwoCategory walking2Cell() { return parallelPair(false); }
TwoCategory invertible2Cell() { return parallelPair(true); }

Report validate2Functor(const TwoFunctor& F) {
    Report rep;
    const TwoCategory& A = *F.dom;
    const TwoCategory& B = *F.cod;
    if (static_cast<int>(F.obj.size()) != A.nObj() || static_cast<int>(F.one.size()) != A.n1() ||
        static_cast<int>(F.two.size()) != A.n2()) {
        rep.structuralError("maps are not total");
        return rep;
    }
    for (int x : F.obj)
        if (x < 0 || x >= B.nObj()) rep.structuralError("object image out of range");
    for (int f : F.one)
        if (f < 0 || f >= B.n1()) rep.structuralError("1-cell image out of range");
    for (int a : F.two)
        if (a < 0 || a >= B.n2()) rep.structuralError("2-cell image out of range");
    if (!rep.ok()) return rep;
    for (int f = 0; f < A.n1(); ++f)
        if (B.src[F.one[f]] != F.obj[A.src[f]] || B.tgt[F.one[f]] != F.obj[A.tgt[f]])
            rep.structuralError("ends of F(" + A.oneName[f] + ")");
    for (int a = 0; a < A.n2(); ++a)
        if (B.dom[F.two[a]] != F.one[A.dom[a]] || B.cod[F.two[a]] != F.one[A.cod[a]])
            rep.structuralError("frame of F(" + A.twoName[a] + ")");
    if (!rep.ok()) return rep;
    for (int x = 0; x < A.nObj(); ++x)
        if (F.one[A.id1(x)] != B.id1(F.obj[x])) rep.fail("identities", A.objName[x]);
    for (int f = 0; f < A.n1(); ++f)
        if (F.two[A.id2(f)] != B.id2(F.one[f])) rep.fail("identities", A.oneName[f]);
    A.c1.forEach([&](int f, int g, int fg) {
        if (B.comp1(F.one[f], F.one[g]) != F.one[fg]) rep.fail("composition", A.oneName[f] + ";" + A.oneName[g]);
    });
    A.v2.forEach([&](int a, int b, int ab) {
        if (B.vcomp(F.two[a], F.two[b]) != F.two[ab]) rep.fail("composition", A.twoName[a] + " then " + A.twoName[b]);
    });
    A.h2.forEach([&](int a, int b, int ab) {
        if (B.hcomp(F.two[a], F.two[b]) != F.two[ab]) rep.fail("composition", A.twoName[a] + " * " + A.twoName[b]);
    });
    return rep;
}

TwoFunctor identity2Functor(TwoCatPtr T) {
    TwoFunctor F{T, T, {}, {}, {}};
    for (int i = 0; i < T->nObj(); ++i) F.obj.push_back(i);
    for (int i = 0; i < T->n1(); ++i) F.one.push_back(i);
    for (int i = 0; i < T->n2(); ++i) F.two.push_back(i);
    return F;
}

TwoFunctor compose2Functors(const TwoFunctor& g, const TwoFunctor& f) {
    if (f.cod.get() != g.dom.get()) throw StructuralError("2-functors are not composable");
    TwoFunctor r{f.dom, g.cod, {}, {}, {}};
    for (int x : f.obj) r.obj.push_back(g.obj[x]);
    for (int x : f.one) r.one.push_back(g.one[x]);
    for (int x : f.two) r.two.push_back(g.two[x]);
    return r;
}

std::string firstDifference2(const TwoFunctor& f, const TwoFunctor& g) {
    const std::vector<int>* fs[] = {&f.obj, &f.one, &f.two};
    const std::vector<int>* gs[] = {&g.obj, &g.one, &g.two};
    for (int d = 0; d < 3; ++d) {
        if (fs[d]->size() != gs[d]->size()) return "sizes differ";
        for (std::size_t i = 0; i < fs[d]->size(); ++i)
            if ((*fs[d])[i] != (*gs[d])[i]) return f.dom->cellName(d, static_cast<int>(i));
    }
    return {};
}

CheckResult compare2Functors(const TwoFunctor& f, const TwoFunctor& g) {
    CheckResult r;
    if (f.dom.get() != g.dom.get() || f.cod.get() != g.cod.get()) {
        r.ok = false;
        r.detail = "2-functors have different domain or codomain";
        return r;
    }
    std::string d = firstDifference2(f, g);
    if (!d.empty()) {
        r.ok = false;
        r.witness = d;
        r.detail = "the two composites differ";
    }
    return r;
}

DoubleCategory verticallyDiscrete(const TwoCategory& T) {
    DoubleCategory d;
    d.name = "disc(" + T.name + ")";
    for (const auto& n : T.objName) d.addObject(n);
    for (int f = 0; f < T.n1(); ++f) d.addH(T.oneName[f], T.src[f], T.tgt[f]);
    for (int x = 0; x < T.nObj(); ++x) {
        d.hIdOf[x] = T.idOf[x];
        d.vIdOf[x] = d.addV("1v_" + T.objName[x], x, x);
    }
    for (int a = 0; a < T.n2(); ++a) {
        int f = T.dom[a];
        d.addSquare(T.twoName[a], f, T.cod[a], d.vIdOf[T.src[f]], d.vIdOf[T.tgt[f]]);
    }
    for (int f = 0; f < T.n1(); ++f) d.sqVIdOf[f] = T.id2(f);
    for (int x = 0; x < T.nObj(); ++x) d.sqHIdOf[d.vIdOf[x]] = T.id2(T.idOf[x]);
    d.hc1 = T.c1;
    d.hc2 = T.h2;
    d.vc2 = T.v2;
    for (int x = 0; x < T.nObj(); ++x) d.vc1.set(x, x, x);
    d.finalize();
    return d;
}

std::vector<TwoFunctor> enumerate2Functors(TwoCatPtr A, TwoCatPtr B, Budget& budget) {
    auto a = std::make_shared<const DoubleCategory>(verticallyDiscrete(*A));
    auto b = std::make_shared<const DoubleCategory>(verticallyDiscrete(*B));
    std::vector<TwoFunctor> out;
    for (auto& F : enumerateDoubleFunctors(a, b, budget)) out.push_back(TwoFunctor{A, B, F.obj, F.h, F.sq});
    return out;
}

namespace {

struct PAx {
    const TwoCategory& A;
    const TwoCategory& B;
    const TwoFunctor& F;
    const TwoFunctor& G;

    int natDom(const std::vector<int>& comp, int f) const { return B.comp1(F.one[f], comp[A.tgt[f]]); }
    int natCod(const std::vector<int>& comp, int f) const { return B.comp1(comp[A.src[f]], G.one[f]); }
    // nat[f;g] = (Ff * nat g) then (nat f * Gg)
    bool composition(const Pseudonat& p, int f, int g, int fg) const {
        int l = B.hcomp(B.id2(F.one[f]), p.nat[g]), r = B.hcomp(p.nat[f], B.id2(G.one[g]));
        return l >= 0 && r >= 0 && B.vcomp(l, r) == p.nat[fg];
    }
    // (Fa * p_Y) then nat f' = nat f then (p_X * Ga)
    bool naturality(const Pseudonat& p, int a) const {
        int f = A.dom[a], f2 = A.cod[a];
        int l = B.hcomp(F.two[a], B.id2(p.comp[A.tgt[f]])), r = B.hcomp(B.id2(p.comp[A.src[f]]), G.two[a]);
        return l >= 0 && r >= 0 && B.vcomp(l, p.nat[f2]) == B.vcomp(p.nat[f], r);
    }
};

}  // namespace

Report validatePseudonat(const TwoFunctor& F, const TwoFunctor& G, const Pseudonat& p) {
    Report rep;
    const TwoCategory& A = *F.dom;
    const TwoCategory& B = *F.cod;
    if (static_cast<int>(p.comp.size()) != A.nObj() || static_cast<int>(p.nat.size()) != A.n1() ||
        static_cast<int>(p.natInv.size()) != A.n1()) {
        rep.structuralError("component maps are not total");
        return rep;
    }
    for (int x = 0; x < A.nObj(); ++x)
        if (p.comp[x] < 0 || p.comp[x] >= B.n1() || B.src[p.comp[x]] != F.obj[x] || B.tgt[p.comp[x]] != G.obj[x])
            rep.structuralError("frame of p_" + A.objName[x]);
    if (!rep.ok()) return rep;
    PAx ax{A, B, F, G};
    for (int f = 0; f < A.n1(); ++f) {
        int s = p.nat[f], t = p.natInv[f];
        if (s < 0 || s >= B.n2() || t < 0 || t >= B.n2() || B.dom[s] != ax.natDom(p.comp, f) ||
            B.cod[s] != ax.natCod(p.comp, f) || B.dom[t] != B.cod[s] || B.cod[t] != B.dom[s])
            rep.structuralError("frame of p_" + A.oneName[f]);
    }
    if (!rep.ok()) return rep;
    for (int f = 0; f < A.n1(); ++f)
        if (B.vcomp(p.nat[f], p.natInv[f]) != B.id2(B.dom[p.nat[f]]) ||
            B.vcomp(p.natInv[f], p.nat[f]) != B.id2(B.cod[p.nat[f]]))
            rep.fail("(invertibility)", "p_" + A.oneName[f]);
    for (int x = 0; x < A.nObj(); ++x)
        if (p.nat[A.id1(x)] != B.id2(p.comp[x])) rep.fail("(unit)", A.objName[x]);
    A.c1.forEach([&](int f, int g, int fg) {
        if (!ax.composition(p, f, g, fg)) rep.fail("(composition)", A.oneName[f] + ";" + A.oneName[g]);
    });
    for (int a = 0; a < A.n2(); ++a)
        if (!ax.naturality(p, a)) rep.fail("(naturality)", A.twoName[a]);
    return rep;
}

Report validate2Modification(const TwoFunctor& F, const TwoFunctor& G, const Pseudonat& p, const Pseudonat& q,
                             const std::vector<int>& comp) {
    Report rep;
    const TwoCategory& A = *F.dom;
    const TwoCategory& B = *F.cod;
    if (static_cast<int>(comp.size()) != A.nObj()) {
        rep.structuralError("components are not total");
        return rep;
    }
    for (int x = 0; x < A.nObj(); ++x)
        if (comp[x] < 0 || comp[x] >= B.n2() || B.dom[comp[x]] != p.comp[x] || B.cod[comp[x]] != q.comp[x])
            rep.structuralError("frame of w_" + A.objName[x]);
    if (!rep.ok()) return rep;
    // (Ff * w_Y) then q_f = p_f then (w_X * Gf)
    for (int f = 0; f < A.n1(); ++f) {
        int l = B.hcomp(B.id2(F.one[f]), comp[A.tgt[f]]), r = B.hcomp(comp[A.src[f]], B.id2(G.one[f]));
        if (B.vcomp(l, q.nat[f]) != B.vcomp(p.nat[f], r)) rep.fail("(modification)", A.oneName[f]);
    }
    (void)G;
    return rep;
}

namespace {

std::vector<int> keyOf(const TwoFunctor& F) {
    std::vector<int> k = F.obj;
    k.insert(k.end(), F.one.begin(), F.one.end());
    k.insert(k.end(), F.two.begin(), F.two.end());
    return k;
}

std::vector<int> keyOf(const Pseudonat& p) {
    std::vector<int> k{p.src, p.tgt};
    k.insert(k.end(), p.comp.begin(), p.comp.end());
    k.insert(k.end(), p.nat.begin(), p.nat.end());
    return k;
}

std::vector<int> keyOf(const TwoModification& m) {
    std::vector<int> k{m.src, m.tgt};
    k.insert(k.end(), m.comp.begin(), m.comp.end());
    return k;
}

template <class M, class T>
int lookup(const M& m, const T& x) {
    auto it = m.find(keyOf(x));
    return it == m.end() ? -1 : it->second;
}

std::vector<Pseudonat> enumeratePseudonats(const TwoFunctor& F, const TwoFunctor& G, Budget& budget) {
    const TwoCategory& A = *F.dom;
    const TwoCategory& B = *F.cod;
    const int no = A.nObj(), n1 = A.n1();
    Backtracker bt(no + n1);
    for (int x = 0; x < no; ++x)
        bt.setDomain(x, [&, x](const Backtracker::Assignment&, std::vector<int>& out) {
            const auto& c = B.oneBetween(F.obj[x], G.obj[x]);
            out.assign(c.begin(), c.end());
        });
    for (int f = 0; f < n1; ++f)
        bt.setDomain(no + f, [&, f](const Backtracker::Assignment& a, std::vector<int>& out) {
            int ps = a[A.src[f]], pt = a[A.tgt[f]];
            if (A.isId1(f)) {
                out.push_back(B.id2(ps));
                return;
            }
            for (int s : B.twoBetween(B.comp1(F.one[f], pt), B.comp1(ps, G.one[f])))
                if (B.inverse(s) >= 0) out.push_back(s);
        });
    // Prune on the composition axiom as soon as f, g and f;g are assigned.
    A.c1.forEach([&](int f, int g, int fg) {
        int last = no + std::max({f, g, fg});
        bt.addCheck(last, [&, f, g, fg](const Backtracker::Assignment& a) {
            int l = B.hcomp(B.id2(F.one[f]), a[no + g]), r = B.hcomp(a[no + f], B.id2(G.one[g]));
            return l >= 0 && r >= 0 && B.vcomp(l, r) == a[no + fg];
        });
    });
    std::vector<Pseudonat> out;
    bt.run(budget, [&](const Backtracker::Assignment& a) {
        Pseudonat p;
        p.comp.assign(a.begin(), a.begin() + no);
        p.nat.assign(a.begin() + no, a.end());
        for (int s : p.nat) p.natInv.push_back(B.inverse(s));
        if (validatePseudonat(F, G, p).ok()) out.push_back(std::move(p));
        return true;
    });
    return out;
}

std::vector<std::vector<int>> enumerate2Mods(const TwoFunctor& F, const TwoFunctor& G, const Pseudonat& p,
                                             const Pseudonat& q, Budget& budget) {
    const TwoCategory& A = *F.dom;
    const TwoCategory& B = *F.cod;
    Backtracker bt(A.nObj());
    for (int x = 0; x < A.nObj(); ++x)
        bt.setDomain(x, [&, x](const Backtracker::Assignment&, std::vector<int>& out) {
            const auto& c = B.twoBetween(p.comp[x], q.comp[x]);
            out.assign(c.begin(), c.end());
        });
    std::vector<std::vector<int>> out;
    bt.run(budget, [&](const Backtracker::Assignment& a) {
        if (validate2Modification(F, G, p, q, a).ok()) out.push_back(a);
        return true;
    });
    return out;
}

std::string pnName(const TwoHom& H, int i) { return "p" + std::to_string(i) + ":" + std::to_string(H.pseudonats[i].src) + "->" + std::to_string(H.pseudonats[i].tgt); }

}  // namespace

void TwoHom::index() {
    fIndex_.clear();
    pIndex_.clear();
    mIndex_.clear();
    for (std::size_t i = 0; i < functors.size(); ++i) fIndex_[keyOf(functors[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < pseudonats.size(); ++i) pIndex_[keyOf(pseudonats[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < mods.size(); ++i) mIndex_[keyOf(mods[i])] = static_cast<int>(i);
}

int TwoHom::findFunctor(const TwoFunctor& F) const { return lookup(fIndex_, F); }
int TwoHom::findPseudonat(const Pseudonat& p) const { return lookup(pIndex_, p); }
int TwoHom::findMod(const TwoModification& m) const { return lookup(mIndex_, m); }

std::shared_ptr<const TwoHom> TwoHom::build(TwoCatPtr Ap, TwoCatPtr Bp, Budget& budget) {
    auto H = std::make_shared<TwoHom>();
    H->A = Ap;
    H->B = Bp;
    const TwoCategory& A = *Ap;
    const TwoCategory& B = *Bp;
    H->functors = enumerate2Functors(Ap, Bp, budget);
    const int nf = static_cast<int>(H->functors.size());
    auto T = std::make_shared<TwoCategory>();
    T->name = "[" + A.name + "," + B.name + "]";
    for (int i = 0; i < nf; ++i) T->addObject("F" + std::to_string(i));

    // Identity pseudonaturals first so that they are easy to find.
    for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
            for (auto& p : enumeratePseudonats(H->functors[i], H->functors[j], budget)) {
                p.src = i;
                p.tgt = j;
                H->pseudonats.push_back(std::move(p));
            }
    H->index();
    for (std::size_t k = 0; k < H->pseudonats.size(); ++k) {
        const Pseudonat& p = H->pseudonats[k];
        T->add1(pnName(*H, static_cast<int>(k)), p.src, p.tgt);
    }
    for (int i = 0; i < nf; ++i) {
        const TwoFunctor& F = H->functors[i];
        Pseudonat id{i, i, {}, {}, {}};
        for (int x = 0; x < A.nObj(); ++x) id.comp.push_back(B.id1(F.obj[x]));
        for (int f = 0; f < A.n1(); ++f) {
            id.nat.push_back(B.id2(F.one[f]));
            id.natInv.push_back(B.id2(F.one[f]));
        }
        int k = H->findPseudonat(id);
        if (k < 0) throw StructuralError("identity pseudonatural transformation missing");
        T->idOf[i] = k;
    }
    const int np = static_cast<int>(H->pseudonats.size());
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b) {
            const Pseudonat &p = H->pseudonats[a], &q = H->pseudonats[b];
            if (p.tgt != q.src) continue;
            const TwoFunctor& Hf = H->functors[q.tgt];
            Pseudonat r{p.src, q.tgt, {}, {}, {}};
            for (int x = 0; x < A.nObj(); ++x) r.comp.push_back(B.comp1(p.comp[x], q.comp[x]));
            for (int f = 0; f < A.n1(); ++f) {
                int X = A.src[f], Y = A.tgt[f];
                r.nat.push_back(B.vcomp(B.hcomp(p.nat[f], B.id2(q.comp[Y])), B.hcomp(B.id2(p.comp[X]), q.nat[f])));
                r.natInv.push_back(
                    B.vcomp(B.hcomp(B.id2(p.comp[X]), q.natInv[f]), B.hcomp(p.natInv[f], B.id2(q.comp[Y]))));
            }
            (void)Hf;
            int k = H->findPseudonat(r);
            if (k < 0) throw StructuralError("composite of pseudonatural transformations is not enumerated");
            T->c1.set(a, b, k);
        }
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < np; ++b) {
            const Pseudonat &p = H->pseudonats[a], &q = H->pseudonats[b];
            if (p.src != q.src || p.tgt != q.tgt) continue;
            for (auto& c : enumerate2Mods(H->functors[p.src], H->functors[p.tgt], p, q, budget)) {
                H->mods.push_back(TwoModification{a, b, std::move(c)});
                T->add2("m" + std::to_string(H->mods.size() - 1), a, b);
            }
        }
    H->index();
    const int nm = static_cast<int>(H->mods.size());
    for (int a = 0; a < np; ++a) {
        TwoModification id{a, a, {}};
        for (int x = 0; x < A.nObj(); ++x) id.comp.push_back(B.id2(H->pseudonats[a].comp[x]));
        int k = H->findMod(id);
        if (k < 0) throw StructuralError("identity modification missing");
        T->id2Of[a] = k;
    }
    for (int a = 0; a < nm; ++a)
        for (int b = 0; b < nm; ++b) {
            const TwoModification &m = H->mods[a], &n = H->mods[b];
            if (m.tgt == n.src) {
                TwoModification r{m.src, n.tgt, {}};
                for (int x = 0; x < A.nObj(); ++x) r.comp.push_back(B.vcomp(m.comp[x], n.comp[x]));
                int k = H->findMod(r);
                if (k < 0) throw StructuralError("vertical composite of modifications missing");
                T->v2.set(a, b, k);
            }
            const Pseudonat &p = H->pseudonats[m.src], &q = H->pseudonats[n.src];
            if (p.tgt == q.src) {
                TwoModification r{T->comp1(m.src, n.src), T->comp1(m.tgt, n.tgt), {}};
                for (int x = 0; x < A.nObj(); ++x) r.comp.push_back(B.hcomp(m.comp[x], n.comp[x]));
                int k = H->findMod(r);
                if (k < 0) throw StructuralError("horizontal composite of modifications missing");
                T->h2.set(a, b, k);
            }
        }
    T->finalize();
    H->cat = T;
    return H;
}

TwoHomPtr TwoHomCache::get(const TwoCatPtr& A, const TwoCatPtr& B) {
    auto key = std::make_pair(static_cast<const void*>(A.get()), static_cast<const void*>(B.get()));
    auto it = homs_.find(key);
    if (it != homs_.end()) return it->second;
    auto h = TwoHom::build(A, B, *budget_);
    homs_[key] = h;
    return h;
}

TwoCatPtr TwoHomCache::one() {
    if (!one_) one_ = std::make_shared<const TwoCategory>(terminal2());
    return one_;
}

namespace {

int need(int idx, const char* what) {
    if (idx < 0) throw StructuralError(std::string("2-functor image: ") + what + " is not a cell of the target");
    return idx;
}

}  // namespace

TwoFunctor TwoHomCache::map(const TwoFunctor& K, const TwoFunctor& G) {
    TwoHomPtr S = get(K.cod, G.dom), T = get(K.dom, G.cod);
    TwoFunctor r{S->cat, T->cat, {}, {}, {}};
    const TwoCategory& A2 = *K.dom;
    for (const auto& F : S->functors)
        r.obj.push_back(need(T->findFunctor(compose2Functors(G, compose2Functors(F, K))), "[K,G] F"));
    for (const auto& p : S->pseudonats) {
        Pseudonat q{r.obj[p.src], r.obj[p.tgt], {}, {}, {}};
        for (int x = 0; x < A2.nObj(); ++x) q.comp.push_back(G.one[p.comp[K.obj[x]]]);
        for (int f = 0; f < A2.n1(); ++f) {
            q.nat.push_back(G.two[p.nat[K.one[f]]]);
            q.natInv.push_back(G.two[p.natInv[K.one[f]]]);
        }
        r.one.push_back(need(T->findPseudonat(q), "[K,G] p"));
    }
    for (const auto& m : S->mods) {
        TwoModification n{r.one[m.src], r.one[m.tgt], {}};
        for (int x = 0; x < A2.nObj(); ++x) n.comp.push_back(G.two[m.comp[K.obj[x]]]);
        r.two.push_back(need(T->findMod(n), "[K,G] m"));
    }
    return r;
}

TwoFunctor l2Along(TwoHomCache& c, const TwoCatPtr& C, const TwoFunctor& E, const TwoCatPtr& A,
                   const TwoCatPtr& B) {
    TwoHomPtr AB = c.get(A, B), CA = c.get(C, A), CB = c.get(C, B);
    if (E.cod.get() != CA->cat.get()) throw StructuralError("l2Along: E does not land in [C,A]");
    const TwoCategory& X = *E.dom;
    const TwoCategory& Cc = *C;
    const TwoCategory& Bc = *B;
    TwoHomPtr T = c.get(E.dom, CB->cat);
    const TwoCategory& cb = *CB->cat;

    // H . phi for a pseudonatural phi between functors C -> A.
    auto whiskerP = [&](const TwoFunctor& H, const Pseudonat& p, int s, int t) {
        Pseudonat q{s, t, {}, {}, {}};
        for (int z = 0; z < Cc.nObj(); ++z) q.comp.push_back(H.one[p.comp[z]]);
        for (int g = 0; g < Cc.n1(); ++g) {
            q.nat.push_back(H.two[p.nat[g]]);
            q.natInv.push_back(H.two[p.natInv[g]]);
        }
        return q;
    };

    TwoFunctor r{AB->cat, T->cat, {}, {}, {}};
    // images[H] : X -> [C,B]
    std::vector<TwoFunctor> images;
    for (const auto& H : AB->functors) {
        TwoFunctor img{E.dom, CB->cat, {}, {}, {}};
        for (int x = 0; x < X.nObj(); ++x)
            img.obj.push_back(need(CB->findFunctor(compose2Functors(H, CA->functors[E.obj[x]])), "HF"));
        for (int e = 0; e < X.n1(); ++e) {
            const Pseudonat& p = CA->pseudonats[E.one[e]];
            img.one.push_back(need(CB->findPseudonat(whiskerP(H, p, img.obj[X.src[e]], img.obj[X.tgt[e]])), "H phi"));
        }
        for (int w = 0; w < X.n2(); ++w) {
            const TwoModification& m = CA->mods[E.two[w]];
            TwoModification n{img.one[X.dom[w]], img.one[X.cod[w]], {}};
            for (int z = 0; z < Cc.nObj(); ++z) n.comp.push_back(H.two[m.comp[z]]);
            img.two.push_back(need(CB->findMod(n), "H m"));
        }
        r.obj.push_back(need(T->findFunctor(img), "[C,H]"));
        images.push_back(std::move(img));
    }
    // psi_{F-} for each functor F reached by E.
    auto atF = [&](const Pseudonat& psi, int h, int h2, const TwoFunctor& F) {
        Pseudonat q{-1, -1, {}, {}, {}};
        (void)h;
        (void)h2;
        for (int z = 0; z < Cc.nObj(); ++z) q.comp.push_back(psi.comp[F.obj[z]]);
        for (int g = 0; g < Cc.n1(); ++g) {
            q.nat.push_back(psi.nat[F.one[g]]);
            q.natInv.push_back(psi.natInv[F.one[g]]);
        }
        return q;
    };
    for (const auto& psi : AB->pseudonats) {
        const TwoFunctor &IH = images[psi.src], &IK = images[psi.tgt];
        Pseudonat out{r.obj[psi.src], r.obj[psi.tgt], {}, {}, {}};
        for (int x = 0; x < X.nObj(); ++x) {
            Pseudonat q = atF(psi, psi.src, psi.tgt, CA->functors[E.obj[x]]);
            q.src = IH.obj[x];
            q.tgt = IK.obj[x];
            out.comp.push_back(need(CB->findPseudonat(q), "psi_F"));
        }
        for (int e = 0; e < X.n1(); ++e) {
            const Pseudonat& phi = CA->pseudonats[E.one[e]];
            int s = X.src[e], t = X.tgt[e];
            int top = cb.comp1(IH.one[e], out.comp[t]), bottom = cb.comp1(out.comp[s], IK.one[e]);
            TwoModification m{top, bottom, {}}, mi{bottom, top, {}};
            for (int z = 0; z < Cc.nObj(); ++z) {
                m.comp.push_back(psi.nat[phi.comp[z]]);
                mi.comp.push_back(psi.natInv[phi.comp[z]]);
            }
            out.nat.push_back(need(CB->findMod(m), "psi_phi"));
            out.natInv.push_back(need(CB->findMod(mi), "psi_phi inverse"));
        }
        r.one.push_back(need(T->findPseudonat(out), "image of a pseudonatural transformation"));
    }
    for (const auto& w : AB->mods) {
        const Pseudonat &P = T->pseudonats[r.one[w.src]], &Q = T->pseudonats[r.one[w.tgt]];
        TwoModification out{r.one[w.src], r.one[w.tgt], {}};
        for (int x = 0; x < X.nObj(); ++x) {
            const TwoFunctor& F = CA->functors[E.obj[x]];
            TwoModification n{P.comp[x], Q.comp[x], {}};
            for (int z = 0; z < Cc.nObj(); ++z) n.comp.push_back(w.comp[F.obj[z]]);
            out.comp.push_back(need(CB->findMod(n), "w_F"));
        }
        r.two.push_back(need(T->findMod(out), "image of a modification"));
    }
    (void)Bc;
    return r;
}

TwoFunctor l2Functor(TwoHomCache& c, const TwoCatPtr& C, const TwoCatPtr& A, const TwoCatPtr& B) {
    return l2Along(c, C, identity2Functor(c.get(C, A)->cat), A, B);
}

TwoFunctor pointInclusion2(const TwoHom& H) {
    const TwoCategory& X = *H.B;
    TwoFunctor r{H.B, H.cat, {}, {}, {}};
    for (int x = 0; x < X.nObj(); ++x)
        r.obj.push_back(need(H.findFunctor(TwoFunctor{H.A, H.B, {x}, {X.id1(x)}, {X.id2(X.id1(x))}}), "constant"));
    for (int f = 0; f < X.n1(); ++f)
        r.one.push_back(need(H.findPseudonat(Pseudonat{r.obj[X.src[f]], r.obj[X.tgt[f]], {f}, {X.id2(f)}, {X.id2(f)}}),
                             "point of a 1-cell"));
    for (int a = 0; a < X.n2(); ++a)
        r.two.push_back(need(H.findMod(TwoModification{r.one[X.dom[a]], r.one[X.cod[a]], {a}}), "point of a 2-cell"));
    return r;
}

nlohmann::json twoCatToJson(const TwoCategory& T) {
    using nlohmann::json;
    json j;
    j["name"] = T.name;
    j["objects"] = T.objName;
    json ones = json::array(), twos = json::array();
    for (int f = 0; f < T.n1(); ++f)
        ones.push_back({{"id", T.oneName[f]}, {"src", T.objName[T.src[f]]}, {"tgt", T.objName[T.tgt[f]]}});
    for (int a = 0; a < T.n2(); ++a)
        twos.push_back({{"id", T.twoName[a]}, {"dom", T.oneName[T.dom[a]]}, {"cod", T.oneName[T.cod[a]]}});
    j["onecells"] = ones;
    j["twocells"] = twos;
    json ids = json::object(), ids2 = json::object();
    for (int x = 0; x < T.nObj(); ++x) ids[T.objName[x]] = T.oneName[T.idOf[x]];
    for (int f = 0; f < T.n1(); ++f) ids2[T.oneName[f]] = T.twoName[T.id2Of[f]];
    j["identity1"] = ids;
    j["identity2"] = ids2;
    auto table = [](const PairTable& t, const std::vector<std::string>& names) {
        json a = json::array();
        for (auto [x, y, r] : t.sortedEntries()) a.push_back({names[x], names[y], names[r]});
        return a;
    };
    j["comp1"] = table(T.c1, T.oneName);
    j["vcomp"] = table(T.v2, T.twoName);
    j["hcomp"] = table(T.h2, T.twoName);
    return j;
}

TwoCategory twoCatFromJson(const nlohmann::json& j) {
    try {
        TwoCategory T;
        T.name = j.value("name", std::string("unnamed"));
        std::map<std::string, int> obj, one, two;
        for (const auto& n : j.at("objects")) obj[n.get<std::string>()] = T.addObject(n.get<std::string>());
        auto look = [](const std::map<std::string, int>& m, const std::string& k) {
            auto it = m.find(k);
            if (it == m.end()) throw StructuralError("unknown cell id '" + k + "'");
            return it->second;
        };
        for (const auto& r : j.at("onecells"))
            one[r.at("id")] = T.add1(r.at("id"), look(obj, r.at("src")), look(obj, r.at("tgt")));
        for (const auto& r : j.at("twocells"))
            two[r.at("id")] = T.add2(r.at("id"), look(one, r.at("dom")), look(one, r.at("cod")));
        for (auto& [k, v] : j.at("identity1").items()) T.idOf[look(obj, k)] = look(one, v.get<std::string>());
        for (auto& [k, v] : j.at("identity2").items()) T.id2Of[look(one, k)] = look(two, v.get<std::string>());
        auto fill = [&](const char* key, const std::map<std::string, int>& m, PairTable& t) {
            for (const auto& e : j.at(key)) t.set(look(m, e.at(0)), look(m, e.at(1)), look(m, e.at(2)));
        };
        fill("comp1", one, T.c1);
        fill("vcomp", two, T.v2);
        fill("hcomp", two, T.h2);
        for (int x : T.idOf)
            if (x < 0) throw StructuralError("object without identity 1-cell");
        for (int a : T.id2Of)
            if (a < 0) throw StructuralError("1-cell without identity 2-cell");
        T.finalize();
        return T;
    } catch (const nlohmann::json::exception& e) {
        throw StructuralError(std::string("malformed 2-category JSON: ") + e.what());
    }
}

}  // namespace gd

#include "graydbl/monoid.hpp"

#include <future>
#include <stdexcept>

#include "graydbl/io.hpp"

namespace gd {

using nlohmann::json;
using K = CellKind;

namespace {

// X*c and c*X by kind, and names for witnesses.
struct Star {
    const DoubleCategory& A;
    const TensorCone& c;

    int l(K k, int X, int x) const {
        switch (k) {
            case K::Object: return c.ob(X, x);
            case K::HCell: return c.xh(X, x);
            case K::VCell: return c.xv(X, x);
            case K::Square: return c.xs(X, x);
        }
        return -1;
    }
    int r(K k, int x, int X) const {
        switch (k) {
            case K::Object: return c.ob(x, X);
            case K::HCell: return c.hy(x, X);
            case K::VCell: return c.vy(x, X);
            case K::Square: return c.sy(x, X);
        }
        return -1;
    }
    std::string o(int X) const { return A.objName[X]; }
    std::string h(int x) const { return A.hName[x]; }
    std::string v(int x) const { return A.vName[x]; }
    std::string s(int x) const { return A.sqName[x]; }
    std::string n(K k, int x) const { return A.cellName(k, x); }
};

constexpr K kAll[] = {K::Object, K::HCell, K::VCell, K::Square};

bool sized(const std::vector<int>& m, std::size_t n, int range) {
    if (m.size() != n) return false;
    for (int x : m)
        if (x < 0 || x >= range) return false;
    return true;
}

Report structure(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    if (!c.A || !c.B || !c.C || c.A != c.C || c.B != c.C) {
        rep.structuralError("star maps must have the carrier as both factors and as codomain");
        return rep;
    }
    const DoubleCategory& A = *c.C;
    if (m.unit < 0 || m.unit >= A.nObj()) rep.structuralError("unit object out of range");
    const std::size_t n0 = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
    if (!sized(c.obj, n0 * n0, A.nObj()) || !sized(c.objH, n0 * nh, A.nH()) || !sized(c.objV, n0 * nv, A.nV()) ||
        !sized(c.objSq, n0 * ns, A.nSq()) || !sized(c.hObj, nh * n0, A.nH()) || !sized(c.vObj, nv * n0, A.nV()) ||
        !sized(c.sqObj, ns * n0, A.nSq()) || !sized(c.hv, nh * nv, A.nSq()) || !sized(c.vh, nv * nh, A.nSq()) ||
        !sized(c.hh, nh * nh, A.nSq()) || !sized(c.hhInv, nh * nh, A.nSq()) || !sized(c.vv, nv * nv, A.nSq()) ||
        !sized(c.vvInv, nv * nv, A.nSq()))
        rep.structuralError("star maps are not total or out of range");
    if (!rep.ok()) return rep;

    Star S{A, c};
    auto frame = [&](int sq, int t, int b, int l, int r) {
        return A.top[sq] == t && A.bottom[sq] == b && A.left[sq] == l && A.right[sq] == r;
    };
    // h*q : h*Y => h*Y' over X*q, X'*q
    for (int h = 0; h < A.nH(); ++h)
        for (int q = 0; q < A.nV(); ++q) {
            int X = A.hSrc[h], X2 = A.hTgt[h], Y = A.vSrc[q], Y2 = A.vTgt[q];
            if (!frame(c.hq(h, q), c.hy(h, Y), c.hy(h, Y2), c.xv(X, q), c.xv(X2, q)))
                rep.structuralError("frame of " + S.h(h) + "*" + S.v(q));
        }
    // v*p : X*p => X''*p over v*Y, v*Y'
    for (int v = 0; v < A.nV(); ++v)
        for (int p = 0; p < A.nH(); ++p) {
            int X = A.vSrc[v], X2 = A.vTgt[v], Y = A.hSrc[p], Y2 = A.hTgt[p];
            if (!frame(c.vp(v, p), c.xh(X, p), c.xh(X2, p), c.vy(v, Y), c.vy(v, Y2)))
                rep.structuralError("frame of " + S.v(v) + "*" + S.h(p));
        }
    for (int h = 0; h < A.nH(); ++h)
        for (int p = 0; p < A.nH(); ++p) {
            int X = A.hSrc[h], X2 = A.hTgt[h], Y = A.hSrc[p], Y2 = A.hTgt[p];
            int t = A.hComp1(c.xh(X, p), c.hy(h, Y2)), b = A.hComp1(c.hy(h, Y), c.xh(X2, p));
            int l = A.vId(c.ob(X, Y)), r = A.vId(c.ob(X2, Y2));
            if (t < 0 || b < 0 || !frame(c.hp(h, p), t, b, l, r))
                rep.structuralError("frame of " + S.h(h) + "*" + S.h(p));
            else if (!frame(c.hpInv(h, p), b, t, l, r))
                rep.structuralError("frame of the inverse of " + S.h(h) + "*" + S.h(p));
        }
    for (int v = 0; v < A.nV(); ++v)
        for (int q = 0; q < A.nV(); ++q) {
            int X = A.vSrc[v], X2 = A.vTgt[v], Y = A.vSrc[q], Y2 = A.vTgt[q];
            int l = A.vComp1(c.vy(v, Y), c.xv(X2, q)), r = A.vComp1(c.xv(X, q), c.vy(v, Y2));
            int t = A.hId(c.ob(X, Y)), b = A.hId(c.ob(X2, Y2));
            if (l < 0 || r < 0 || !frame(c.vq(v, q), t, b, l, r))
                rep.structuralError("frame of " + S.v(v) + "*" + S.v(q));
            else if (!frame(c.vqInv(v, q), t, b, r, l))
                rep.structuralError("frame of the inverse of " + S.v(v) + "*" + S.v(q));
        }
    return rep;
}

DoubleFunctor leftMult(const GrayMonoidData& m, int X) {
    const TensorCone& c = m.star;
    const DoubleCategory& A = m.carrier();
    DoubleFunctor f{c.C, c.C, {}, {}, {}, {}};
    for (int Y = 0; Y < A.nObj(); ++Y) f.obj.push_back(c.ob(X, Y));
    for (int p = 0; p < A.nH(); ++p) f.h.push_back(c.xh(X, p));
    for (int q = 0; q < A.nV(); ++q) f.v.push_back(c.xv(X, q));
    for (int s = 0; s < A.nSq(); ++s) f.sq.push_back(c.xs(X, s));
    return f;
}

DoubleFunctor rightMult(const GrayMonoidData& m, int X) {
    const TensorCone& c = m.star;
    const DoubleCategory& A = m.carrier();
    DoubleFunctor f{c.C, c.C, {}, {}, {}, {}};
    for (int Y = 0; Y < A.nObj(); ++Y) f.obj.push_back(c.ob(Y, X));
    for (int h = 0; h < A.nH(); ++h) f.h.push_back(c.hy(h, X));
    for (int v = 0; v < A.nV(); ++v) f.v.push_back(c.vy(v, X));
    for (int w = 0; w < A.nSq(); ++w) f.sq.push_back(c.sy(w, X));
    return f;
}

Report condI(const GrayMonoidData& m) {
    Report rep;
    const DoubleCategory& A = m.carrier();
    for (int X = 0; X < A.nObj(); ++X) {
        Report r = validateFunctor(leftMult(m, X));
        if (!r.ok()) rep.fail(kMonFunctors, A.objName[X] + "*-: " + r.summary(2));
        r = validateFunctor(rightMult(m, X));
        if (!r.ok()) rep.fail(kMonFunctors, "-*" + A.objName[X] + ": " + r.summary(2));
    }
    return rep;
}

Report condII(const GrayMonoidData& m) {
    Report rep;
    Star S{m.carrier(), m.star};
    const int I = m.unit;
    for (K k : kAll)
        for (int x = 0; x < S.A.count(k); ++x) {
            if (S.l(k, I, x) != x) rep.fail(kMonUnit, "I*" + S.n(k, x) + " = " + S.n(k, S.l(k, I, x)));
            if (S.r(k, x, I) != x) rep.fail(kMonUnit, S.n(k, x) + "*I = " + S.n(k, S.r(k, x, I)));
        }
    return rep;
}

Report condIII(const GrayMonoidData& m) {
    Report rep;
    Star S{m.carrier(), m.star};
    const DoubleCategory& A = S.A;
    for (int X = 0; X < A.nObj(); ++X)
        for (int Y = 0; Y < A.nObj(); ++Y) {
            int XY = m.star.ob(X, Y);
            for (K k : kAll)
                for (int x = 0; x < A.count(k); ++x) {
                    std::string at = " at X=" + S.o(X) + ", Y=" + S.o(Y) + ", -=" + S.n(k, x);
                    if (S.l(k, X, S.l(k, Y, x)) != S.l(k, XY, x)) rep.fail(kMonAssoc, "X*(Y*-) = (X*Y)*-" + at);
                    if (S.l(k, X, S.r(k, x, Y)) != S.r(k, S.l(k, X, x), Y))
                        rep.fail(kMonAssoc, "X*(-*Y) = (X*-)*Y" + at);
                    if (S.r(k, x, XY) != S.r(k, S.r(k, x, X), Y)) rep.fail(kMonAssoc, "-*(X*Y) = (-*X)*Y" + at);
                }
        }
    return rep;
}

Report condIV(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    Star S{m.carrier(), c};
    const DoubleCategory& A = S.A;
    auto check = [&](bool ok, const char* eq, const std::string& a, int X, const std::string& b) {
        if (!ok) rep.fail(kMonMixed, std::string(eq) + " at " + a + ", X=" + S.o(X) + ", " + b);
    };
    for (int X = 0; X < A.nObj(); ++X) {
        for (int h = 0; h < A.nH(); ++h) {
            for (int q = 0; q < A.nV(); ++q) {
                std::string a = "h=" + S.h(h), b = "q=" + S.v(q);
                check(c.hq(h, c.xv(X, q)) == c.hq(c.hy(h, X), q), "h*(X*q) = (h*X)*q", a, X, b);
                check(c.hq(c.xh(X, h), q) == c.xs(X, c.hq(h, q)), "(X*h)*q = X*(h*q)", a, X, b);
                check(c.hq(h, c.vy(q, X)) == c.sy(c.hq(h, q), X), "h*(q*X) = (h*q)*X", a, X, b);
            }
            for (int p = 0; p < A.nH(); ++p) {
                std::string a = "h=" + S.h(h), b = "p=" + S.h(p);
                check(c.hp(h, c.xh(X, p)) == c.hp(c.hy(h, X), p), "h*(X*p) = (h*X)*p", a, X, b);
                check(c.hp(c.xh(X, h), p) == c.xs(X, c.hp(h, p)), "(X*h)*p = X*(h*p)", a, X, b);
                check(c.hp(h, c.hy(p, X)) == c.sy(c.hp(h, p), X), "h*(p*X) = (h*p)*X", a, X, b);
            }
        }
        for (int v = 0; v < A.nV(); ++v) {
            for (int p = 0; p < A.nH(); ++p) {
                std::string a = "v=" + S.v(v), b = "p=" + S.h(p);
                check(c.vp(v, c.xh(X, p)) == c.vp(c.vy(v, X), p), "v*(X*p) = (v*X)*p", a, X, b);
                check(c.vp(c.xv(X, v), p) == c.xs(X, c.vp(v, p)), "(X*v)*p = X*(v*p)", a, X, b);
                check(c.vp(v, c.hy(p, X)) == c.sy(c.vp(v, p), X), "v*(p*X) = (v*p)*X", a, X, b);
            }
            for (int q = 0; q < A.nV(); ++q) {
                std::string a = "v=" + S.v(v), b = "q=" + S.v(q);
                check(c.vq(v, c.xv(X, q)) == c.vq(c.vy(v, X), q), "v*(X*q) = (v*X)*q", a, X, b);
                check(c.vq(c.xv(X, v), q) == c.xs(X, c.vq(v, q)), "(X*v)*q = X*(v*q)", a, X, b);
                check(c.vq(v, c.vy(q, X)) == c.sy(c.vq(v, q), X), "v*(q*X) = (v*q)*X", a, X, b);
            }
        }
    }
    return rep;
}

Report condV(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    Star S{m.carrier(), c};
    const DoubleCategory& A = S.A;
    for (int X = 0; X < A.nObj(); ++X) {
        int hX = A.hId(X), vX = A.vId(X);
        for (int h = 0; h < A.nH(); ++h) {
            int one = A.sqVId(c.hy(h, X));
            if (c.hq(h, vX) != one) rep.fail(kMonIdentities, S.h(h) + "*1^" + S.o(X));
            if (c.hp(h, hX) != one) rep.fail(kMonIdentities, S.h(h) + "*1_" + S.o(X));
            int one2 = A.sqVId(c.xh(X, h));
            if (c.vp(vX, h) != one2) rep.fail(kMonIdentities, "1^" + S.o(X) + "*" + S.h(h));
            if (c.hp(hX, h) != one2) rep.fail(kMonIdentities, "1_" + S.o(X) + "*" + S.h(h));
        }
        for (int v = 0; v < A.nV(); ++v) {
            int one = A.sqHId(c.vy(v, X));
            if (c.vp(v, hX) != one) rep.fail(kMonIdentities, S.v(v) + "*1_" + S.o(X));
            if (c.vq(v, vX) != one) rep.fail(kMonIdentities, S.v(v) + "*1^" + S.o(X));
            int one2 = A.sqHId(c.xv(X, v));
            if (c.hq(hX, v) != one2) rep.fail(kMonIdentities, "1_" + S.o(X) + "*" + S.v(v));
            if (c.vq(vX, v) != one2) rep.fail(kMonIdentities, "1^" + S.o(X) + "*" + S.v(v));
        }
    }
    return rep;
}

// Composable pairs in diagrammatic order: (a, b, a then b).
template <class F>
void pairs(const PairTable& t, F&& f) {
    for (auto [a, b, ab] : t.sortedEntries()) f(a, b, ab);
}

Report condVI(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    Star S{m.carrier(), c};
    const DoubleCategory& A = S.A;
    auto bad = [&](const std::string& w) { rep.fail(kMonComposition, w); };
    pairs(A.vc1, [&](int q, int q2, int qq) {
        for (int h = 0; h < A.nH(); ++h)
            if (c.hq(h, qq) != A.vComp2(c.hq(h, q), c.hq(h, q2)))
                bad(S.h(h) + "*(" + S.v(q) + "." + S.v(q2) + ")");
        for (int v = 0; v < A.nV(); ++v) {
            int X = A.vSrc[v], X2 = A.vTgt[v];
            int left = A.vComp2(c.vq(v, q), A.sqHId(c.xv(X2, q2)));
            int right = A.vComp2(A.sqHId(c.xv(X, q)), c.vq(v, q2));
            if (left < 0 || right < 0 || c.vq(v, qq) != A.hComp2(left, right))
                bad(S.v(v) + "*(" + S.v(q) + "." + S.v(q2) + ")");
        }
    });
    pairs(A.hc1, [&](int p, int p2, int pp) {
        for (int v = 0; v < A.nV(); ++v)
            if (c.vp(v, pp) != A.hComp2(c.vp(v, p), c.vp(v, p2)))
                bad(S.v(v) + "*(" + S.h(p) + "." + S.h(p2) + ")");
        for (int h = 0; h < A.nH(); ++h) {
            int X = A.hSrc[h], X2 = A.hTgt[h];
            int upper = A.hComp2(A.sqVId(c.xh(X, p)), c.hp(h, p2));
            int lower = A.hComp2(c.hp(h, p), A.sqVId(c.xh(X2, p2)));
            if (upper < 0 || lower < 0 || c.hp(h, pp) != A.vComp2(upper, lower))
                bad(S.h(h) + "*(" + S.h(p) + "." + S.h(p2) + ")");
        }
    });
    pairs(A.hc1, [&](int h, int h2, int hh) {
        for (int q = 0; q < A.nV(); ++q)
            if (c.hq(hh, q) != A.hComp2(c.hq(h, q), c.hq(h2, q)))
                bad("(" + S.h(h) + "." + S.h(h2) + ")*" + S.v(q));
        for (int p = 0; p < A.nH(); ++p) {
            int Y = A.hSrc[p], Y2 = A.hTgt[p];
            int upper = A.hComp2(c.hp(h, p), A.sqVId(c.hy(h2, Y2)));
            int lower = A.hComp2(A.sqVId(c.hy(h, Y)), c.hp(h2, p));
            if (upper < 0 || lower < 0 || c.hp(hh, p) != A.vComp2(upper, lower))
                bad("(" + S.h(h) + "." + S.h(h2) + ")*" + S.h(p));
        }
    });
    pairs(A.vc1, [&](int v, int v2, int vv) {
        for (int p = 0; p < A.nH(); ++p)
            if (c.vp(vv, p) != A.vComp2(c.vp(v, p), c.vp(v2, p)))
                bad("(" + S.v(v) + "." + S.v(v2) + ")*" + S.h(p));
        for (int q = 0; q < A.nV(); ++q) {
            int Y = A.vSrc[q], Y2 = A.vTgt[q];
            int left = A.vComp2(A.sqHId(c.vy(v, Y)), c.vq(v2, q));
            int right = A.vComp2(c.vq(v, q), A.sqHId(c.vy(v2, Y2)));
            if (left < 0 || right < 0 || c.vq(vv, q) != A.hComp2(left, right))
                bad("(" + S.v(v) + "." + S.v(v2) + ")*" + S.v(q));
        }
    });
    return rep;
}

// -1 stays -1 through composites, and -1 never equals a cell.
int v2(const DoubleCategory& A, int a, int b) { return a < 0 || b < 0 ? -1 : A.vComp2(a, b); }
int h2(const DoubleCategory& A, int a, int b) { return a < 0 || b < 0 ? -1 : A.hComp2(a, b); }
bool same(int a, int b) { return a >= 0 && a == b; }

Report condVII(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    Star S{m.carrier(), c};
    const DoubleCategory& A = S.A;
    // omega : p => s over q, r
    for (int w = 0; w < A.nSq(); ++w) {
        int p = A.top[w], s = A.bottom[w], q = A.left[w], r = A.right[w];
        for (int h = 0; h < A.nH(); ++h) {
            int X = A.hSrc[h], X2 = A.hTgt[h];
            int lhs = v2(A, h2(A, c.xs(X, w), c.hq(h, r)), c.hp(h, s));
            int rhs = v2(A, c.hp(h, p), h2(A, c.hq(h, q), c.xs(X2, w)));
            if (!same(lhs, rhs)) rep.fail(kMonNaturality, S.h(h) + "*" + S.s(w));
        }
        for (int v = 0; v < A.nV(); ++v) {
            int X = A.vSrc[v], X2 = A.vTgt[v];
            int lhs = h2(A, c.vq(v, q), v2(A, c.xs(X, w), c.vp(v, s)));
            int rhs = h2(A, v2(A, c.vp(v, p), c.xs(X2, w)), c.vq(v, r));
            if (!same(lhs, rhs)) rep.fail(kMonNaturality, S.v(v) + "*" + S.s(w));
        }
        for (int hh = 0; hh < A.nH(); ++hh) {
            int X = A.hSrc[hh], X2 = A.hTgt[hh];
            int lhs = v2(A, h2(A, c.vp(q, hh), c.sy(w, X2)), c.hp(s, hh));
            int rhs = v2(A, c.hp(p, hh), h2(A, c.sy(w, X), c.vp(r, hh)));
            if (!same(lhs, rhs)) rep.fail(kMonNaturality, S.s(w) + "*" + S.h(hh));
        }
        for (int vv = 0; vv < A.nV(); ++vv) {
            int X = A.vSrc[vv], X2 = A.vTgt[vv];
            int lhs = h2(A, c.vq(q, vv), v2(A, c.hq(p, vv), c.sy(w, X2)));
            int rhs = h2(A, v2(A, c.sy(w, X), c.hq(s, vv)), c.vq(r, vv));
            if (!same(lhs, rhs)) rep.fail(kMonNaturality, S.s(w) + "*" + S.v(vv));
        }
    }
    return rep;
}

Report invertibility(const GrayMonoidData& m) {
    Report rep;
    const TensorCone& c = m.star;
    const DoubleCategory& A = m.carrier();
    for (int h = 0; h < A.nH(); ++h)
        for (int p = 0; p < A.nH(); ++p) {
            int s = c.hp(h, p), t = c.hpInv(h, p);
            if (A.vComp2(s, t) != A.sqVId(A.top[s]) || A.vComp2(t, s) != A.sqVId(A.bottom[s]))
                rep.fail(kMonInvertibility, A.hName[h] + "*" + A.hName[p]);
        }
    for (int v = 0; v < A.nV(); ++v)
        for (int q = 0; q < A.nV(); ++q) {
            int s = c.vq(v, q), t = c.vqInv(v, q);
            if (A.hComp2(s, t) != A.sqHId(A.left[s]) || A.hComp2(t, s) != A.sqHId(A.right[s]))
                rep.fail(kMonInvertibility, A.vName[v] + "*" + A.vName[q]);
        }
    return rep;
}

}  // namespace

Report checkGrayMonoid(const GrayMonoidData& m) {
    Report rep = structure(m);
    if (!rep.ok()) return rep;
    using Check = Report (*)(const GrayMonoidData&);
    const Check checks[] = {condI, condII, condIII, condIV, condV, condVI, condVII, invertibility};
    std::vector<std::future<Report>> parts;
    for (Check f : checks) parts.push_back(std::async(std::launch::async, f, std::cref(m)));
    for (auto& p : parts) rep.merge(p.get());
    return rep;
}

Report checkGrayNaturality(const GrayMonoidData& m) {
    Report rep = structure(m);
    if (!rep.ok()) return rep;
    return condVII(m);
}

GrayMonoidData fromStrictMonoid(CatPtr carrier, const DoubleFunctor& mult, int unit) {
    const DoubleCategory& A = *carrier;
    if (!mult.dom || mult.cod.get() != carrier.get())
        throw std::invalid_argument("multiplication must land in the carrier");
    const DoubleCategory& P = *mult.dom;
    for (K k : kAll)
        if (P.count(k) != A.count(k) * A.count(k))
            throw std::invalid_argument("multiplication must be defined on carrier x carrier");
    if (unit < 0 || unit >= A.nObj()) throw std::invalid_argument("unit object out of range");
    Report r = validateFunctor(mult);
    if (!r.ok()) throw std::invalid_argument("multiplication is not a double functor: " + r.summary(3));

    auto M = [&](K k, int a, int b) { return mult.apply(k, a * A.count(k) + b); };
    auto unitCell = [&](K k) {
        switch (k) {
            case K::Object: return unit;
            case K::HCell: return A.hId(unit);
            case K::VCell: return A.vId(unit);
            case K::Square: return A.dblId(unit);
        }
        return -1;
    };
    for (K k : kAll) {
        int e = unitCell(k);
        for (int a = 0; a < A.count(k); ++a)
            if (M(k, e, a) != a || M(k, a, e) != a)
                throw std::invalid_argument("multiplication is not unital at " + A.cellName(k, a));
        for (int a = 0; a < A.count(k); ++a)
            for (int b = 0; b < A.count(k); ++b) {
                int ab = M(k, a, b);
                for (int x = 0; x < A.count(k); ++x)
                    if (M(k, ab, x) != M(k, a, M(k, b, x)))
                        throw std::invalid_argument("multiplication is not associative at (" + A.cellName(k, a) +
                                                    "," + A.cellName(k, b) + "," + A.cellName(k, x) + ")");
            }
    }

    GrayMonoidData m;
    m.unit = unit;
    TensorCone& c = m.star;
    c.A = c.B = c.C = carrier;
    const int n0 = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
    for (int X = 0; X < n0; ++X) {
        for (int Y = 0; Y < n0; ++Y) c.obj.push_back(M(K::Object, X, Y));
        for (int p = 0; p < nh; ++p) c.objH.push_back(M(K::HCell, A.hId(X), p));
        for (int q = 0; q < nv; ++q) c.objV.push_back(M(K::VCell, A.vId(X), q));
        for (int s = 0; s < ns; ++s) c.objSq.push_back(M(K::Square, A.dblId(X), s));
    }
    for (int h = 0; h < nh; ++h)
        for (int Y = 0; Y < n0; ++Y) c.hObj.push_back(M(K::HCell, h, A.hId(Y)));
    for (int v = 0; v < nv; ++v)
        for (int Y = 0; Y < n0; ++Y) c.vObj.push_back(M(K::VCell, v, A.vId(Y)));
    for (int w = 0; w < ns; ++w)
        for (int Y = 0; Y < n0; ++Y) c.sqObj.push_back(M(K::Square, w, A.dblId(Y)));
    for (int h = 0; h < nh; ++h)
        for (int q = 0; q < nv; ++q) c.hv.push_back(M(K::Square, A.sqVId(h), A.sqHId(q)));
    for (int v = 0; v < nv; ++v)
        for (int p = 0; p < nh; ++p) c.vh.push_back(M(K::Square, A.sqHId(v), A.sqVId(p)));
    for (int h = 0; h < nh; ++h)
        for (int p = 0; p < nh; ++p) c.hh.push_back(A.sqVId(M(K::HCell, h, p)));
    for (int v = 0; v < nv; ++v)
        for (int q = 0; q < nv; ++q) c.vv.push_back(A.sqHId(M(K::VCell, v, q)));
    c.hhInv = c.hh;
    c.vvInv = c.vv;
    return m;
}

GrayMonoidData discreteMonoid(const std::vector<std::vector<int>>& table, int unit, const std::string& name) {
    const int n = static_cast<int>(table.size());
    auto carrier = std::make_shared<DoubleCategory>(discrete(n, name));
    const DoubleCategory& A = *carrier;
    auto at = [&](int X, int Y) {
        if (static_cast<int>(table[X].size()) != n || table[X][Y] < 0 || table[X][Y] >= n)
            throw std::invalid_argument("monoid table is not n x n over 0..n-1");
        return table[X][Y];
    };
    // Every cell of a discrete double category sits over one object.
    auto objH = [&](int h) { return A.hSrc[h]; };
    auto objV = [&](int v) { return A.vSrc[v]; };
    auto objS = [&](int s) { return A.hSrc[A.top[s]]; };
    GrayMonoidData m;
    m.unit = unit;
    TensorCone& c = m.star;
    c.A = c.B = c.C = carrier;
    for (int X = 0; X < n; ++X) {
        for (int Y = 0; Y < n; ++Y) c.obj.push_back(at(X, Y));
        for (int p = 0; p < A.nH(); ++p) c.objH.push_back(A.hId(at(X, objH(p))));
        for (int q = 0; q < A.nV(); ++q) c.objV.push_back(A.vId(at(X, objV(q))));
        for (int s = 0; s < A.nSq(); ++s) c.objSq.push_back(A.dblId(at(X, objS(s))));
    }
    for (int h = 0; h < A.nH(); ++h)
        for (int Y = 0; Y < n; ++Y) c.hObj.push_back(A.hId(at(objH(h), Y)));
    for (int v = 0; v < A.nV(); ++v)
        for (int Y = 0; Y < n; ++Y) c.vObj.push_back(A.vId(at(objV(v), Y)));
    for (int w = 0; w < A.nSq(); ++w)
        for (int Y = 0; Y < n; ++Y) c.sqObj.push_back(A.dblId(at(objS(w), Y)));
    for (int h = 0; h < A.nH(); ++h)
        for (int q = 0; q < A.nV(); ++q) c.hv.push_back(A.dblId(at(objH(h), objV(q))));
    for (int v = 0; v < A.nV(); ++v)
        for (int p = 0; p < A.nH(); ++p) c.vh.push_back(A.dblId(at(objV(v), objH(p))));
    for (int h = 0; h < A.nH(); ++h)
        for (int p = 0; p < A.nH(); ++p) c.hh.push_back(A.dblId(at(objH(h), objH(p))));
    for (int v = 0; v < A.nV(); ++v)
        for (int q = 0; q < A.nV(); ++q) c.vv.push_back(A.dblId(at(objV(v), objV(q))));
    c.hhInv = c.hh;
    c.vvInv = c.vv;
    return m;
}

GrayMonoidData productMonoid(const GrayMonoidData& a, const GrayMonoidData& b) {
    const DoubleCategory &A = a.carrier(), &B = b.carrier();
    auto carrier = std::make_shared<DoubleCategory>(cartesianProduct(A, B));
    GrayMonoidData m;
    m.unit = a.unit * B.nObj() + b.unit;
    TensorCone& c = m.star;
    c.A = c.B = c.C = carrier;
    // Field over (kl, kr) with values of kind kv; pairs are indexed as in
    // cartesianProduct.
    auto field = [&](std::vector<int> TensorCone::*f, K kl, K kr, K kv) {
        const std::vector<int>&fa = a.star.*f, &fb = b.star.*f;
        std::vector<int>& out = c.*f;
        const int al = A.count(kl), bl = B.count(kl), ar = A.count(kr), br = B.count(kr), bv = B.count(kv);
        for (int i1 = 0; i1 < al; ++i1)
            for (int i2 = 0; i2 < bl; ++i2)
                for (int j1 = 0; j1 < ar; ++j1)
                    for (int j2 = 0; j2 < br; ++j2)
                        out.push_back(fa[i1 * ar + j1] * bv + fb[i2 * br + j2]);
    };
    field(&TensorCone::obj, K::Object, K::Object, K::Object);
    field(&TensorCone::objH, K::Object, K::HCell, K::HCell);
    field(&TensorCone::objV, K::Object, K::VCell, K::VCell);
    field(&TensorCone::objSq, K::Object, K::Square, K::Square);
    field(&TensorCone::hObj, K::HCell, K::Object, K::HCell);
    field(&TensorCone::vObj, K::VCell, K::Object, K::VCell);
    field(&TensorCone::sqObj, K::Square, K::Object, K::Square);
    field(&TensorCone::hv, K::HCell, K::VCell, K::Square);
    field(&TensorCone::vh, K::VCell, K::HCell, K::Square);
    field(&TensorCone::hh, K::HCell, K::HCell, K::Square);
    field(&TensorCone::hhInv, K::HCell, K::HCell, K::Square);
    field(&TensorCone::vv, K::VCell, K::VCell, K::Square);
    field(&TensorCone::vvInv, K::VCell, K::VCell, K::Square);
    return m;
}

DerivedMultiplication derivedMultiplication(const GrayMonoidData& m) {
    Report pre = checkGrayMonoid(m);
    if (!pre.ok()) throw std::invalid_argument("not a monoid: " + pre.summary(3));
    const TensorCone& c = m.star;
    const DoubleCategory& A = m.carrier();
    DerivedMultiplication d;
    d.A = m.carrierPtr();
    const int n0 = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
    for (int X = 0; X < n0; ++X)
        for (int Y = 0; Y < n0; ++Y) d.obj.push_back(c.ob(X, Y));
    for (int h = 0; h < nh; ++h)
        for (int k = 0; k < nh; ++k) d.h.push_back(A.hComp1(c.hy(h, A.hSrc[k]), c.xh(A.hTgt[h], k)));
    for (int f = 0; f < nv; ++f)
        for (int g = 0; g < nv; ++g) d.v.push_back(A.vComp1(c.vy(f, A.vSrc[g]), c.xv(A.vTgt[f], g)));
    for (int w = 0; w < ns; ++w)
        for (int t = 0; t < ns; ++t) {
            int Y = A.hSrc[A.top[t]], X3 = A.hTgt[A.bottom[w]];
            int upper = h2(A, c.sy(w, Y), c.vp(A.right[w], A.top[t]));
            int lower = h2(A, c.hq(A.bottom[w], A.left[t]), c.xs(X3, t));
            d.sq.push_back(v2(A, upper, lower));
        }
    auto H = [&](int h, int k) { return d.h[h * nh + k]; };
    auto V = [&](int f, int g) { return d.v[f * nv + g]; };
    auto Sq = [&](int w, int t) { return d.sq[w * ns + t]; };

    auto noteId = [&](bool ok, const std::string& w) {
        if (!ok && d.preservesIdentities) {
            d.preservesIdentities = false;
            d.identityWitness = w;
        }
    };
    for (int w = 0; w < ns; ++w)
        for (int t = 0; t < ns; ++t)
            if (Sq(w, t) < 0) noteId(false, "(" + A.sqName[w] + "," + A.sqName[t] + ") has no image");
    for (int X = 0; X < n0; ++X)
        for (int Y = 0; Y < n0; ++Y) {
            int XY = c.ob(X, Y);
            std::string at = "(" + A.objName[X] + "," + A.objName[Y] + ")";
            noteId(H(A.hId(X), A.hId(Y)) == A.hId(XY), "horizontal identity at " + at);
            noteId(V(A.vId(X), A.vId(Y)) == A.vId(XY), "vertical identity at " + at);
            noteId(Sq(A.dblId(X), A.dblId(Y)) == A.dblId(XY), "identity square at " + at);
        }
    for (int h = 0; h < nh; ++h)
        for (int p = 0; p < nh; ++p)
            noteId(H(h, p) >= 0 && Sq(A.sqVId(h), A.sqVId(p)) == A.sqVId(H(h, p)),
                   "identity square of (" + A.hName[h] + "," + A.hName[p] + ")");
    for (int f = 0; f < nv; ++f)
        for (int q = 0; q < nv; ++q)
            noteId(V(f, q) >= 0 && Sq(A.sqHId(f), A.sqHId(q)) == A.sqHId(V(f, q)),
                   "identity square of (" + A.vName[f] + "," + A.vName[q] + ")");

    auto badFamily = [&](const std::string& w) {
        if (d.familiesValid) {
            d.familiesValid = false;
            d.familyWitness = w;
        }
    };
    pairs(A.hc1, [&](int h, int k, int hk) {
        pairs(A.hc1, [&](int p, int s, int ps) {
            ++d.hFamilies;
            int Y = A.hSrc[p], X3 = A.hTgt[k];
            std::string at = "(" + A.hName[h] + "," + A.hName[p] + ").(" + A.hName[k] + "," + A.hName[s] + ")";
            int top = A.hComp1(H(h, p), H(k, s)), bot = H(hk, ps);
            int one = A.sqVId(c.hy(h, Y)), one2 = A.sqVId(c.xh(X3, s));
            int cell = h2(A, h2(A, one, c.hp(k, p)), one2);
            int inv = h2(A, h2(A, one, c.hpInv(k, p)), one2);
            if (cell < 0 || top < 0 || bot < 0 || A.top[cell] != top || A.bottom[cell] != bot ||
                !A.isVId(A.left[cell]) || !A.isVId(A.right[cell])) {
                badFamily("frame of the comparison at " + at);
                return;
            }
            if (v2(A, cell, inv) != A.sqVId(top) || v2(A, inv, cell) != A.sqVId(bot))
                badFamily("comparison at " + at + " is not vertically invertible");
            if (cell != A.sqVId(top) && d.strictH) {
                d.strictH = false;
                d.hWitness = at;
            }
        });
    });
    pairs(A.vc1, [&](int f, int g, int fg) {
        pairs(A.vc1, [&](int q, int r, int qr) {
            ++d.vFamilies;
            int Y = A.vSrc[q], X3 = A.vTgt[g];
            std::string at = "(" + A.vName[f] + "," + A.vName[q] + ").(" + A.vName[g] + "," + A.vName[r] + ")";
            int left = V(fg, qr), right = A.vComp1(V(f, q), V(g, r));
            int one = A.sqHId(c.vy(f, Y)), one2 = A.sqHId(c.xv(X3, r));
            int cell = v2(A, v2(A, one, c.vq(g, q)), one2);
            int inv = v2(A, v2(A, one, c.vqInv(g, q)), one2);
            if (cell < 0 || left < 0 || right < 0 || A.left[cell] != left || A.right[cell] != right ||
                !A.isHId(A.top[cell]) || !A.isHId(A.bottom[cell])) {
                badFamily("frame of the comparison at " + at);
                return;
            }
            if (h2(A, cell, inv) != A.sqHId(left) || h2(A, inv, cell) != A.sqHId(right))
                badFamily("comparison at " + at + " is not horizontally invertible");
            if (cell != A.sqHId(left) && d.strictV) {
                d.strictV = false;
                d.vWitness = at;
            }
        });
    });
    return d;
}

json monoidToJson(const GrayMonoidData& m) {
    const TensorCone& c = m.star;
    const DoubleCategory& A = m.carrier();
    auto grid = [&](const std::vector<int>& f, int rows, int cols, K kv) {
        json g = json::array();
        for (int i = 0; i < rows; ++i) {
            json row = json::array();
            for (int j = 0; j < cols; ++j) row.push_back(cellRef(A, kv, f[i * cols + j]));
            g.push_back(row);
        }
        return g;
    };
    const int n0 = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
    json j;
    j["schema"] = kSchemaVersion;
    j["carrier"] = doubleToJson(A);
    j["unit"] = cellRef(A, K::Object, m.unit);
    j["left"] = {{"objects", grid(c.obj, n0, n0, K::Object)},
                 {"hcells", grid(c.objH, n0, nh, K::HCell)},
                 {"vcells", grid(c.objV, n0, nv, K::VCell)},
                 {"squares", grid(c.objSq, n0, ns, K::Square)}};
    j["right"] = {{"hcells", grid(c.hObj, nh, n0, K::HCell)},
                  {"vcells", grid(c.vObj, nv, n0, K::VCell)},
                  {"squares", grid(c.sqObj, ns, n0, K::Square)}};
    j["hv"] = grid(c.hv, nh, nv, K::Square);
    j["vh"] = grid(c.vh, nv, nh, K::Square);
    j["hh"] = grid(c.hh, nh, nh, K::Square);
    j["hhInv"] = grid(c.hhInv, nh, nh, K::Square);
    j["vv"] = grid(c.vv, nv, nv, K::Square);
    j["vvInv"] = grid(c.vvInv, nv, nv, K::Square);
    return j;
}

GrayMonoidData monoidFromJson(const json& j, CatPtr carrier) {
    try {
        if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion)
            throw StructuralError("unsupported schema version " + j.at("schema").dump());
        if (!carrier) carrier = std::make_shared<const DoubleCategory>(doubleFromJson(j.at("carrier")));
        const DoubleCategory& A = *carrier;
        GrayMonoidData m;
        TensorCone& c = m.star;
        c.A = c.B = c.C = carrier;
        m.unit = readCellRef(A, K::Object, j.at("unit"));
        auto grid = [&](const json& g, int rows, int cols, K kv, std::vector<int>& out, const std::string& what) {
            if (!g.is_array() || static_cast<int>(g.size()) != rows)
                throw StructuralError("'" + what + "' must have " + std::to_string(rows) + " rows");
            for (const auto& row : g) {
                if (!row.is_array() || static_cast<int>(row.size()) != cols)
                    throw StructuralError("'" + what + "' rows must have " + std::to_string(cols) + " entries");
                for (const auto& e : row) out.push_back(readCellRef(A, kv, e));
            }
        };
        const int n0 = A.nObj(), nh = A.nH(), nv = A.nV(), ns = A.nSq();
        const json &L = j.at("left"), &R = j.at("right");
        grid(L.at("objects"), n0, n0, K::Object, c.obj, "left.objects");
        grid(L.at("hcells"), n0, nh, K::HCell, c.objH, "left.hcells");
        grid(L.at("vcells"), n0, nv, K::VCell, c.objV, "left.vcells");
        grid(L.at("squares"), n0, ns, K::Square, c.objSq, "left.squares");
        grid(R.at("hcells"), nh, n0, K::HCell, c.hObj, "right.hcells");
        grid(R.at("vcells"), nv, n0, K::VCell, c.vObj, "right.vcells");
        grid(R.at("squares"), ns, n0, K::Square, c.sqObj, "right.squares");
        grid(j.at("hv"), nh, nv, K::Square, c.hv, "hv");
        grid(j.at("vh"), nv, nh, K::Square, c.vh, "vh");
        grid(j.at("hh"), nh, nh, K::Square, c.hh, "hh");
        grid(j.at("hhInv"), nh, nh, K::Square, c.hhInv, "hhInv");
        grid(j.at("vv"), nv, nv, K::Square, c.vv, "vv");
        grid(j.at("vvInv"), nv, nv, K::Square, c.vvInv, "vvInv");
        return m;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed monoid JSON: ") + e.what());
    }
}

}  // namespace gd

#include "graydbl/tensor.hpp"

#include <algorithm>

namespace gd {

namespace {

// The conditions on a cone, written once over an accessor G that exposes
// the same cell lookups as TensorCone.
template <class G>
struct ConeEq {
    const DoubleCategory& A;
    const DoubleCategory& B;
    const DoubleCategory& C;
    const G& g;

    // Frames.
    bool frameXH(int X, int p) const {
        int c = g.xh(X, p);
        return C.hSrc[c] == g.ob(X, B.hSrc[p]) && C.hTgt[c] == g.ob(X, B.hTgt[p]);
    }
    bool frameXV(int X, int q) const {
        int c = g.xv(X, q);
        return C.vSrc[c] == g.ob(X, B.vSrc[q]) && C.vTgt[c] == g.ob(X, B.vTgt[q]);
    }
    bool frameXS(int X, int s) const {
        int c = g.xs(X, s);
        return C.top[c] == g.xh(X, B.top[s]) && C.bottom[c] == g.xh(X, B.bottom[s]) &&
               C.left[c] == g.xv(X, B.left[s]) && C.right[c] == g.xv(X, B.right[s]);
    }
    bool frameHY(int h, int Y) const {
        int c = g.hy(h, Y);
        return C.hSrc[c] == g.ob(A.hSrc[h], Y) && C.hTgt[c] == g.ob(A.hTgt[h], Y);
    }
    bool frameVY(int v, int Y) const {
        int c = g.vy(v, Y);
        return C.vSrc[c] == g.ob(A.vSrc[v], Y) && C.vTgt[c] == g.ob(A.vTgt[v], Y);
    }
    bool frameSY(int w, int Y) const {
        int c = g.sy(w, Y);
        return C.top[c] == g.hy(A.top[w], Y) && C.bottom[c] == g.hy(A.bottom[w], Y) &&
               C.left[c] == g.vy(A.left[w], Y) && C.right[c] == g.vy(A.right[w], Y);
    }

    // Expected frames of the mixed squares: {top, bottom, left, right}.
    std::array<int, 4> hqFrame(int h, int q) const {
        int X = A.hSrc[h], X2 = A.hTgt[h], Y = B.vSrc[q], Y2 = B.vTgt[q];
        return {g.hy(h, Y), g.hy(h, Y2), g.xv(X, q), g.xv(X2, q)};
    }
    std::array<int, 4> vpFrame(int v, int p) const {
        int X = A.vSrc[v], X2 = A.vTgt[v], Y = B.hSrc[p], Y2 = B.hTgt[p];
        return {g.xh(X, p), g.xh(X2, p), g.vy(v, Y), g.vy(v, Y2)};
    }
    std::array<int, 4> hpFrame(int h, int p) const {
        int X = A.hSrc[h], X2 = A.hTgt[h], Y = B.hSrc[p], Y2 = B.hTgt[p];
        return {C.hComp1(g.xh(X, p), g.hy(h, Y2)), C.hComp1(g.hy(h, Y), g.xh(X2, p)), C.vId(g.ob(X, Y)),
                C.vId(g.ob(X2, Y2))};
    }
    std::array<int, 4> vqFrame(int v, int q) const {
        int X = A.vSrc[v], X2 = A.vTgt[v], Y = B.vSrc[q], Y2 = B.vTgt[q];
        return {C.hId(g.ob(X, Y)), C.hId(g.ob(X2, Y2)), C.vComp1(g.vy(v, Y), g.xv(X2, q)),
                C.vComp1(g.xv(X, q), g.vy(v, Y2))};
    }
    bool hasFrame(int s, const std::array<int, 4>& f) const {
        return s >= 0 && C.top[s] == f[0] && C.bottom[s] == f[1] && C.left[s] == f[2] && C.right[s] == f[3];
    }

    // Forced values of the mixed squares on identities, -1 if not forced.
    int forcedHQ(int h, int q) const {
        if (B.isVId(q)) return C.sqVId(g.hy(h, B.vSrc[q]));
        if (A.isHId(h)) return C.sqHId(g.xv(A.hSrc[h], q));
        return -1;
    }
    int forcedVP(int v, int p) const {
        if (B.isHId(p)) return C.sqHId(g.vy(v, B.hSrc[p]));
        if (A.isVId(v)) return C.sqVId(g.xh(A.vSrc[v], p));
        return -1;
    }
    int forcedHP(int h, int p) const {
        if (B.isHId(p)) return C.sqVId(g.hy(h, B.hSrc[p]));
        if (A.isHId(h)) return C.sqVId(g.xh(A.hSrc[h], p));
        return -1;
    }
    int forcedVQ(int v, int q) const {
        if (B.isVId(q)) return C.sqHId(g.vy(v, B.vSrc[q]));
        if (A.isVId(v)) return C.sqHId(g.xv(A.vSrc[v], q));
        return -1;
    }

    static bool eq(int a, int b) { return a >= 0 && a == b; }

    // (vi)
    bool hqCompB(int h, int q, int q2, int qq) const { return eq(C.vComp2(g.hq(h, q), g.hq(h, q2)), g.hq(h, qq)); }
    bool hqCompA(int h, int h2, int hh, int q) const { return eq(C.hComp2(g.hq(h, q), g.hq(h2, q)), g.hq(hh, q)); }
    bool vpCompB(int v, int p, int p2, int pp) const { return eq(C.hComp2(g.vp(v, p), g.vp(v, p2)), g.vp(v, pp)); }
    bool vpCompA(int v, int v2, int vv, int p) const { return eq(C.vComp2(g.vp(v, p), g.vp(v2, p)), g.vp(vv, p)); }
    bool hpCompB(int h, int p, int p2, int pp) const {
        int X = A.hSrc[h], X2 = A.hTgt[h];
        int up = C.hComp2(C.sqVId(g.xh(X, p)), g.hp(h, p2));
        int down = C.hComp2(g.hp(h, p), C.sqVId(g.xh(X2, p2)));
        return up >= 0 && down >= 0 && eq(C.vComp2(up, down), g.hp(h, pp));
    }
    bool hpCompA(int h, int h2, int hh, int p) const {
        int Y = B.hSrc[p], Y2 = B.hTgt[p];
        int up = C.hComp2(g.hp(h, p), C.sqVId(g.hy(h2, Y2)));
        int down = C.hComp2(C.sqVId(g.hy(h, Y)), g.hp(h2, p));
        return up >= 0 && down >= 0 && eq(C.vComp2(up, down), g.hp(hh, p));
    }
    bool vqCompB(int v, int q, int q2, int qq) const {
        int X = A.vSrc[v], X2 = A.vTgt[v];
        int l = C.vComp2(g.vq(v, q), C.sqHId(g.xv(X2, q2)));
        int r = C.vComp2(C.sqHId(g.xv(X, q)), g.vq(v, q2));
        return l >= 0 && r >= 0 && eq(C.hComp2(l, r), g.vq(v, qq));
    }
    bool vqCompA(int v, int v2, int vv, int q) const {
        int Y = B.vSrc[q], Y2 = B.vTgt[q];
        int l = C.vComp2(C.sqHId(g.vy(v, Y)), g.vq(v2, q));
        int r = C.vComp2(g.vq(v, q), C.sqHId(g.vy(v2, Y2)));
        return l >= 0 && r >= 0 && eq(C.hComp2(l, r), g.vq(vv, q));
    }

    // (vii), for a square s of B resp. w of A.
    bool natHB(int h, int s) const {
        int X = A.hSrc[h], X2 = A.hTgt[h];
        int row = C.hComp2(g.xs(X, s), g.hq(h, B.right[s]));
        int lhs = row < 0 ? -1 : C.vComp2(row, g.hp(h, B.bottom[s]));
        int row2 = C.hComp2(g.hq(h, B.left[s]), g.xs(X2, s));
        int rhs = row2 < 0 ? -1 : C.vComp2(g.hp(h, B.top[s]), row2);
        return eq(lhs, rhs);
    }
    bool natVB(int v, int s) const {
        int X = A.vSrc[v], X2 = A.vTgt[v];
        int col = C.vComp2(g.xs(X, s), g.vp(v, B.bottom[s]));
        int lhs = col < 0 ? -1 : C.hComp2(g.vq(v, B.left[s]), col);
        int col2 = C.vComp2(g.vp(v, B.top[s]), g.xs(X2, s));
        int rhs = col2 < 0 ? -1 : C.hComp2(col2, g.vq(v, B.right[s]));
        return eq(lhs, rhs);
    }
    bool natAH(int w, int p) const {
        int Y = B.hSrc[p], Y2 = B.hTgt[p];
        int row = C.hComp2(g.vp(A.left[w], p), g.sy(w, Y2));
        int lhs = row < 0 ? -1 : C.vComp2(row, g.hp(A.bottom[w], p));
        int row2 = C.hComp2(g.sy(w, Y), g.vp(A.right[w], p));
        int rhs = row2 < 0 ? -1 : C.vComp2(g.hp(A.top[w], p), row2);
        return eq(lhs, rhs);
    }
    bool natAV(int w, int q) const {
        int Y = B.vSrc[q], Y2 = B.vTgt[q];
        int col = C.vComp2(g.sy(w, Y), g.hq(A.bottom[w], q));
        int lhs = col < 0 ? -1 : C.hComp2(col, g.vq(A.right[w], q));
        int col2 = C.vComp2(g.hq(A.top[w], q), g.sy(w, Y2));
        int rhs = col2 < 0 ? -1 : C.hComp2(g.vq(A.left[w], q), col2);
        return eq(lhs, rhs);
    }
};

bool inRange(const std::vector<int>& m, std::size_t n, int range) {
    if (m.size() != n) return false;
    return std::all_of(m.begin(), m.end(), [&](int x) { return x >= 0 && x < range; });
}

DoubleFunctor rowFunctor(const TensorCone& c, int X) {
    const DoubleCategory& B = *c.B;
    DoubleFunctor f{c.B, c.C, {}, {}, {}, {}};
    for (int Y = 0; Y < B.nObj(); ++Y) f.obj.push_back(c.ob(X, Y));
    for (int p = 0; p < B.nH(); ++p) f.h.push_back(c.xh(X, p));
    for (int q = 0; q < B.nV(); ++q) f.v.push_back(c.xv(X, q));
    for (int s = 0; s < B.nSq(); ++s) f.sq.push_back(c.xs(X, s));
    return f;
}

DoubleFunctor columnFunctor(const TensorCone& c, int Y) {
    const DoubleCategory& A = *c.A;
    DoubleFunctor f{c.A, c.C, {}, {}, {}, {}};
    for (int X = 0; X < A.nObj(); ++X) f.obj.push_back(c.ob(X, Y));
    for (int h = 0; h < A.nH(); ++h) f.h.push_back(c.hy(h, Y));
    for (int v = 0; v < A.nV(); ++v) f.v.push_back(c.vy(v, Y));
    for (int w = 0; w < A.nSq(); ++w) f.sq.push_back(c.sy(w, Y));
    return f;
}

TensorCone emptyCone(CatPtr Ap, CatPtr Bp, CatPtr Cp) {
    TensorCone c;
    c.A = Ap;
    c.B = Bp;
    c.C = Cp;
    const DoubleCategory &A = *c.A, &B = *c.B;
    c.obj.assign(A.nObj() * B.nObj(), -1);
    c.objH.assign(A.nObj() * B.nH(), -1);
    c.objV.assign(A.nObj() * B.nV(), -1);
    c.objSq.assign(A.nObj() * B.nSq(), -1);
    c.hObj.assign(A.nH() * B.nObj(), -1);
    c.vObj.assign(A.nV() * B.nObj(), -1);
    c.sqObj.assign(A.nSq() * B.nObj(), -1);
    c.hv.assign(A.nH() * B.nV(), -1);
    c.vh.assign(A.nV() * B.nH(), -1);
    c.hh.assign(A.nH() * B.nH(), -1);
    c.hhInv.assign(A.nH() * B.nH(), -1);
    c.vv.assign(A.nV() * B.nV(), -1);
    c.vvInv.assign(A.nV() * B.nV(), -1);
    return c;
}

}  // namespace

std::string pairName(const TensorCone& c, CellKind ka, int a, CellKind kb, int b) {
    return c.A->cellName(ka, a) + "*" + c.B->cellName(kb, b);
}

Report validateCone(const TensorCone& c) {
    Report rep;
    if (!c.A || !c.B || !c.C) {
        rep.structuralError("cone without domains or codomain");
        return rep;
    }
    const DoubleCategory &A = *c.A, &B = *c.B, &C = *c.C;
    const std::size_t a0 = A.nObj(), ah = A.nH(), av = A.nV(), as = A.nSq();
    const std::size_t b0 = B.nObj(), bh = B.nH(), bv = B.nV(), bs = B.nSq();
    if (!inRange(c.obj, a0 * b0, C.nObj()) || !inRange(c.objH, a0 * bh, C.nH()) ||
        !inRange(c.objV, a0 * bv, C.nV()) || !inRange(c.objSq, a0 * bs, C.nSq()) ||
        !inRange(c.hObj, ah * b0, C.nH()) || !inRange(c.vObj, av * b0, C.nV()) ||
        !inRange(c.sqObj, as * b0, C.nSq()) || !inRange(c.hv, ah * bv, C.nSq()) ||
        !inRange(c.vh, av * bh, C.nSq()) || !inRange(c.hh, ah * bh, C.nSq()) ||
        !inRange(c.hhInv, ah * bh, C.nSq()) || !inRange(c.vv, av * bv, C.nSq()) ||
        !inRange(c.vvInv, av * bv, C.nSq())) {
        rep.structuralError("pair maps are not total or out of range");
        return rep;
    }
    ConeEq<TensorCone> e{A, B, C, c};
    using K = CellKind;
    auto nm = [&](K ka, int a, K kb, int b) { return pairName(c, ka, a, kb, b); };
    for (int X = 0; X < A.nObj(); ++X) {
        for (int p = 0; p < B.nH(); ++p)
            if (!e.frameXH(X, p)) rep.structuralError("frame of " + nm(K::Object, X, K::HCell, p));
        for (int q = 0; q < B.nV(); ++q)
            if (!e.frameXV(X, q)) rep.structuralError("frame of " + nm(K::Object, X, K::VCell, q));
    }
    for (int Y = 0; Y < B.nObj(); ++Y) {
        for (int h = 0; h < A.nH(); ++h)
            if (!e.frameHY(h, Y)) rep.structuralError("frame of " + nm(K::HCell, h, K::Object, Y));
        for (int v = 0; v < A.nV(); ++v)
            if (!e.frameVY(v, Y)) rep.structuralError("frame of " + nm(K::VCell, v, K::Object, Y));
    }
    if (!rep.ok()) return rep;
    for (int X = 0; X < A.nObj(); ++X)
        for (int s = 0; s < B.nSq(); ++s)
            if (!e.frameXS(X, s)) rep.structuralError("frame of " + nm(K::Object, X, K::Square, s));
    for (int Y = 0; Y < B.nObj(); ++Y)
        for (int w = 0; w < A.nSq(); ++w)
            if (!e.frameSY(w, Y)) rep.structuralError("frame of " + nm(K::Square, w, K::Object, Y));
    for (int h = 0; h < A.nH(); ++h) {
        for (int q = 0; q < B.nV(); ++q)
            if (!e.hasFrame(c.hq(h, q), e.hqFrame(h, q)))
                rep.structuralError("frame of " + nm(K::HCell, h, K::VCell, q));
        for (int p = 0; p < B.nH(); ++p) {
            auto f = e.hpFrame(h, p);
            if (!e.hasFrame(c.hp(h, p), f)) rep.structuralError("frame of " + nm(K::HCell, h, K::HCell, p));
            if (!e.hasFrame(c.hpInv(h, p), {f[1], f[0], f[2], f[3]}))
                rep.structuralError("frame of the inverse of " + nm(K::HCell, h, K::HCell, p));
        }
    }
    for (int v = 0; v < A.nV(); ++v) {
        for (int p = 0; p < B.nH(); ++p)
            if (!e.hasFrame(c.vp(v, p), e.vpFrame(v, p)))
                rep.structuralError("frame of " + nm(K::VCell, v, K::HCell, p));
        for (int q = 0; q < B.nV(); ++q) {
            auto f = e.vqFrame(v, q);
            if (!e.hasFrame(c.vq(v, q), f)) rep.structuralError("frame of " + nm(K::VCell, v, K::VCell, q));
            if (!e.hasFrame(c.vqInv(v, q), {f[0], f[1], f[3], f[2]}))
                rep.structuralError("frame of the inverse of " + nm(K::VCell, v, K::VCell, q));
        }
    }
    if (!rep.ok()) return rep;

    for (int h = 0; h < A.nH(); ++h)
        for (int p = 0; p < B.nH(); ++p) {
            int s = c.hp(h, p), t = c.hpInv(h, p);
            if (C.vComp2(s, t) != C.sqVId(C.top[s]) || C.vComp2(t, s) != C.sqVId(C.bottom[s]))
                rep.fail(kConeInvertibility, nm(K::HCell, h, K::HCell, p));
        }
    for (int v = 0; v < A.nV(); ++v)
        for (int q = 0; q < B.nV(); ++q) {
            int s = c.vq(v, q), t = c.vqInv(v, q);
            if (C.hComp2(s, t) != C.sqHId(C.left[s]) || C.hComp2(t, s) != C.sqHId(C.right[s]))
                rep.fail(kConeInvertibility, nm(K::VCell, v, K::VCell, q));
        }

    for (int X = 0; X < A.nObj(); ++X) {
        Report r = validateFunctor(rowFunctor(c, X));
        if (!r.ok()) rep.fail(kConeFunctors, A.objName[X] + "*-: " + r.summary(2));
    }
    for (int Y = 0; Y < B.nObj(); ++Y) {
        Report r = validateFunctor(columnFunctor(c, Y));
        if (!r.ok()) rep.fail(kConeFunctors, "-*" + B.objName[Y] + ": " + r.summary(2));
    }

    for (int h = 0; h < A.nH(); ++h) {
        for (int q = 0; q < B.nV(); ++q) {
            int f = e.forcedHQ(h, q);
            if (f >= 0 && c.hq(h, q) != f) rep.fail(kConeIdentities, nm(K::HCell, h, K::VCell, q));
        }
        for (int p = 0; p < B.nH(); ++p) {
            int f = e.forcedHP(h, p);
            if (f >= 0 && c.hp(h, p) != f) rep.fail(kConeIdentities, nm(K::HCell, h, K::HCell, p));
        }
    }
    for (int v = 0; v < A.nV(); ++v) {
        for (int p = 0; p < B.nH(); ++p) {
            int f = e.forcedVP(v, p);
            if (f >= 0 && c.vp(v, p) != f) rep.fail(kConeIdentities, nm(K::VCell, v, K::HCell, p));
        }
        for (int q = 0; q < B.nV(); ++q) {
            int f = e.forcedVQ(v, q);
            if (f >= 0 && c.vq(v, q) != f) rep.fail(kConeIdentities, nm(K::VCell, v, K::VCell, q));
        }
    }

    for (int h = 0; h < A.nH(); ++h) {
        B.vc1.forEach([&](int q, int q2, int qq) {
            if (!e.hqCompB(h, q, q2, qq))
                rep.fail(kConeComposition, A.hName[h] + "*(" + B.vName[q] + "." + B.vName[q2] + ")");
        });
        B.hc1.forEach([&](int p, int p2, int pp) {
            if (!e.hpCompB(h, p, p2, pp))
                rep.fail(kConeComposition, A.hName[h] + "*(" + B.hName[p] + "." + B.hName[p2] + ")");
        });
    }
    for (int v = 0; v < A.nV(); ++v) {
        B.hc1.forEach([&](int p, int p2, int pp) {
            if (!e.vpCompB(v, p, p2, pp))
                rep.fail(kConeComposition, A.vName[v] + "*(" + B.hName[p] + "." + B.hName[p2] + ")");
        });
        B.vc1.forEach([&](int q, int q2, int qq) {
            if (!e.vqCompB(v, q, q2, qq))
                rep.fail(kConeComposition, A.vName[v] + "*(" + B.vName[q] + "." + B.vName[q2] + ")");
        });
    }
    A.hc1.forEach([&](int h, int h2, int hh) {
        for (int q = 0; q < B.nV(); ++q)
            if (!e.hqCompA(h, h2, hh, q))
                rep.fail(kConeComposition, "(" + A.hName[h] + "." + A.hName[h2] + ")*" + B.vName[q]);
        for (int p = 0; p < B.nH(); ++p)
            if (!e.hpCompA(h, h2, hh, p))
                rep.fail(kConeComposition, "(" + A.hName[h] + "." + A.hName[h2] + ")*" + B.hName[p]);
    });
    A.vc1.forEach([&](int v, int v2, int vv) {
        for (int p = 0; p < B.nH(); ++p)
            if (!e.vpCompA(v, v2, vv, p))
                rep.fail(kConeComposition, "(" + A.vName[v] + "." + A.vName[v2] + ")*" + B.hName[p]);
        for (int q = 0; q < B.nV(); ++q)
            if (!e.vqCompA(v, v2, vv, q))
                rep.fail(kConeComposition, "(" + A.vName[v] + "." + A.vName[v2] + ")*" + B.vName[q]);
    });

    for (int s = 0; s < B.nSq(); ++s) {
        for (int h = 0; h < A.nH(); ++h)
            if (!e.natHB(h, s)) rep.fail(kConeNaturality, nm(K::HCell, h, K::Square, s));
        for (int v = 0; v < A.nV(); ++v)
            if (!e.natVB(v, s)) rep.fail(kConeNaturality, nm(K::VCell, v, K::Square, s));
    }
    for (int w = 0; w < A.nSq(); ++w) {
        for (int p = 0; p < B.nH(); ++p)
            if (!e.natAH(w, p)) rep.fail(kConeNaturality, nm(K::Square, w, K::HCell, p));
        for (int q = 0; q < B.nV(); ++q)
            if (!e.natAV(w, q)) rep.fail(kConeNaturality, nm(K::Square, w, K::VCell, q));
    }
    return rep;
}

namespace {

int need(int idx, const std::string& what) {
    if (idx < 0) throw StructuralError("curry: " + what + " is not a cell of the hom");
    return idx;
}

}  // namespace

DoubleFunctor curryCone(const TensorCone& c, const HomDouble& BC) {
    if (BC.A.get() != c.B.get() || BC.B.get() != c.C.get())
        throw StructuralError("curry: hom does not match the cone");
    const DoubleCategory &A = *c.A, &B = *c.B;
    DoubleFunctor F{c.A, BC.cat, {}, {}, {}, {}};
    for (int X = 0; X < A.nObj(); ++X) {
        DoubleFunctor r = rowFunctor(c, X);
        F.obj.push_back(need(BC.findFunctorMaps(r.obj, r.h, r.v, r.sq), A.objName[X] + "*-"));
    }
    for (int h = 0; h < A.nH(); ++h) {
        HPseudo x;
        x.src = F.obj[A.hSrc[h]];
        x.tgt = F.obj[A.hTgt[h]];
        for (int Y = 0; Y < B.nObj(); ++Y) x.obj.push_back(c.hy(h, Y));
        for (int q = 0; q < B.nV(); ++q) x.v.push_back(c.hq(h, q));
        for (int p = 0; p < B.nH(); ++p) {
            x.h.push_back(c.hp(h, p));
            x.hInv.push_back(c.hpInv(h, p));
        }
        F.h.push_back(need(BC.findH(x), A.hName[h] + "*-"));
    }
    for (int v = 0; v < A.nV(); ++v) {
        VPseudo y;
        y.src = F.obj[A.vSrc[v]];
        y.tgt = F.obj[A.vTgt[v]];
        for (int Y = 0; Y < B.nObj(); ++Y) y.obj.push_back(c.vy(v, Y));
        for (int p = 0; p < B.nH(); ++p) y.h.push_back(c.vp(v, p));
        for (int q = 0; q < B.nV(); ++q) {
            y.v.push_back(c.vq(v, q));
            y.vInv.push_back(c.vqInv(v, q));
        }
        F.v.push_back(need(BC.findV(y), A.vName[v] + "*-"));
    }
    for (int w = 0; w < A.nSq(); ++w) {
        Modification m{F.h[A.top[w]], F.h[A.bottom[w]], F.v[A.left[w]], F.v[A.right[w]], {}};
        for (int Y = 0; Y < B.nObj(); ++Y) m.comp.push_back(c.sy(w, Y));
        F.sq.push_back(need(BC.findMod(m), A.sqName[w] + "*-"));
    }
    return F;
}

TensorCone uncurryFunctor(const DoubleFunctor& F, const HomDouble& BC) {
    if (F.cod.get() != BC.cat.get()) throw StructuralError("uncurry: functor does not land in the hom");
    TensorCone c = emptyCone(F.dom, BC.A, BC.B);
    const DoubleCategory &A = *c.A, &B = *c.B;
    const int b0 = B.nObj(), bh = B.nH(), bv = B.nV(), bs = B.nSq();
    for (int X = 0; X < A.nObj(); ++X) {
        const DoubleFunctor& G = BC.functors[F.obj[X]];
        for (int Y = 0; Y < b0; ++Y) c.obj[X * b0 + Y] = G.obj[Y];
        for (int p = 0; p < bh; ++p) c.objH[X * bh + p] = G.h[p];
        for (int q = 0; q < bv; ++q) c.objV[X * bv + q] = G.v[q];
        for (int s = 0; s < bs; ++s) c.objSq[X * bs + s] = G.sq[s];
    }
    for (int h = 0; h < A.nH(); ++h) {
        const HPseudo& x = BC.hps[F.h[h]];
        for (int Y = 0; Y < b0; ++Y) c.hObj[h * b0 + Y] = x.obj[Y];
        for (int q = 0; q < bv; ++q) c.hv[h * bv + q] = x.v[q];
        for (int p = 0; p < bh; ++p) {
            c.hh[h * bh + p] = x.h[p];
            c.hhInv[h * bh + p] = x.hInv[p];
        }
    }
    for (int v = 0; v < A.nV(); ++v) {
        const VPseudo& y = BC.vps[F.v[v]];
        for (int Y = 0; Y < b0; ++Y) c.vObj[v * b0 + Y] = y.obj[Y];
        for (int p = 0; p < bh; ++p) c.vh[v * bh + p] = y.h[p];
        for (int q = 0; q < bv; ++q) {
            c.vv[v * bv + q] = y.v[q];
            c.vvInv[v * bv + q] = y.vInv[q];
        }
    }
    for (int w = 0; w < A.nSq(); ++w) {
        const Modification& m = BC.mods[F.sq[w]];
        for (int Y = 0; Y < b0; ++Y) c.sqObj[w * b0 + Y] = m.comp[Y];
    }
    return c;
}

namespace {

// Cone values read from a partial assignment of the search in
// enumerateCones.
struct SearchView {
    const DoubleCategory &A, &B, &C;
    const std::vector<DoubleFunctor>& FB;  // candidates for X*-
    const std::vector<DoubleFunctor>& FA;  // candidates for -*Y
    const std::vector<int>* a = nullptr;
    int baseY = 0, baseHQ = 0, baseHP = 0, baseVP = 0, baseVQ = 0;

    const DoubleFunctor& row(int X) const { return FB[(*a)[X]]; }
    const DoubleFunctor& col(int Y) const { return FA[(*a)[baseY + Y]]; }
    int ob(int X, int Y) const { return row(X).obj[Y]; }
    int xh(int X, int p) const { return row(X).h[p]; }
    int xv(int X, int q) const { return row(X).v[q]; }
    int xs(int X, int s) const { return row(X).sq[s]; }
    int hy(int h, int Y) const { return col(Y).h[h]; }
    int vy(int v, int Y) const { return col(Y).v[v]; }
    int sy(int w, int Y) const { return col(Y).sq[w]; }
    int varHQ(int h, int q) const { return baseHQ + h * B.nV() + q; }
    int varHP(int h, int p) const { return baseHP + h * B.nH() + p; }
    int varVP(int v, int p) const { return baseVP + v * B.nH() + p; }
    int varVQ(int v, int q) const { return baseVQ + v * B.nV() + q; }
    int hq(int h, int q) const { return (*a)[varHQ(h, q)]; }
    int hp(int h, int p) const { return (*a)[varHP(h, p)]; }
    int vp(int v, int p) const { return (*a)[varVP(v, p)]; }
    int vq(int v, int q) const { return (*a)[varVQ(v, q)]; }
    int hpInv(int h, int p) const { return C.vInverse(hp(h, p)); }
    int vqInv(int v, int q) const { return C.hInverse(vq(v, q)); }
};

template <class Fn>
void enumerateConesImpl(CatPtr Ap, CatPtr Bp, CatPtr Cp, Budget& budget, Fn&& onCone) {
    const DoubleCategory &A = *Ap, &B = *Bp, &C = *Cp;
    std::vector<DoubleFunctor> FB = enumerateDoubleFunctors(Bp, Cp, budget);
    std::vector<DoubleFunctor> FA = enumerateDoubleFunctors(Ap, Cp, budget);
    if (FB.empty() || FA.empty()) {
        if (A.nObj() == 0 || B.nObj() == 0) {
            // Unique cone with all maps empty when one side has no objects.
            TensorCone c = emptyCone(Ap, Bp, Cp);
            onCone(c);
        }
        return;
    }
    const int a0 = A.nObj(), b0 = B.nObj();
    SearchView sv{A, B, C, FB, FA};
    sv.baseY = a0;
    sv.baseHQ = a0 + b0;
    sv.baseHP = sv.baseHQ + A.nH() * B.nV();
    sv.baseVP = sv.baseHP + A.nH() * B.nH();
    sv.baseVQ = sv.baseVP + A.nV() * B.nH();
    const int n = sv.baseVQ + A.nV() * B.nV();
    Backtracker bt(n);
    ConeEq<SearchView> e{A, B, C, sv};
    auto bind = [&sv](const Backtracker::Assignment& asg) { sv.a = &asg; };

    for (int X = 0; X < a0; ++X)
        bt.setDomain(X, [&FB](const Backtracker::Assignment&, std::vector<int>& out) {
            for (std::size_t i = 0; i < FB.size(); ++i) out.push_back(static_cast<int>(i));
        });
    for (int Y = 0; Y < b0; ++Y) {
        bt.setDomain(a0 + Y, [&, Y](const Backtracker::Assignment& asg, std::vector<int>& out) {
            bind(asg);
            for (std::size_t i = 0; i < FA.size(); ++i) {
                bool ok = true;
                for (int X = 0; X < a0 && ok; ++X) ok = FA[i].obj[X] == sv.ob(X, Y);
                if (ok) out.push_back(static_cast<int>(i));
            }
        });
    }
    auto squareDomain = [&](int forced, const std::array<int, 4>& fr, int inv, std::vector<int>& out) {
        if (forced >= 0) {
            if (e.hasFrame(forced, fr)) out.push_back(forced);
            return;
        }
        if (fr[0] < 0 || fr[1] < 0 || fr[2] < 0 || fr[3] < 0) return;
        for (int s : C.squaresWithFrame(fr[0], fr[1], fr[2], fr[3])) {
            if (inv == 1 && C.vInverse(s) < 0) continue;
            if (inv == 2 && C.hInverse(s) < 0) continue;
            out.push_back(s);
        }
    };
    for (int h = 0; h < A.nH(); ++h) {
        for (int q = 0; q < B.nV(); ++q)
            bt.setDomain(sv.varHQ(h, q), [&, h, q](const Backtracker::Assignment& asg, std::vector<int>& out) {
                bind(asg);
                squareDomain(e.forcedHQ(h, q), e.hqFrame(h, q), 0, out);
            });
        for (int p = 0; p < B.nH(); ++p)
            bt.setDomain(sv.varHP(h, p), [&, h, p](const Backtracker::Assignment& asg, std::vector<int>& out) {
                bind(asg);
                squareDomain(e.forcedHP(h, p), e.hpFrame(h, p), 1, out);
            });
    }
    for (int v = 0; v < A.nV(); ++v) {
        for (int p = 0; p < B.nH(); ++p)
            bt.setDomain(sv.varVP(v, p), [&, v, p](const Backtracker::Assignment& asg, std::vector<int>& out) {
                bind(asg);
                squareDomain(e.forcedVP(v, p), e.vpFrame(v, p), 0, out);
            });
        for (int q = 0; q < B.nV(); ++q)
            bt.setDomain(sv.varVQ(v, q), [&, v, q](const Backtracker::Assignment& asg, std::vector<int>& out) {
                bind(asg);
                squareDomain(e.forcedVQ(v, q), e.vqFrame(v, q), 2, out);
            });
    }

    auto add = [&](std::initializer_list<int> vars, std::function<bool()> chk) {
        int at = *std::max_element(vars.begin(), vars.end());
        bt.addCheck(at, [&, chk](const Backtracker::Assignment& asg) {
            bind(asg);
            return chk();
        });
    };
    for (int h = 0; h < A.nH(); ++h) {
        B.vc1.forEach([&](int q, int q2, int qq) {
            add({sv.varHQ(h, q), sv.varHQ(h, q2), sv.varHQ(h, qq)}, [&e, h, q, q2, qq] { return e.hqCompB(h, q, q2, qq); });
        });
        B.hc1.forEach([&](int p, int p2, int pp) {
            add({sv.varHP(h, p), sv.varHP(h, p2), sv.varHP(h, pp)}, [&e, h, p, p2, pp] { return e.hpCompB(h, p, p2, pp); });
        });
    }
    for (int v = 0; v < A.nV(); ++v) {
        B.hc1.forEach([&](int p, int p2, int pp) {
            add({sv.varVP(v, p), sv.varVP(v, p2), sv.varVP(v, pp)}, [&e, v, p, p2, pp] { return e.vpCompB(v, p, p2, pp); });
        });
        B.vc1.forEach([&](int q, int q2, int qq) {
            add({sv.varVQ(v, q), sv.varVQ(v, q2), sv.varVQ(v, qq)}, [&e, v, q, q2, qq] { return e.vqCompB(v, q, q2, qq); });
        });
    }
    A.hc1.forEach([&](int h, int h2, int hh) {
        for (int q = 0; q < B.nV(); ++q)
            add({sv.varHQ(h, q), sv.varHQ(h2, q), sv.varHQ(hh, q)}, [&e, h, h2, hh, q] { return e.hqCompA(h, h2, hh, q); });
        for (int p = 0; p < B.nH(); ++p)
            add({sv.varHP(h, p), sv.varHP(h2, p), sv.varHP(hh, p)}, [&e, h, h2, hh, p] { return e.hpCompA(h, h2, hh, p); });
    });
    A.vc1.forEach([&](int v, int v2, int vv) {
        for (int p = 0; p < B.nH(); ++p)
            add({sv.varVP(v, p), sv.varVP(v2, p), sv.varVP(vv, p)}, [&e, v, v2, vv, p] { return e.vpCompA(v, v2, vv, p); });
        for (int q = 0; q < B.nV(); ++q)
            add({sv.varVQ(v, q), sv.varVQ(v2, q), sv.varVQ(vv, q)}, [&e, v, v2, vv, q] { return e.vqCompA(v, v2, vv, q); });
    });
    for (int s = 0; s < B.nSq(); ++s) {
        for (int h = 0; h < A.nH(); ++h)
            add({sv.varHP(h, B.top[s]), sv.varHP(h, B.bottom[s]), sv.varHQ(h, B.left[s]), sv.varHQ(h, B.right[s])},
                [&e, h, s] { return e.natHB(h, s); });
        for (int v = 0; v < A.nV(); ++v)
            add({sv.varVP(v, B.top[s]), sv.varVP(v, B.bottom[s]), sv.varVQ(v, B.left[s]), sv.varVQ(v, B.right[s])},
                [&e, v, s] { return e.natVB(v, s); });
    }
    for (int w = 0; w < A.nSq(); ++w) {
        for (int p = 0; p < B.nH(); ++p)
            add({sv.varVP(A.left[w], p), sv.varVP(A.right[w], p), sv.varHP(A.top[w], p), sv.varHP(A.bottom[w], p)},
                [&e, w, p] { return e.natAH(w, p); });
        for (int q = 0; q < B.nV(); ++q)
            add({sv.varHQ(A.top[w], q), sv.varHQ(A.bottom[w], q), sv.varVQ(A.left[w], q), sv.varVQ(A.right[w], q)},
                [&e, w, q] { return e.natAV(w, q); });
    }

    bt.run(budget, [&](const Backtracker::Assignment& asg) {
        bind(asg);
        TensorCone c = emptyCone(Ap, Bp, Cp);
        const int bh = B.nH(), bv = B.nV(), bs = B.nSq();
        for (int X = 0; X < a0; ++X) {
            const DoubleFunctor& r = sv.row(X);
            for (int Y = 0; Y < b0; ++Y) c.obj[X * b0 + Y] = r.obj[Y];
            for (int p = 0; p < bh; ++p) c.objH[X * bh + p] = r.h[p];
            for (int q = 0; q < bv; ++q) c.objV[X * bv + q] = r.v[q];
            for (int s = 0; s < bs; ++s) c.objSq[X * bs + s] = r.sq[s];
        }
        for (int Y = 0; Y < b0; ++Y) {
            const DoubleFunctor& k = sv.col(Y);
            for (int h = 0; h < A.nH(); ++h) c.hObj[h * b0 + Y] = k.h[h];
            for (int v = 0; v < A.nV(); ++v) c.vObj[v * b0 + Y] = k.v[v];
            for (int w = 0; w < A.nSq(); ++w) c.sqObj[w * b0 + Y] = k.sq[w];
        }
        for (int h = 0; h < A.nH(); ++h) {
            for (int q = 0; q < bv; ++q) c.hv[h * bv + q] = sv.hq(h, q);
            for (int p = 0; p < bh; ++p) {
                c.hh[h * bh + p] = sv.hp(h, p);
                c.hhInv[h * bh + p] = sv.hpInv(h, p);
            }
        }
        for (int v = 0; v < A.nV(); ++v) {
            for (int p = 0; p < bh; ++p) c.vh[v * bh + p] = sv.vp(v, p);
            for (int q = 0; q < bv; ++q) {
                c.vv[v * bv + q] = sv.vq(v, q);
                c.vvInv[v * bv + q] = sv.vqInv(v, q);
            }
        }
        onCone(c);
        return true;
    });
}

}  // namespace

std::vector<TensorCone> enumerateCones(CatPtr A, CatPtr B, CatPtr C, Budget& budget) {
    std::vector<TensorCone> out;
    enumerateConesImpl(A, B, C, budget, [&](const TensorCone& c) {
        budget.tick();
        out.push_back(c);
    });
    return out;
}

std::size_t countCones(CatPtr A, CatPtr B, CatPtr C, Budget& budget) {
    std::size_t n = 0;
    enumerateConesImpl(A, B, C, budget, [&](const TensorCone&) { ++n; });
    return n;
}

TensorCone precomposeCone(const TensorCone& c, const DoubleFunctor& F, const DoubleFunctor& G) {
    if (F.cod.get() != c.A.get() || G.cod.get() != c.B.get())
        throw StructuralError("precompose: functors do not land in the cone's domains");
    TensorCone r = emptyCone(F.dom, G.dom, c.C);
    const DoubleCategory &A = *r.A, &B = *r.B;
    const int b0 = B.nObj(), bh = B.nH(), bv = B.nV(), bs = B.nSq();
    for (int X = 0; X < A.nObj(); ++X) {
        int FX = F.obj[X];
        for (int Y = 0; Y < b0; ++Y) r.obj[X * b0 + Y] = c.ob(FX, G.obj[Y]);
        for (int p = 0; p < bh; ++p) r.objH[X * bh + p] = c.xh(FX, G.h[p]);
        for (int q = 0; q < bv; ++q) r.objV[X * bv + q] = c.xv(FX, G.v[q]);
        for (int s = 0; s < bs; ++s) r.objSq[X * bs + s] = c.xs(FX, G.sq[s]);
    }
    for (int Y = 0; Y < b0; ++Y) {
        int GY = G.obj[Y];
        for (int h = 0; h < A.nH(); ++h) r.hObj[h * b0 + Y] = c.hy(F.h[h], GY);
        for (int v = 0; v < A.nV(); ++v) r.vObj[v * b0 + Y] = c.vy(F.v[v], GY);
        for (int w = 0; w < A.nSq(); ++w) r.sqObj[w * b0 + Y] = c.sy(F.sq[w], GY);
    }
    for (int h = 0; h < A.nH(); ++h) {
        for (int q = 0; q < bv; ++q) r.hv[h * bv + q] = c.hq(F.h[h], G.v[q]);
        for (int p = 0; p < bh; ++p) {
            r.hh[h * bh + p] = c.hp(F.h[h], G.h[p]);
            r.hhInv[h * bh + p] = c.hpInv(F.h[h], G.h[p]);
        }
    }
    for (int v = 0; v < A.nV(); ++v) {
        for (int p = 0; p < bh; ++p) r.vh[v * bh + p] = c.vp(F.v[v], G.h[p]);
        for (int q = 0; q < bv; ++q) {
            r.vv[v * bv + q] = c.vq(F.v[v], G.v[q]);
            r.vvInv[v * bv + q] = c.vqInv(F.v[v], G.v[q]);
        }
    }
    return r;
}

TensorCone postcomposeCone(const DoubleFunctor& K, const TensorCone& c) {
    if (K.dom.get() != c.C.get()) throw StructuralError("postcompose: functor does not start at the cone's codomain");
    TensorCone r = c;
    r.C = K.cod;
    auto ap = [](const std::vector<int>& m, std::vector<int>& v) {
        for (int& x : v) x = m[x];
    };
    ap(K.obj, r.obj);
    ap(K.h, r.objH);
    ap(K.v, r.objV);
    ap(K.sq, r.objSq);
    ap(K.h, r.hObj);
    ap(K.v, r.vObj);
    ap(K.sq, r.sqObj);
    for (auto* v : {&r.hv, &r.vh, &r.hh, &r.hhInv, &r.vv, &r.vvInv}) ap(K.sq, *v);
    return r;
}

TensorCone swapCone(const TensorCone& c) {
    TensorCone r = emptyCone(c.B, c.A, c.C);
    const DoubleCategory &A = *c.A, &B = *c.B;  // r is (B, A)
    const int a0 = A.nObj(), ah = A.nH(), av = A.nV(), as = A.nSq();
    for (int Y = 0; Y < B.nObj(); ++Y) {
        for (int X = 0; X < a0; ++X) r.obj[Y * a0 + X] = c.ob(X, Y);
        for (int h = 0; h < ah; ++h) r.objH[Y * ah + h] = c.hy(h, Y);
        for (int v = 0; v < av; ++v) r.objV[Y * av + v] = c.vy(v, Y);
        for (int w = 0; w < as; ++w) r.objSq[Y * as + w] = c.sy(w, Y);
    }
    for (int X = 0; X < a0; ++X) {
        for (int p = 0; p < B.nH(); ++p) r.hObj[p * a0 + X] = c.xh(X, p);
        for (int q = 0; q < B.nV(); ++q) r.vObj[q * a0 + X] = c.xv(X, q);
        for (int s = 0; s < B.nSq(); ++s) r.sqObj[s * a0 + X] = c.xs(X, s);
    }
    for (int p = 0; p < B.nH(); ++p) {
        for (int v = 0; v < av; ++v) r.hv[p * av + v] = c.vp(v, p);
        for (int h = 0; h < ah; ++h) {
            r.hh[p * ah + h] = c.hpInv(h, p);
            r.hhInv[p * ah + h] = c.hp(h, p);
        }
    }
    for (int q = 0; q < B.nV(); ++q) {
        for (int h = 0; h < ah; ++h) r.vh[q * ah + h] = c.hq(h, q);
        for (int v = 0; v < av; ++v) {
            r.vv[q * av + v] = c.vqInv(v, q);
            r.vvInv[q * av + v] = c.vq(v, q);
        }
    }
    return r;
}

TensorCone coneFromFunctorUnitLeft(const DoubleFunctor& F, CatPtr one) {
    TensorCone c = emptyCone(one, F.dom, F.cod);
    const DoubleCategory &B = *F.dom, &C = *F.cod;
    c.obj = F.obj;
    c.objH = F.h;
    c.objV = F.v;
    c.objSq = F.sq;
    for (int Y = 0; Y < B.nObj(); ++Y) {
        c.hObj[Y] = C.hId(F.obj[Y]);
        c.vObj[Y] = C.vId(F.obj[Y]);
        c.sqObj[Y] = C.dblId(F.obj[Y]);
    }
    for (int q = 0; q < B.nV(); ++q) c.hv[q] = c.vv[q] = c.vvInv[q] = C.sqHId(F.v[q]);
    for (int p = 0; p < B.nH(); ++p) c.vh[p] = c.hh[p] = c.hhInv[p] = C.sqVId(F.h[p]);
    return c;
}

TensorCone coneFromFunctorUnitRight(const DoubleFunctor& F, CatPtr one) {
    TensorCone c = emptyCone(F.dom, one, F.cod);
    const DoubleCategory &A = *F.dom, &C = *F.cod;
    c.obj = F.obj;
    c.hObj = F.h;
    c.vObj = F.v;
    c.sqObj = F.sq;
    for (int X = 0; X < A.nObj(); ++X) {
        c.objH[X] = C.hId(F.obj[X]);
        c.objV[X] = C.vId(F.obj[X]);
        c.objSq[X] = C.dblId(F.obj[X]);
    }
    for (int h = 0; h < A.nH(); ++h) c.hv[h] = c.hh[h] = c.hhInv[h] = C.sqVId(F.h[h]);
    for (int v = 0; v < A.nV(); ++v) c.vh[v] = c.vv[v] = c.vvInv[v] = C.sqHId(F.v[v]);
    return c;
}

TensorCone cartesianCone(CatPtr Ap, CatPtr Bp, CatPtr P) {
    TensorCone c = emptyCone(Ap, Bp, P);
    const DoubleCategory &A = *Ap, &B = *Bp;
    const int b0 = B.nObj(), bh = B.nH(), bv = B.nV(), bs = B.nSq();
    for (int X = 0; X < A.nObj(); ++X) {
        for (int Y = 0; Y < b0; ++Y) c.obj[X * b0 + Y] = X * b0 + Y;
        for (int p = 0; p < bh; ++p) c.objH[X * bh + p] = A.hId(X) * bh + p;
        for (int q = 0; q < bv; ++q) c.objV[X * bv + q] = A.vId(X) * bv + q;
        for (int s = 0; s < bs; ++s) c.objSq[X * bs + s] = A.dblId(X) * bs + s;
    }
    for (int Y = 0; Y < b0; ++Y) {
        for (int h = 0; h < A.nH(); ++h) c.hObj[h * b0 + Y] = h * bh + B.hId(Y);
        for (int v = 0; v < A.nV(); ++v) c.vObj[v * b0 + Y] = v * bv + B.vId(Y);
        for (int w = 0; w < A.nSq(); ++w) c.sqObj[w * b0 + Y] = w * bs + B.dblId(Y);
    }
    for (int h = 0; h < A.nH(); ++h) {
        for (int q = 0; q < bv; ++q) c.hv[h * bv + q] = A.sqVId(h) * bs + B.sqHId(q);
        for (int p = 0; p < bh; ++p) c.hh[h * bh + p] = c.hhInv[h * bh + p] = A.sqVId(h) * bs + B.sqVId(p);
    }
    for (int v = 0; v < A.nV(); ++v) {
        for (int p = 0; p < bh; ++p) c.vh[v * bh + p] = A.sqHId(v) * bs + B.sqVId(p);
        for (int q = 0; q < bv; ++q) c.vv[v * bv + q] = c.vvInv[v * bv + q] = A.sqHId(v) * bs + B.sqHId(q);
    }
    return c;
}

}  // namespace gd

#pragma once

#include <string>
#include <vector>

#include "graydbl/hom.hpp"

namespace gd {

// A functor out of A (x) B presented by its values on pairs of cells.
// Written a*b below.  Index conventions: a pair (cell of A, cell of B) with
// the A-cell of kind k and the B-cell of kind l lives at aIndex * |B_l| +
// bIndex.  The interchangers are h*p (hcells, vertically invertible, top
// (X*p).(h*Y'), bottom (h*Y).(X'*p)) and v*q (vcells, horizontally
// invertible, left (v*Y).(X'*q), right (X*q).(v*Y')).
struct TensorCone {
    CatPtr A, B, C;
    std::vector<int> obj;                // X*Y
    std::vector<int> objH, objV, objSq;  // X*p, X*q, X*sigma
    std::vector<int> hObj, vObj, sqObj;  // h*Y, v*Y, omega*Y
    std::vector<int> hv;                 // h*q
    std::vector<int> vh;                 // v*p
    std::vector<int> hh, hhInv;          // h*p and its vertical inverse
    std::vector<int> vv, vvInv;          // v*q and its horizontal inverse

    int nb0() const { return B->nObj(); }
    int ob(int X, int Y) const { return obj[X * B->nObj() + Y]; }
    int xh(int X, int p) const { return objH[X * B->nH() + p]; }
    int xv(int X, int q) const { return objV[X * B->nV() + q]; }
    int xs(int X, int s) const { return objSq[X * B->nSq() + s]; }
    int hy(int h, int Y) const { return hObj[h * B->nObj() + Y]; }
    int vy(int v, int Y) const { return vObj[v * B->nObj() + Y]; }
    int sy(int w, int Y) const { return sqObj[w * B->nObj() + Y]; }
    int hq(int h, int q) const { return hv[h * B->nV() + q]; }
    int vp(int v, int p) const { return vh[v * B->nH() + p]; }
    int hp(int h, int p) const { return hh[h * B->nH() + p]; }
    int hpInv(int h, int p) const { return hhInv[h * B->nH() + p]; }
    int vq(int v, int q) const { return vv[v * B->nV() + q]; }
    int vqInv(int v, int q) const { return vvInv[v * B->nV() + q]; }

    bool operator==(const TensorCone& o) const {
        return A == o.A && B == o.B && C == o.C && obj == o.obj && objH == o.objH && objV == o.objV &&
               objSq == o.objSq && hObj == o.hObj && vObj == o.vObj && sqObj == o.sqObj && hv == o.hv &&
               vh == o.vh && hh == o.hh && hhInv == o.hhInv && vv == o.vv && vvInv == o.vvInv;
    }
};

// Axiom names used in reports.
inline constexpr const char* kConeFunctors = "(i) double functors";
inline constexpr const char* kConeIdentities = "(v) identities";
inline constexpr const char* kConeComposition = "(vi) composition";
inline constexpr const char* kConeNaturality = "(vii) naturality";
inline constexpr const char* kConeInvertibility = "(invertibility)";

// Frame problems are structural; the rest are named by condition.
Report validateCone(const TensorCone& c);

// A -> [[B,C]], with BC the hom whose cells receive the images.  Throws
// StructuralError if some image is not a cell of BC (the cone is invalid).
DoubleFunctor curryCone(const TensorCone& c, const HomDouble& BC);
// Inverse of curryCone. F.cod must be BC.cat.
TensorCone uncurryFunctor(const DoubleFunctor& F, const HomDouble& BC);

// All valid cones, ordered lexicographically by the functors X*- (X in
// order), then -*Y, then the mixed squares and interchangers.
std::vector<TensorCone> enumerateCones(CatPtr A, CatPtr B, CatPtr C, Budget& budget);
std::size_t countCones(CatPtr A, CatPtr B, CatPtr C, Budget& budget);

// (F a)*(G b) for F : A' -> A, G : B' -> B.
TensorCone precomposeCone(const TensorCone& c, const DoubleFunctor& F, const DoubleFunctor& G);
// K . c for K : C -> C'.
TensorCone postcomposeCone(const DoubleFunctor& K, const TensorCone& c);
// The cone (B,A;C) read off a cone (A,B;C): b*a := a*b, with the
// interchangers replaced by their inverses.
TensorCone swapCone(const TensorCone& c);

// Cone with the cells of B in each X*- where A is the terminal double
// category, and the converse for B terminal.
TensorCone coneFromFunctorUnitLeft(const DoubleFunctor& F, CatPtr one);
TensorCone coneFromFunctorUnitRight(const DoubleFunctor& F, CatPtr one);

// The cone (A, B; A x B) whose values are pairs and whose interchangers are
// identities.
TensorCone cartesianCone(CatPtr A, CatPtr B, CatPtr product);

std::string pairName(const TensorCone& c, CellKind ka, int a, CellKind kb, int b);

}  // namespace gd

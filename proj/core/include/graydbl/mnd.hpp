#pragma once

#include <map>
#include <memory>
#include <tuple>
#include <vector>

#include "graydbl/canonical.hpp"

namespace gd {

// A monad in the horizontal 2-category: x : X -> X, mu : x;x => x and
// eta : 1 => x, both framed by identity vertical 1-cells.
struct Monad {
    int obj = -1, x = -1, mu = -1, eta = -1;
    bool operator==(const Monad&) const = default;
};

// (f, phi) : M -> N with phi : f;y => x;f framed by identities.
struct MonadHCell {
    int src = -1, tgt = -1, f = -1, phi = -1;
};

// (g, gamma) : M -> P with gamma : x => z framed by g on both sides.
struct MonadVCell {
    int src = -1, tgt = -1, g = -1, gamma = -1;
};

// Square of Mnd(D): Mnd frame plus the underlying square of D.
struct MonadSquare {
    int top = -1, bottom = -1, left = -1, right = -1, sq = -1;
};

class MndDouble {
public:
    static std::shared_ptr<const MndDouble> build(CatPtr D, Budget& budget);

    CatPtr base;
    std::vector<Monad> monads;
    std::vector<MonadHCell> hcells;
    std::vector<MonadVCell> vcells;
    std::vector<MonadSquare> squares;
    CatPtr cat;

    int findMonad(const Monad& m) const;
    int findH(int src, int tgt, int f, int phi) const;
    int findV(int src, int tgt, int g, int gamma) const;
    int findSquare(int top, int bottom, int left, int right, int sq) const;

private:
    std::map<std::tuple<int, int, int, int>, int> mIndex_, hIndex_, vIndex_;
    std::map<std::tuple<int, int, int, int, int>, int> sIndex_;
};

using MndPtr = std::shared_ptr<const MndDouble>;

// Memoizes Mnd(D) by the identity of D.
class MndCache {
public:
    explicit MndCache(HomCache& c) : c_(&c) {}
    MndCache(const MndCache&) = delete;
    MndCache& operator=(const MndCache&) = delete;

    MndPtr get(const CatPtr& D);
    HomCache& homs() { return *c_; }

private:
    HomCache* c_;
    std::map<const void*, MndPtr> mnds_;
};

// Componentwise Mnd(F) : Mnd(dom F) -> Mnd(cod F).
DoubleFunctor mndFunctor(MndCache& m, const DoubleFunctor& F);

// chi : Mnd[[A,B]] -> [[Mnd A, Mnd B]]
DoubleFunctor chiMnd(MndCache& m, const CatPtr& A, const CatPtr& B);
// 1 -> Mnd(1)
DoubleFunctor mndUnitIso(MndCache& m);

}  // namespace gd

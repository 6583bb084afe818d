#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "graydbl/functor.hpp"

namespace gd {

// x : F -> G.  obj[A] = x_A, v[f] = x_f, h[h] = x^h, hInv[h] = vertical
// inverse of x^h.  src/tgt index functors inside an owning HomDouble.
struct HPseudo {
    int src = -1, tgt = -1;
    std::vector<int> obj, v, h, hInv;
    bool operator==(const HPseudo&) const = default;
};

// y : F -> H.  obj[A] = y_A, h[h] = y_h, v[f] = y^f, vInv[f] = horizontal
// inverse of y^f.
struct VPseudo {
    int src = -1, tgt = -1;
    std::vector<int> obj, h, v, vInv;
    bool operator==(const VPseudo&) const = default;
};

// Frame indices refer to the owning HomDouble: top/bottom are HPseudo
// indices, left/right VPseudo indices.  comp[A] = Theta_A.
struct Modification {
    int top = -1, bottom = -1, left = -1, right = -1;
    std::vector<int> comp;
    bool operator==(const Modification&) const = default;
};

struct ModFrame {
    const DoubleFunctor *F, *G, *H, *K;
    const HPseudo *x, *z;  // x: F -> G, z: H -> K
    const VPseudo *y, *v;  // y: F -> H, v: G -> K
};

Report validateHPseudo(const DoubleFunctor& F, const DoubleFunctor& G, const HPseudo& x);
Report validateVPseudo(const DoubleFunctor& F, const DoubleFunctor& H, const VPseudo& y);
Report validateModification(const ModFrame& fr, const std::vector<int>& comp);

HPseudo identityHPseudo(const DoubleFunctor& F);
VPseudo identityVPseudo(const DoubleFunctor& F);
// Composite "x then z" of horizontal pseudotransformations.
HPseudo composeHPseudo(const DoubleCategory& A, const DoubleCategory& B, const HPseudo& x, const HPseudo& z);
// Composite "y then w" of vertical pseudotransformations.
VPseudo composeVPseudo(const DoubleCategory& A, const DoubleCategory& B, const VPseudo& y, const VPseudo& w);
std::vector<int> composeModH(const DoubleCategory& B, const std::vector<int>& l, const std::vector<int>& r);
std::vector<int> composeModV(const DoubleCategory& B, const std::vector<int>& t, const std::vector<int>& b);

// strict = true keeps only transformations whose x^h (resp. y^f) are
// identity squares.
std::vector<HPseudo> enumerateHPseudo(const DoubleFunctor& F, const DoubleFunctor& G, Budget& budget,
                                      bool strict = false);
std::vector<VPseudo> enumerateVPseudo(const DoubleFunctor& F, const DoubleFunctor& H, Budget& budget,
                                      bool strict = false);
std::vector<std::vector<int>> enumerateModifications(const ModFrame& fr, Budget& budget);

struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept {
        std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
        for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// The double category [[A,B]] (or its strict part <<A,B>>) together with
// the meaning of each of its cells.  cat's cell indices coincide with the
// indices of functors / hps / vps / mods.
class HomDouble {
public:
    static std::shared_ptr<const HomDouble> build(CatPtr A, CatPtr B, Budget& budget, bool strict = false);
    static std::shared_ptr<const HomDouble> build(CatPtr A, CatPtr B, bool strict = false);

    CatPtr A, B;
    bool strict = false;
    std::vector<DoubleFunctor> functors;
    std::vector<HPseudo> hps;
    std::vector<VPseudo> vps;
    std::vector<Modification> mods;
    std::shared_ptr<const DoubleCategory> cat;

    int findFunctor(const DoubleFunctor& f) const;
    int findFunctorMaps(const std::vector<int>& obj, const std::vector<int>& h, const std::vector<int>& v,
                        const std::vector<int>& sq) const;
    int findH(const HPseudo& x) const;
    int findV(const VPseudo& y) const;
    int findMod(const Modification& m) const;

    ModFrame frameOf(int top, int bottom, int left, int right) const;

private:
    std::unordered_map<std::vector<int>, int, VecHash> fIndex_, hIndex_, vIndex_, mIndex_;
    void index();
};

using HomPtr = std::shared_ptr<const HomDouble>;

// Inclusion <<A,B>> -> [[A,B]].
DoubleFunctor inclusionStrictHom(const HomDouble& strictHom, const HomDouble& hom);

// [[F,G]] : [[A,B]] -> [[A',B']] for F : A' -> A and G : B -> B'.
// Throws StructuralError if an image is not a cell of the target.
DoubleFunctor homMap(const DoubleFunctor& F, const DoubleFunctor& G, const HomDouble& src, const HomDouble& tgt);

// Canonical isomorphisms [[1,X]] -> X and X -> [[1,X]].
DoubleFunctor evalAtPoint(const HomDouble& oneX);
DoubleFunctor pointInclusion(const HomDouble& oneX);

}  // namespace gd

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graydbl/mnd.hpp"
#include "graydbl/twocat.hpp"

namespace gd {

// Objects, horizontal 1-cells, and the squares of D whose vertical sides
// are identities (in square order).
TwoCategory horizontal2Cat(const DoubleCategory& D);
// horizontal2Cat of the transpose: vertical 1-cells, and squares with
// identity top and bottom read as 2-cells left => right.
TwoCategory vertical2Cat(const DoubleCategory& D);

// The quintet double category: both kinds of 1-cell are the 1-cells of T
// and a square (t, l, b, r) is a 2-cell t;r => l;b.
DoubleCategory quintetSqr(const TwoCategory& T);

struct Horizontal2 {
    CatPtr D;
    TwoCatPtr T;
    std::vector<int> square;  // per 2-cell
    std::vector<int> cell;    // per square of D, -1 unless identity-framed
};

struct Quintets {
    TwoCatPtr T;
    CatPtr D;
    std::vector<int> alpha;  // per square
    std::vector<int> pos;    // per 2-cell a: position of a among 2-cells with its frame
    // Throws StructuralError if the frame does not match a.
    int square(int t, int l, int b, int r, int a) const;
};

// Memoized H, V, Sqr and Mnd, so that each is one pointer per argument.
class ChiEnv {
public:
    ChiEnv(HomCache& d, TwoHomCache& t) : dbl_(&d), two_(&t), mnd_(d) {}
    ChiEnv(const ChiEnv&) = delete;
    ChiEnv& operator=(const ChiEnv&) = delete;

    const Horizontal2& H(const CatPtr& D);
    const Horizontal2& V(const CatPtr& D);
    const Quintets& Sqr(const TwoCatPtr& T);
    HomCache& dbl() { return *dbl_; }
    TwoHomCache& two() { return *two_; }
    MndCache& mnd() { return mnd_; }

private:
    HomCache* dbl_;
    TwoHomCache* two_;
    MndCache mnd_;
    std::map<const void*, std::shared_ptr<Horizontal2>> h_, v_;
    std::map<const void*, std::shared_ptr<Quintets>> sqr_;
    std::map<const void*, CatPtr> keep_;
};

TwoFunctor hFunctor(ChiEnv& e, const DoubleFunctor& F);
TwoFunctor vFunctor(ChiEnv& e, const DoubleFunctor& F);
DoubleFunctor sqrFunctor(ChiEnv& e, const TwoFunctor& F);

// H[[A,B]] -> [HA,HB] and V[[A,B]] -> [VA,VB]
TwoFunctor chiH(ChiEnv& e, const CatPtr& A, const CatPtr& B);
TwoFunctor chiV(ChiEnv& e, const CatPtr& A, const CatPtr& B);
// Sqr[A,B] -> [[Sqr A, Sqr B]]
DoubleFunctor chiSqr(ChiEnv& e, const TwoCatPtr& A, const TwoCatPtr& B);

enum class ChiKind { H, V, Sqr, Mnd };
std::string chiName(ChiKind k);
// Throws std::invalid_argument.
ChiKind parseChiKind(const std::string& s);

// [chi,1] . l . chi_{A,B} = [1,chi_{C,B}] . chi . X(l^C) on X[[A,B]], with
// [chi,1] . l computed along chi.  H, V and Mnd.
CheckResult checkChiAssoc(ChiEnv& e, ChiKind k, const CatPtr& A, const CatPtr& B, const CatPtr& C);
CheckResult checkChiAssoc(ChiEnv& e, const TwoCatPtr& A, const TwoCatPtr& B, const TwoCatPtr& C);
// chi_{A,A} sends the identity to the identity, and
// [X0,1] . chi_{1,A} . X(A -> [[1,A]]) is the canonical XA -> [1,XA].
CheckResult checkChiUnit(ChiEnv& e, ChiKind k, const CatPtr& A);
CheckResult checkChiUnit(ChiEnv& e, const TwoCatPtr& A);

// [1,XG] . chi_{A,B} = chi_{A,B'} . X[[1,G]] for G : B -> B', and
// [XF,1] . chi_{A,B} = chi_{A',B} . X[[F,1]] for F : A' -> A.
CheckResult checkChiNaturalityB(ChiEnv& e, ChiKind k, const CatPtr& A, const DoubleFunctor& G);
CheckResult checkChiNaturalityA(ChiEnv& e, ChiKind k, const DoubleFunctor& F, const CatPtr& B);
CheckResult checkChiNaturalityB(ChiEnv& e, const TwoCatPtr& A, const TwoFunctor& G);
CheckResult checkChiNaturalityA(ChiEnv& e, const TwoFunctor& F, const TwoCatPtr& B);

}  // namespace gd

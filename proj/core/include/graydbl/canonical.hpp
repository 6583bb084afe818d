#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "graydbl/hom.hpp"

namespace gd {

// Memoizes hom double categories by the identity of their arguments, so
// that nested homs such as [[[[D,A]],[[D,B]]]] share one CatPtr and
// functors between them compose.
class HomCache {
public:
    HomCache() : budget_(&own_) {}
    explicit HomCache(Budget& b) : budget_(&b) {}
    HomCache(const HomCache&) = delete;
    HomCache& operator=(const HomCache&) = delete;

    HomPtr get(const CatPtr& A, const CatPtr& B, bool strict = false);
    CatPtr one();
    Budget& budget() { return *budget_; }

    // [[F,G]] with source and target homs taken from the cache.
    DoubleFunctor map(const DoubleFunctor& F, const DoubleFunctor& G, bool strict = false);

private:
    Budget own_;
    Budget* budget_;
    CatPtr one_;
    std::map<std::tuple<const void*, const void*, bool>, HomPtr> homs_;
};

struct CheckResult {
    bool ok = true;
    std::string witness;  // first cell of the domain on which the two sides differ
    std::string detail;
    explicit operator bool() const { return ok; }
};

// Pointwise comparison of two parallel functors.
CheckResult compareFunctors(const DoubleFunctor& f, const DoubleFunctor& g);

// Optional tampering with one canonical functor a check builds, for fault
// injection.
using Perturb = std::function<void(DoubleFunctor&)>;

// l^D_{A,B} : [[A,B]] -> [[[[D,A]],[[D,B]]]]
DoubleFunctor lFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B);
// The same assignment between strict homs <<A,B>> -> <<<<C,A>>,<<C,B>>>>.
DoubleFunctor lCartesianFunctor(HomCache& c, const CatPtr& C, const CatPtr& A, const CatPtr& B);
// [[E,1]] . l^D_{A,B} : [[A,B]] -> [[A0,[[D,B]]]] for E : A0 -> [[D,A]],
// computed without building [[[[D,A]],[[D,B]]]].
DoubleFunctor lAlong(HomCache& c, const CatPtr& D, const DoubleFunctor& E, const CatPtr& A, const CatPtr& B);
// r^D_{A,B} : [[A,B]] -> [[[[B,D]],[[A,D]]]]
DoubleFunctor rFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B);
// [[E,1]] . r^D_{A,B} : [[A,B]] -> [[B0,[[A,D]]]] for E : B0 -> [[B,D]],
// computed without building [[[[B,D]],[[A,D]]]].
DoubleFunctor rAlong(HomCache& c, const CatPtr& D, const DoubleFunctor& E, const CatPtr& A, const CatPtr& B);
// r^D_{1,X} transported along [[1,X]] = X : X -> [[[[X,D]],D]]
DoubleFunctor rPointFunctor(HomCache& c, const CatPtr& D, const CatPtr& X);
// f^D_{A,B} : [[A,[[B,D]]]] -> [[B,[[A,D]]]]
DoubleFunctor fFunctor(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B);
// 1_A : 1 -> [[A,A]] picking the identity functor.
DoubleFunctor unitPoint(HomCache& c, const CatPtr& A);

CheckResult checkLCommutation(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& C, const CatPtr& D,
                              const Perturb& p = {});
CheckResult checkLIdentity(HomCache& c, const CatPtr& A, const CatPtr& B, const Perturb& p = {});
CheckResult checkRSquare(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& D, const Perturb& p = {});
CheckResult checkRIdentity(HomCache& c, const CatPtr& A, const CatPtr& D, const Perturb& p = {});
CheckResult checkFInvolution(HomCache& c, const CatPtr& D, const CatPtr& A, const CatPtr& B, const Perturb& p = {});
// Outer square and the f-triangle.
CheckResult checkLRPentagon(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& D, const Perturb& p = {});
CheckResult checkLRSquare(HomCache& c, const CatPtr& A, const CatPtr& B, const CatPtr& C, const Perturb& p = {});
// [[1,incl]] . incl . l_x = [[incl,1]] . l . incl
CheckResult checkLCartesianSquare(HomCache& c, const CatPtr& C, const CatPtr& A, const CatPtr& B,
                                  const Perturb& p = {});

// Naturality of l and r in A (F : A' -> A), in B (G : B -> B'), and
// extranaturality in D (K : D' -> D for l, K : D -> D' for r).
CheckResult checkLNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F);
CheckResult checkLNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G);
CheckResult checkLExtranaturality(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K);
CheckResult checkRNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F);
CheckResult checkRNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G);
CheckResult checkRExtranaturality(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K);
// f^D_{A,B} natural in A (F : A' -> A), B (G : B' -> B) and D (K : D -> D').
CheckResult checkFNaturalityA(HomCache& c, const CatPtr& D, const CatPtr& B, const DoubleFunctor& F);
CheckResult checkFNaturalityB(HomCache& c, const CatPtr& D, const CatPtr& A, const DoubleFunctor& G);
CheckResult checkFNaturalityD(HomCache& c, const CatPtr& A, const CatPtr& B, const DoubleFunctor& K);

}  // namespace gd

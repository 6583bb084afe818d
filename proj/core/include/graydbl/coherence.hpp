#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "graydbl/canonical.hpp"
#include "graydbl/presentation.hpp"

namespace gd {

// Thrown when a tensor needed by a construction could not be realized.
class Unrealized : public std::runtime_error {
public:
    explicit Unrealized(const std::string& what) : std::runtime_error(what) {}
};

// Realized tensors memoized by the identity of their factors, so that
// A (x) B is one CatPtr wherever it occurs.  Each pair is realized at the
// smallest depth up to maxDepth that closes.
class TensorCache {
public:
    explicit TensorCache(Budget& b, int maxDepth = 5) : budget_(&b), maxDepth_(maxDepth) {}
    TensorCache(const TensorCache&) = delete;
    TensorCache& operator=(const TensorCache&) = delete;

    // Throws Unrealized.
    const RealizedTensor& get(const CatPtr& A, const CatPtr& B);
    bool realizable(const CatPtr& A, const CatPtr& B);
    int maxDepth() const { return maxDepth_; }
    RealizeOptions options;

private:
    Budget* budget_;
    int maxDepth_;
    std::map<std::pair<const void*, const void*>, std::shared_ptr<RealizedTensor>> done_;
    std::map<std::pair<const void*, const void*>, std::string> failed_;
    std::map<std::pair<const void*, const void*>, std::pair<CatPtr, CatPtr>> keep_;
};

// eta : A -> [[B, A (x) B]]
DoubleFunctor unitEta(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B);
// The cone ([[B,A]], B; A) of evaluation.
TensorCone counitEpsilon(HomCache& c, const CatPtr& A, const CatPtr& B);
// eps : [[B,A]] (x) B -> A
DoubleFunctor counitFunctor(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B);

// F (x) G : A' (x) B' -> A (x) B
DoubleFunctor tensorFunctors(TensorCache& t, const DoubleFunctor& F, const DoubleFunctor& G);

// a^C_{A,B} = [[eta,1]] . l^B : [[A (x) B, C]] -> [[A, [[B,C]]]]
DoubleFunctor assocHomMap(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C);

// alpha : (A (x) B) (x) C -> A (x) (B (x) C), the functor corresponding to
// a^D_{B,C} . eta under the two currying bijections, D = A (x) (B (x) C).
DoubleFunctor associator(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C);

struct Unitors {
    DoubleFunctor rho;     // A (x) 1 -> A
    DoubleFunctor lambda;  // 1 (x) A -> A
    TensorCone rhoCone, lambdaCone;
};
// rho = eps^1 . (A (x) 1 = [[1,A]] (x) 1), lambda = eps^A . (1_A (x) 1).
// Composites eps . (F (x) G) are evaluated as the functor induced by the
// precomposed evaluation cone.
Unitors unitors(HomCache& c, TensorCache& t, const CatPtr& A);

// phi : A (x) B -> B (x) A, eps^B . ([[eta^A,1]] (x) 1) . (r_{1,A} (x) 1).
DoubleFunctor symmetry(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B);
TensorCone symmetryCone(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B);

struct CoherenceResult {
    enum Status { Pass, Fail, Skipped } status = Pass;
    std::string law;
    std::string witness;  // first differing cell, on failure
    std::string reason;   // unrealized tensor or resource, on skip
    bool passed() const { return status == Pass; }
};
std::string statusName(CoherenceResult::Status s);

// a^K . [[eps^C,1]] = l^C : [[P,K]] -> [[[[C,P]],[[C,K]]]], together with
// [[1,eps^C]] . eta^C = 1 on [[C,P]].
CoherenceResult checkEpsALTriangle(HomCache& c, TensorCache& t, const CatPtr& C, const CatPtr& P, const CatPtr& K,
                                   const Perturb& p = {});
// a^K_{1,B} . [[lambda,1]] is the canonical [[B,K]] = [[1,[[B,K]]]], also
// after precomposing with each functor A -> [[B,K]].
CoherenceResult checkTriangle(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& K,
                              const Perturb& p = {});
// [[1,a^K_{B,C}]] . a^K_{A,B(x)C} = a^{[[C,K]]}_{A,B} . a^K_{A(x)B,C} . [[alpha,1]]
CoherenceResult checkPentagon(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C,
                              const CatPtr& K, const Perturb& p = {});
// f^K . a^K_{A,C} . [[phi_{A,C},1]] = a^K_{C,A}, also after precomposing
// with each functor B -> [[C (x) A, K]].
CoherenceResult checkHexagon(HomCache& c, TensorCache& t, const CatPtr& A, const CatPtr& B, const CatPtr& C,
                             const CatPtr& K, const Perturb& p = {});

}  // namespace gd

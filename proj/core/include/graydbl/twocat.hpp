#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "graydbl/canonical.hpp"

namespace gd {

// A finite 2-category.  Compositions are diagrammatic: comp1(f, g) is "f
// then g", vcomp(a, b) is "a then b" for a : f => g, b : g => h, and
// hcomp(a, b) : f;g => f';g' for a : f => f', b : g => g'.
class TwoCategory {
public:
    std::string name;

    std::vector<std::string> objName, oneName, twoName;
    std::vector<int> src, tgt;  // 1-cells
    std::vector<int> dom, cod;  // 2-cells
    std::vector<int> idOf;      // per object
    std::vector<int> id2Of;     // per 1-cell
    PairTable c1, v2, h2;

    int nObj() const { return static_cast<int>(objName.size()); }
    int n1() const { return static_cast<int>(src.size()); }
    int n2() const { return static_cast<int>(dom.size()); }

    int addObject(std::string n);
    int add1(std::string n, int s, int t);
    int add2(std::string n, int f, int g);
    // Identity 1- and 2-cells where missing, and every composition with an
    // identity.
    void addIdentitiesAndUnitCompositions();

    int id1(int x) const { return idOf[x]; }
    int id2(int f) const { return id2Of[f]; }
    int comp1(int f, int g) const { return c1.get(f, g); }
    int vcomp(int a, int b) const { return v2.get(a, b); }
    int hcomp(int a, int b) const { return h2.get(a, b); }
    bool isId1(int f) const { return src[f] == tgt[f] && idOf[src[f]] == f; }

    void finalize();
    const std::vector<int>& oneBetween(int x, int y) const;
    const std::vector<int>& twoBetween(int f, int g) const;
    // Vertical inverse or -1.
    int inverse(int a) const { return inv_[a]; }

    // dim 0, 1 or 2.
    std::string cellName(int dim, int i) const;

private:
    std::unordered_map<std::uint64_t, std::vector<int>> oneBetween_, twoBetween_;
    std::vector<int> inv_;
    static const std::vector<int> empty_;
};

using TwoCatPtr = std::shared_ptr<const TwoCategory>;

Report validate2Cat(const TwoCategory& T);

TwoCategory terminal2();
// 0 -> 1
TwoCategory arrow2();
// 0 -> 1 -> 2 with the composite
TwoCategory chain2();
// f, g : 0 -> 1 and a : f => g
TwoCategory walking2Cell();
// as walking2Cell with a invertible
TwoCategory invertible2Cell();
// One object, 1-cells 1 and e with e;e = e, and a single non-identity
// 2-cell u : 1 => e.  (e, 1_e, u) is a monad.
TwoCategory idempotent2();

struct TwoFunctor {
    TwoCatPtr dom, cod;
    std::vector<int> obj, one, two;
    bool sameMaps(const TwoFunctor& o) const { return obj == o.obj && one == o.one && two == o.two; }
};

Report validate2Functor(const TwoFunctor& F);
TwoFunctor identity2Functor(TwoCatPtr T);
TwoFunctor compose2Functors(const TwoFunctor& g, const TwoFunctor& f);  // g after f
// Name of the first differing cell, empty if equal.
std::string firstDifference2(const TwoFunctor& f, const TwoFunctor& g);
CheckResult compare2Functors(const TwoFunctor& f, const TwoFunctor& g);

// The double category with the 1-cells of T horizontal, only identity
// vertical 1-cells, and the 2-cells of T as squares.
DoubleCategory verticallyDiscrete(const TwoCategory& T);
std::vector<TwoFunctor> enumerate2Functors(TwoCatPtr A, TwoCatPtr B, Budget& budget);

// p : F => G.  comp[X] : FX -> GX, nat[f] : Ff;p_Y => p_X;Gf with inverse
// natInv[f].  src/tgt index functors inside an owning TwoHom.
struct Pseudonat {
    int src = -1, tgt = -1;
    std::vector<int> comp, nat, natInv;
    bool operator==(const Pseudonat&) const = default;
};

// w : p => q between pseudonaturals F => G.  comp[X] : p_X => q_X.
struct TwoModification {
    int src = -1, tgt = -1;
    std::vector<int> comp;
    bool operator==(const TwoModification&) const = default;
};

Report validatePseudonat(const TwoFunctor& F, const TwoFunctor& G, const Pseudonat& p);
Report validate2Modification(const TwoFunctor& F, const TwoFunctor& G, const Pseudonat& p, const Pseudonat& q,
                             const std::vector<int>& comp);

// [A,B]: 2-functors, pseudonatural transformations and modifications.
class TwoHom {
public:
    static std::shared_ptr<const TwoHom> build(TwoCatPtr A, TwoCatPtr B, Budget& budget);

    TwoCatPtr A, B;
    std::vector<TwoFunctor> functors;
    std::vector<Pseudonat> pseudonats;
    std::vector<TwoModification> mods;
    std::shared_ptr<const TwoCategory> cat;

    int findFunctor(const TwoFunctor& F) const;
    int findPseudonat(const Pseudonat& p) const;
    int findMod(const TwoModification& m) const;

private:
    std::map<std::vector<int>, int> fIndex_, pIndex_, mIndex_;
    void index();
};

using TwoHomPtr = std::shared_ptr<const TwoHom>;

// Memoizes [A,B] by the identity of A and B.
class TwoHomCache {
public:
    explicit TwoHomCache(Budget& b) : budget_(&b) {}
    TwoHomCache(const TwoHomCache&) = delete;
    TwoHomCache& operator=(const TwoHomCache&) = delete;

    TwoHomPtr get(const TwoCatPtr& A, const TwoCatPtr& B);
    TwoCatPtr one();
    Budget& budget() { return *budget_; }
    // [K,G] : [A,B] -> [A',B'] for K : A' -> A, G : B -> B'.
    TwoFunctor map(const TwoFunctor& K, const TwoFunctor& G);

private:
    Budget* budget_;
    TwoCatPtr one_;
    std::map<std::pair<const void*, const void*>, TwoHomPtr> homs_;
};

// l^C_{A,B} : [A,B] -> [[C,A],[C,B]]
TwoFunctor l2Functor(TwoHomCache& c, const TwoCatPtr& C, const TwoCatPtr& A, const TwoCatPtr& B);
// [E,1] . l^C_{A,B} : [A,B] -> [X,[C,B]] for E : X -> [C,A], without
// building [[C,A],[C,B]].
TwoFunctor l2Along(TwoHomCache& c, const TwoCatPtr& C, const TwoFunctor& E, const TwoCatPtr& A,
                   const TwoCatPtr& B);

// X -> [1,X], sending x to the constant 2-functor at x.
TwoFunctor pointInclusion2(const TwoHom& oneX);

nlohmann::json twoCatToJson(const TwoCategory& T);
// Throws StructuralError on malformed input.
TwoCategory twoCatFromJson(const nlohmann::json& j);

}  // namespace gd

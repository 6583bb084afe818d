#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace gd {

enum class CellKind { Object, HCell, VCell, Square };

const char* kindName(CellKind k);

struct CellRef {
    CellKind kind;
    int index;
    bool operator==(const CellRef&) const = default;
};

struct Violation {
    std::string axiom;
    std::string witness;
};

// Result of any validation. Structural problems (bad indices, missing
// components, wrong frames) are kept apart from axiom failures.
struct Report {
    std::vector<std::string> structural;
    std::vector<Violation> violations;

    bool ok() const { return structural.empty() && violations.empty(); }
    bool hasAxiom(const std::string& name) const;
    void fail(std::string axiom, std::string witness);
    void structuralError(std::string msg);
    void merge(const Report& other, const std::string& prefix = {});
    std::string summary(std::size_t maxItems = 8) const;
};

class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Keyed table for partial binary operations on cell indices.
class PairTable {
public:
    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
               static_cast<std::uint32_t>(b);
    }
    int get(int a, int b) const {
        auto it = map_.find(key(a, b));
        return it == map_.end() ? -1 : it->second;
    }
    void set(int a, int b, int r) { map_[key(a, b)] = r; }
    bool erase(int a, int b) { return map_.erase(key(a, b)) > 0; }
    std::size_t size() const { return map_.size(); }
    template <class F>
    void forEach(F&& f) const {
        for (auto& [k, v] : map_)
            f(static_cast<int>(k >> 32), static_cast<int>(k & 0xffffffffu), v);
    }
    std::vector<std::array<int, 3>> sortedEntries() const;

private:
    std::unordered_map<std::uint64_t, int> map_;
};

// A finite double category stored as explicit tables. Compositions are
// written in diagrammatic order: hComp1(h, k) is "h then k", hComp2(a, b)
// places a to the left of b, vComp2(a, b) places a above b.
class DoubleCategory {
public:
    std::string name;

    std::vector<std::string> objName, hName, vName, sqName;
    std::vector<int> hSrc, hTgt, vSrc, vTgt;
    std::vector<int> top, bottom, left, right;
    std::vector<int> hIdOf, vIdOf;  // per object
    std::vector<int> sqHIdOf;       // per vcell: horizontal identity square
    std::vector<int> sqVIdOf;       // per hcell: vertical identity square
    PairTable hc1, vc1, hc2, vc2;

    int nObj() const { return static_cast<int>(objName.size()); }
    int nH() const { return static_cast<int>(hSrc.size()); }
    int nV() const { return static_cast<int>(vSrc.size()); }
    int nSq() const { return static_cast<int>(top.size()); }
    int count(CellKind k) const;

    int addObject(std::string n);
    int addH(std::string n, int s, int t);
    int addV(std::string n, int s, int t);
    int addSquare(std::string n, int t, int b, int l, int r);

    // Adds identity 1-cells and identity squares for all current objects and
    // 1-cells, and fills every composition that involves an identity.
    void addIdentitiesAndUnitCompositions();

    int hId(int a) const { return hIdOf[a]; }
    int vId(int a) const { return vIdOf[a]; }
    int sqHId(int v) const { return sqHIdOf[v]; }
    int sqVId(int h) const { return sqVIdOf[h]; }
    int dblId(int a) const { return sqHIdOf[vIdOf[a]]; }

    int hComp1(int h, int k) const { return hc1.get(h, k); }
    int vComp1(int f, int g) const { return vc1.get(f, g); }
    int hComp2(int a, int b) const { return hc2.get(a, b); }
    int vComp2(int a, int b) const { return vc2.get(a, b); }

    bool isHId(int h) const { return hSrc[h] == hTgt[h] && hIdOf[hSrc[h]] == h; }
    bool isVId(int v) const { return vSrc[v] == vTgt[v] && vIdOf[vSrc[v]] == v; }

    // Boundary indices, rebuilt by finalize().
    void finalize();
    bool finalized() const { return finalized_; }
    const std::vector<int>& hFrom(int a) const { return hFrom_[a]; }
    const std::vector<int>& vFrom(int a) const { return vFrom_[a]; }
    const std::vector<int>& hBetween(int a, int b) const;
    const std::vector<int>& vBetween(int a, int b) const;
    const std::vector<int>& squaresWithFrame(int t, int b, int l, int r) const;
    const std::vector<int>& squaresByLeft(int v) const { return sqByLeft_[v]; }
    const std::vector<int>& squaresByTop(int h) const { return sqByTop_[h]; }
    const std::vector<int>& squaresByTopLeft(int h, int v) const;

    // Vertical (resp. horizontal) inverse of a square, or -1.
    int vInverse(int s) const { return vInv_[s]; }
    int hInverse(int s) const { return hInv_[s]; }

    std::string cellName(CellKind k, int i) const;
    int findByName(CellKind k, const std::string& n) const;

private:
    bool finalized_ = false;
    std::vector<std::vector<int>> hFrom_, vFrom_, sqByLeft_, sqByTop_;
    std::unordered_map<std::uint64_t, std::vector<int>> hBetween_, vBetween_, sqTL_;
    std::unordered_map<std::string, std::vector<int>> sqFrame_;
    std::vector<int> vInv_, hInv_;
    static const std::vector<int> empty_;
};

using CatPtr = std::shared_ptr<const DoubleCategory>;

// Full axiom check. Malformed tables yield structural errors only.
Report validate(const DoubleCategory& d);
Report checkStructure(const DoubleCategory& d);

DoubleCategory terminal();
DoubleCategory emptyDouble();
DoubleCategory generatorG();
DoubleCategory freeArrowH();
DoubleCategory freeArrowV();
// Two parallel horizontal 1-cells joined by a vertically invertible square
// (isoH), and its transpose (isoV).
DoubleCategory isoCellH();
DoubleCategory isoCellV();
// One object, identity 1-cells only, squares forming Z/n under both
// compositions.
DoubleCategory cyclicSquare(int n = 2);
DoubleCategory transpose(const DoubleCategory& d);
DoubleCategory cartesianProduct(const DoubleCategory& a, const DoubleCategory& b);
// n objects and only identity cells.
DoubleCategory discrete(int n, const std::string& name = "discrete");

struct Isomorphism {
    std::vector<int> obj, h, v, sq;
};

std::optional<Isomorphism> isIsomorphic(const DoubleCategory& a, const DoubleCategory& b);
bool checkIsomorphism(const DoubleCategory& a, const DoubleCategory& b, const Isomorphism& f);
Isomorphism invert(const Isomorphism& f);
Isomorphism composeIso(const Isomorphism& f, const Isomorphism& g);  // g after f

}  // namespace gd

#include "graydbl/double_category.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "graydbl/search.hpp"

namespace gd {

const std::vector<int> DoubleCategory::empty_;

const char* kindName(CellKind k) {
    switch (k) {
        case CellKind::Object: return "object";
        case CellKind::HCell: return "hcell";
        case CellKind::VCell: return "vcell";
        case CellKind::Square: return "square";
    }
    return "?";
}

bool Report::hasAxiom(const std::string& name) const {
    for (const auto& v : violations)
        if (v.axiom == name) return true;
    return false;
}

void Report::fail(std::string axiom, std::string witness) {
    if (violations.size() < 200) violations.push_back({std::move(axiom), std::move(witness)});
}

void Report::structuralError(std::string msg) {
    if (structural.size() < 200) structural.push_back(std::move(msg));
}

void Report::merge(const Report& other, const std::string& prefix) {
    for (const auto& s : other.structural) structuralError(prefix + s);
    for (const auto& v : other.violations) fail(v.axiom, prefix + v.witness);
}

std::string Report::summary(std::size_t maxItems) const {
    if (ok()) return "ok";
    std::ostringstream os;
    std::size_t n = 0;
    for (const auto& s : structural) {
        if (n++ >= maxItems) break;
        os << "structural: " << s << "\n";
    }
    for (const auto& v : violations) {
        if (n++ >= maxItems) break;
        os << v.axiom << ": " << v.witness << "\n";
    }
    std::size_t total = structural.size() + violations.size();
    if (total > maxItems) os << "(" << total - maxItems << " more)\n";
    return os.str();
}

std::vector<std::array<int, 3>> PairTable::sortedEntries() const {
    std::vector<std::array<int, 3>> out;
    out.reserve(map_.size());
    forEach([&](int a, int b, int r) { out.push_back({a, b, r}); });
    std::sort(out.begin(), out.end());
    return out;
}

int DoubleCategory::count(CellKind k) const {
    switch (k) {
        case CellKind::Object: return nObj();
        case CellKind::HCell: return nH();
        case CellKind::VCell: return nV();
        case CellKind::Square: return nSq();
    }
    return 0;
}

int DoubleCategory::addObject(std::string n) {
    objName.push_back(std::move(n));
    hIdOf.push_back(-1);
    vIdOf.push_back(-1);
    finalized_ = false;
    return nObj() - 1;
}

int DoubleCategory::addH(std::string n, int s, int t) {
    hName.push_back(std::move(n));
    hSrc.push_back(s);
    hTgt.push_back(t);
    sqVIdOf.push_back(-1);
    finalized_ = false;
    return nH() - 1;
}

int DoubleCategory::addV(std::string n, int s, int t) {
    vName.push_back(std::move(n));
    vSrc.push_back(s);
    vTgt.push_back(t);
    sqHIdOf.push_back(-1);
    finalized_ = false;
    return nV() - 1;
}

int DoubleCategory::addSquare(std::string n, int t, int b, int l, int r) {
    sqName.push_back(std::move(n));
    top.push_back(t);
    bottom.push_back(b);
    left.push_back(l);
    right.push_back(r);
    finalized_ = false;
    return nSq() - 1;
}

void DoubleCategory::addIdentitiesAndUnitCompositions() {
    for (int a = 0; a < nObj(); ++a) {
        if (hIdOf[a] < 0) hIdOf[a] = addH("1h_" + objName[a], a, a);
        if (vIdOf[a] < 0) vIdOf[a] = addV("1v_" + objName[a], a, a);
    }
    for (int a = 0; a < nObj(); ++a) {
        int d = sqVIdOf[hIdOf[a]];
        if (d < 0) d = sqHIdOf[vIdOf[a]];
        if (d < 0) d = addSquare("1_" + objName[a], hIdOf[a], hIdOf[a], vIdOf[a], vIdOf[a]);
        sqVIdOf[hIdOf[a]] = d;
        sqHIdOf[vIdOf[a]] = d;
    }
    for (int h = 0; h < nH(); ++h)
        if (sqVIdOf[h] < 0) sqVIdOf[h] = addSquare("1_" + hName[h], h, h, vIdOf[hSrc[h]], vIdOf[hTgt[h]]);
    for (int v = 0; v < nV(); ++v)
        if (sqHIdOf[v] < 0) sqHIdOf[v] = addSquare("1_" + vName[v], hIdOf[vSrc[v]], hIdOf[vTgt[v]], v, v);
    for (int h = 0; h < nH(); ++h) {
        hc1.set(hIdOf[hSrc[h]], h, h);
        hc1.set(h, hIdOf[hTgt[h]], h);
    }
    for (int v = 0; v < nV(); ++v) {
        vc1.set(vIdOf[vSrc[v]], v, v);
        vc1.set(v, vIdOf[vTgt[v]], v);
    }
    for (int s = 0; s < nSq(); ++s) {
        hc2.set(sqHIdOf[left[s]], s, s);
        hc2.set(s, sqHIdOf[right[s]], s);
        vc2.set(sqVIdOf[top[s]], s, s);
        vc2.set(s, sqVIdOf[bottom[s]], s);
    }
    hc1.forEach([&](int h, int k, int r) { hc2.set(sqVIdOf[h], sqVIdOf[k], sqVIdOf[r]); });
    vc1.forEach([&](int f, int g, int r) { vc2.set(sqHIdOf[f], sqHIdOf[g], sqHIdOf[r]); });
    finalized_ = false;
}

namespace {

std::uint64_t key2(int a, int b) { return PairTable::key(a, b); }

std::string frameKey(int t, int b, int l, int r) {
    std::string k(16, '\0');
    int v[4] = {t, b, l, r};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) k[4 * i + j] = static_cast<char>((v[i] >> (8 * j)) & 0xff);
    return k;
}

}  // namespace

void DoubleCategory::finalize() {
    hFrom_.assign(nObj(), {});
    vFrom_.assign(nObj(), {});
    hBetween_.clear();
    vBetween_.clear();
    sqTL_.clear();
    sqFrame_.clear();
    sqByLeft_.assign(nV(), {});
    sqByTop_.assign(nH(), {});
    for (int h = 0; h < nH(); ++h) {
        hFrom_[hSrc[h]].push_back(h);
        hBetween_[key2(hSrc[h], hTgt[h])].push_back(h);
    }
    for (int v = 0; v < nV(); ++v) {
        vFrom_[vSrc[v]].push_back(v);
        vBetween_[key2(vSrc[v], vTgt[v])].push_back(v);
    }
    for (int s = 0; s < nSq(); ++s) {
        sqByLeft_[left[s]].push_back(s);
        sqByTop_[top[s]].push_back(s);
        sqTL_[key2(top[s], left[s])].push_back(s);
        sqFrame_[frameKey(top[s], bottom[s], left[s], right[s])].push_back(s);
    }
    vInv_.assign(nSq(), -1);
    hInv_.assign(nSq(), -1);
    for (int s = 0; s < nSq(); ++s) {
        int idTop = sqVIdOf[top[s]], idBot = sqVIdOf[bottom[s]];
        for (int t : sqByTop_[bottom[s]]) {
            if (vComp2(s, t) == idTop && vComp2(t, s) == idBot) {
                vInv_[s] = t;
                break;
            }
        }
        int idL = sqHIdOf[left[s]], idR = sqHIdOf[right[s]];
        for (int t : sqByLeft_[right[s]]) {
            if (hComp2(s, t) == idL && hComp2(t, s) == idR) {
                hInv_[s] = t;
                break;
            }
        }
    }
    finalized_ = true;
}

const std::vector<int>& DoubleCategory::hBetween(int a, int b) const {
    auto it = hBetween_.find(key2(a, b));
    return it == hBetween_.end() ? empty_ : it->second;
}

const std::vector<int>& DoubleCategory::vBetween(int a, int b) const {
    auto it = vBetween_.find(key2(a, b));
    return it == vBetween_.end() ? empty_ : it->second;
}

const std::vector<int>& DoubleCategory::squaresWithFrame(int t, int b, int l, int r) const {
    auto it = sqFrame_.find(frameKey(t, b, l, r));
    return it == sqFrame_.end() ? empty_ : it->second;
}

const std::vector<int>& DoubleCategory::squaresByTopLeft(int h, int v) const {
    auto it = sqTL_.find(key2(h, v));
    return it == sqTL_.end() ? empty_ : it->second;
}

std::string DoubleCategory::cellName(CellKind k, int i) const {
    const std::vector<std::string>* names = nullptr;
    switch (k) {
        case CellKind::Object: names = &objName; break;
        case CellKind::HCell: names = &hName; break;
        case CellKind::VCell: names = &vName; break;
        case CellKind::Square: names = &sqName; break;
    }
    if (i >= 0 && i < static_cast<int>(names->size())) return (*names)[i];
    return std::string(kindName(k)) + "#" + std::to_string(i);
}

int DoubleCategory::findByName(CellKind k, const std::string& n) const {
    const std::vector<std::string>* names = nullptr;
    switch (k) {
        case CellKind::Object: names = &objName; break;
        case CellKind::HCell: names = &hName; break;
        case CellKind::VCell: names = &vName; break;
        case CellKind::Square: names = &sqName; break;
    }
    auto it = std::find(names->begin(), names->end(), n);
    return it == names->end() ? -1 : static_cast<int>(it - names->begin());
}

Report checkStructure(const DoubleCategory& d) {
    Report rep;
    auto inRange = [](int i, int n) { return i >= 0 && i < n; };
    const int no = d.nObj(), nh = d.nH(), nv = d.nV(), ns = d.nSq();
    if (static_cast<int>(d.hName.size()) != nh || static_cast<int>(d.vName.size()) != nv ||
        static_cast<int>(d.sqName.size()) != ns || d.hTgt.size() != d.hSrc.size() ||
        d.vTgt.size() != d.vSrc.size() || d.bottom.size() != d.top.size() ||
        d.left.size() != d.top.size() || d.right.size() != d.top.size())
        rep.structuralError("cell arrays have inconsistent lengths");
    if (static_cast<int>(d.hIdOf.size()) != no || static_cast<int>(d.vIdOf.size()) != no)
        rep.structuralError("identity 1-cell maps must have one entry per object");
    if (static_cast<int>(d.sqHIdOf.size()) != nv || static_cast<int>(d.sqVIdOf.size()) != nh)
        rep.structuralError("identity square maps must have one entry per 1-cell");
    if (!rep.ok()) return rep;
    for (int h = 0; h < nh; ++h)
        if (!inRange(d.hSrc[h], no) || !inRange(d.hTgt[h], no))
            rep.structuralError("hcell " + std::to_string(h) + " has an endpoint out of range");
    for (int v = 0; v < nv; ++v)
        if (!inRange(d.vSrc[v], no) || !inRange(d.vTgt[v], no))
            rep.structuralError("vcell " + std::to_string(v) + " has an endpoint out of range");
    for (int s = 0; s < ns; ++s)
        if (!inRange(d.top[s], nh) || !inRange(d.bottom[s], nh) || !inRange(d.left[s], nv) ||
            !inRange(d.right[s], nv))
            rep.structuralError("square " + std::to_string(s) + " has a boundary out of range");
    for (int a = 0; a < no; ++a)
        if (!inRange(d.hIdOf[a], nh) || !inRange(d.vIdOf[a], nv))
            rep.structuralError("identity 1-cell of object " + std::to_string(a) + " out of range");
    for (int v = 0; v < nv; ++v)
        if (!inRange(d.sqHIdOf[v], ns)) rep.structuralError("sqHId of vcell " + std::to_string(v) + " out of range");
    for (int h = 0; h < nh; ++h)
        if (!inRange(d.sqVIdOf[h], ns)) rep.structuralError("sqVId of hcell " + std::to_string(h) + " out of range");
    auto tableRange = [&](const PairTable& t, int n, const char* what) {
        t.forEach([&](int a, int b, int r) {
            if (!inRange(a, n) || !inRange(b, n) || !inRange(r, n))
                rep.structuralError(std::string(what) + " table entry out of range");
        });
    };
    tableRange(d.hc1, nh, "hComp1");
    tableRange(d.vc1, nv, "vComp1");
    tableRange(d.hc2, ns, "hComp2");
    tableRange(d.vc2, ns, "vComp2");
    return rep;
}

namespace {

struct Checker {
    const DoubleCategory& d;
    Report& rep;

    std::string H(int i) const { return d.cellName(CellKind::HCell, i); }
    std::string V(int i) const { return d.cellName(CellKind::VCell, i); }
    std::string S(int i) const { return d.cellName(CellKind::Square, i); }
    std::string O(int i) const { return d.cellName(CellKind::Object, i); }

    void boundaries() {
        for (int s = 0; s < d.nSq(); ++s) {
            int t = d.top[s], b = d.bottom[s], l = d.left[s], r = d.right[s];
            if (d.hSrc[t] != d.vSrc[l] || d.hTgt[t] != d.vSrc[r] || d.hSrc[b] != d.vTgt[l] ||
                d.hTgt[b] != d.vTgt[r])
                rep.fail("boundary (square corners)", S(s));
        }
        for (int a = 0; a < d.nObj(); ++a) {
            int h = d.hIdOf[a], v = d.vIdOf[a];
            if (d.hSrc[h] != a || d.hTgt[h] != a) rep.fail("boundary (identities)", "hId(" + O(a) + ")");
            if (d.vSrc[v] != a || d.vTgt[v] != a) rep.fail("boundary (identities)", "vId(" + O(a) + ")");
        }
        for (int v = 0; v < d.nV(); ++v) {
            int s = d.sqHIdOf[v];
            if (d.left[s] != v || d.right[s] != v || d.top[s] != d.hIdOf[d.vSrc[v]] ||
                d.bottom[s] != d.hIdOf[d.vTgt[v]])
                rep.fail("boundary (identities)", "sqHId(" + V(v) + ")");
        }
        for (int h = 0; h < d.nH(); ++h) {
            int s = d.sqVIdOf[h];
            if (d.top[s] != h || d.bottom[s] != h || d.left[s] != d.vIdOf[d.hSrc[h]] ||
                d.right[s] != d.vIdOf[d.hTgt[h]])
                rep.fail("boundary (identities)", "sqVId(" + H(h) + ")");
        }
        for (int a = 0; a < d.nObj(); ++a)
            if (d.sqHIdOf[d.vIdOf[a]] != d.sqVIdOf[d.hIdOf[a]])
                rep.fail("doubly identity", "sqHId(vId " + O(a) + ") != sqVId(hId " + O(a) + ")");
    }

    void tables() {
        d.hc1.forEach([&](int h, int k, int r) {
            if (d.hTgt[h] != d.hSrc[k])
                rep.fail("boundary (horizontal 1-cell composition)", "non-composable entry " + H(h) + "," + H(k));
            else if (d.hSrc[r] != d.hSrc[h] || d.hTgt[r] != d.hTgt[k])
                rep.fail("boundary (horizontal 1-cell composition)", H(h) + "." + H(k) + " = " + H(r));
        });
        d.vc1.forEach([&](int f, int g, int r) {
            if (d.vTgt[f] != d.vSrc[g])
                rep.fail("boundary (vertical 1-cell composition)", "non-composable entry " + V(f) + "," + V(g));
            else if (d.vSrc[r] != d.vSrc[f] || d.vTgt[r] != d.vTgt[g])
                rep.fail("boundary (vertical 1-cell composition)", V(f) + "." + V(g) + " = " + V(r));
        });
        d.hc2.forEach([&](int a, int b, int r) {
            if (d.right[a] != d.left[b]) {
                rep.fail("boundary (horizontal square composition)", "non-composable entry " + S(a) + "|" + S(b));
                return;
            }
            int t = d.hComp1(d.top[a], d.top[b]), bo = d.hComp1(d.bottom[a], d.bottom[b]);
            if (d.left[r] != d.left[a] || d.right[r] != d.right[b] || t != d.top[r] || bo != d.bottom[r])
                rep.fail("boundary (horizontal square composition)", S(a) + "|" + S(b) + " = " + S(r));
        });
        d.vc2.forEach([&](int a, int b, int r) {
            if (d.bottom[a] != d.top[b]) {
                rep.fail("boundary (vertical square composition)", "non-composable entry " + S(a) + "/" + S(b));
                return;
            }
            int l = d.vComp1(d.left[a], d.left[b]), ri = d.vComp1(d.right[a], d.right[b]);
            if (d.top[r] != d.top[a] || d.bottom[r] != d.bottom[b] || l != d.left[r] || ri != d.right[r])
                rep.fail("boundary (vertical square composition)", S(a) + "/" + S(b) + " = " + S(r));
        });
        for (int h = 0; h < d.nH(); ++h)
            for (int k : d.hFrom(d.hTgt[h]))
                if (d.hComp1(h, k) < 0) rep.fail("totality (horizontal 1-cell composition)", H(h) + "," + H(k));
        for (int f = 0; f < d.nV(); ++f)
            for (int g : d.vFrom(d.vTgt[f]))
                if (d.vComp1(f, g) < 0) rep.fail("totality (vertical 1-cell composition)", V(f) + "," + V(g));
        for (int a = 0; a < d.nSq(); ++a) {
            for (int b : d.squaresByLeft(d.right[a]))
                if (d.hComp2(a, b) < 0) rep.fail("totality (horizontal square composition)", S(a) + "|" + S(b));
            for (int b : d.squaresByTop(d.bottom[a]))
                if (d.vComp2(a, b) < 0) rep.fail("totality (vertical square composition)", S(a) + "/" + S(b));
        }
    }

    void units() {
        for (int h = 0; h < d.nH(); ++h)
            if (d.hComp1(d.hIdOf[d.hSrc[h]], h) != h || d.hComp1(h, d.hIdOf[d.hTgt[h]]) != h)
                rep.fail("unit law (horizontal 1-cell composition)", H(h));
        for (int v = 0; v < d.nV(); ++v)
            if (d.vComp1(d.vIdOf[d.vSrc[v]], v) != v || d.vComp1(v, d.vIdOf[d.vTgt[v]]) != v)
                rep.fail("unit law (vertical 1-cell composition)", V(v));
        for (int s = 0; s < d.nSq(); ++s) {
            if (d.hComp2(d.sqHIdOf[d.left[s]], s) != s || d.hComp2(s, d.sqHIdOf[d.right[s]]) != s)
                rep.fail("unit law (horizontal square composition)", S(s));
            if (d.vComp2(d.sqVIdOf[d.top[s]], s) != s || d.vComp2(s, d.sqVIdOf[d.bottom[s]]) != s)
                rep.fail("unit law (vertical square composition)", S(s));
        }
        d.hc1.forEach([&](int h, int k, int r) {
            if (d.hComp2(d.sqVIdOf[h], d.sqVIdOf[k]) != d.sqVIdOf[r])
                rep.fail("identity functoriality", "sqVId(" + H(h) + ")|sqVId(" + H(k) + ")");
        });
        d.vc1.forEach([&](int f, int g, int r) {
            if (d.vComp2(d.sqHIdOf[f], d.sqHIdOf[g]) != d.sqHIdOf[r])
                rep.fail("identity functoriality", "sqHId(" + V(f) + ")/sqHId(" + V(g) + ")");
        });
    }

    void associativity() {
        for (int h = 0; h < d.nH(); ++h)
            for (int k : d.hFrom(d.hTgt[h])) {
                int hk = d.hComp1(h, k);
                if (hk < 0) continue;
                for (int m : d.hFrom(d.hTgt[k])) {
                    int km = d.hComp1(k, m);
                    if (km < 0) continue;
                    if (d.hComp1(hk, m) != d.hComp1(h, km))
                        rep.fail("associativity (horizontal 1-cell composition)", H(h) + "," + H(k) + "," + H(m));
                }
            }
        for (int f = 0; f < d.nV(); ++f)
            for (int g : d.vFrom(d.vTgt[f])) {
                int fg = d.vComp1(f, g);
                if (fg < 0) continue;
                for (int m : d.vFrom(d.vTgt[g])) {
                    int gm = d.vComp1(g, m);
                    if (gm < 0) continue;
                    if (d.vComp1(fg, m) != d.vComp1(f, gm))
                        rep.fail("associativity (vertical 1-cell composition)", V(f) + "," + V(g) + "," + V(m));
                }
            }
        for (int a = 0; a < d.nSq(); ++a) {
            for (int b : d.squaresByLeft(d.right[a])) {
                int ab = d.hComp2(a, b);
                if (ab < 0) continue;
                for (int c : d.squaresByLeft(d.right[b])) {
                    int bc = d.hComp2(b, c);
                    if (bc < 0) continue;
                    if (d.hComp2(ab, c) != d.hComp2(a, bc))
                        rep.fail("associativity (horizontal square composition)", S(a) + "|" + S(b) + "|" + S(c));
                }
            }
            for (int b : d.squaresByTop(d.bottom[a])) {
                int ab = d.vComp2(a, b);
                if (ab < 0) continue;
                for (int c : d.squaresByTop(d.bottom[b])) {
                    int bc = d.vComp2(b, c);
                    if (bc < 0) continue;
                    if (d.vComp2(ab, c) != d.vComp2(a, bc))
                        rep.fail("associativity (vertical square composition)", S(a) + "/" + S(b) + "/" + S(c));
                }
            }
        }
    }

    void interchange() {
        // a b
        // c e
        for (int a = 0; a < d.nSq(); ++a)
            for (int b : d.squaresByLeft(d.right[a])) {
                int ab = d.hComp2(a, b);
                if (ab < 0) continue;
                for (int c : d.squaresByTop(d.bottom[a])) {
                    int ac = d.vComp2(a, c);
                    if (ac < 0) continue;
                    for (int e : d.squaresByTopLeft(d.bottom[b], d.right[c])) {
                        int ce = d.hComp2(c, e), be = d.vComp2(b, e);
                        if (ce < 0 || be < 0) continue;
                        int lhs = d.vComp2(ab, ce), rhs = d.hComp2(ac, be);
                        if (lhs != rhs)
                            rep.fail("interchange", S(a) + "," + S(b) + "," + S(c) + "," + S(e));
                    }
                }
            }
    }
};

}  // namespace

Report validate(const DoubleCategory& dIn) {
    Report rep = checkStructure(dIn);
    if (!rep.ok()) return rep;
    const DoubleCategory* dp = &dIn;
    DoubleCategory copy;
    if (!dIn.finalized()) {
        copy = dIn;
        copy.finalize();
        dp = &copy;
    }
    Checker c{*dp, rep};
    c.boundaries();
    c.tables();
    if (!rep.violations.empty()) return rep;
    c.units();
    c.associativity();
    c.interchange();
    return rep;
}

DoubleCategory terminal() {
    DoubleCategory d;
    d.name = "1";
    d.addObject("*");
    d.addIdentitiesAndUnitCompositions();
    d.finalize();
    return d;
}

DoubleCategory emptyDouble() {
    DoubleCategory d;
    d.name = "empty";
    d.finalize();
    return d;
}

DoubleCategory generatorG() {
    DoubleCategory d;
    d.name = "G";
    int X = d.addObject("X"), Y = d.addObject("Y"), V = d.addObject("V"), Z = d.addObject("Z");
    for (int a = 0; a < 4; ++a) {
        d.hIdOf[a] = d.addH("1h_" + d.objName[a], a, a);
        d.vIdOf[a] = d.addV("1v_" + d.objName[a], a, a);
    }
    int t = d.addH("t", X, Y), b = d.addH("b", V, Z);
    int l = d.addV("l", X, V), r = d.addV("r", Y, Z);
    d.addIdentitiesAndUnitCompositions();
    d.addSquare("tau", t, b, l, r);
    d.addIdentitiesAndUnitCompositions();
    d.finalize();
    return d;
}

DoubleCategory freeArrowH() {
    DoubleCategory d;
    d.name = "arrowH";
    int a = d.addObject("0"), b = d.addObject("1");
    for (int o = 0; o < 2; ++o) {
        d.hIdOf[o] = d.addH("1h_" + d.objName[o], o, o);
        d.vIdOf[o] = d.addV("1v_" + d.objName[o], o, o);
    }
    d.addH("a", a, b);
    d.addIdentitiesAndUnitCompositions();
    d.finalize();
    return d;
}

DoubleCategory transpose(const DoubleCategory& s) {
    DoubleCategory d;
    d.name = s.name + "^T";
    d.objName = s.objName;
    d.hName = s.vName;
    d.vName = s.hName;
    d.sqName = s.sqName;
    d.hSrc = s.vSrc;
    d.hTgt = s.vTgt;
    d.vSrc = s.hSrc;
    d.vTgt = s.hTgt;
    d.top = s.left;
    d.bottom = s.right;
    d.left = s.top;
    d.right = s.bottom;
    d.hIdOf = s.vIdOf;
    d.vIdOf = s.hIdOf;
    d.sqHIdOf = s.sqVIdOf;
    d.sqVIdOf = s.sqHIdOf;
    d.hc1 = s.vc1;
    d.vc1 = s.hc1;
    d.hc2 = s.vc2;
    d.vc2 = s.hc2;
    d.finalize();
    return d;
}

DoubleCategory freeArrowV() {
    DoubleCategory d = transpose(freeArrowH());
    d.name = "arrowV";
    return d;
}

DoubleCategory isoCellH() {
    DoubleCategory d;
    d.name = "isoH";
    int o0 = d.addObject("0"), o1 = d.addObject("1");
    for (int o = 0; o < 2; ++o) {
        d.hIdOf[o] = d.addH("1h_" + d.objName[o], o, o);
        d.vIdOf[o] = d.addV("1v_" + d.objName[o], o, o);
    }
    int a = d.addH("a", o0, o1), b = d.addH("b", o0, o1);
    int s = d.addSquare("s", a, b, d.vIdOf[o0], d.vIdOf[o1]);
    int si = d.addSquare("s'", b, a, d.vIdOf[o0], d.vIdOf[o1]);
    d.addIdentitiesAndUnitCompositions();
    d.vc2.set(s, si, d.sqVId(a));
    d.vc2.set(si, s, d.sqVId(b));
    d.finalize();
    return d;
}

DoubleCategory isoCellV() {
    DoubleCategory d = transpose(isoCellH());
    d.name = "isoV";
    return d;
}

DoubleCategory cyclicSquare(int n) {
    DoubleCategory d;
    d.name = "Z" + std::to_string(n);
    int o = d.addObject("*");
    d.hIdOf[o] = d.addH("1h_*", o, o);
    d.vIdOf[o] = d.addV("1v_*", o, o);
    d.addIdentitiesAndUnitCompositions();
    std::vector<int> p{d.dblId(o)};
    for (int k = 1; k < n; ++k)
        p.push_back(d.addSquare("s" + std::to_string(k), d.hIdOf[o], d.hIdOf[o], d.vIdOf[o], d.vIdOf[o]));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            d.hc2.set(p[i], p[j], p[(i + j) % n]);
            d.vc2.set(p[i], p[j], p[(i + j) % n]);
        }
    d.finalize();
    return d;
}

DoubleCategory cartesianProduct(const DoubleCategory& a, const DoubleCategory& b) {
    DoubleCategory d;
    d.name = a.name + "x" + b.name;
    auto pairName = [](const std::string& x, const std::string& y) { return "(" + x + "," + y + ")"; };
    const int ob = b.nObj(), hb = b.nH(), vb = b.nV(), sb = b.nSq();
    for (int i = 0; i < a.nObj(); ++i)
        for (int j = 0; j < ob; ++j) d.addObject(pairName(a.objName[i], b.objName[j]));
    for (int i = 0; i < a.nH(); ++i)
        for (int j = 0; j < hb; ++j)
            d.addH(pairName(a.hName[i], b.hName[j]), a.hSrc[i] * ob + b.hSrc[j], a.hTgt[i] * ob + b.hTgt[j]);
    for (int i = 0; i < a.nV(); ++i)
        for (int j = 0; j < vb; ++j)
            d.addV(pairName(a.vName[i], b.vName[j]), a.vSrc[i] * ob + b.vSrc[j], a.vTgt[i] * ob + b.vTgt[j]);
    for (int i = 0; i < a.nSq(); ++i)
        for (int j = 0; j < sb; ++j)
            d.addSquare(pairName(a.sqName[i], b.sqName[j]), a.top[i] * hb + b.top[j], a.bottom[i] * hb + b.bottom[j],
                        a.left[i] * vb + b.left[j], a.right[i] * vb + b.right[j]);
    for (int i = 0; i < a.nObj(); ++i)
        for (int j = 0; j < ob; ++j) {
            d.hIdOf[i * ob + j] = a.hIdOf[i] * hb + b.hIdOf[j];
            d.vIdOf[i * ob + j] = a.vIdOf[i] * vb + b.vIdOf[j];
        }
    for (int i = 0; i < a.nH(); ++i)
        for (int j = 0; j < hb; ++j) d.sqVIdOf[i * hb + j] = a.sqVIdOf[i] * sb + b.sqVIdOf[j];
    for (int i = 0; i < a.nV(); ++i)
        for (int j = 0; j < vb; ++j) d.sqHIdOf[i * vb + j] = a.sqHIdOf[i] * sb + b.sqHIdOf[j];
    auto prodTable = [](const PairTable& ta, const PairTable& tb, int nb, PairTable& out) {
        ta.forEach([&](int x1, int x2, int xr) {
            tb.forEach([&](int y1, int y2, int yr) { out.set(x1 * nb + y1, x2 * nb + y2, xr * nb + yr); });
        });
    };
    prodTable(a.hc1, b.hc1, hb, d.hc1);
    prodTable(a.vc1, b.vc1, vb, d.vc1);
    prodTable(a.hc2, b.hc2, sb, d.hc2);
    prodTable(a.vc2, b.vc2, sb, d.vc2);
    d.finalize();
    return d;
}

DoubleCategory discrete(int n, const std::string& name) {
    DoubleCategory d;
    d.name = name;
    for (int i = 0; i < n; ++i) d.addObject(std::to_string(i));
    d.addIdentitiesAndUnitCompositions();
    d.finalize();
    return d;
}

namespace {

bool preservesTable(const PairTable& t, const std::vector<int>& m, const PairTable& target) {
    bool good = true;
    t.forEach([&](int x, int y, int r) {
        if (good && target.get(m[x], m[y]) != m[r]) good = false;
    });
    return good;
}

bool isBijection(const std::vector<int>& m, int n) {
    if (static_cast<int>(m.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : m) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

}  // namespace

bool checkIsomorphism(const DoubleCategory& a, const DoubleCategory& b, const Isomorphism& f) {
    if (!isBijection(f.obj, b.nObj()) || !isBijection(f.h, b.nH()) || !isBijection(f.v, b.nV()) ||
        !isBijection(f.sq, b.nSq()) || a.nObj() != b.nObj() || a.nH() != b.nH() || a.nV() != b.nV() ||
        a.nSq() != b.nSq())
        return false;
    for (int h = 0; h < a.nH(); ++h)
        if (b.hSrc[f.h[h]] != f.obj[a.hSrc[h]] || b.hTgt[f.h[h]] != f.obj[a.hTgt[h]]) return false;
    for (int v = 0; v < a.nV(); ++v)
        if (b.vSrc[f.v[v]] != f.obj[a.vSrc[v]] || b.vTgt[f.v[v]] != f.obj[a.vTgt[v]]) return false;
    for (int s = 0; s < a.nSq(); ++s) {
        int t = f.sq[s];
        if (b.top[t] != f.h[a.top[s]] || b.bottom[t] != f.h[a.bottom[s]] || b.left[t] != f.v[a.left[s]] ||
            b.right[t] != f.v[a.right[s]])
            return false;
    }
    for (int o = 0; o < a.nObj(); ++o)
        if (b.hIdOf[f.obj[o]] != f.h[a.hIdOf[o]] || b.vIdOf[f.obj[o]] != f.v[a.vIdOf[o]]) return false;
    for (int h = 0; h < a.nH(); ++h)
        if (b.sqVIdOf[f.h[h]] != f.sq[a.sqVIdOf[h]]) return false;
    for (int v = 0; v < a.nV(); ++v)
        if (b.sqHIdOf[f.v[v]] != f.sq[a.sqHIdOf[v]]) return false;
    return preservesTable(a.hc1, f.h, b.hc1) && preservesTable(a.vc1, f.v, b.vc1) &&
           preservesTable(a.hc2, f.sq, b.hc2) && preservesTable(a.vc2, f.sq, b.vc2) &&
           a.hc1.size() == b.hc1.size() && a.vc1.size() == b.vc1.size() && a.hc2.size() == b.hc2.size() &&
           a.vc2.size() == b.vc2.size();
}

std::optional<Isomorphism> isIsomorphic(const DoubleCategory& aIn, const DoubleCategory& bIn) {
    if (aIn.nObj() != bIn.nObj() || aIn.nH() != bIn.nH() || aIn.nV() != bIn.nV() || aIn.nSq() != bIn.nSq())
        return std::nullopt;
    DoubleCategory a = aIn, b = bIn;
    a.finalize();
    b.finalize();
    const int no = a.nObj(), nh = a.nH(), nv = a.nV(), ns = a.nSq();

    auto objSig = [](const DoubleCategory& d, int o) {
        std::vector<int> s(4, 0);
        for (int h = 0; h < d.nH(); ++h) {
            if (d.hSrc[h] == o) ++s[0];
            if (d.hTgt[h] == o) ++s[1];
        }
        for (int v = 0; v < d.nV(); ++v) {
            if (d.vSrc[v] == o) ++s[2];
            if (d.vTgt[v] == o) ++s[3];
        }
        return s;
    };
    std::vector<std::vector<int>> sigA(no), sigB(no);
    for (int o = 0; o < no; ++o) {
        sigA[o] = objSig(a, o);
        sigB[o] = objSig(b, o);
    }
    {
        auto sa = sigA, sb = sigB;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }

    // Variables: objects, then hcells, vcells, squares.
    const int offH = no, offV = no + nh, offS = no + nh + nv, n = no + nh + nv + ns;
    Backtracker bt(n);
    auto used = [](const Backtracker::Assignment& asg, int from, int to, int val) {
        for (int i = from; i < to; ++i)
            if (asg[i] == val) return true;
        return false;
    };
    for (int o = 0; o < no; ++o)
        bt.setDomain(o, [&, o](const Backtracker::Assignment& asg, std::vector<int>& out) {
            for (int c = 0; c < no; ++c)
                if (sigA[o] == sigB[c] && !used(asg, 0, o, c)) out.push_back(c);
        });
    for (int h = 0; h < nh; ++h)
        bt.setDomain(offH + h, [&, h](const Backtracker::Assignment& asg, std::vector<int>& out) {
            for (int c : b.hBetween(asg[a.hSrc[h]], asg[a.hTgt[h]]))
                if (b.isHId(c) == a.isHId(h) && !used(asg, offH, offH + h, c)) out.push_back(c);
        });
    for (int v = 0; v < nv; ++v)
        bt.setDomain(offV + v, [&, v](const Backtracker::Assignment& asg, std::vector<int>& out) {
            for (int c : b.vBetween(asg[a.vSrc[v]], asg[a.vTgt[v]]))
                if (b.isVId(c) == a.isVId(v) && !used(asg, offV, offV + v, c)) out.push_back(c);
        });
    for (int s = 0; s < ns; ++s)
        bt.setDomain(offS + s, [&, s](const Backtracker::Assignment& asg, std::vector<int>& out) {
            for (int c : b.squaresWithFrame(asg[offH + a.top[s]], asg[offH + a.bottom[s]], asg[offV + a.left[s]],
                                             asg[offV + a.right[s]]))
                if (!used(asg, offS, offS + s, c)) out.push_back(c);
        });
    auto slice = [](const Backtracker::Assignment& asg, int from, int len) {
        return std::vector<int>(asg.begin() + from, asg.begin() + from + len);
    };
    if (nh > 0)
        bt.addCheck(offH + nh - 1, [&](const Backtracker::Assignment& asg) {
            return preservesTable(a.hc1, slice(asg, offH, nh), b.hc1);
        });
    if (nv > 0)
        bt.addCheck(offV + nv - 1, [&](const Backtracker::Assignment& asg) {
            return preservesTable(a.vc1, slice(asg, offV, nv), b.vc1);
        });
    std::optional<Isomorphism> result;
    Budget budget;
    bt.run(budget, [&](const Backtracker::Assignment& asg) {
        Isomorphism f{slice(asg, 0, no), slice(asg, offH, nh), slice(asg, offV, nv), slice(asg, offS, ns)};
        if (checkIsomorphism(a, b, f)) {
            result = std::move(f);
            return false;
        }
        return true;
    });
    return result;
}

Isomorphism invert(const Isomorphism& f) {
    auto inv = [](const std::vector<int>& m) {
        std::vector<int> r(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) r[m[i]] = static_cast<int>(i);
        return r;
    };
    return {inv(f.obj), inv(f.h), inv(f.v), inv(f.sq)};
}

Isomorphism composeIso(const Isomorphism& f, const Isomorphism& g) {
    auto comp = [](const std::vector<int>& x, const std::vector<int>& y) {
        std::vector<int> r(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
        return r;
    };
    return {comp(f.obj, g.obj), comp(f.h, g.h), comp(f.v, g.v), comp(f.sq, g.sq)};
}

}  // namespace gd

#include "monoid_fixtures.hpp"

#include <array>
#include <map>
#include <stdexcept>

using namespace gd;

namespace fx {

namespace {

struct Built {
    Labelled l;
    std::map<std::array<int, 5>, int> index;
    std::vector<std::array<int, 5>> key;
};

int mod6(int k) { return ((k % 6) + 6) % 6; }

Built build() {
    Built b;
    DoubleCategory d;
    d.name = "Lab";
    int o = d.addObject("*");
    d.hIdOf[o] = d.addH("1h", o, o);
    d.addH("a", o, o);
    d.vIdOf[o] = d.addV("1v", o, o);
    d.addV("b", o, o);
    const char* hn[] = {"1", "a"};
    const char* vn[] = {"1", "b"};
    for (int t = 0; t < 2; ++t)
        for (int s = 0; s < 2; ++s)
            for (int l = 0; l < 2; ++l)
                for (int r = 0; r < 2; ++r) {
                    if ((t + s + l + r) % 2) continue;
                    for (int k = 0; k < 6; ++k) {
                        std::string n = std::string("[") + hn[t] + hn[s] + vn[l] + vn[r] + "]" + std::to_string(k);
                        b.index[{t, s, l, r, k}] = d.addSquare(n, t, s, l, r);
                        b.key.push_back({t, s, l, r, k});
                    }
                }
    auto at = [&](int t, int s, int l, int r, int k) { return b.index.at({t, s, l, r, mod6(k)}); };
    for (int h = 0; h < 2; ++h) d.sqVIdOf[h] = at(h, h, 0, 0, 0);
    for (int v = 0; v < 2; ++v) d.sqHIdOf[v] = at(0, 0, v, v, 0);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            d.hc1.set(x, y, x ^ y);
            d.vc1.set(x, y, x ^ y);
        }
    for (const auto& p : b.key)
        for (const auto& q : b.key) {
            int x = b.index.at(p), y = b.index.at(q);
            if (p[3] == q[2]) d.hc2.set(x, y, at(p[0] ^ q[0], p[1] ^ q[1], p[2], q[3], p[4] + q[4]));
            if (p[1] == q[0]) d.vc2.set(x, y, at(p[0], q[1], p[2] ^ q[2], p[3] ^ q[3], p[4] + q[4]));
        }
    d.finalize();
    b.l.cat = std::make_shared<const DoubleCategory>(std::move(d));
    return b;
}

const Built& built() {
    static const Built b = build();
    return b;
}

}  // namespace

int Labelled::sq(int t, int s, int l, int r, int k) const { return built().index.at({t, s, l, r, mod6(k)}); }
int Labelled::label(int s) const { return built().key.at(s)[4]; }
int Labelled::relabel(int s, int k) const {
    auto f = built().key.at(s);
    return sq(f[0], f[1], f[2], f[3], k);
}

const Labelled& labelled() { return built().l; }

GrayMonoidData bMonoid(int hq, int vp, int hp, int vq) {
    const Labelled& L = labelled();
    const DoubleCategory& A = *L.cat;
    GrayMonoidData m;
    m.unit = 0;
    TensorCone& c = m.star;
    c.A = c.B = c.C = L.cat;
    c.obj = {0};
    for (int x = 0; x < 2; ++x) {
        c.objH.push_back(x);
        c.hObj.push_back(x);
        c.objV.push_back(x);
        c.vObj.push_back(x);
    }
    for (int s = 0; s < A.nSq(); ++s) {
        c.objSq.push_back(s);
        c.sqObj.push_back(s);
    }
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            int on = x && y;
            c.hv.push_back(L.sq(x, x, y, y, on * hq));
            c.vh.push_back(L.sq(y, y, x, x, on * vp));
            c.hh.push_back(L.sq(x ^ y, x ^ y, 0, 0, on * hp));
            c.hhInv.push_back(L.sq(x ^ y, x ^ y, 0, 0, -on * hp));
            c.vv.push_back(L.sq(0, 0, x ^ y, x ^ y, on * vq));
            c.vvInv.push_back(L.sq(0, 0, x ^ y, x ^ y, -on * vq));
        }
    return m;
}

GrayMonoidData pMonoid(int t) { return productMonoid(discreteMonoid({{0, 1}, {1, 1}}, 0, "Z"), bMonoid(t, t, t, t)); }

int pSquare(const GrayMonoidData& p, int X, int s) {
    (void)p;
    // discrete(2) has its identity squares at indices 0 and 1.
    return X * labelled().cat->nSq() + s;
}

std::vector<std::pair<std::string, GrayMonoidData>> validMonoids() {
    return {{"one", discreteMonoid({{0}}, 0, "1")},
            {"Z/2", discreteMonoid({{0, 1}, {1, 0}}, 0, "Z2")},
            {"B(0)", bMonoid(0, 0, 0, 0)},
            {"B(3)", bMonoid(3, 3, 3, 3)},
            {"P(0)", pMonoid(0)},
            {"P(3)", pMonoid(3)}};
}

const std::vector<std::string>& conditionNames() {
    static const std::vector<std::string> n{kMonFunctors,    kMonUnit,        kMonAssoc,     kMonMixed,
                                            kMonIdentities, kMonComposition, kMonNaturality};
    return n;
}

GrayMonoidData mutant(const std::string& cond) {
    const Labelled& L = labelled();
    const int nB = L.cat->nSq();
    if (cond == kMonFunctors) {
        // z*- and -*z twist one square of the 1-fibre.
        GrayMonoidData m = pMonoid(0);
        TensorCone& c = m.star;
        const int n = m.carrier().nSq(), z = 1;
        int s1 = pSquare(m, 0, L.sq(0, 0, 0, 0, 1));
        int bad = pSquare(m, z, L.sq(0, 0, 0, 0, 5));
        c.objSq[z * n + s1] = bad;
        c.sqObj[s1 * m.carrier().nObj() + z] = bad;
        return m;
    }
    if (cond == kMonUnit) return discreteMonoid({{0, 1}, {1, 0}}, 1, "Z2");
    if (cond == kMonAssoc) {
        // z*- negates labels, so z*(z*c) = c while (z*z)*c = z*c.
        GrayMonoidData m = pMonoid(3);
        const int n = m.carrier().nSq(), z = 1;
        for (int s = 0; s < n; ++s) {
            int b = s % nB;
            m.star.objSq[z * n + s] = pSquare(m, z, L.relabel(b, -L.label(b)));
        }
        return m;
    }
    if (cond == kMonMixed) {
        // Interchangers between cells over different objects of {1,z} lose
        // their label.
        GrayMonoidData m = pMonoid(3);
        TensorCone& c = m.star;
        const DoubleCategory& A = m.carrier();
        auto fibre = [&](int x, int per) { return x / per; };
        auto strip = [&](std::vector<int>& f, int cols, int perRow, int perCol) {
            for (std::size_t i = 0; i < f.size(); ++i) {
                int a = static_cast<int>(i) / cols, b = static_cast<int>(i) % cols;
                if (fibre(a, perRow) != fibre(b, perCol)) f[i] = f[i] / nB * nB + L.relabel(f[i] % nB, 0);
            }
        };
        strip(c.hv, A.nV(), 2, 2);
        strip(c.vh, A.nH(), 2, 2);
        strip(c.hh, A.nH(), 2, 2);
        strip(c.hhInv, A.nH(), 2, 2);
        strip(c.vv, A.nV(), 2, 2);
        strip(c.vvInv, A.nV(), 2, 2);
        return m;
    }
    if (cond == kMonIdentities) {
        GrayMonoidData m = bMonoid(3, 3, 3, 3);
        m.star.hv[1 * 2 + 0] = L.sq(1, 1, 0, 0, 3);
        return m;
    }
    if (cond == kMonComposition) return bMonoid(1, 1, 1, 1);
    if (cond == kMonNaturality) return bMonoid(3, 0, 3, 3);
    throw std::invalid_argument("no mutant for " + cond);
}

GrayMonoidData randomMutation(const GrayMonoidData& m, std::mt19937& rng, int changes) {
    GrayMonoidData out = m;
    TensorCone& c = out.star;
    const DoubleCategory& A = out.carrier();
    std::vector<int>* fields[] = {&c.objSq, &c.sqObj, &c.hv, &c.vh, &c.hh, &c.vv};
    for (int i = 0; i < changes; ++i) {
        int which = std::uniform_int_distribution<int>(0, 5)(rng);
        std::vector<int>& f = *fields[which];
        std::size_t at = std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng);
        int s = f[at];
        const auto& same = A.squaresWithFrame(A.top[s], A.bottom[s], A.left[s], A.right[s]);
        int t = same[std::uniform_int_distribution<std::size_t>(0, same.size() - 1)(rng)];
        f[at] = t;
        if (which == 4) c.hhInv[at] = A.vInverse(t);
        if (which == 5) c.vvInv[at] = A.hInverse(t);
    }
    return out;
}

}  // namespace fx

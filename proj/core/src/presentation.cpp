#include "graydbl/presentation.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace gd {

// ---------------------------------------------------------------- paths

PathStore::PathStore(CatPtr A, CatPtr B, bool horizontal)
    : A_(std::move(A)), B_(std::move(B)), horizontal_(horizontal), nObj_(A_->nObj() * B_->nObj()) {
    for (int o = 0; o < nObj_; ++o) intern(o, {});
}

int PathStore::letterTgt(int src, const Letter& l) const {
    const int b0 = B_->nObj();
    int X = src / b0, Y = src % b0;
    if (!l.bSide) X = horizontal_ ? A_->hTgt[l.cell] : A_->vTgt[l.cell];
    else Y = horizontal_ ? B_->hTgt[l.cell] : B_->vTgt[l.cell];
    return X * b0 + Y;
}

bool PathStore::push(std::vector<Letter>& w, Letter l) const {
    const DoubleCategory& D = l.bSide ? *B_ : *A_;
    if (horizontal_ ? D.isHId(l.cell) : D.isVId(l.cell)) return true;
    if (!w.empty() && w.back().bSide == l.bSide && w.back().fixed == l.fixed) {
        int c = horizontal_ ? D.hComp1(w.back().cell, l.cell) : D.vComp1(w.back().cell, l.cell);
        if (c < 0) return false;
        w.pop_back();
        if (!(horizontal_ ? D.isHId(c) : D.isVId(c))) w.push_back({l.bSide, c, l.fixed});
        return true;
    }
    w.push_back(l);
    return true;
}

int PathStore::intern(int src, std::vector<Letter> w) {
    auto key = std::make_pair(src, w);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int t = src;
    for (const auto& l : w) t = letterTgt(t, l);
    int id = static_cast<int>(letters_.size());
    src_.push_back(src);
    tgt_.push_back(t);
    letters_.push_back(std::move(w));
    index_.emplace(std::move(key), id);
    return id;
}

int PathStore::letterA(int cell, int Y) {
    const int b0 = B_->nObj();
    int X = horizontal_ ? A_->hSrc[cell] : A_->vSrc[cell];
    std::vector<Letter> w;
    push(w, {false, cell, Y});
    return intern(X * b0 + Y, std::move(w));
}

int PathStore::letterB(int X, int cell) {
    const int b0 = B_->nObj();
    int Y = horizontal_ ? B_->hSrc[cell] : B_->vSrc[cell];
    std::vector<Letter> w;
    push(w, {true, cell, X});
    return intern(X * b0 + Y, std::move(w));
}

int PathStore::compose(int p, int q) {
    if (p < 0 || q < 0 || tgt_[p] != src_[q]) return -1;
    std::vector<Letter> w = letters_[p];
    for (const auto& l : letters_[q])
        if (!push(w, l)) return -1;
    return intern(src_[p], std::move(w));
}

int PathStore::depth(int p) const {
    std::size_t n = letters_[p].size();
    int d = 1;
    for (std::size_t k = 1; k < n; k *= 2) ++d;
    return d;
}

std::string PathStore::name(int p) const {
    const int b0 = B_->nObj();
    auto objName = [&](int o) { return A_->objName[o / b0] + "*" + B_->objName[o % b0]; };
    if (letters_[p].empty()) return std::string(horizontal_ ? "1h_" : "1v_") + objName(src_[p]);
    std::string s;
    for (const auto& l : letters_[p]) {
        if (!s.empty()) s += ".";
        if (!l.bSide)
            s += (horizontal_ ? A_->hName[l.cell] : A_->vName[l.cell]) + "*" + B_->objName[l.fixed];
        else
            s += A_->objName[l.fixed] + "*" + (horizontal_ ? B_->hName[l.cell] : B_->vName[l.cell]);
    }
    return s;
}

// --------------------------------------------------------- presentation

namespace {

bool isIdSquare(const DoubleCategory& D, int s) {
    return s == D.sqHId(D.left[s]) || s == D.sqVId(D.top[s]);
}

class Builder {
public:
    TensorPresentation& P;
    const DoubleCategory &A, &B;
    PathStore &H, &V;

    explicit Builder(TensorPresentation& p) : P(p), A(*p.A), B(*p.B), H(*p.hpaths), V(*p.vpaths) {}

    int word(Word w) {
        P.words.push_back(w);
        return static_cast<int>(P.words.size()) - 1;
    }
    int gen(int g) { return word({Word::Gen, g, -1, -1, -1}); }
    int vid(int p) { return word({Word::VId, -1, p, -1, -1}); }
    int hid(int v) { return word({Word::HId, -1, v, -1, -1}); }
    int hc(int a, int b) { return word({Word::HC, -1, -1, a, b}); }
    int vc(int a, int b) { return word({Word::VC, -1, -1, a, b}); }

    int sqGen(CellKind ka, int a, CellKind kb, int b, bool inv = false) {
        int g = P.squareGenerator(ka, a, kb, b, inv);
        if (g < 0) throw StructuralError("presentation: missing generator");
        return gen(g);
    }

    // Cone-shaped accessors returning words, with the identity cases
    // collapsed as for a cone.
    int xh(int X, int p) { return H.letterB(X, p); }
    int hy(int h, int Y) { return H.letterA(h, Y); }
    int xv(int X, int q) { return V.letterB(X, q); }
    int vy(int v, int Y) { return V.letterA(v, Y); }
    int xs(int X, int s) {
        if (s == B.sqVId(B.top[s])) return vid(xh(X, B.top[s]));
        if (s == B.sqHId(B.left[s])) return hid(xv(X, B.left[s]));
        return sqGen(CellKind::Object, X, CellKind::Square, s);
    }
    int sy(int w, int Y) {
        if (w == A.sqVId(A.top[w])) return vid(hy(A.top[w], Y));
        if (w == A.sqHId(A.left[w])) return hid(vy(A.left[w], Y));
        return sqGen(CellKind::Square, w, CellKind::Object, Y);
    }
    int hq(int h, int q) {
        if (B.isVId(q)) return vid(hy(h, B.vSrc[q]));
        if (A.isHId(h)) return hid(xv(A.hSrc[h], q));
        return sqGen(CellKind::HCell, h, CellKind::VCell, q);
    }
    int vp(int v, int p) {
        if (B.isHId(p)) return hid(vy(v, B.hSrc[p]));
        if (A.isVId(v)) return vid(xh(A.vSrc[v], p));
        return sqGen(CellKind::VCell, v, CellKind::HCell, p);
    }
    int hp(int h, int p, bool inv = false) {
        if (B.isHId(p)) return vid(hy(h, B.hSrc[p]));
        if (A.isHId(h)) return vid(xh(A.hSrc[h], p));
        return sqGen(CellKind::HCell, h, CellKind::HCell, p, inv);
    }
    int vq(int v, int q, bool inv = false) {
        if (B.isVId(q)) return hid(vy(v, B.vSrc[q]));
        if (A.isVId(v)) return hid(xv(A.vSrc[v], q));
        return sqGen(CellKind::VCell, v, CellKind::VCell, q, inv);
    }

    void rel(const char* fam, std::string label, int l, int r) { P.relations.push_back({fam, std::move(label), l, r}); }

    void addSquareGen(CellKind ka, int a, CellKind kb, int b, bool inv, std::array<int, 4> fr) {
        Generator g;
        g.kind = GenKind::Square;
        g.ka = ka;
        g.kb = kb;
        g.a = a;
        g.b = b;
        g.inverse = inv;
        g.name = A.cellName(ka, a) + "*" + B.cellName(kb, b) + (inv ? "^-1" : "");
        g.top = fr[0];
        g.bottom = fr[1];
        g.left = fr[2];
        g.right = fr[3];
        P.squareGen[{static_cast<int>(ka), a, static_cast<int>(kb), b, inv}] = static_cast<int>(P.generators.size());
        P.generators.push_back(std::move(g));
    }

    void generators() {
        const int a0 = A.nObj(), b0 = B.nObj();
        using K = CellKind;
        for (int X = 0; X < a0; ++X)
            for (int Y = 0; Y < b0; ++Y) {
                Generator g;
                g.kind = GenKind::Object;
                g.a = X;
                g.b = Y;
                g.name = A.objName[X] + "*" + B.objName[Y];
                P.objGen.push_back(static_cast<int>(P.generators.size()));
                P.generators.push_back(std::move(g));
            }
        auto oneCell = [&](GenKind k, K ka, int a, K kb, int b, int path, PathStore& S) {
            Generator g;
            g.kind = k;
            g.ka = ka;
            g.kb = kb;
            g.a = a;
            g.b = b;
            g.path = path;
            g.name = S.name(path);
            P.generators.push_back(std::move(g));
        };
        for (int X = 0; X < a0; ++X)
            for (int p = 0; p < B.nH(); ++p)
                if (!B.isHId(p)) oneCell(GenKind::HCell, K::Object, X, K::HCell, p, xh(X, p), H);
        for (int h = 0; h < A.nH(); ++h)
            if (!A.isHId(h))
                for (int Y = 0; Y < b0; ++Y) oneCell(GenKind::HCell, K::HCell, h, K::Object, Y, hy(h, Y), H);
        for (int X = 0; X < a0; ++X)
            for (int q = 0; q < B.nV(); ++q)
                if (!B.isVId(q)) oneCell(GenKind::VCell, K::Object, X, K::VCell, q, xv(X, q), V);
        for (int v = 0; v < A.nV(); ++v)
            if (!A.isVId(v))
                for (int Y = 0; Y < b0; ++Y) oneCell(GenKind::VCell, K::VCell, v, K::Object, Y, vy(v, Y), V);

        for (int X = 0; X < a0; ++X)
            for (int s = 0; s < B.nSq(); ++s)
                if (!isIdSquare(B, s))
                    addSquareGen(K::Object, X, K::Square, s, false,
                                 {xh(X, B.top[s]), xh(X, B.bottom[s]), xv(X, B.left[s]), xv(X, B.right[s])});
        for (int w = 0; w < A.nSq(); ++w)
            if (!isIdSquare(A, w))
                for (int Y = 0; Y < b0; ++Y)
                    addSquareGen(K::Square, w, K::Object, Y, false,
                                 {hy(A.top[w], Y), hy(A.bottom[w], Y), vy(A.left[w], Y), vy(A.right[w], Y)});
        for (int h = 0; h < A.nH(); ++h) {
            if (A.isHId(h)) continue;
            int X = A.hSrc[h], X2 = A.hTgt[h];
            for (int q = 0; q < B.nV(); ++q)
                if (!B.isVId(q))
                    addSquareGen(K::HCell, h, K::VCell, q, false,
                                 {hy(h, B.vSrc[q]), hy(h, B.vTgt[q]), xv(X, q), xv(X2, q)});
            for (int p = 0; p < B.nH(); ++p) {
                if (B.isHId(p)) continue;
                int Y = B.hSrc[p], Y2 = B.hTgt[p];
                int t = H.compose(xh(X, p), hy(h, Y2)), b = H.compose(hy(h, Y), xh(X2, p));
                int l = V.identity(X * b0 + Y), r = V.identity(X2 * b0 + Y2);
                addSquareGen(K::HCell, h, K::HCell, p, false, {t, b, l, r});
                addSquareGen(K::HCell, h, K::HCell, p, true, {b, t, l, r});
            }
        }
        for (int v = 0; v < A.nV(); ++v) {
            if (A.isVId(v)) continue;
            int X = A.vSrc[v], X2 = A.vTgt[v];
            for (int p = 0; p < B.nH(); ++p)
                if (!B.isHId(p))
                    addSquareGen(K::VCell, v, K::HCell, p, false,
                                 {xh(X, p), xh(X2, p), vy(v, B.hSrc[p]), vy(v, B.hTgt[p])});
            for (int q = 0; q < B.nV(); ++q) {
                if (B.isVId(q)) continue;
                int Y = B.vSrc[q], Y2 = B.vTgt[q];
                int l = V.compose(vy(v, Y), xv(X2, q)), r = V.compose(xv(X, q), vy(v, Y2));
                int t = H.identity(X * b0 + Y), b = H.identity(X2 * b0 + Y2);
                addSquareGen(K::VCell, v, K::VCell, q, false, {t, b, l, r});
                addSquareGen(K::VCell, v, K::VCell, q, true, {t, b, r, l});
            }
        }
    }

    std::string an(CellKind k, int i) const { return A.cellName(k, i); }
    std::string bn(CellKind k, int i) const { return B.cellName(k, i); }

    void relations() {
        using K = CellKind;
        // (i): each X*- and -*Y preserves composition of squares.
        for (int X = 0; X < A.nObj(); ++X) {
            for (auto [s, t, u] : B.hc2.sortedEntries()) {
                if (s == B.sqHId(B.left[s]) || t == B.sqHId(B.left[t]) || (isIdSquare(B, s) && isIdSquare(B, t)))
                    continue;
                rel("(i)", A.objName[X] + "*(" + B.sqName[s] + "|" + B.sqName[t] + ")", hc(xs(X, s), xs(X, t)),
                    xs(X, u));
            }
            for (auto [s, t, u] : B.vc2.sortedEntries()) {
                if (s == B.sqVId(B.top[s]) || t == B.sqVId(B.top[t]) || (isIdSquare(B, s) && isIdSquare(B, t)))
                    continue;
                rel("(i)", A.objName[X] + "*(" + B.sqName[s] + "/" + B.sqName[t] + ")", vc(xs(X, s), xs(X, t)),
                    xs(X, u));
            }
        }
        for (int Y = 0; Y < B.nObj(); ++Y) {
            for (auto [s, t, u] : A.hc2.sortedEntries()) {
                if (s == A.sqHId(A.left[s]) || t == A.sqHId(A.left[t]) || (isIdSquare(A, s) && isIdSquare(A, t)))
                    continue;
                rel("(i)", "(" + A.sqName[s] + "|" + A.sqName[t] + ")*" + B.objName[Y], hc(sy(s, Y), sy(t, Y)),
                    sy(u, Y));
            }
            for (auto [s, t, u] : A.vc2.sortedEntries()) {
                if (s == A.sqVId(A.top[s]) || t == A.sqVId(A.top[t]) || (isIdSquare(A, s) && isIdSquare(A, t)))
                    continue;
                rel("(i)", "(" + A.sqName[s] + "/" + A.sqName[t] + ")*" + B.objName[Y], vc(sy(s, Y), sy(t, Y)),
                    sy(u, Y));
            }
        }

        // (vi): interchangers and mixed squares on composite 1-cells.
        auto bh1 = B.hc1.sortedEntries(), bv1 = B.vc1.sortedEntries();
        auto ah1 = A.hc1.sortedEntries(), av1 = A.vc1.sortedEntries();
        for (int h = 0; h < A.nH(); ++h) {
            if (A.isHId(h)) continue;
            int X = A.hSrc[h], X2 = A.hTgt[h];
            for (auto [q, q2, qq] : bv1) {
                if (B.isVId(q) || B.isVId(q2)) continue;
                rel("(vi)", an(K::HCell, h) + "*(" + B.vName[q] + "." + B.vName[q2] + ")", vc(hq(h, q), hq(h, q2)),
                    hq(h, qq));
            }
            for (auto [p, p2, pp] : bh1) {
                if (B.isHId(p) || B.isHId(p2)) continue;
                int up = hc(vid(xh(X, p)), hp(h, p2)), down = hc(hp(h, p), vid(xh(X2, p2)));
                rel("(vi)", an(K::HCell, h) + "*(" + B.hName[p] + "." + B.hName[p2] + ")", vc(up, down), hp(h, pp));
            }
        }
        for (int v = 0; v < A.nV(); ++v) {
            if (A.isVId(v)) continue;
            int X = A.vSrc[v], X2 = A.vTgt[v];
            for (auto [p, p2, pp] : bh1) {
                if (B.isHId(p) || B.isHId(p2)) continue;
                rel("(vi)", an(K::VCell, v) + "*(" + B.hName[p] + "." + B.hName[p2] + ")", hc(vp(v, p), vp(v, p2)),
                    vp(v, pp));
            }
            for (auto [q, q2, qq] : bv1) {
                if (B.isVId(q) || B.isVId(q2)) continue;
                int l = vc(vq(v, q), hid(xv(X2, q2))), r = vc(hid(xv(X, q)), vq(v, q2));
                rel("(vi)", an(K::VCell, v) + "*(" + B.vName[q] + "." + B.vName[q2] + ")", hc(l, r), vq(v, qq));
            }
        }
        for (auto [h, h2, hh] : ah1) {
            if (A.isHId(h) || A.isHId(h2)) continue;
            for (int q = 0; q < B.nV(); ++q) {
                if (B.isVId(q)) continue;
                rel("(vi)", "(" + A.hName[h] + "." + A.hName[h2] + ")*" + B.vName[q], hc(hq(h, q), hq(h2, q)),
                    hq(hh, q));
            }
            for (int p = 0; p < B.nH(); ++p) {
                if (B.isHId(p)) continue;
                int Y = B.hSrc[p], Y2 = B.hTgt[p];
                int up = hc(hp(h, p), vid(hy(h2, Y2))), down = hc(vid(hy(h, Y)), hp(h2, p));
                rel("(vi)", "(" + A.hName[h] + "." + A.hName[h2] + ")*" + B.hName[p], vc(up, down), hp(hh, p));
            }
        }
        for (auto [v, v2, vv] : av1) {
            if (A.isVId(v) || A.isVId(v2)) continue;
            for (int p = 0; p < B.nH(); ++p) {
                if (B.isHId(p)) continue;
                rel("(vi)", "(" + A.vName[v] + "." + A.vName[v2] + ")*" + B.hName[p], vc(vp(v, p), vp(v2, p)),
                    vp(vv, p));
            }
            for (int q = 0; q < B.nV(); ++q) {
                if (B.isVId(q)) continue;
                int Y = B.vSrc[q], Y2 = B.vTgt[q];
                int l = vc(hid(vy(v, Y)), vq(v2, q)), r = vc(vq(v, q), hid(vy(v2, Y2)));
                rel("(vi)", "(" + A.vName[v] + "." + A.vName[v2] + ")*" + B.vName[q], hc(l, r), vq(vv, q));
            }
        }

        // (vii): naturality in squares of either factor.
        for (int s = 0; s < B.nSq(); ++s) {
            if (isIdSquare(B, s)) continue;
            for (int h = 0; h < A.nH(); ++h) {
                if (A.isHId(h)) continue;
                int X = A.hSrc[h], X2 = A.hTgt[h];
                int lhs = vc(hc(xs(X, s), hq(h, B.right[s])), hp(h, B.bottom[s]));
                int rhs = vc(hp(h, B.top[s]), hc(hq(h, B.left[s]), xs(X2, s)));
                rel("(vii)", pairName(K::HCell, h, K::Square, s), lhs, rhs);
            }
            for (int v = 0; v < A.nV(); ++v) {
                if (A.isVId(v)) continue;
                int X = A.vSrc[v], X2 = A.vTgt[v];
                int lhs = hc(vq(v, B.left[s]), vc(xs(X, s), vp(v, B.bottom[s])));
                int rhs = hc(vc(vp(v, B.top[s]), xs(X2, s)), vq(v, B.right[s]));
                rel("(vii)", pairName(K::VCell, v, K::Square, s), lhs, rhs);
            }
        }
        for (int w = 0; w < A.nSq(); ++w) {
            if (isIdSquare(A, w)) continue;
            for (int p = 0; p < B.nH(); ++p) {
                if (B.isHId(p)) continue;
                int Y = B.hSrc[p], Y2 = B.hTgt[p];
                int lhs = vc(hc(vp(A.left[w], p), sy(w, Y2)), hp(A.bottom[w], p));
                int rhs = vc(hp(A.top[w], p), hc(sy(w, Y), vp(A.right[w], p)));
                rel("(vii)", pairName(K::Square, w, K::HCell, p), lhs, rhs);
            }
            for (int q = 0; q < B.nV(); ++q) {
                if (B.isVId(q)) continue;
                int Y = B.vSrc[q], Y2 = B.vTgt[q];
                int lhs = hc(vc(sy(w, Y), hq(A.bottom[w], q)), vq(A.right[w], q));
                int rhs = hc(vq(A.left[w], q), vc(hq(A.top[w], q), sy(w, Y2)));
                rel("(vii)", pairName(K::Square, w, K::VCell, q), lhs, rhs);
            }
        }

        // Interchangers and their formal inverses.
        for (int h = 0; h < A.nH(); ++h) {
            if (A.isHId(h)) continue;
            for (int p = 0; p < B.nH(); ++p) {
                if (B.isHId(p)) continue;
                const Generator& g = P.generators[P.squareGenerator(K::HCell, h, K::HCell, p)];
                int top = g.top, bottom = g.bottom;
                rel("(invertibility)", pairName(K::HCell, h, K::HCell, p) + " above inverse",
                    vc(hp(h, p), hp(h, p, true)), vid(top));
                rel("(invertibility)", "inverse above " + pairName(K::HCell, h, K::HCell, p),
                    vc(hp(h, p, true), hp(h, p)), vid(bottom));
            }
        }
        for (int v = 0; v < A.nV(); ++v) {
            if (A.isVId(v)) continue;
            for (int q = 0; q < B.nV(); ++q) {
                if (B.isVId(q)) continue;
                const Generator& g = P.generators[P.squareGenerator(K::VCell, v, K::VCell, q)];
                int left = g.left, right = g.right;
                rel("(invertibility)", pairName(K::VCell, v, K::VCell, q) + " left of inverse",
                    hc(vq(v, q), vq(v, q, true)), hid(left));
                rel("(invertibility)", "inverse left of " + pairName(K::VCell, v, K::VCell, q),
                    hc(vq(v, q, true), vq(v, q)), hid(right));
            }
        }
    }

    std::string pairName(CellKind ka, int a, CellKind kb, int b) const { return an(ka, a) + "*" + bn(kb, b); }
};

}  // namespace

int TensorPresentation::squareGenerator(CellKind ka, int a, CellKind kb, int b, bool inverse) const {
    auto it = squareGen.find({static_cast<int>(ka), a, static_cast<int>(kb), b, inverse});
    return it == squareGen.end() ? -1 : it->second;
}

std::size_t TensorPresentation::countGenerators(GenKind k) const {
    return static_cast<std::size_t>(
        std::count_if(generators.begin(), generators.end(), [k](const Generator& g) { return g.kind == k; }));
}

std::string TensorPresentation::wordName(int w) const {
    const Word& x = words[w];
    switch (x.kind) {
        case Word::Gen: return generators[x.gen].name;
        case Word::VId: return "1[" + hpaths->name(x.path) + "]";
        case Word::HId: return "1[" + vpaths->name(x.path) + "]";
        case Word::HC: return "(" + wordName(x.a) + " | " + wordName(x.b) + ")";
        case Word::VC: return "(" + wordName(x.a) + " / " + wordName(x.b) + ")";
    }
    return {};
}

std::array<int, 4> TensorPresentation::wordFrame(int w) const {
    const Word& x = words[w];
    switch (x.kind) {
        case Word::Gen: {
            const Generator& g = generators[x.gen];
            return {g.top, g.bottom, g.left, g.right};
        }
        case Word::VId:
            return {x.path, x.path, vpaths->identity(hpaths->src(x.path)), vpaths->identity(hpaths->tgt(x.path))};
        case Word::HId:
            return {hpaths->identity(vpaths->src(x.path)), hpaths->identity(vpaths->tgt(x.path)), x.path, x.path};
        case Word::HC: {
            auto fa = wordFrame(x.a), fb = wordFrame(x.b);
            if (fa[3] != fb[2]) throw StructuralError("horizontal composite with mismatched sides: " + wordName(w));
            return {hpaths->compose(fa[0], fb[0]), hpaths->compose(fa[1], fb[1]), fa[2], fb[3]};
        }
        case Word::VC: {
            auto fa = wordFrame(x.a), fb = wordFrame(x.b);
            if (fa[1] != fb[0]) throw StructuralError("vertical composite with mismatched sides: " + wordName(w));
            return {fa[0], fb[1], vpaths->compose(fa[2], fb[2]), vpaths->compose(fa[3], fb[3])};
        }
    }
    return {};
}

TensorPresentation buildPresentation(CatPtr A, CatPtr B) {
    TensorPresentation P;
    P.A = A;
    P.B = B;
    P.hpaths = std::make_shared<PathStore>(A, B, true);
    P.vpaths = std::make_shared<PathStore>(A, B, false);
    Builder b(P);
    b.generators();
    b.relations();
    return P;
}

Report checkPresentation(const TensorPresentation& P) {
    Report rep;
    for (const auto& r : P.relations) {
        try {
            if (P.wordFrame(r.lhs) != P.wordFrame(r.rhs))
                rep.structuralError(r.family + " " + r.label + ": sides have different frames");
        } catch (const StructuralError& e) {
            rep.structuralError(r.family + " " + r.label + ": " + e.what());
        }
    }
    return rep;
}

nlohmann::json presentationToJson(const TensorPresentation& P) {
    using nlohmann::json;
    static const char* kinds[] = {"object", "hcell", "vcell", "square"};
    json gens = json::array();
    for (const auto& g : P.generators) {
        json j{{"name", g.name}, {"kind", kinds[static_cast<int>(g.kind)]}};
        if (g.kind == GenKind::Square) {
            j["frame"] = {{"top", P.hpaths->name(g.top)},
                          {"bottom", P.hpaths->name(g.bottom)},
                          {"left", P.vpaths->name(g.left)},
                          {"right", P.vpaths->name(g.right)}};
            j["inverse"] = g.inverse;
        }
        gens.push_back(std::move(j));
    }
    std::function<json(int)> tree = [&](int w) -> json {
        const Word& x = P.words[w];
        switch (x.kind) {
            case Word::Gen: return {{"gen", P.generators[x.gen].name}};
            case Word::VId: return {{"vid", P.hpaths->name(x.path)}};
            case Word::HId: return {{"hid", P.vpaths->name(x.path)}};
            case Word::HC: return {{"hcomp", {tree(x.a), tree(x.b)}}};
            case Word::VC: return {{"vcomp", {tree(x.a), tree(x.b)}}};
        }
        return {};
    };
    json rels = json::array();
    for (const auto& r : P.relations)
        rels.push_back({{"family", r.family}, {"label", r.label}, {"lhs", tree(r.lhs)}, {"rhs", tree(r.rhs)}});
    return {{"A", P.A->name}, {"B", P.B->name}, {"generators", gens}, {"relations", rels}};
}

// ---------------------------------------------------------- realization

namespace {

struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Unbounded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Congruence closure over square words of A (x) B.  Nodes are generators,
// identity squares on paths and binary composites of classes; classes are
// kept in a union-find and composite tables are keyed by class roots.
class Closure {
public:
    struct Node {
        Word::Kind kind;
        int gen = -1, path = -1, a = -1, b = -1;
    };

    Closure(TensorPresentation& P, int D, std::size_t maxClasses, Budget& budget)
        : P_(P), H_(*P.hpaths), V_(*P.vpaths), D_(D), maxClasses_(maxClasses), budget_(budget) {}

    void run() {
        pathClosure(H_, hpaths_, hsplits_);
        pathClosure(V_, vpaths_, vsplits_);
        for (int o = 0; o < H_.nObj(); ++o) dbl(o);
        for (int p : hpaths_) vid(p);
        for (int v : vpaths_) hid(v);
        genNode_.assign(P_.generators.size(), -1);
        for (std::size_t g = 0; g < P_.generators.size(); ++g)
            if (P_.generators[g].kind == GenKind::Square) {
                const Generator& x = P_.generators[g];
                genNode_[g] = make({Word::Gen, static_cast<int>(g)}, 1, {x.top, x.bottom, x.left, x.right});
            }
        for (const auto& r : P_.relations) unite(eval(r.lhs), eval(r.rhs));
        rebuild();
        for (;;) {
            std::size_t before = nodes_.size(), u = unions_;
            expand();
            axioms();
            rebuild();
            if (nodes_.size() == before && unions_ == u) break;
        }
    }

    bool closed() const {
        for (int x = 0; x < static_cast<int>(nodes_.size()); ++x)
            if (parent_[x] == x && depth_[x] > D_) return false;
        return true;
    }

    std::size_t classCount() const {
        std::size_t n = 0;
        for (int x = 0; x < static_cast<int>(nodes_.size()); ++x) n += parent_[x] == x;
        return n;
    }

    // Emits the quotient as a double category.  Returns false if a
    // composite is missing (not closed).
    bool emit(RealizedTensor& T) {
        const DoubleCategory &A = *P_.A, &B = *P_.B;
        const int b0 = B.nObj();
        auto d = std::make_shared<DoubleCategory>();
        d->name = A.name + "(x)" + B.name;
        for (int o = 0; o < H_.nObj(); ++o) d->addObject(A.objName[o / b0] + "*" + B.objName[o % b0]);
        std::unordered_map<int, int> hIdx, vIdx;
        for (int p : hpaths_) {
            hIdx[p] = d->addH(H_.name(p), H_.src(p), H_.tgt(p));
            T.hcellPath.push_back(p);
        }
        for (int v : vpaths_) {
            vIdx[v] = d->addV(V_.name(v), V_.src(v), V_.tgt(v));
            T.vcellPath.push_back(v);
        }
        for (int o = 0; o < H_.nObj(); ++o) {
            d->hIdOf[o] = hIdx.at(H_.identity(o));
            d->vIdOf[o] = vIdx.at(V_.identity(o));
        }
        std::vector<int> roots;
        for (int x = 0; x < static_cast<int>(nodes_.size()); ++x)
            if (parent_[x] == x) roots.push_back(x);
        std::sort(roots.begin(), roots.end(), [&](int a, int b) { return rep_[a] < rep_[b]; });
        std::unordered_map<int, int> sIdx;
        for (int r : roots) sIdx[r] = static_cast<int>(sIdx.size());
        std::vector<std::string> names(roots.size());
        std::function<std::string(int)> nm = [&](int r) -> std::string {
            int i = sIdx.at(r);
            if (!names[i].empty()) return names[i];
            const Node& n = nodes_[rep_[r]];
            std::string s;
            switch (n.kind) {
                case Word::Gen: s = P_.generators[n.gen].name; break;
                case Word::VId: s = H_.isIdentity(n.path) ? "1_" + d->objName[H_.src(n.path)] : "1[" + H_.name(n.path) + "]"; break;
                case Word::HId: s = "1[" + V_.name(n.path) + "]"; break;
                case Word::HC: s = "(" + nm(find(n.a)) + " | " + nm(find(n.b)) + ")"; break;
                case Word::VC: s = "(" + nm(find(n.a)) + " / " + nm(find(n.b)) + ")"; break;
            }
            return names[i] = s;
        };
        for (int r : roots) {
            const auto& f = frame_[r];
            d->addSquare(nm(r), hIdx.at(f[0]), hIdx.at(f[1]), vIdx.at(f[2]), vIdx.at(f[3]));
            const Node& n = nodes_[rep_[r]];
            RealizedTensor::SquareWord w{n.kind, n.gen, n.path, -1, -1};
            if (n.kind == Word::HC || n.kind == Word::VC) {
                w.a = sIdx.at(find(n.a));
                w.b = sIdx.at(find(n.b));
            }
            T.squareWords.push_back(w);
        }
        for (int p : hpaths_) d->sqVIdOf[hIdx.at(p)] = sIdx.at(find(vidNode_.at(p)));
        for (int v : vpaths_) d->sqHIdOf[vIdx.at(v)] = sIdx.at(find(hidNode_.at(v)));
        for (int p : hpaths_)
            for (int q : hpaths_) {
                int r = H_.compose(p, q);
                if (r >= 0) d->hc1.set(hIdx.at(p), hIdx.at(q), hIdx.at(r));
            }
        for (int p : vpaths_)
            for (int q : vpaths_) {
                int r = V_.compose(p, q);
                if (r >= 0) d->vc1.set(vIdx.at(p), vIdx.at(q), vIdx.at(r));
            }
        std::map<int, std::vector<int>> byLeft, byTop;
        for (int r : roots) {
            byLeft[frame_[r][2]].push_back(r);
            byTop[frame_[r][0]].push_back(r);
        }
        for (int a : roots) {
            for (int b : byLeft[frame_[a][3]]) {
                int c = hcomp(a, b, false);
                if (c < 0) return false;
                d->hc2.set(sIdx.at(a), sIdx.at(b), sIdx.at(find(c)));
            }
            for (int b : byTop[frame_[a][1]]) {
                int c = vcomp(a, b, false);
                if (c < 0) return false;
                d->vc2.set(sIdx.at(a), sIdx.at(b), sIdx.at(find(c)));
            }
        }
        d->finalize();

        T.cat = d;
        T.genMap.assign(P_.generators.size(), -1);
        for (std::size_t g = 0; g < P_.generators.size(); ++g) {
            const Generator& x = P_.generators[g];
            switch (x.kind) {
                case GenKind::Object: T.genMap[g] = x.a * b0 + x.b; break;
                case GenKind::HCell: T.genMap[g] = hIdx.at(x.path); break;
                case GenKind::VCell: T.genMap[g] = vIdx.at(x.path); break;
                case GenKind::Square: T.genMap[g] = sIdx.at(find(genNode_[g])); break;
            }
        }
        evalSquare_ = [this, sIdx](int w) { return sIdx.at(find(eval(w))); };
        hIdx_ = std::move(hIdx);
        vIdx_ = std::move(vIdx);
        return true;
    }

    // After emit: a presentation word as a square of the emitted category.
    int squareOfWord(int w) { return evalSquare_(w); }
    int hcellOfPath(int p) const { return hIdx_.at(p); }
    int vcellOfPath(int p) const { return vIdx_.at(p); }

private:
    TensorPresentation& P_;
    PathStore &H_, &V_;
    int D_;
    std::size_t maxClasses_;
    Budget& budget_;

    std::vector<Node> nodes_;
    std::vector<int> parent_, depth_, rep_, vidOf_, hidOf_, size_;
    std::vector<std::array<int, 4>> frame_;
    std::unordered_map<std::uint64_t, int> hcT_, vcT_;
    std::unordered_map<int, int> vidNode_, hidNode_;
    std::vector<int> dblNode_, genNode_;
    std::vector<int> hpaths_, vpaths_;
    std::map<int, std::vector<std::pair<int, int>>> hsplits_, vsplits_;
    std::size_t unions_ = 0;
    bool dirty_ = false;
    std::function<int(int)> evalSquare_;
    std::unordered_map<int, int> hIdx_, vIdx_;

    static std::uint64_t key(int a, int b) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
    }

    // All paths of depth <= D, closed under composition, with every way of
    // writing each as a binary composite.
    void pathClosure(PathStore& S, std::vector<int>& out, std::map<int, std::vector<std::pair<int, int>>>& splits) {
        std::set<int> seen;
        for (int o = 0; o < S.nObj(); ++o) seen.insert(S.identity(o));
        for (const auto& g : P_.generators)
            if (g.kind == (&S == &H_ ? GenKind::HCell : GenKind::VCell)) seen.insert(g.path);
        std::vector<int> cur(seen.begin(), seen.end());
        for (bool grown = true; grown;) {
            grown = false;
            std::vector<int> add;
            for (int p : cur)
                for (int q : cur) {
                    int r = S.compose(p, q);
                    if (r < 0) continue;
                    budget_.tick();
                    if (S.depth(r) > D_) throw Unbounded("1-cell " + S.name(r) + " needs depth " + std::to_string(S.depth(r)));
                    if (!seen.count(r)) {
                        seen.insert(r);
                        add.push_back(r);
                    }
                }
            if (!add.empty()) {
                grown = true;
                cur.insert(cur.end(), add.begin(), add.end());
            }
        }
        out.assign(seen.begin(), seen.end());
        for (int p : out)
            for (int q : out) {
                int r = S.compose(p, q);
                if (r >= 0 && !S.isIdentity(p) && !S.isIdentity(q)) splits[r].push_back({p, q});
            }
    }

    int make(Node n, int depth, std::array<int, 4> fr) {
        budget_.tick();
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(n);
        parent_.push_back(id);
        depth_.push_back(depth);
        rep_.push_back(id);
        vidOf_.push_back(-1);
        hidOf_.push_back(-1);
        size_.push_back(1);
        frame_.push_back(fr);
        if (nodes_.size() > maxClasses_ * 4 || classes_ + 1 > maxClasses_)
            throw Unbounded("more than " + std::to_string(maxClasses_) + " square classes");
        ++classes_;
        return id;
    }
    std::size_t classes_ = 0;

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (frame_[a] != frame_[b])
            throw Inconsistent("identified squares with different frames");
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        if (depth_[b] < depth_[a] || (depth_[b] == depth_[a] && rep_[b] < rep_[a])) rep_[a] = rep_[b];
        depth_[a] = std::min(depth_[a], depth_[b]);
        if (vidOf_[a] < 0) vidOf_[a] = vidOf_[b];
        if (hidOf_[a] < 0) hidOf_[a] = hidOf_[b];
        --classes_;
        ++unions_;
        dirty_ = true;
    }

    int dbl(int o) {
        if (dblNode_.empty()) dblNode_.assign(H_.nObj(), -1);
        if (dblNode_[o] >= 0) return dblNode_[o];
        int hp = H_.identity(o), vp = V_.identity(o);
        int n = make({Word::VId, -1, hp}, 1, {hp, hp, vp, vp});
        vidOf_[n] = hp;
        hidOf_[n] = vp;
        vidNode_[hp] = n;
        hidNode_[vp] = n;
        return dblNode_[o] = n;
    }

    int vid(int p) {
        if (H_.isIdentity(p)) return dbl(H_.src(p));
        auto it = vidNode_.find(p);
        if (it != vidNode_.end()) return it->second;
        int n = make({Word::VId, -1, p}, H_.depth(p), {p, p, V_.identity(H_.src(p)), V_.identity(H_.tgt(p))});
        vidOf_[n] = p;
        vidNode_[p] = n;
        return n;
    }

    int hid(int v) {
        if (V_.isIdentity(v)) return dbl(V_.src(v));
        auto it = hidNode_.find(v);
        if (it != hidNode_.end()) return it->second;
        int n = make({Word::HId, -1, v}, V_.depth(v), {H_.identity(V_.src(v)), H_.identity(V_.tgt(v)), v, v});
        hidOf_[n] = v;
        hidNode_[v] = n;
        return n;
    }

    // Composites with the unit laws applied; create = false only looks up.
    int hcomp(int a, int b, bool create) {
        a = find(a);
        b = find(b);
        if (frame_[a][3] != frame_[b][2]) throw Inconsistent("horizontal composite with mismatched sides");
        if (hidOf_[a] >= 0) return b;
        if (hidOf_[b] >= 0) return a;
        if (vidOf_[a] >= 0 && vidOf_[b] >= 0) return find(vid(H_.compose(vidOf_[a], vidOf_[b])));
        auto it = hcT_.find(key(a, b));
        if (it != hcT_.end()) return find(it->second);
        if (!create) return -1;
        int n = make({Word::HC, -1, -1, a, b}, std::max(depth_[a], depth_[b]) + 1,
                     {H_.compose(frame_[a][0], frame_[b][0]), H_.compose(frame_[a][1], frame_[b][1]), frame_[a][2],
                      frame_[b][3]});
        hcT_[key(a, b)] = n;
        return n;
    }

    int vcomp(int a, int b, bool create) {
        a = find(a);
        b = find(b);
        if (frame_[a][1] != frame_[b][0]) throw Inconsistent("vertical composite with mismatched sides");
        if (vidOf_[a] >= 0) return b;
        if (vidOf_[b] >= 0) return a;
        if (hidOf_[a] >= 0 && hidOf_[b] >= 0) return find(hid(V_.compose(hidOf_[a], hidOf_[b])));
        auto it = vcT_.find(key(a, b));
        if (it != vcT_.end()) return find(it->second);
        if (!create) return -1;
        int n = make({Word::VC, -1, -1, a, b}, std::max(depth_[a], depth_[b]) + 1,
                     {frame_[a][0], frame_[b][1], V_.compose(frame_[a][2], frame_[b][2]),
                      V_.compose(frame_[a][3], frame_[b][3])});
        vcT_[key(a, b)] = n;
        return n;
    }

    int eval(int w) {
        const Word& x = P_.words[w];
        switch (x.kind) {
            case Word::Gen: return genNode_[x.gen];
            case Word::VId: return vid(x.path);
            case Word::HId: return hid(x.path);
            case Word::HC: return hcomp(eval(x.a), eval(x.b), true);
            case Word::VC: return vcomp(eval(x.a), eval(x.b), true);
        }
        return -1;
    }

    void rebuildTable(std::unordered_map<std::uint64_t, int>& T, bool horizontal) {
        std::unordered_map<std::uint64_t, int> fresh;
        fresh.reserve(T.size());
        for (auto [k, c] : T) {
            int a = find(static_cast<int>(k >> 32)), b = find(static_cast<int>(k & 0xffffffffu));
            c = find(c);
            int unit = -1;
            if (horizontal) {
                if (hidOf_[a] >= 0) unit = b;
                else if (hidOf_[b] >= 0) unit = a;
                else if (vidOf_[a] >= 0 && vidOf_[b] >= 0) unit = vid(H_.compose(vidOf_[a], vidOf_[b]));
            } else {
                if (vidOf_[a] >= 0) unit = b;
                else if (vidOf_[b] >= 0) unit = a;
                else if (hidOf_[a] >= 0 && hidOf_[b] >= 0) unit = hid(V_.compose(hidOf_[a], hidOf_[b]));
            }
            if (unit >= 0) {
                unite(c, unit);
                continue;
            }
            auto [it, inserted] = fresh.emplace(key(a, b), c);
            if (!inserted) unite(it->second, c);
        }
        T.swap(fresh);
    }

    void rebuild() {
        while (dirty_) {
            dirty_ = false;
            rebuildTable(hcT_, true);
            rebuildTable(vcT_, false);
        }
    }

    std::vector<int> roots() {
        std::vector<int> r;
        for (int x = 0; x < static_cast<int>(nodes_.size()); ++x)
            if (parent_[x] == x) r.push_back(x);
        return r;
    }

    void expand() {
        std::vector<int> live;
        for (int r : roots())
            if (depth_[r] <= D_) live.push_back(r);
        std::unordered_map<int, std::vector<int>> byLeft, byTop;
        for (int r : live) {
            byLeft[frame_[r][2]].push_back(r);
            byTop[frame_[r][0]].push_back(r);
        }
        for (int a : live) {
            auto l = byLeft.find(frame_[a][3]);
            if (l != byLeft.end())
                for (int b : l->second) hcomp(a, b, true);
            auto t = byTop.find(frame_[a][1]);
            if (t != byTop.end())
                for (int b : t->second) vcomp(a, b, true);
        }
    }

    using Decomp = std::unordered_map<int, std::vector<std::pair<int, int>>>;

    // Every known way of writing each class as a horizontal (vertical)
    // composite, including the unit laws and identity squares on composite
    // paths.
    Decomp decompositions(bool horizontal) {
        Decomp d;
        for (auto [k, c] : horizontal ? hcT_ : vcT_)
            d[find(c)].push_back({find(static_cast<int>(k >> 32)), find(static_cast<int>(k & 0xffffffffu))});
        auto& splits = horizontal ? hsplits_ : vsplits_;
        for (int r : roots()) {
            const auto& f = frame_[r];
            if (horizontal) {
                d[r].push_back({r, find(hid(f[3]))});
                d[r].push_back({find(hid(f[2])), r});
                if (vidOf_[r] >= 0) {
                    auto it = splits.find(vidOf_[r]);
                    if (it != splits.end())
                        for (auto [p, q] : it->second) d[r].push_back({find(vid(p)), find(vid(q))});
                }
            } else {
                d[r].push_back({r, find(vid(f[1]))});
                d[r].push_back({find(vid(f[0])), r});
                if (hidOf_[r] >= 0) {
                    auto it = splits.find(hidOf_[r]);
                    if (it != splits.end())
                        for (auto [p, q] : it->second) d[r].push_back({find(hid(p)), find(hid(q))});
                }
            }
        }
        for (auto& [_, v] : d) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }
        return d;
    }

    void associativity(bool horizontal, const Decomp& dec) {
        auto comp = [&](int a, int b) { return horizontal ? hcomp(a, b, false) : vcomp(a, b, false); };
        auto isUnit = [&](int x) { return horizontal ? hidOf_[find(x)] >= 0 : vidOf_[find(x)] >= 0; };
        for (const auto& [y, ds] : dec)
            for (auto [x, c] : ds) {
                if (isUnit(c)) continue;
                auto it = dec.find(x);
                if (it == dec.end()) continue;
                for (auto [a, b] : it->second) {
                    if (isUnit(a) || isUnit(b)) continue;
                    budget_.tick();
                    int bc = comp(b, c);
                    if (bc < 0) continue;
                    int r = comp(a, bc);
                    if (r >= 0) unite(y, r);
                }
            }
    }

    void interchange(const Decomp& decH, const Decomp& decV) {
        for (const auto& [z, ds] : decV)
            for (auto [x, y] : ds) {
                auto ix = decH.find(x), iy = decH.find(y);
                if (ix == decH.end() || iy == decH.end()) continue;
                for (auto [a, b] : ix->second)
                    for (auto [c, d] : iy->second) {
                        if (frame_[find(a)][1] != frame_[find(c)][0] || frame_[find(b)][1] != frame_[find(d)][0])
                            continue;
                        budget_.tick();
                        int u = vcomp(a, c, false), w = vcomp(b, d, false);
                        if (u < 0 || w < 0) continue;
                        int z2 = hcomp(u, w, false);
                        if (z2 >= 0) unite(z, z2);
                    }
            }
    }

    void axioms() {
        Decomp dh = decompositions(true), dv = decompositions(false);
        associativity(true, dh);
        associativity(false, dv);
        interchange(dh, dv);
    }
};

}  // namespace

RealizeResult realizeTensor(CatPtr A, CatPtr B, const RealizeOptions& opt, Budget& budget) {
    RealizeResult res;
    RealizedTensor T;
    T.presentation = buildPresentation(A, B);
    T.depth = opt.maxDepth;
    Closure cl(T.presentation, opt.maxDepth, opt.maxClasses, budget);
    try {
        cl.run();
    } catch (const Unbounded& e) {
        res.failure = std::string("unbounded: ") + e.what();
        return res;
    } catch (const Inconsistent& e) {
        res.failure = std::string("uncertified: ") + e.what();
        return res;
    }
    res.classes = cl.classCount();
    if (!cl.closed() || !cl.emit(T)) {
        res.failure = "unbounded: composites of depth " + std::to_string(opt.maxDepth + 1) + " are not all reduced";
        return res;
    }
    Report r = validate(*T.cat);
    if (!r.ok()) {
        res.failure = "uncertified: quotient is not a double category: " + r.summary(3);
        return res;
    }

    // The universal cone, read off the generators.
    const DoubleCategory &a = *A, &b = *B;
    const TensorPresentation& P = T.presentation;
    TensorCone u;
    u.A = A;
    u.B = B;
    u.C = T.cat;
    const int b0 = b.nObj();
    for (int X = 0; X < a.nObj(); ++X) {
        for (int Y = 0; Y < b0; ++Y) u.obj.push_back(X * b0 + Y);
        for (int p = 0; p < b.nH(); ++p) u.objH.push_back(cl.hcellOfPath(P.hpaths->letterB(X, p)));
        for (int q = 0; q < b.nV(); ++q) u.objV.push_back(cl.vcellOfPath(P.vpaths->letterB(X, q)));
    }
    for (int h = 0; h < a.nH(); ++h)
        for (int Y = 0; Y < b0; ++Y) u.hObj.push_back(cl.hcellOfPath(P.hpaths->letterA(h, Y)));
    for (int v = 0; v < a.nV(); ++v)
        for (int Y = 0; Y < b0; ++Y) u.vObj.push_back(cl.vcellOfPath(P.vpaths->letterA(v, Y)));
    // Square entries go through the same word constructors as the relations.
    Builder wb(T.presentation);
    const std::size_t nWords = T.presentation.words.size();
    auto sq = [&](int w) { return cl.squareOfWord(w); };
    for (int X = 0; X < a.nObj(); ++X)
        for (int s = 0; s < b.nSq(); ++s) u.objSq.push_back(sq(wb.xs(X, s)));
    for (int w = 0; w < a.nSq(); ++w)
        for (int Y = 0; Y < b0; ++Y) u.sqObj.push_back(sq(wb.sy(w, Y)));
    for (int h = 0; h < a.nH(); ++h) {
        for (int q = 0; q < b.nV(); ++q) u.hv.push_back(sq(wb.hq(h, q)));
        for (int p = 0; p < b.nH(); ++p) {
            u.hh.push_back(sq(wb.hp(h, p)));
            u.hhInv.push_back(sq(wb.hp(h, p, true)));
        }
    }
    for (int v = 0; v < a.nV(); ++v) {
        for (int p = 0; p < b.nH(); ++p) u.vh.push_back(sq(wb.vp(v, p)));
        for (int q = 0; q < b.nV(); ++q) {
            u.vv.push_back(sq(wb.vq(v, q)));
            u.vvInv.push_back(sq(wb.vq(v, q, true)));
        }
    }
    T.presentation.words.resize(nWords);
    T.universal = std::move(u);
    Report cr = validateCone(T.universal);
    if (!cr.ok()) {
        res.failure = "uncertified: universal cone invalid: " + cr.summary(3);
        return res;
    }

    std::vector<CatPtr> cert = opt.certify;
    if (cert.empty()) {
        for (DoubleCategory d : {isoCellH(), isoCellV()}) {
            d.finalize();
            cert.push_back(std::make_shared<const DoubleCategory>(std::move(d)));
        }
    }
    for (const auto& C : cert) {
        std::size_t nf = enumerateDoubleFunctors(T.cat, C, budget).size();
        std::size_t nc = countCones(A, B, C, budget);
        if (nf != nc) {
            res.failure = "uncertified: " + std::to_string(nf) + " functors into " + C->name + " but " +
                          std::to_string(nc) + " cones";
            return res;
        }
        T.certifiedAgainst.push_back(C->name);
    }
    res.tensor = std::move(T);
    return res;
}

RealizeResult realizeTensor(CatPtr A, CatPtr B, int maxDepth) {
    Budget b;
    RealizeOptions o;
    o.maxDepth = maxDepth;
    return realizeTensor(std::move(A), std::move(B), o, b);
}

DoubleFunctor inducedFunctor(const RealizedTensor& T, const TensorCone& c) {
    const DoubleCategory& Q = *T.cat;
    const DoubleCategory& C = *c.C;
    const TensorPresentation& P = T.presentation;
    if (c.A.get() != P.A.get() || c.B.get() != P.B.get())
        throw StructuralError("induced functor: cone has different domains");
    const int b0 = P.B->nObj();
    DoubleFunctor F{T.cat, c.C, {}, {}, {}, {}};
    for (int o = 0; o < Q.nObj(); ++o) F.obj.push_back(c.ob(o / b0, o % b0));
    auto path = [&](const PathStore& S, int p, bool horizontal) {
        int r = horizontal ? C.hId(F.obj[S.src(p)]) : C.vId(F.obj[S.src(p)]);
        int at = S.src(p);
        for (const auto& l : S.letters(p)) {
            int X = at / b0, Y = at % b0, cell;
            if (horizontal) cell = l.bSide ? c.xh(X, l.cell) : c.hy(l.cell, Y);
            else cell = l.bSide ? c.xv(X, l.cell) : c.vy(l.cell, Y);
            r = horizontal ? C.hComp1(r, cell) : C.vComp1(r, cell);
            if (r < 0) throw StructuralError("induced functor: cone images do not compose");
            at = horizontal ? (l.bSide ? X * b0 + P.B->hTgt[l.cell] : P.A->hTgt[l.cell] * b0 + Y)
                            : (l.bSide ? X * b0 + P.B->vTgt[l.cell] : P.A->vTgt[l.cell] * b0 + Y);
        }
        return r;
    };
    for (int p : T.hcellPath) F.h.push_back(path(*P.hpaths, p, true));
    for (int v : T.vcellPath) F.v.push_back(path(*P.vpaths, v, false));
    // Generators: the cone value of the pair.
    auto genImage = [&](const Generator& g) {
        using K = CellKind;
        if (g.ka == K::Object) return c.xs(g.a, g.b);
        if (g.kb == K::Object) return c.sy(g.a, g.b);
        if (g.ka == K::HCell && g.kb == K::VCell) return c.hq(g.a, g.b);
        if (g.ka == K::VCell && g.kb == K::HCell) return c.vp(g.a, g.b);
        if (g.ka == K::HCell) return g.inverse ? c.hpInv(g.a, g.b) : c.hp(g.a, g.b);
        return g.inverse ? c.vqInv(g.a, g.b) : c.vq(g.a, g.b);
    };
    F.sq.assign(Q.nSq(), -1);
    std::function<int(int)> sq = [&](int s) -> int {
        if (F.sq[s] >= 0) return F.sq[s];
        const auto& w = T.squareWords[s];
        int r = -1;
        switch (w.kind) {
            case Word::Gen: r = genImage(P.generators[w.gen]); break;
            case Word::VId: r = C.sqVId(path(*P.hpaths, w.path, true)); break;
            case Word::HId: r = C.sqHId(path(*P.vpaths, w.path, false)); break;
            case Word::HC: r = C.hComp2(sq(w.a), sq(w.b)); break;
            case Word::VC: r = C.vComp2(sq(w.a), sq(w.b)); break;
        }
        if (r < 0) throw StructuralError("induced functor: cone images do not compose");
        return F.sq[s] = r;
    };
    for (int s = 0; s < Q.nSq(); ++s) sq(s);
    return F;
}

}  // namespace gd

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "graydbl/tensor.hpp"

namespace gd {

// A letter of a 1-cell path in A (x) B: a non-identity 1-cell of A at a
// fixed object Y of B (bSide false), or one of B at a fixed object X of A.
struct Letter {
    bool bSide = false;
    int cell = -1;
    int fixed = -1;
    auto operator<=>(const Letter&) const = default;
};

// Interned reduced paths of horizontal (or vertical) 1-cells of A (x) B.
// Adjacent letters from the same side with the same fixed object are
// composed in A or B and identities dropped, so each 1-cell of the tensor
// has exactly one path.  Objects of the tensor are X * |B_0| + Y.
class PathStore {
public:
    PathStore(CatPtr A, CatPtr B, bool horizontal);

    int identity(int obj) const { return static_cast<int>(obj); }
    // Single-letter path; identity path if the cell is an identity.
    int letterA(int cell, int Y);
    int letterB(int X, int cell);
    int compose(int p, int q);  // -1 if not composable
    int src(int p) const { return src_[p]; }
    int tgt(int p) const { return tgt_[p]; }
    const std::vector<Letter>& letters(int p) const { return letters_[p]; }
    bool isIdentity(int p) const { return letters_[p].empty(); }
    // Height of a balanced composition tree: 1 for letters and identities.
    int depth(int p) const;
    std::string name(int p) const;
    int size() const { return static_cast<int>(letters_.size()); }
    int nObj() const { return nObj_; }

private:
    CatPtr A_, B_;
    bool horizontal_;
    int nObj_;
    std::vector<int> src_, tgt_;
    std::vector<std::vector<Letter>> letters_;
    std::map<std::pair<int, std::vector<Letter>>, int> index_;

    int intern(int src, std::vector<Letter> w);
    int letterTgt(int src, const Letter& l) const;
    bool push(std::vector<Letter>& w, Letter l) const;
};

enum class GenKind { Object, HCell, VCell, Square };

// A generator of the presentation: a pair of cells (a of A, b of B), or the
// formal inverse of an interchanger.
struct Generator {
    GenKind kind = GenKind::Square;
    CellKind ka = CellKind::Object, kb = CellKind::Object;
    int a = -1, b = -1;
    bool inverse = false;
    std::string name;
    // Hcell/vcell generators: their path.  Squares: frame as path ids.
    int path = -1;
    int top = -1, bottom = -1, left = -1, right = -1;
};

// Pasting word: a generator square, an identity square on a path, or a
// binary composite.  Children index the owning word pool.
struct Word {
    enum Kind { Gen, VId, HId, HC, VC } kind = Gen;
    int gen = -1;   // Gen
    int path = -1;  // VId: hpath, HId: vpath
    int a = -1, b = -1;
};

struct Relation {
    std::string family;  // "(i)", "(vi)", "(vii)" or "(invertibility)"
    std::string label;
    int lhs = -1, rhs = -1;
};

struct TensorPresentation {
    CatPtr A, B;
    std::shared_ptr<PathStore> hpaths, vpaths;
    std::vector<Generator> generators;
    std::vector<Word> words;
    std::vector<Relation> relations;

    // Generator indices by pair; -1 where the pair is not a generator.
    std::vector<int> objGen;
    std::map<std::tuple<int, int, int, int, bool>, int> squareGen;  // (ka,a,kb,b,inverse)

    int squareGenerator(CellKind ka, int a, CellKind kb, int b, bool inverse = false) const;
    std::size_t countGenerators(GenKind k) const;
    std::string wordName(int w) const;
    // {top, bottom, left, right}; throws StructuralError on a composite
    // whose boundaries do not match.
    std::array<int, 4> wordFrame(int w) const;
};

TensorPresentation buildPresentation(CatPtr A, CatPtr B);
// Structural errors for relations whose sides are ill-formed or differ in
// frame.
Report checkPresentation(const TensorPresentation& P);
nlohmann::json presentationToJson(const TensorPresentation& P);

struct RealizedTensor {
    TensorPresentation presentation;
    CatPtr cat;
    TensorCone universal;  // (A, B; cat)
    // Generator -> cell of cat (of the generator's kind).
    std::vector<int> genMap;
    int depth = 0;
    std::vector<std::string> certifiedAgainst;

    // Representative word of every square of cat, over squares of cat.
    struct SquareWord {
        Word::Kind kind;
        int gen = -1, path = -1, a = -1, b = -1;
    };
    std::vector<SquareWord> squareWords;
    // Paths of cat's hcells and vcells.
    std::vector<int> hcellPath, vcellPath;
};

struct RealizeResult {
    std::optional<RealizedTensor> tensor;
    std::string failure;  // "unbounded" or "uncertified: ..."
    std::size_t classes = 0;
};

struct RealizeOptions {
    int maxDepth = 3;
    // Codomains for the certification counts.  Empty means isoCellH and
    // isoCellV.
    std::vector<CatPtr> certify;
    std::size_t maxClasses = 200000;
};

RealizeResult realizeTensor(CatPtr A, CatPtr B, const RealizeOptions& opt, Budget& budget);
RealizeResult realizeTensor(CatPtr A, CatPtr B, int maxDepth);

// The functor cat -> c.C induced by a cone c on (A, B).
DoubleFunctor inducedFunctor(const RealizedTensor& T, const TensorCone& c);

}  // namespace gd

#pragma once

#include <optional>
#include <vector>

#include "graydbl/double_category.hpp"
#include "graydbl/search.hpp"

namespace gd {

struct DoubleFunctor {
    CatPtr dom, cod;
    std::vector<int> obj, h, v, sq;

    int apply(CellKind k, int i) const;
    // Pointwise equality of the four maps.
    bool sameMaps(const DoubleFunctor& o) const { return obj == o.obj && h == o.h && v == o.v && sq == o.sq; }
};

Report validateFunctor(const DoubleFunctor& f);

DoubleFunctor identityFunctor(CatPtr c);
DoubleFunctor constantFunctor(CatPtr dom, CatPtr cod, int object);

// g after f. Throws StructuralError when cod(f) is not dom(g).
DoubleFunctor composeFunctors(const DoubleFunctor& g, const DoubleFunctor& f);

// All double functors a -> b, ordered lexicographically by
// (objMap, hMap, vMap, sqMap).
std::vector<DoubleFunctor> enumerateDoubleFunctors(CatPtr a, CatPtr b, Budget& budget);
std::vector<DoubleFunctor> enumerateDoubleFunctors(CatPtr a, CatPtr b);

// First cell on which f and g differ, if any.
std::optional<CellRef> firstDifference(const DoubleFunctor& f, const DoubleFunctor& g);

// Functor from an isomorphism record.
DoubleFunctor functorFromIso(CatPtr a, CatPtr b, const Isomorphism& iso);

}  // namespace gd

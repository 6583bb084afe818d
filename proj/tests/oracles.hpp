#pragma once

#include <string>

#include "graydbl/hom.hpp"
#include "graydbl/tensor.hpp"

namespace oracle {

// Checks a : [[A (x) B, C]] -> [[A,[[B,C]]]] against the componentwise
// description of the currying bijection: the image of a cell, read at X and
// then at Y, is the cell's own component at X*Y (functors: F(X*-), computed
// by currying F . univ).  Returns an empty string on agreement.
std::string assocAgreesWithCurry(const gd::DoubleFunctor& a, const gd::HomDouble& src, const gd::HomDouble& bc,
                                 const gd::HomDouble& tgt, const gd::TensorCone& univ);

// Injective and onto on every cell kind.
bool bijective(const gd::DoubleFunctor& f);

}  // namespace oracle

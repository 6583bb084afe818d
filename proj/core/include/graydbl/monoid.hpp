#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "graydbl/tensor.hpp"

namespace gd {

// A monoid in (DblCat, (x)) in flattened form: the unit object I, the
// operations X*c and c*X on every cell c, and the interchangers h*q, v*p,
// h*p (vertically invertible) and v*q (horizontally invertible).  The
// tables use the layout of a cone (A, A; A); star.A == star.B == star.C.
struct GrayMonoidData {
    TensorCone star;
    int unit = 0;

    const DoubleCategory& carrier() const { return *star.C; }
    CatPtr carrierPtr() const { return star.C; }
};

inline constexpr const char* kMonFunctors = "(i)";
inline constexpr const char* kMonUnit = "(ii)";
inline constexpr const char* kMonAssoc = "(iii)";
inline constexpr const char* kMonMixed = "(iv)";
inline constexpr const char* kMonIdentities = "(v)";
inline constexpr const char* kMonComposition = "(vi)";
inline constexpr const char* kMonNaturality = "(vii)";
inline constexpr const char* kMonInvertibility = "(invertibility)";

// All seven conditions by exhaustive enumeration.  Frame mismatches are
// structural; every other failure is named by its condition.
Report checkGrayMonoid(const GrayMonoidData& m);
// Only condition (vii).  Requires structurally sound data.
Report checkGrayNaturality(const GrayMonoidData& m);

// carrier x carrier -> carrier, strictly associative and unital with unit
// object `unit`, turned into a monoid with identity interchangers.  mult.dom
// must be cartesianProduct(carrier, carrier).  Throws std::invalid_argument
// if mult is not a double functor, or not associative, or not unital.
GrayMonoidData fromStrictMonoid(CatPtr carrier, const DoubleFunctor& mult, int unit);

// Discrete double category on the objects 0..n-1 with X*Y = table[X][Y].
// The table is not checked.
GrayMonoidData discreteMonoid(const std::vector<std::vector<int>>& table, int unit, const std::string& name = "M");

// Componentwise product on cartesianProduct(a.carrier, b.carrier).
GrayMonoidData productMonoid(const GrayMonoidData& a, const GrayMonoidData& b);

// The pseudo-pseudo multiplication carrier x carrier -> carrier: (h,k) goes
// to (h*Y).(X'*k), (f,g) to (f*Y).(X'*g) and a pair of squares to the 2x2
// pasting of omega*Y, g*p, k*q and X'''*theta.
struct DerivedMultiplication {
    CatPtr A;
    // Pair (a, b) of cells of one kind at a * count + b; -1 if undefined.
    std::vector<int> obj, h, v, sq;

    bool preservesIdentities = true;
    std::string identityWitness;
    // Strict means every comparison cell below is an identity.
    bool strictH = true, strictV = true;
    std::string hWitness, vWitness;
    // Frames and invertibility of the comparison cells
    // (1 | k*p | 1) : (h,p).(k,s) => (h.k, p.s)   (vertically invertible)
    // (1 / g*q / 1) : (f.g, q.r) => (f,q).(g,r)   (horizontally invertible)
    bool familiesValid = true;
    std::string familyWitness;
    std::size_t hFamilies = 0, vFamilies = 0;
};

// Throws std::invalid_argument unless checkGrayMonoid(m) is ok.
DerivedMultiplication derivedMultiplication(const GrayMonoidData& m);

// The schema: {"schema":1, "carrier": <double category>, "unit": obj,
// "left": {"objects","hcells","vcells","squares"}, "right": {...},
// "hv","vh","hh","hhInv","vv","vvInv"}; "left".k[X][c] is X*c,
// "right".k[c][X] is c*X and e.g. "hv"[h][q] is h*q.  Entries are cell
// references of the carrier.
nlohmann::json monoidToJson(const GrayMonoidData& m);
// If carrier is null the "carrier" member is read.
GrayMonoidData monoidFromJson(const nlohmann::json& j, CatPtr carrier = nullptr);

}  // namespace gd

#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graydbl/monoid.hpp"

// Test-only monoids built by hand.
namespace fx {

// One object, hcells {1h, a} and vcells {1v, b} (both Z/2), and for every
// thin frame (t, s, l, r) with t+s = l+r mod 2 one square per label in Z/6.
// Composition adds frames and labels.
struct Labelled {
    gd::CatPtr cat;
    int sq(int t, int s, int l, int r, int k) const;
    int label(int sq) const;
    int relabel(int sq, int k) const;
};
const Labelled& labelled();

// X*c = c = c*X on the labelled carrier, with the interchangers h*q, v*p,
// h*p, v*q of two non-identity cells carrying the given labels (inverses the
// negated ones) and all others labelled 0.
gd::GrayMonoidData bMonoid(int hq, int vp, int hp, int vq);
// {1, z} with z*z = z, times bMonoid(t, t, t, t).
gd::GrayMonoidData pMonoid(int t);
// The product square (object X of {1,z}, square s of the labelled carrier).
int pSquare(const gd::GrayMonoidData& p, int X, int s);

// Satisfy every condition.
std::vector<std::pair<std::string, gd::GrayMonoidData>> validMonoids();
// One mutant per condition name "(i)".."(vii)".
gd::GrayMonoidData mutant(const std::string& condition);
const std::vector<std::string>& conditionNames();

// Replaces `changes` random entries of X*sigma, sigma*X and the
// interchangers by other squares with the same frame (inverses follow).
gd::GrayMonoidData randomMutation(const gd::GrayMonoidData& m, std::mt19937& rng, int changes);

}  // namespace fx

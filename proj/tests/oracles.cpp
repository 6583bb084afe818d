#include "oracles.hpp"

#include <set>

using namespace gd;

namespace oracle {

std::string assocAgreesWithCurry(const DoubleFunctor& a, const HomDouble& src, const HomDouble& bc,
                                 const HomDouble& tgt, const TensorCone& univ) {
    const int na = univ.A->nObj(), nb = univ.B->nObj();
    for (std::size_t i = 0; i < src.functors.size(); ++i) {
        DoubleFunctor expect = curryCone(postcomposeCone(src.functors[i], univ), bc);
        if (!tgt.functors[a.obj[i]].sameMaps(expect)) return "functor " + std::to_string(i);
    }
    for (std::size_t i = 0; i < src.hps.size(); ++i) {
        const HPseudo& img = tgt.hps[a.h[i]];
        for (int X = 0; X < na; ++X)
            for (int Y = 0; Y < nb; ++Y)
                if (bc.hps[img.obj[X]].obj[Y] != src.hps[i].obj[univ.ob(X, Y)])
                    return "horizontal transformation " + std::to_string(i);
    }
    for (std::size_t i = 0; i < src.vps.size(); ++i) {
        const VPseudo& img = tgt.vps[a.v[i]];
        for (int X = 0; X < na; ++X)
            for (int Y = 0; Y < nb; ++Y)
                if (bc.vps[img.obj[X]].obj[Y] != src.vps[i].obj[univ.ob(X, Y)])
                    return "vertical transformation " + std::to_string(i);
    }
    for (std::size_t i = 0; i < src.mods.size(); ++i) {
        const Modification& img = tgt.mods[a.sq[i]];
        for (int X = 0; X < na; ++X)
            for (int Y = 0; Y < nb; ++Y)
                if (bc.mods[img.comp[X]].comp[Y] != src.mods[i].comp[univ.ob(X, Y)])
                    return "modification " + std::to_string(i);
    }
    return {};
}

bool bijective(const DoubleFunctor& f) {
    auto onto = [](const std::vector<int>& m, int n) {
        std::set<int> s(m.begin(), m.end());
        return static_cast<int>(m.size()) == n && static_cast<int>(s.size()) == n;
    };
    return onto(f.obj, f.cod->nObj()) && onto(f.h, f.cod->nH()) && onto(f.v, f.cod->nV()) &&
           onto(f.sq, f.cod->nSq());
}

}  // namespace oracle

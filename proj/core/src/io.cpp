#include "graydbl/io.hpp"

#include <set>

namespace gd {

using nlohmann::json;

namespace {

const std::vector<std::string>& names(const DoubleCategory& d, CellKind k) {
    switch (k) {
        case CellKind::Object: return d.objName;
        case CellKind::HCell: return d.hName;
        case CellKind::VCell: return d.vName;
        case CellKind::Square: return d.sqName;
    }
    return d.objName;
}

bool uniqueNames(const DoubleCategory& d, CellKind k) {
    const auto& n = names(d, k);
    return std::set<std::string>(n.begin(), n.end()).size() == n.size();
}

constexpr CellKind kKinds[] = {CellKind::Object, CellKind::HCell, CellKind::VCell, CellKind::Square};

}  // namespace

json cellRef(const DoubleCategory& d, CellKind k, int i) {
    if (uniqueNames(d, k)) return names(d, k)[i];
    return i;
}

int readCellRef(const DoubleCategory& d, CellKind k, const json& r) {
    if (r.is_number_integer()) {
        int i = r.get<int>();
        if (i < 0 || i >= d.count(k))
            throw StructuralError(std::string(kindName(k)) + " index " + std::to_string(i) + " out of range");
        return i;
    }
    if (!r.is_string()) throw StructuralError(std::string("bad ") + kindName(k) + " reference " + r.dump());
    int i = d.findByName(k, r.get<std::string>());
    if (i < 0) throw StructuralError(std::string("unknown ") + kindName(k) + " '" + r.get<std::string>() + "'");
    return i;
}

json doubleToJson(const DoubleCategory& d) {
    bool un[4];
    for (CellKind k : kKinds) un[static_cast<int>(k)] = uniqueNames(d, k);
    auto ref = [&](CellKind k, int i) -> json {
        if (un[static_cast<int>(k)]) return names(d, k)[i];
        return i;
    };
    json j;
    j["schema"] = kSchemaVersion;
    j["name"] = d.name;
    j["objects"] = d.objName;
    json hs = json::array(), vs = json::array(), ss = json::array();
    for (int h = 0; h < d.nH(); ++h)
        hs.push_back({{"id", d.hName[h]}, {"src", ref(CellKind::Object, d.hSrc[h])}, {"tgt", ref(CellKind::Object, d.hTgt[h])}});
    for (int v = 0; v < d.nV(); ++v)
        vs.push_back({{"id", d.vName[v]}, {"src", ref(CellKind::Object, d.vSrc[v])}, {"tgt", ref(CellKind::Object, d.vTgt[v])}});
    for (int s = 0; s < d.nSq(); ++s)
        ss.push_back({{"id", d.sqName[s]},
                      {"top", ref(CellKind::HCell, d.top[s])},
                      {"bottom", ref(CellKind::HCell, d.bottom[s])},
                      {"left", ref(CellKind::VCell, d.left[s])},
                      {"right", ref(CellKind::VCell, d.right[s])}});
    j["hcells"] = hs;
    j["vcells"] = vs;
    j["squares"] = ss;
    json hid = json::array(), vid = json::array(), shid = json::array(), svid = json::array();
    for (int a = 0; a < d.nObj(); ++a) {
        hid.push_back(ref(CellKind::HCell, d.hIdOf[a]));
        vid.push_back(ref(CellKind::VCell, d.vIdOf[a]));
    }
    for (int v = 0; v < d.nV(); ++v) shid.push_back(ref(CellKind::Square, d.sqHIdOf[v]));
    for (int h = 0; h < d.nH(); ++h) svid.push_back(ref(CellKind::Square, d.sqVIdOf[h]));
    j["hIdentity"] = hid;
    j["vIdentity"] = vid;
    j["sqHIdentity"] = shid;
    j["sqVIdentity"] = svid;
    auto table = [&](const PairTable& t, CellKind k) {
        json a = json::array();
        for (auto [x, y, r] : t.sortedEntries()) a.push_back({ref(k, x), ref(k, y), ref(k, r)});
        return a;
    };
    j["hcomp1"] = table(d.hc1, CellKind::HCell);
    j["vcomp1"] = table(d.vc1, CellKind::VCell);
    j["hcomp2"] = table(d.hc2, CellKind::Square);
    j["vcomp2"] = table(d.vc2, CellKind::Square);
    return j;
}

DoubleCategory doubleFromJson(const json& j) {
    try {
        if (j.contains("schema") && j.at("schema").get<int>() != kSchemaVersion)
            throw StructuralError("unsupported schema version " + j.at("schema").dump());
        DoubleCategory d;
        d.name = j.value("name", std::string("unnamed"));
        for (const auto& n : j.at("objects")) d.addObject(n.get<std::string>());
        auto obj = [&](const json& r) { return readCellRef(d, CellKind::Object, r); };
        for (const auto& r : j.value("hcells", json::array())) d.addH(r.at("id"), obj(r.at("src")), obj(r.at("tgt")));
        for (const auto& r : j.value("vcells", json::array())) d.addV(r.at("id"), obj(r.at("src")), obj(r.at("tgt")));
        auto H = [&](const json& r) { return readCellRef(d, CellKind::HCell, r); };
        auto V = [&](const json& r) { return readCellRef(d, CellKind::VCell, r); };
        for (const auto& r : j.value("squares", json::array()))
            d.addSquare(r.at("id"), H(r.at("top")), H(r.at("bottom")), V(r.at("left")), V(r.at("right")));
        if (!j.contains("hIdentity")) {
            d.addIdentitiesAndUnitCompositions();
        } else {
            auto fill = [&](const char* key, CellKind k, std::vector<int>& out) {
                const json& a = j.at(key);
                if (a.size() != out.size()) throw StructuralError(std::string(key) + " has the wrong length");
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = readCellRef(d, k, a[i]);
            };
            fill("hIdentity", CellKind::HCell, d.hIdOf);
            fill("vIdentity", CellKind::VCell, d.vIdOf);
            fill("sqHIdentity", CellKind::Square, d.sqHIdOf);
            fill("sqVIdentity", CellKind::Square, d.sqVIdOf);
        }
        auto comp = [&](const char* key, CellKind k, PairTable& t) {
            for (const auto& e : j.value(key, json::array())) {
                if (!e.is_array() || e.size() != 3) throw StructuralError(std::string(key) + " entries are triples");
                t.set(readCellRef(d, k, e[0]), readCellRef(d, k, e[1]), readCellRef(d, k, e[2]));
            }
        };
        comp("hcomp1", CellKind::HCell, d.hc1);
        comp("vcomp1", CellKind::VCell, d.vc1);
        comp("hcomp2", CellKind::Square, d.hc2);
        comp("vcomp2", CellKind::Square, d.vc2);
        d.finalize();
        return d;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed double category JSON: ") + e.what());
    }
}

json functorToJson(const DoubleFunctor& f) {
    json j;
    j["schema"] = kSchemaVersion;
    j["dom"] = f.dom->name;
    j["cod"] = f.cod->name;
    auto arr = [&](CellKind k, const std::vector<int>& m) {
        json a = json::array();
        for (std::size_t i = 0; i < m.size(); ++i)
            a.push_back({cellRef(*f.dom, k, static_cast<int>(i)), cellRef(*f.cod, k, m[i])});
        return a;
    };
    j["objects"] = arr(CellKind::Object, f.obj);
    j["hcells"] = arr(CellKind::HCell, f.h);
    j["vcells"] = arr(CellKind::VCell, f.v);
    j["squares"] = arr(CellKind::Square, f.sq);
    return j;
}

DoubleFunctor functorFromJson(const json& j, CatPtr dom, CatPtr cod) {
    try {
        DoubleFunctor f{dom, cod, {}, {}, {}, {}};
        auto read = [&](const char* key, CellKind k, std::vector<int>& out) {
            out.assign(dom->count(k), -1);
            for (const auto& e : j.at(key)) {
                if (!e.is_array() || e.size() != 2)
                    throw StructuralError(std::string("functor map '") + key + "' entries are [domain, codomain] pairs");
                int x = readCellRef(*dom, k, e[0]);
                if (out[x] >= 0) throw StructuralError(std::string("functor map '") + key + "' repeats a cell");
                out[x] = readCellRef(*cod, k, e[1]);
            }
            for (int x : out)
                if (x < 0) throw StructuralError(std::string("functor map '") + key + "' is not total");
        };
        read("objects", CellKind::Object, f.obj);
        read("hcells", CellKind::HCell, f.h);
        read("vcells", CellKind::VCell, f.v);
        read("squares", CellKind::Square, f.sq);
        return f;
    } catch (const json::exception& e) {
        throw StructuralError(std::string("malformed functor JSON: ") + e.what());
    }
}

json reportToJson(const Report& r) {
    json j;
    j["ok"] = r.ok();
    j["structural"] = r.structural;
    json v = json::array();
    for (const auto& x : r.violations) v.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    j["violations"] = v;
    return j;
}

}  // namespace gd

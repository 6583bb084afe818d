#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

#include "graydbl/chi.hpp"
#include "graydbl/coherence.hpp"
#include "graydbl/io.hpp"
#include "graydbl/monoid.hpp"
#include "graydbl/presentation.hpp"

namespace gdcli {

using namespace gd;
using nlohmann::json;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Settings {
    std::uint64_t budget = 10'000'000;
    int depth = 5;
    bool json = false;
    int jobs = 1;
};

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\"");
    auto e = s.find_last_not_of(" \t\r\"");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// key = value lines; '#' starts a comment.
void readConfig(const std::string& path, Settings& s) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config " + path);
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        line = line.substr(0, line.find('#'));
        if (trim(line).empty() || trim(line)[0] == '[') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(n) + ": expected key = value");
        std::string k = trim(line.substr(0, eq)), v = trim(line.substr(eq + 1));
        try {
            if (k == "budget")
                s.budget = std::stoull(v);
            else if (k == "depth")
                s.depth = std::stoi(v);
            else if (k == "jobs")
                s.jobs = std::stoi(v);
            else if (k == "format")
                s.json = v == "json";
            else
                throw UsageError(path + ":" + std::to_string(n) + ": unknown key '" + k + "'");
        } catch (const std::logic_error&) {
            throw UsageError(path + ":" + std::to_string(n) + ": bad value for '" + k + "'");
        }
    }
}

json readJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

template <class T>
std::shared_ptr<const T> finish(T d) {
    d.finalize();
    return std::make_shared<const T>(std::move(d));
}

std::vector<std::string> splitTop(const std::string& s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char ch : s) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

// "f(x)" -> x when s starts with f(.
bool call(const std::string& s, const std::string& f, std::string& inner) {
    if (s.size() < f.size() + 2 || s.compare(0, f.size() + 1, f + "(") != 0 || s.back() != ')') return false;
    inner = s.substr(f.size() + 1, s.size() - f.size() - 2);
    return true;
}

std::optional<TwoCategory> twoZoo(const std::string& n) {
    if (n == "1" || n == "one" || n == "terminal") return terminal2();
    if (n == "arrow2") return arrow2();
    if (n == "chain2") return chain2();
    if (n == "walking2Cell") return walking2Cell();
    if (n == "invertible2Cell") return invertible2Cell();
    if (n == "idempotent2") return idempotent2();
    return std::nullopt;
}

int suffixNumber(const std::string& n, const std::string& prefix) {
    if (n.size() <= prefix.size() || n.compare(0, prefix.size(), prefix) != 0) return -1;
    std::string rest = n.substr(prefix.size());
    if (rest.find_first_not_of("0123456789") != std::string::npos || rest.size() > 3) return -1;
    return std::stoi(rest);
}

TwoCategory twoFromName(const std::string& n);

DoubleCategory doubleFromName(const std::string& n) {
    auto parts = splitTop(n, '*');
    if (parts.size() > 1) {
        DoubleCategory d = doubleFromName(parts[0]);
        for (std::size_t i = 1; i < parts.size(); ++i) {
            d.finalize();
            d = cartesianProduct(d, doubleFromName(parts[i]));
        }
        return d;
    }
    std::string inner;
    if (call(n, "sqr", inner)) return quintetSqr(*finish(twoFromName(inner)));
    if (call(n, "vd", inner)) return verticallyDiscrete(*finish(twoFromName(inner)));
    if (call(n, "transpose", inner)) {
        auto d = finish(doubleFromName(inner));
        return transpose(*d);
    }
    if (n == "1" || n == "one" || n == "terminal") return terminal();
    if (n == "empty") return emptyDouble();
    if (n == "G") return generatorG();
    if (n == "arrowH") return freeArrowH();
    if (n == "arrowV") return freeArrowV();
    if (n == "isoH") return isoCellH();
    if (n == "isoV") return isoCellV();
    if (int k = suffixNumber(n, "Z"); k >= 1) return cyclicSquare(k);
    if (int k = suffixNumber(n, "discrete"); k >= 0) return discrete(k);
    if (auto t = twoZoo(n)) return verticallyDiscrete(*finish(*t));
    throw UsageError("unknown double category zoo:" + n);
}

TwoCategory twoFromName(const std::string& n) {
    std::string inner;
    if (call(n, "H", inner)) return horizontal2Cat(*finish(doubleFromName(inner)));
    if (call(n, "V", inner)) return vertical2Cat(*finish(doubleFromName(inner)));
    if (auto t = twoZoo(n)) return *t;
    throw UsageError("unknown 2-category zoo:" + n);
}

struct CheckLine {
    std::string name;
    bool ok = true;
    std::string witness, detail;
    int code = kOk;  // kAxiom or kResource on failure
};

// One command's outcome.
struct Result {
    std::vector<CheckLine> checks;
    json data = json::object();
    std::vector<std::string> text;
    int usage = 0;
    std::string usageMessage;
    bool asJson = false;

    void add(const std::string& name, bool ok, const std::string& witness = {}, const std::string& detail = {},
             int failCode = kAxiom) {
        checks.push_back({name, ok, witness, detail, ok ? kOk : failCode});
    }
    void add(const std::string& name, const Report& r) {
        std::string w;
        if (!r.structural.empty())
            w = "structural: " + r.structural.front();
        else if (!r.violations.empty())
            w = r.violations.front().axiom + ": " + r.violations.front().witness;
        add(name, r.ok(), w, r.ok() ? "" : r.summary(5));
    }
    void add(const std::string& name, const CheckResult& r) { add(name, r.ok, r.witness, r.detail); }
    void add(const CoherenceResult& r) {
        if (r.status == CoherenceResult::Skipped)
            add(r.law, false, r.reason, "skipped", kResource);
        else
            add(r.law, r.passed(), r.witness);
    }
    int exit() const {
        if (usage) return usage;
        int c = kOk;
        for (const auto& x : checks)
            if (x.code == kAxiom) return kAxiom;
            else if (x.code == kResource) c = kResource;
        return c;
    }
};

class Runner {
public:
    explicit Runner(const Settings& s) : s_(s), budget_(s.budget), homs_(budget_), twoHoms_(budget_), chi_(homs_, twoHoms_),
                                         tensors_(budget_, s.depth) {}

    CatPtr dbl(const std::string& arg) {
        if (auto it = dbls_.find(arg); it != dbls_.end()) return it->second;
        CatPtr c;
        if (arg.rfind("zoo:", 0) == 0) {
            c = finish(doubleFromName(arg.substr(4)));
        } else {
            try {
                c = finish(doubleFromJson(readJsonFile(arg)));
            } catch (const StructuralError& e) {
                throw UsageError(arg + ": " + e.what());
            }
        }
        return dbls_[arg] = c;
    }
    TwoCatPtr two(const std::string& arg) {
        if (auto it = twos_.find(arg); it != twos_.end()) return it->second;
        TwoCatPtr c;
        if (arg.rfind("zoo:", 0) == 0) {
            c = finish(twoFromName(arg.substr(4)));
        } else {
            try {
                c = finish(twoCatFromJson(readJsonFile(arg)));
            } catch (const StructuralError& e) {
                throw UsageError(arg + ": " + e.what());
            }
        }
        return twos_[arg] = c;
    }

    const Settings& settings() const { return s_; }
    Budget& budget() { return budget_; }
    HomCache& homs() { return homs_; }
    ChiEnv& chi() { return chi_; }
    TensorCache& tensors() { return tensors_; }

private:
    Settings s_;
    Budget budget_;
    HomCache homs_;
    TwoHomCache twoHoms_;
    ChiEnv chi_;
    TensorCache tensors_;
    std::map<std::string, CatPtr> dbls_;
    std::map<std::string, TwoCatPtr> twos_;
};

json counts(const DoubleCategory& d) {
    return {{"name", d.name}, {"objects", d.nObj()}, {"hcells", d.nH()}, {"vcells", d.nV()}, {"squares", d.nSq()}};
}
json counts(const TwoCategory& t) {
    return {{"name", t.name}, {"objects", t.nObj()}, {"1-cells", t.n1()}, {"2-cells", t.n2()}};
}
std::string countLine(const json& c) {
    std::ostringstream o;
    o << c["name"].get<std::string>() << ":";
    for (const char* k : {"objects", "hcells", "vcells", "squares", "1-cells", "2-cells"})
        if (c.contains(k)) o << " " << c[k] << " " << k;
    return o.str();
}

void describeDouble(Result& r, const std::string& key, const DoubleCategory& d) {
    r.data[key] = counts(d);
    r.text.push_back(countLine(r.data[key]));
}

// Subcommand implementations.  Each fills in a Result.
void cmdValidate(Runner& R, Result& r, const std::string& a) {
    CatPtr d = R.dbl(a);
    describeDouble(r, "counts", *d);
    r.add("validate " + d->name, validate(*d));
}

void cmdFunctors(Runner& R, Result& r, const std::string& a, const std::string& b, bool list) {
    CatPtr A = R.dbl(a), B = R.dbl(b);
    auto fs = enumerateDoubleFunctors(A, B, R.budget());
    r.data["count"] = fs.size();
    r.text.push_back(std::to_string(fs.size()) + " double functors " + A->name + " -> " + B->name);
    if (list) {
        json arr = json::array();
        for (const auto& f : fs) arr.push_back(functorToJson(f));
        r.data["functors"] = arr;
        for (const auto& f : fs) r.text.push_back(functorToJson(f).dump());
    }
    bool allValid = true;
    for (const auto& f : fs) allValid = allValid && validateFunctor(f).ok();
    r.add("enumerated functors are valid", allValid);
}

void cmdHom(Runner& R, Result& r, const std::string& a, const std::string& b, bool strict) {
    CatPtr A = R.dbl(a), B = R.dbl(b);
    HomPtr h = R.homs().get(A, B, strict);
    describeDouble(r, "counts", *h->cat);
    r.add(std::string(strict ? "<<" : "[[") + A->name + "," + B->name + (strict ? ">>" : "]]") + " validates",
          validate(*h->cat));
}

void cmdCanonical(Runner& R, Result& r, const std::string& law, const std::vector<std::string>& args) {
    static const std::map<std::string, std::size_t> arity{{"l-comm", 4}, {"l-id", 2},        {"r-square", 3},
                                                          {"r-id", 2},   {"lr-pentagon", 3}, {"lr-square", 3},
                                                          {"f-involution", 3}};
    auto it = arity.find(law);
    if (it == arity.end()) throw UsageError("unknown law " + law);
    if (args.size() != it->second)
        throw UsageError(law + " takes " + std::to_string(it->second) + " double categories");
    std::vector<CatPtr> c;
    for (const auto& a : args) c.push_back(R.dbl(a));
    HomCache& h = R.homs();
    CheckResult res;
    if (law == "l-comm") res = checkLCommutation(h, c[0], c[1], c[2], c[3]);
    if (law == "l-id") res = checkLIdentity(h, c[0], c[1]);
    if (law == "r-square") res = checkRSquare(h, c[0], c[1], c[2]);
    if (law == "r-id") res = checkRIdentity(h, c[0], c[1]);
    if (law == "lr-pentagon") res = checkLRPentagon(h, c[0], c[1], c[2]);
    if (law == "lr-square") res = checkLRSquare(h, c[0], c[1], c[2]);
    if (law == "f-involution") res = checkFInvolution(h, c[0], c[1], c[2]);
    r.add(law, res);
}

void cmdTensor(Runner& R, Result& r, const std::string& what, const std::vector<std::string>& args) {
    if (what == "present") {
        if (args.size() != 2) throw UsageError("tensor present takes A B");
        TensorPresentation P = buildPresentation(R.dbl(args[0]), R.dbl(args[1]));
        r.data["presentation"] = presentationToJson(P);
        r.text.push_back("generators: " + std::to_string(P.countGenerators(GenKind::Object)) + " objects, " +
                         std::to_string(P.countGenerators(GenKind::HCell)) + " hcells, " +
                         std::to_string(P.countGenerators(GenKind::VCell)) + " vcells, " +
                         std::to_string(P.countGenerators(GenKind::Square)) + " squares; " +
                         std::to_string(P.relations.size()) + " relations");
        r.add("presentation is well formed", checkPresentation(P));
    } else if (what == "realize") {
        if (args.size() != 2) throw UsageError("tensor realize takes A B");
        RealizeOptions opt;
        opt.maxDepth = R.settings().depth;
        RealizeResult res = realizeTensor(R.dbl(args[0]), R.dbl(args[1]), opt, R.budget());
        r.data["classes"] = res.classes;
        if (!res.tensor) {
            r.data["failure"] = res.failure;
            r.text.push_back("not realized: " + res.failure);
            r.add("realize", false, res.failure, {}, kResource);
            return;
        }
        describeDouble(r, "counts", *res.tensor->cat);
        r.data["depth"] = res.tensor->depth;
        r.data["certifiedAgainst"] = res.tensor->certifiedAgainst;
        r.text.push_back("depth " + std::to_string(res.tensor->depth));
        r.add("realize", validate(*res.tensor->cat));
    } else if (what == "adjunction-check") {
        if (args.size() != 3) throw UsageError("tensor adjunction-check takes A B C");
        CatPtr A = R.dbl(args[0]), B = R.dbl(args[1]), C = R.dbl(args[2]);
        auto cones = enumerateCones(A, B, C, R.budget());
        HomPtr BC = R.homs().get(B, C);
        auto fs = enumerateDoubleFunctors(A, BC->cat, R.budget());
        r.data["cones"] = cones.size();
        r.data["functors"] = fs.size();
        r.text.push_back("cones " + std::to_string(cones.size()) + ", functors into [[B,C]] " +
                         std::to_string(fs.size()));
        r.add("counts agree", cones.size() == fs.size(),
              std::to_string(cones.size()) + " != " + std::to_string(fs.size()));
        std::string bad;
        for (std::size_t i = 0; i < cones.size() && bad.empty(); ++i) {
            DoubleFunctor F = curryCone(cones[i], *BC);
            if (!validateFunctor(F).ok() || !(uncurryFunctor(F, *BC) == cones[i])) bad = "cone " + std::to_string(i);
        }
        r.add("curry then uncurry is the identity", bad.empty(), bad);
    } else {
        throw UsageError("unknown tensor command " + what);
    }
}

void cmdCoherence(Runner& R, Result& r, const std::string& law, const std::vector<std::string>& args) {
    std::vector<CatPtr> c;
    for (const auto& a : args) c.push_back(R.dbl(a));
    auto need = [&](std::size_t n) {
        if (c.size() != n) throw UsageError(law + " takes " + std::to_string(n) + " double categories");
    };
    if (law == "pentagon") {
        need(4);
        r.add(checkPentagon(R.homs(), R.tensors(), c[0], c[1], c[2], c[3]));
    } else if (law == "triangle") {
        need(3);
        r.add(checkTriangle(R.homs(), R.tensors(), c[0], c[1], c[2]));
    } else if (law == "hexagon") {
        need(4);
        r.add(checkHexagon(R.homs(), R.tensors(), c[0], c[1], c[2], c[3]));
    } else if (law == "eps-a-l") {
        need(3);
        r.add(checkEpsALTriangle(R.homs(), R.tensors(), c[0], c[1], c[2]));
    } else {
        throw UsageError("unknown coherence law " + law);
    }
}

void cmdChi(Runner& R, Result& r, const std::string& kind, const std::vector<std::string>& args, bool assoc,
            bool unit) {
    ChiKind k;
    try {
        k = parseChiKind(kind);
    } catch (const std::exception&) {
        throw UsageError("unknown chi kind " + kind);
    }
    if (args.size() < 2 || args.size() > 3) throw UsageError("chi takes A B [C]");
    if (assoc && args.size() != 3) throw UsageError("--check-assoc needs a third argument C");
    ChiEnv& e = R.chi();
    std::string name = "chi_" + chiName(k);
    if (k == ChiKind::Sqr) {
        TwoCatPtr A = R.two(args[0]), B = R.two(args[1]);
        DoubleFunctor f = chiSqr(e, A, B);
        describeDouble(r, "domain", *f.dom);
        r.add(name + " is a double functor", validateFunctor(f));
        if (assoc) r.add(name + " associativity", checkChiAssoc(e, A, B, R.two(args[2])));
        if (unit) r.add(name + " unit", checkChiUnit(e, A));
        return;
    }
    CatPtr A = R.dbl(args[0]), B = R.dbl(args[1]);
    if (k == ChiKind::Mnd) {
        DoubleFunctor f = chiMnd(e.mnd(), A, B);
        describeDouble(r, "domain", *f.dom);
        r.add(name + " is a double functor", validateFunctor(f));
    } else {
        TwoFunctor f = k == ChiKind::H ? chiH(e, A, B) : chiV(e, A, B);
        r.data["domain"] = counts(*f.dom);
        r.text.push_back(countLine(r.data["domain"]));
        r.add(name + " is a 2-functor", validate2Functor(f));
    }
    if (assoc) r.add(name + " associativity", checkChiAssoc(e, k, A, B, R.dbl(args[2])));
    if (unit) r.add(name + " unit", checkChiUnit(e, k, A));
}

void cmdMonoid(Result& r, const std::string& file, bool derived) {
    GrayMonoidData m;
    try {
        m = monoidFromJson(readJsonFile(file));
    } catch (const StructuralError& e) {
        r.add("monoid data", false, e.what());
        return;
    }
    describeDouble(r, "carrier", m.carrier());
    Report rep = checkGrayMonoid(m);
    r.data["report"] = reportToJson(rep);
    if (!rep.structural.empty()) {
        r.add("frames", rep);
        return;
    }
    const char* names[] = {kMonFunctors,    kMonUnit,        kMonAssoc,      kMonMixed,
                           kMonIdentities, kMonComposition, kMonNaturality, kMonInvertibility};
    for (const char* n : names) {
        std::string w;
        int count = 0;
        for (const auto& v : rep.violations)
            if (v.axiom == n && !count++) w = v.witness;
        r.add(std::string("condition ") + n, count == 0, w, count ? std::to_string(count) + " violations" : "");
    }
    if (derived && rep.ok()) {
        DerivedMultiplication d = derivedMultiplication(m);
        r.data["derived"] = {{"preservesIdentities", d.preservesIdentities},
                             {"strictHorizontal", d.strictH},
                             {"strictVertical", d.strictV},
                             {"familiesValid", d.familiesValid},
                             {"horizontalFamilies", d.hFamilies},
                             {"verticalFamilies", d.vFamilies}};
        r.text.push_back(std::string("derived multiplication: ") + (d.strictH && d.strictV ? "strict" : "not strict") +
                         (d.hWitness.empty() ? "" : " (horizontal witness " + d.hWitness + ")") +
                         (d.vWitness.empty() ? "" : " (vertical witness " + d.vWitness + ")"));
        r.add("derived multiplication preserves identities", d.preservesIdentities, d.identityWitness);
        r.add("comparison families are valid and invertible", d.familiesValid, d.familyWitness);
    }
}

int runOne(const std::vector<std::string>& args, const Settings& base, Result& r, std::ostream& err);

json checksJson(const Result& r) {
    json a = json::array();
    for (const auto& c : r.checks) {
        json x = {{"name", c.name}, {"ok", c.ok}};
        if (!c.ok) {
            x["witness"] = c.witness;
            if (!c.detail.empty()) x["detail"] = c.detail;
        }
        a.push_back(x);
    }
    return a;
}

void cmdSuite(const std::string& file, Settings s, Result& r, std::ostream& err) {
    json cfg = readJsonFile(file);
    std::vector<std::pair<std::string, std::vector<std::string>>> checks;
    try {
        if (cfg.contains("schema") && cfg.at("schema").get<int>() != kSchemaVersion)
            throw UsageError(file + ": unsupported schema");
        if (cfg.contains("budget")) s.budget = cfg.at("budget").get<std::uint64_t>();
        if (cfg.contains("depth")) s.depth = cfg.at("depth").get<int>();
        if (cfg.contains("jobs")) s.jobs = cfg.at("jobs").get<int>();
        for (const auto& c : cfg.at("checks"))
            checks.emplace_back(c.at("name").get<std::string>(), c.at("args").get<std::vector<std::string>>());
    } catch (const json::exception& e) {
        throw UsageError(file + ": " + e.what());
    }
    if (s.budget == 0) throw UsageError(file + ": budget must be positive");
    for (const auto& [name, args] : checks)
        if (!args.empty() && args[0] == "suite") throw UsageError(file + ": suites do not nest");

    // Each check gets its own caches and budget, so results do not depend on
    // order or on the number of jobs.
    std::vector<Result> results(checks.size());
    std::vector<std::string> errors(checks.size());
    std::vector<int> codes(checks.size());
    auto work = [&](std::size_t i) {
        std::ostringstream e;
        codes[i] = runOne(checks[i].second, s, results[i], e);
        errors[i] = e.str();
    };
    if (s.jobs <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) work(i);
    } else {
        for (std::size_t start = 0; start < checks.size(); start += s.jobs) {
            std::vector<std::future<void>> batch;
            for (std::size_t i = start; i < std::min(checks.size(), start + s.jobs); ++i)
                batch.push_back(std::async(std::launch::async, work, i));
            for (auto& f : batch) f.get();
        }
    }
    json all = json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const Result& c = results[i];
        bool ok = codes[i] == kOk;
        all.push_back({{"name", checks[i].first},
                       {"args", checks[i].second},
                       {"ok", ok},
                       {"exit", codes[i]},
                       {"checks", checksJson(c)},
                       {"data", c.data}});
        if (!errors[i].empty()) all.back()["error"] = errors[i];
        std::string w;
        for (const auto& x : c.checks)
            if (!x.ok && w.empty()) w = x.name + ": " + x.witness;
        if (codes[i] == kUsage) {
            w = errors[i];
            r.usage = kUsage;
        }
        r.add(checks[i].first, ok, w, {}, codes[i] == kResource ? kResource : kAxiom);
        if (codes[i] == kUsage) r.checks.back().code = kUsage;
    }
    r.data["suite"] = all;
    (void)err;
}

int runOne(const std::vector<std::string>& args, const Settings& base, Result& r, std::ostream& err) {
    Settings s = base;
    CLI::App app{"graydbl: finite double categories and the Gray tensor product", "graydbl"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    std::uint64_t budget = 0;
    int depth = 0, jobs = 0;
    bool asJson = false;
    app.add_option("--config", config, "key = value file (default ./graydbl.toml if present)");
    app.add_option("--budget", budget, "enumeration budget (candidates)");
    app.add_option("--depth", depth, "tensor realization depth bound");
    app.add_option("--jobs", jobs, "parallel checks in a suite");
    app.add_flag("--json", asJson, "print the JSON report");

    std::string a, b, law, kind, file;
    std::vector<std::string> rest;
    bool list = false, assoc = false, unit = false, derived = false;

    auto* validateCmd = app.add_subcommand("validate", "check every double category axiom");
    validateCmd->add_option("D", a)->required();
    auto* functorsCmd = app.add_subcommand("functors", "enumerate double functors A -> B");
    functorsCmd->add_option("A", a)->required();
    functorsCmd->add_option("B", b)->required();
    functorsCmd->add_flag("--list", list, "print every functor");
    auto* homCmd = app.add_subcommand("hom", "build and validate [[A,B]]");
    homCmd->add_option("A", a)->required();
    homCmd->add_option("B", b)->required();
    auto* strictCmd = app.add_subcommand("strict-hom", "build and validate <<A,B>>");
    strictCmd->add_option("A", a)->required();
    strictCmd->add_option("B", b)->required();
    auto* canonCmd = app.add_subcommand("canonical-check", "laws of l, r and f");
    canonCmd->add_option("law", law, "l-comm|l-id|r-square|r-id|lr-pentagon|lr-square|f-involution")->required();
    canonCmd->add_option("args", rest)->required();
    auto* tensorCmd = app.add_subcommand("tensor", "Gray tensor: present|realize|adjunction-check");
    tensorCmd->add_option("what", law)->required();
    tensorCmd->add_option("args", rest)->required();
    auto* cohCmd = app.add_subcommand("coherence", "pentagon|triangle|hexagon|eps-a-l");
    cohCmd->add_option("law", law)->required();
    cohCmd->add_option("args", rest)->required();
    auto* sqrCmd = app.add_subcommand("sqr", "quintet double category of a 2-category");
    sqrCmd->add_option("T", a)->required();
    auto* h2Cmd = app.add_subcommand("h2", "horizontal 2-category of a double category");
    h2Cmd->add_option("D", a)->required();
    auto* v2Cmd = app.add_subcommand("v2", "vertical 2-category of a double category");
    v2Cmd->add_option("D", a)->required();
    auto* chiCmd = app.add_subcommand("chi", "comparison functors chi: h|v|sqr|mnd A B [C]");
    chiCmd->add_option("kind", kind)->required();
    chiCmd->add_option("args", rest)->required();
    chiCmd->add_flag("--check-assoc", assoc);
    chiCmd->add_flag("--check-unit", unit);
    auto* mndCmd = app.add_subcommand("mnd", "double category of monads");
    mndCmd->add_option("D", a)->required();
    auto* monoidCmd = app.add_subcommand("monoid", "monoid data: check FILE");
    monoidCmd->add_option("what", kind)->required()->check(CLI::IsMember({"check"}));
    monoidCmd->add_option("file", file)->required();
    monoidCmd->add_flag("--derived", derived, "also report the derived multiplication");
    auto* suiteCmd = app.add_subcommand("suite", "suite run CONFIG.json");
    suiteCmd->add_option("what", kind)->required()->check(CLI::IsMember({"run"}));
    suiteCmd->add_option("file", file)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        r.usage = -1;
        r.usageMessage = app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        r.usage = -1;
        r.usageMessage = app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        r.usage = kUsage;
        return kUsage;
    }

    try {
        if (config.empty() && std::filesystem::exists("graydbl.toml")) config = "graydbl.toml";
        if (!config.empty()) readConfig(config, s);
        if (const char* env = std::getenv("GRAYDBL_BUDGET")) {
            char* end = nullptr;
            auto v = std::strtoull(env, &end, 10);
            if (end != env && v > 0) s.budget = v;
        }
        if (budget) s.budget = budget;
        if (depth) s.depth = depth;
        if (jobs) s.jobs = jobs;
        if (asJson) s.json = true;
        r.asJson = s.json;
        if (s.budget == 0) throw UsageError("budget must be positive");
        r.data["settings"] = {{"budget", s.budget}, {"depth", s.depth}};

        if (*suiteCmd) {
            cmdSuite(file, s, r, err);
            return r.exit();
        }
        Runner R(s);
        if (*validateCmd) cmdValidate(R, r, a);
        if (*functorsCmd) cmdFunctors(R, r, a, b, list);
        if (*homCmd) cmdHom(R, r, a, b, false);
        if (*strictCmd) cmdHom(R, r, a, b, true);
        if (*canonCmd) cmdCanonical(R, r, law, rest);
        if (*tensorCmd) cmdTensor(R, r, law, rest);
        if (*cohCmd) cmdCoherence(R, r, law, rest);
        if (*sqrCmd) {
            TwoCatPtr T = R.two(a);
            auto D = finish(quintetSqr(*T));
            describeDouble(r, "counts", *D);
            r.add("Sqr(" + T->name + ") validates", validate(*D));
        }
        if (*h2Cmd || *v2Cmd) {
            CatPtr D = R.dbl(a);
            TwoCategory T = *h2Cmd ? horizontal2Cat(*D) : vertical2Cat(*D);
            T.finalize();
            r.data["counts"] = counts(T);
            r.text.push_back(countLine(r.data["counts"]));
            r.add(std::string(*h2Cmd ? "H" : "V") + "(" + D->name + ") validates", validate2Cat(T));
        }
        if (*chiCmd) cmdChi(R, r, kind, rest, assoc, unit);
        if (*mndCmd) {
            CatPtr D = R.dbl(a);
            MndPtr M = R.chi().mnd().get(D);
            describeDouble(r, "counts", *M->cat);
            r.data["monads"] = M->monads.size();
            r.text.push_back(std::to_string(M->monads.size()) + " monads");
            r.add("Mnd(" + D->name + ") validates", validate(*M->cat));
        }
        if (*monoidCmd) cmdMonoid(r, file, derived);
        r.data["budgetUsed"] = R.budget().used();
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        r.usage = kUsage;
    } catch (const ResourceError& e) {
        r.add("resources", false, e.what(), {}, kResource);
    } catch (const Unrealized& e) {
        r.add("tensor realization", false, e.what(), {}, kResource);
    } catch (const StructuralError& e) {
        r.add("structure", false, e.what());
    }
    return r.exit();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Settings s;
    Result r;
    int code = runOne(args, s, r, err);
    if (r.usage == -1) {
        out << r.usageMessage;
        return kOk;
    }
    if (r.asJson) {
        json j;
        j["schema"] = kSchemaVersion;
        j["command"] = args;
        j["ok"] = code == kOk;
        j["exit"] = code;
        j["checks"] = checksJson(r);
        j["data"] = r.data;
        out << j.dump(2) << "\n";
        return code;
    }
    for (const auto& t : r.text) out << t << "\n";
    if (r.data.contains("suite"))
        for (const auto& c : r.data["suite"])
            for (const auto& x : c["checks"])
                if (!x["ok"].get<bool>())
                    out << "  " << c["name"].get<std::string>() << " / " << x["name"].get<std::string>() << ": "
                        << x.value("witness", "") << "\n";
    for (const auto& c : r.checks) {
        out << (c.ok ? "PASS " : c.code == kResource ? "RESOURCE " : "FAIL ") << c.name;
        if (!c.ok && !c.witness.empty()) out << ": " << c.witness;
        out << "\n";
        if (!c.ok && !c.detail.empty() && c.detail != "skipped") {
            std::istringstream lines(c.detail);
            for (std::string l; std::getline(lines, l);) out << "  " << l << "\n";
        }
    }
    return code;
}

}  // namespace gdcli

#include "vjac/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace vjac {

const StabilityDomain& DomainCache::get(int g, int n, bool extended) {
    auto key = std::make_tuple(g, n, extended);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        auto d = std::make_unique<StabilityDomain>(
            extended ? StabilityDomain::build_extended(g, n) : StabilityDomain::build(g, n));
        it = cache_.emplace(key, std::move(d)).first;
    }
    return *it->second;
}

namespace {
long long get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw ParseError(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<long long>();
}
}  // namespace

json element_to_json(const HalfVine& x) {
    return json{{"e", x.e}, {"h", x.h}, {"A", mask_to_list(x.marks)}};
}

HalfVine element_from_json(const json& j, int n) {
    HalfVine x;
    x.e = static_cast<int>(get_int(j, "e"));
    x.h = static_cast<int>(get_int(j, "h"));
    if (!j.contains("A") || !j["A"].is_array()) throw ParseError("element needs a mark list 'A'");
    std::vector<int> marks;
    for (const auto& m : j["A"]) {
        if (!m.is_number_integer()) throw ParseError("marks must be integers");
        marks.push_back(m.get<int>());
    }
    try {
        x.marks = list_to_mask(marks, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return x;
}

json domain_to_json(const StabilityDomain& d) {
    json elems = json::array();
    for (const HalfVine& x : d.elements()) elems.push_back(element_to_json(x));
    json tris = json::array();
    for (const auto& t : d.triangles()) tris.push_back(json{t[0], t[1], t[2]});
    json out{{"g", d.g()}, {"n", d.n()}, {"elements", elems}, {"triangles", tris}};
    if (d.extended()) {
        json extra = json::array();
        for (int i = 0; i < d.size(); ++i)
            if (!d.in_core(i)) extra.push_back(i);
        out["extra"] = extra;
        out["extended"] = true;
    }
    return out;
}

json rat_to_json(const Rat& q) {
    Rat c = q;
    c.canonicalize();
    json out;
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
        out["num"] = static_cast<long long>(c.get_num().get_si());
        out["den"] = static_cast<long long>(c.get_den().get_si());
    } else {
        out["num"] = c.get_num().get_str();
        out["den"] = c.get_den().get_str();
    }
    return out;
}

Rat rat_from_json(const json& j) {
    auto part = [&](const char* key) -> Int {
        if (!j.contains(key)) throw ParseError("rational needs 'num' and 'den'");
        const json& v = j[key];
        if (v.is_number_integer()) return Int(static_cast<long>(v.get<long long>()));
        if (v.is_string()) return Int(v.get<std::string>());
        throw ParseError("rational parts must be integers or strings");
    };
    Int num = part("num");
    Int den = j.contains("den") ? part("den") : Int(1);
    if (den <= 0) throw ParseError("denominator must be positive");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

json vfunction_to_json(const VFunction& f) {
    json vals = json::array();
    for (int i : f.indices()) {
        json e = element_to_json(f.dom->element(i));
        e["sigma"] = f.at(i);
        vals.push_back(std::move(e));
    }
    return json{{"g", f.dom->g()}, {"n", f.dom->n()}, {"chi", f.chi}, {"values", vals}};
}

VFunction vfunction_from_json(const json& j, DomainCache& cache) {
    int g = static_cast<int>(get_int(j, "g"));
    int n = static_cast<int>(get_int(j, "n"));
    long long chi = get_int(j, "chi");
    const StabilityDomain* d;
    try {
        d = &cache.get(g, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError("function needs a 'values' array");
    std::vector<bool> seen(d->size(), false);
    std::vector<long long> vals(d->size(), 0);
    for (const json& entry : j["values"]) {
        HalfVine x = element_from_json(entry, n);
        auto idx = d->index_of(x);
        if (!idx) throw ParseError("unknown element " + to_string(x));
        if (seen[*idx]) throw ParseError("duplicate element " + to_string(x));
        seen[*idx] = true;
        vals[*idx] = get_int(entry, "sigma");
    }
    auto covered = [&](const std::vector<int>& idxs) {
        for (int i : idxs)
            if (!seen[i]) return false;
        return true;
    };
    size_t count = std::count(seen.begin(), seen.end(), true);
    Part part;
    if (count == static_cast<size_t>(d->size())) part = Part::Full;
    else if (count == d->nonseparating().size() && covered(d->nonseparating())) part = Part::NonSep;
    else if (count == d->separating().size() && covered(d->separating())) part = Part::Sep;
    else throw ParseError("values must cover the whole domain or exactly one part");

    VFunction f{d, part, chi, {}};
    for (int i : part_indices(*d, part)) f.values.push_back(vals[i]);
    return f;
}

json polarization_to_json(const Polarization& L) {
    const StabilityDomain& d = *L.dom;
    json alphas = json::array();
    for (const Rat& a : L.alpha) alphas.push_back(rat_to_json(a));
    json gammas = json::array();
    for (size_t p = 0; p < L.gamma.size(); ++p) {
        const HalfVine& x = d.element(d.separating()[p]);
        json e{{"h", x.h}, {"A", mask_to_list(x.marks)}, {"value", rat_to_json(L.gamma[p])}};
        gammas.push_back(std::move(e));
    }
    return json{{"g", d.g()},
                {"n", d.n()},
                {"beta", rat_to_json(L.beta)},
                {"alpha", alphas},
                {"gamma", gammas}};
}

Polarization polarization_from_json(const json& j, DomainCache& cache) {
    int g = static_cast<int>(get_int(j, "g"));
    int n = static_cast<int>(get_int(j, "n"));
    const StabilityDomain* d;
    try {
        d = &cache.get(g, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    Polarization L;
    L.dom = d;
    L.beta = j.contains("beta") ? rat_from_json(j["beta"]) : Rat(0);
    if (j.contains("alpha")) {
        if (!j["alpha"].is_array()) throw ParseError("'alpha' must be an array");
        for (const json& a : j["alpha"]) L.alpha.push_back(rat_from_json(a));
    }
    if (static_cast<int>(L.alpha.size()) != n) throw ParseError("need one alpha per mark");
    L.gamma.assign(d->separating().size(), Rat(0));
    if (j.contains("gamma")) {
        if (!j["gamma"].is_array()) throw ParseError("'gamma' must be an array");
        for (const json& e : j["gamma"]) {
            HalfVine x{1, static_cast<int>(get_int(e, "h")), 0};
            x.marks = element_from_json(json{{"e", 1}, {"h", x.h}, {"A", e.value("A", json::array())}}, n).marks;
            auto idx = d->index_of(x);
            if (!idx || !d->is_separating(*idx))
                throw ParseError("gamma entry is not a separating element");
            L.gamma[d->sep_pos(*idx)] = rat_from_json(e["value"]);
        }
    }
    try {
        check_polarization(L);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    return L;
}

json degset_to_json(const DegSet& D) {
    return json{{"g", D.dom->g()}, {"n", D.dom->n()}, {"indices", D.indices}};
}

DegSet degset_from_json(const json& j, DomainCache& cache) {
    int g = static_cast<int>(get_int(j, "g"));
    int n = static_cast<int>(get_int(j, "n"));
    const StabilityDomain* d;
    try {
        d = &cache.get(g, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    std::vector<int> idxs;
    if (j.contains("indices")) {
        for (const json& v : j["indices"]) {
            if (!v.is_number_integer()) throw ParseError("indices must be integers");
            idxs.push_back(v.get<int>());
        }
    } else if (j.contains("elements")) {
        for (const json& e : j["elements"]) {
            auto idx = d->index_of(element_from_json(e, n));
            if (!idx) throw ParseError("unknown element in degeneracy subset");
            idxs.push_back(*idx);
        }
    } else {
        throw ParseError("degeneracy subset needs 'indices' or 'elements'");
    }
    try {
        return make_degset(*d, std::move(idxs));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json group_element_to_json(const GroupElement& e) {
    const StabilityDomain& d = *e.dom;
    json gammas = json::array();
    for (size_t p = 0; p < e.gamma.size(); ++p) {
        const HalfVine& x = d.element(d.separating()[p]);
        gammas.push_back(json{{"h", x.h}, {"A", mask_to_list(x.marks)}, {"value", e.gamma[p]}});
    }
    return json{{"g", d.g()},   {"n", d.n()},        {"beta", e.beta},
                {"alpha", e.alpha}, {"gamma", gammas}, {"epsilon", e.epsilon}};
}

GroupElement group_element_from_json(const json& j, DomainCache& cache) {
    int g = static_cast<int>(get_int(j, "g"));
    int n = static_cast<int>(get_int(j, "n"));
    const StabilityDomain* d;
    try {
        d = &cache.get(g, n);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
    GroupElement e = identity_element(*d);
    if (j.contains("beta")) e.beta = get_int(j, "beta");
    if (j.contains("alpha")) {
        if (j["alpha"].size() != static_cast<size_t>(n)) throw ParseError("need n alpha entries");
        for (int i = 0; i < n; ++i) {
            if (!j["alpha"][i].is_number_integer()) throw ParseError("alpha must be integral");
            e.alpha[i] = j["alpha"][i].get<long long>();
        }
    }
    if (j.contains("gamma")) {
        for (const json& ge : j["gamma"]) {
            HalfVine x{1, static_cast<int>(get_int(ge, "h")), 0};
            x.marks = element_from_json(json{{"e", 1}, {"h", x.h}, {"A", ge.value("A", json::array())}}, n).marks;
            auto idx = d->index_of(x);
            if (!idx || !d->is_separating(*idx))
                throw ParseError("gamma entry is not a separating element");
            e.gamma[d->sep_pos(*idx)] = get_int(ge, "value");
        }
    }
    if (j.contains("epsilon")) {
        long long eps = get_int(j, "epsilon");
        if (eps != 0 && eps != 1) throw ParseError("epsilon must be 0 or 1");
        e.epsilon = static_cast<int>(eps);
    }
    return e;
}

json canonical_key_to_json(const CanonicalKey& k, const StabilityDomain& d) {
    json sep = json::array();
    for (int i : k.sep_degenerate)
        sep.push_back(json::array(
            {element_to_json(d.element(i)), element_to_json(d.element(d.complement(i)))}));
    return json{{"chi", k.chi}, {"ns_values", k.ns_values}, {"sep_degenerate", sep}};
}

json signature_to_json(const RegionSignature& sig, const StabilityDomain& d) {
    json forms = json::array();
    for (size_t p = 0; p < sig.per_pair.size(); ++p) {
        const auto& [fl, on] = sig.per_pair[p];
        forms.push_back(json{{"element", element_to_json(d.element(d.pair_reps()[p]))},
                             {"floor", fl.get_str()},
                             {"on_hyperplane", on}});
    }
    return json{{"chi", sig.chi}, {"forms", forms}};
}

json report_to_json(const ValidationReport& rep) {
    json v = json::array();
    for (const Violation& viol : rep.violations) v.push_back(viol.message);
    return json{{"ok", rep.ok()}, {"violations", v}};
}

json witness_to_json(const Witness& w, const StabilityDomain& d) {
    json elems = json::array();
    for (int i : w.indices) elems.push_back(element_to_json(d.element(i)));
    return json{{"indices", w.indices}, {"elements", elems}};
}

namespace {
std::string values_label(const VFunction& f) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < f.values.size(); ++k) {
        if (k) os << ",";
        os << f.values[k];
    }
    os << ")";
    return os.str();
}
}  // namespace

std::string functions_dot(const std::vector<VFunction>& fs) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    for (size_t i = 0; i < fs.size(); ++i)
        os << "  n" << i << " [label=\"" << values_label(fs[i]) << "\"];\n";
    for (size_t i = 0; i < fs.size(); ++i) {
        for (size_t j = 0; j < fs.size(); ++j) {
            if (i == j || compare(fs[i], fs[j]) != OrderRel::Less) continue;
            bool cover = true;
            for (size_t k = 0; k < fs.size() && cover; ++k) {
                if (k == i || k == j) continue;
                if (compare(fs[i], fs[k]) == OrderRel::Less &&
                    compare(fs[k], fs[j]) == OrderRel::Less)
                    cover = false;
            }
            if (cover) os << "  n" << i << " -> n" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

std::string degset_label(const DegSet& D) {
    const StabilityDomain& d = *D.dom;
    if (D.indices.empty()) return "∅";
    if (d.n() == 1) {
        N1Class c = n1_classify(D);
        std::ostringstream os;
        switch (c.kind) {
            case N1Class::Empty: break;
            case N1Class::Wall:
                os << "W_" << c.delta;
                if (!restrict_sep(D).indices.empty()) os << "+sep";
                return os.str();
            case N1Class::Antichain: {
                os << "D(";
                for (size_t k = 0; k < c.antichain.size(); ++k) {
                    if (k) os << ",";
                    os << to_string(d.element(c.antichain[k]));
                }
                os << ")";
                if (!restrict_sep(D).indices.empty()) os << "+sep";
                return os.str();
            }
            case N1Class::NotRealizable: return "non-realizable";
        }
    }
    std::ostringstream os;
    os << "{";
    for (size_t k = 0; k < D.indices.size(); ++k) {
        if (k) os << ",";
        os << to_string(d.element(D.indices[k]));
    }
    os << "}";
    return os.str();
}

std::string submaximal_dot(const StabilityDomain&, const std::vector<DegSet>& subs) {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n";
    os << "  top [label=\"∅\"];\n";
    for (size_t i = 0; i < subs.size(); ++i)
        os << "  n" << i << " [label=\"" << degset_label(subs[i]) << "\"];\n";
    for (size_t i = 0; i < subs.size(); ++i) os << "  n" << i << " -> top;\n";
    os << "}\n";
    return os.str();
}

}  // namespace vjac

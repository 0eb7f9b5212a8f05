#pragma once

// JSON formats for complexes, orders, homology, discrete Morse data and reports.

#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "plmorse/constructions.hpp"
#include "plmorse/discrete_morse.hpp"
#include "plmorse/fundamental_group.hpp"
#include "plmorse/homology.hpp"
#include "plmorse/morse.hpp"
#include "plmorse/quotient_search.hpp"

namespace plmorse::io {

using nlohmann::json;

inline json label_to_json(const Label& l) {
    if (l.is_integer()) return l.integer();
    return l.text();
}

inline Label label_from_json(const json& j) {
    if (j.is_number_integer()) return Label(j.get<std::int64_t>());
    if (j.is_string()) return Label(j.get<std::string>());
    throw Error("vertex labels must be integers or strings, got " + j.dump());
}

/// Parses a label written as text: optional sign and digits give an integer.
inline Label label_from_text(const std::string& s) {
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    const bool digits = s.size() > start && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                                                         [](char ch) { return ch >= '0' && ch <= '9'; });
    if (digits && s.size() < 19) return Label(static_cast<std::int64_t>(std::stoll(s)));
    return Label(s);
}

inline std::vector<Label> labels_from_json(const json& j) {
    if (!j.is_array()) throw Error("expected an array of labels");
    std::vector<Label> out;
    for (const auto& x : j) out.push_back(label_from_json(x));
    return out;
}

/// Canonical form: facets as sorted label lists, sorted lexicographically.
inline json complex_to_json(const SimplicialComplex& c, const std::string& name = "") {
    auto facets = c.facet_labels();
    for (auto& f : facets) std::sort(f.begin(), f.end());
    std::sort(facets.begin(), facets.end());
    json arr = json::array();
    for (const auto& f : facets) {
        json row = json::array();
        for (const auto& l : f) row.push_back(label_to_json(l));
        arr.push_back(std::move(row));
    }
    return {{"name", name}, {"facets", std::move(arr)}};
}

inline SimplicialComplex complex_from_json(const json& j, std::string* name = nullptr) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw Error("complex JSON needs a \"facets\" array");
    std::vector<std::vector<Label>> facets;
    for (const auto& f : j["facets"]) facets.push_back(labels_from_json(f));
    if (name) *name = j.value("name", "");
    return SimplicialComplex::from_facets(facets);
}

inline json order_to_json(const SimplicialComplex& c, const VertexOrder& f) {
    json arr = json::array();
    for (const auto& l : f.labels(c)) arr.push_back(label_to_json(l));
    return {{"order", std::move(arr)}};
}

inline VertexOrder order_from_json(const SimplicialComplex& c, const json& j) {
    if (!j.is_object() || !j.contains("order")) throw Error("order JSON needs an \"order\" array");
    return VertexOrder::from_labels(c, labels_from_json(j["order"]));
}

inline json integer_to_json(const Integer& x) {
    if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min())
        return static_cast<std::int64_t>(x);
    return x.str();
}

inline json homology_to_json(const HomologyProfile& h, int dim) {
    json torsion = json::array();
    for (const auto& t : h.torsion) {
        json row = json::array();
        for (const auto& x : t) row.push_back(integer_to_json(x));
        torsion.push_back(std::move(row));
    }
    json out{{"dim", dim}, {"betti", h.betti}, {"torsion", std::move(torsion)}, {"field", "Z"}};
    if (h.reduced) out["reduced"] = true;
    if (h.minus_one_rank) out["minus_one_rank"] = h.minus_one_rank;
    return out;
}

inline json homology_to_json(const std::vector<std::size_t>& betti, int dim, Coefficients field, bool reduced) {
    json torsion = json::array();
    for (std::size_t i = 0; i < betti.size(); ++i) torsion.push_back(json::array());
    json out{{"dim", dim}, {"betti", betti}, {"torsion", std::move(torsion)}, {"field", field.name()}};
    if (reduced) out["reduced"] = true;
    return out;
}

/// Simplex key: comma-joined sorted labels.
inline std::string simplex_key(const SimplicialComplex& c, const Simplex& s) {
    std::string out;
    for (auto v : s) {
        if (!out.empty()) out += ",";
        out += c.label(v).to_string();
    }
    return out;
}

inline Simplex simplex_from_key(const SimplicialComplex& c, const std::string& key) {
    std::vector<Label> ls;
    std::size_t start = 0;
    while (start <= key.size()) {
        auto end = key.find(',', start);
        if (end == std::string::npos) end = key.size();
        ls.push_back(label_from_text(key.substr(start, end - start)));
        start = end + 1;
    }
    Simplex s;
    for (const auto& l : ls) {
        auto id = c.find(l);
        if (!id) throw Error("unknown vertex " + l.to_string() + " in cell " + key);
        s.push_back(*id);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end() || !c.contains(s))
        throw Error("cell " + key + " is not a face of the complex");
    return s;
}

/// {"values": {"1,2": 3.5, ...}} or {"matching": [["1,2", "1,2,4"], ...]}.
inline CellValues discrete_morse_from_json(const SimplicialComplex& c, const HasseDiagram& h, const json& j) {
    if (j.contains("values")) {
        if (!j["values"].is_object()) throw Error("\"values\" must be an object keyed by cells");
        SimplexMap<double> g;
        for (auto it = j["values"].begin(); it != j["values"].end(); ++it) {
            if (!it.value().is_number()) throw Error("value of cell " + it.key() + " is not a number");
            g[simplex_from_key(c, it.key())] = it.value().get<double>();
        }
        return values_from_map(c, h, g);
    }
    if (j.contains("matching")) {
        std::vector<CellPair> pairs;
        for (const auto& p : j["matching"]) {
            if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                throw Error("matching entries must be [face, coface] cell keys");
            auto a = h.index_of(simplex_from_key(c, p[0].get<std::string>()), c);
            auto b = h.index_of(simplex_from_key(c, p[1].get<std::string>()), c);
            if (h.dim[a] > h.dim[b]) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        return values_from_matching(h, pairs);
    }
    throw Error("discrete Morse JSON needs \"values\" or \"matching\"");
}

inline json discrete_morse_to_json(const SimplicialComplex& c, const HasseDiagram& h, const CellValues& g) {
    json values = json::object();
    for (std::size_t i = 0; i < h.size(); ++i) values[simplex_key(c, h.cells[i])] = g[i];
    return {{"values", std::move(values)}};
}

inline json neighborhood_to_json(const NeighborhoodResult& n) {
    return {{"M", complex_to_json(n.neighborhood, "M")}, {"boundary", complex_to_json(n.boundary, "boundary")}};
}

inline json multiplicity_to_json(const FieldMultiplicity& m) {
    return {{"field", m.field.name()}, {"mu", m.mu}, {"total", m.total}};
}

inline json record_to_json(const CriticalityRecord& r, int dim) {
    json mults = json::array();
    for (const auto& m : r.multiplicities) mults.push_back(multiplicity_to_json(m));
    json out{{"vertex", label_to_json(r.vertex)},
             {"status", to_string(r.status)},
             {"indices", r.indices},
             {"lower_link_homology", homology_to_json(r.lower_link_profile, std::max(dim - 1, -1))},
             {"multiplicities", std::move(mults)},
             {"strong_regularity", to_string(r.strong_regularity)},
             {"nondegenerate", to_string(r.nondegenerate.verdict)},
             {"boundary_class", to_string(r.boundary.kind)}};
    if (r.nondegenerate.verdict == Verdict::yes) out["nondegenerate_index"] = r.nondegenerate.index;
    if (r.boundary.index >= 0) out["boundary_index"] = r.boundary.index;
    if (r.duality) out["duality"] = *r.duality;
    return out;
}

inline json verdict_to_json(const PLMorseVerdict& v) {
    json out{{"verdict", to_string(v.verdict)}};
    if (v.witness) out["witness"] = label_to_json(*v.witness);
    if (!v.reason.empty()) out["reason"] = v.reason;
    return out;
}

inline json report_to_json(const MorseReport& r) {
    json records = json::array();
    for (const auto& x : r.records) records.push_back(record_to_json(x, r.dimension));
    json fields = json::array();
    for (const auto& s : r.fields)
        fields.push_back({{"field", s.field.name()},
                          {"mu", s.mu},
                          {"betti", s.betti},
                          {"morse_inequality", s.morse_inequality},
                          {"euler_equation", s.euler_equation},
                          {"tight", s.tight}});
    return {{"dim", r.dimension},
            {"euler_characteristic", r.euler_characteristic},
            {"manifold", to_string(r.manifold)},
            {"manifold_checks", r.manifold_checks},
            {"has_boundary", r.has_boundary},
            {"records", std::move(records)},
            {"fields", std::move(fields)},
            {"pl_morse", verdict_to_json(r.pl_morse)}};
}

inline json presentation_to_json(const Presentation& p) {
    json rels = json::array();
    for (const auto& r : p.relators) rels.push_back(r);
    return {{"generators", p.generators}, {"relators", std::move(rels)}};
}

inline Presentation presentation_from_json(const json& j) {
    Presentation p;
    p.generators = j.at("generators").get<int>();
    for (const auto& r : j.at("relators")) {
        Word w = r.get<Word>();
        for (int x : w)
            if (x == 0 || std::abs(x) > p.generators) throw Error("relator letter out of range");
        p.relators.push_back(free_reduce(w));
    }
    return p;
}

inline json certificate_to_json(const QuotientCertificate& c) {
    return {{"target", c.target}, {"images", c.images}, {"image_text", c.image_text}, {"transcript", c.transcript}};
}

}  // namespace plmorse::io

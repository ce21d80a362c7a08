#include "atl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace atl::io {

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name);
}

int natural(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer() || v.get<long>() < 0)
        throw std::invalid_argument(std::string("field '") + name + "' must be a natural number");
    return v.get<int>();
}

std::string text(const Json& v, const char* what) {
    if (!v.is_string()) throw std::invalid_argument(std::string(what) + " must be a string");
    return v.get<std::string>();
}

} // namespace

Json to_json(const Morphism& x) {
    Json terms = Json::array();
    for (const auto& [d, c] : x.terms()) {
        Json arcs = Json::array();
        for (const auto& [a, b] : d.arcs()) arcs.push_back(Json::array({point_label(a), point_label(b)}));
        Json diagram;
        diagram["seam"] = d.seam();
        diagram["ess"] = d.ess();
        diagram["arcs"] = std::move(arcs);
        Json term;
        term["coeff"] = format_scalar(c);
        term["diagram"] = std::move(diagram);
        terms.push_back(std::move(term));
    }
    Json j;
    j["dom"] = x.dom();
    j["cod"] = x.cod();
    j["terms"] = std::move(terms);
    return j;
}

Morphism morphism_from_json(const Json& j) {
    const int dom = natural(j, "dom");
    const int cod = natural(j, "cod");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
    std::vector<Morphism::Term> out;
    for (const Json& t : terms) {
        Scalar c = parse_scalar(text(field(t, "coeff"), "coeff"));
        const Json& d = field(t, "diagram");
        RawDiagram raw{dom, cod, natural(d, "seam"), natural(d, "ess"), {}};
        const Json& arcs = field(d, "arcs");
        if (!arcs.is_array()) throw std::invalid_argument("'arcs' must be an array");
        for (const Json& a : arcs) {
            if (!a.is_array() || a.size() != 2) throw std::invalid_argument("each arc must be a pair of point labels");
            raw.arcs.push_back({parse_point_label(text(a[0], "point label")), parse_point_label(text(a[1], "point label"))});
        }
        Reduction r = canonicalize(raw);
        if (r.inessential > 0) c *= loop_factor(r.inessential);
        out.emplace_back(r.diagram, c);
    }
    return Morphism::from_terms(dom, cod, std::move(out));
}

Json to_json(const WeightMap& w) {
    Json entries = Json::array();
    for (const auto& [k, v] : w.entries())
        entries.push_back(Json::array({sign_string(k.first, w.cod_len()), sign_string(k.second, w.dom_len()), format_scalar(v)}));
    Json j;
    j["dom"] = w.dom_len();
    j["cod"] = w.cod_len();
    j["entries"] = std::move(entries);
    return j;
}

WeightMap weight_map_from_json(const Json& j) {
    const int dom = natural(j, "dom");
    const int cod = natural(j, "cod");
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw std::invalid_argument("'entries' must be an array");
    std::vector<std::pair<WeightMap::Key, Scalar>> out;
    for (const Json& e : entries) {
        if (!e.is_array() || e.size() != 3) throw std::invalid_argument("each entry must be [row, col, scalar]");
        std::string row = text(e[0], "row"), col = text(e[1], "col");
        if (static_cast<int>(row.size()) != cod || static_cast<int>(col.size()) != dom)
            throw std::invalid_argument("sign string length does not match the arity");
        out.push_back({{parse_sign_string(row), parse_sign_string(col)}, parse_scalar(text(e[2], "scalar"))});
    }
    return WeightMap::from_entries(dom, cod, std::move(out));
}

Json coordinates_json(int two_n, const std::vector<Scalar>& coords) {
    Json labels = Json::array(), values = Json::array();
    auto ls = enumerate_labels(two_n);
    for (std::size_t i = 0; i < coords.size() && i < ls.size(); ++i) {
        labels.push_back(label_text(ls[i]));
        values.push_back(format_scalar(coords[i]));
    }
    Json j;
    j["labels"] = std::move(labels);
    j["coords"] = std::move(values);
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace atl::io

#include "nckit/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace nckit {

Json to_json(const VertexId& v) {
    if (v.is_int) return v.num;
    return v.str;
}

VertexId vertex_from_json(const Json& j) {
    if (j.is_number_integer()) return VertexId(j.get<long>());
    if (j.is_string()) return VertexId(j.get<std::string>());
    throw std::runtime_error("vertex label must be an integer or a string");
}

Json to_json(const SimplicialComplex& c) {
    Json j;
    j["vertices"] = Json::array();
    for (const auto& v : c.vertices()) j["vertices"].push_back(to_json(v));
    j["maximal"] = Json::array();
    for (const auto& f : c.maximal_simplexes()) {
        Json fj = Json::array();
        for (const auto& v : f.vertices()) fj.push_back(to_json(v));
        j["maximal"].push_back(fj);
    }
    return j;
}

SimplicialComplex complex_from_json(const Json& j) {
    if (!j.contains("maximal")) throw std::runtime_error("complex JSON: missing \"maximal\"");
    std::vector<Simplex> facets;
    for (const auto& fj : j.at("maximal")) {
        std::vector<VertexId> vs;
        for (const auto& vj : fj) vs.push_back(vertex_from_json(vj));
        facets.emplace_back(std::move(vs));
    }
    // isolated vertices listed only under "vertices" become 0-facets
    if (j.contains("vertices")) {
        std::set<VertexId> covered;
        for (const auto& f : facets)
            for (const auto& v : f.vertices()) covered.insert(v);
        for (const auto& vj : j.at("vertices")) {
            VertexId v = vertex_from_json(vj);
            if (!covered.count(v)) facets.push_back(Simplex({v}));
        }
    }
    return SimplicialComplex::from_maximal(std::move(facets));
}

Json to_json(const RealizationPoint& p) {
    Json j = Json::array();
    for (const auto& [v, w] : p.weights) j.push_back(Json{{"vertex", to_json(v)}, {"weight", w}});
    return j;
}

RealizationPoint realization_point_from_json(const Json& j) {
    RealizationPoint p;
    for (const auto& e : j) p.weights[vertex_from_json(e.at("vertex"))] = e.at("weight").get<double>();
    return p;
}

Json to_json(const AlgebraPresentation& p) {
    Json j;
    j["complex"] = to_json(p.complex());
    j["variant"] = variant_name(p.variant());
    return j;
}

PresentationPtr presentation_from_json(const Json& j) {
    return presentation_of(complex_from_json(j.at("complex")),
                           variant_from_name(j.at("variant").get<std::string>()));
}

namespace {

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational(j.get<std::string>());
    if (j.is_number_float()) {
        double d = j.get<double>();
        if (d != static_cast<long>(d))
            throw std::runtime_error("coefficients must be exact (integer or \"p/q\" string)");
        return Rational(static_cast<long>(d));
    }
    throw std::runtime_error("bad coefficient");
}

RatPoly ratpoly_from_json(const Json& j) {
    if (j.is_array()) {
        std::vector<Rational> c;
        for (const auto& e : j) c.push_back(rational_from_json(e));
        return RatPoly(std::move(c));
    }
    return RatPoly(rational_from_json(j));
}

Json to_json(const RatPoly& p) {
    if (p.is_constant()) return p.constant_value().str();
    Json arr = Json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.str());
    return arr;
}

}  // namespace

Json to_json(const GeneratorAssignment& a) {
    Json j;
    j["source"] = to_json(*a.source);
    j["target"] = to_json(*a.target);
    Json images = Json::object();
    for (int g = 0; g < a.source->num_generators(); ++g) {
        Json terms = Json::array();
        for (const auto& [word, coeff] : a.images[g].terms()) {
            Json w = Json::array();
            for (int l : word) w.push_back(to_json(a.target->gen_label(l)));
            terms.push_back(Json{{"coeff", to_json(coeff)}, {"word", w}});
        }
        images[a.source->gen_label(g).to_string()] = terms;
    }
    j["images"] = images;
    return j;
}

GeneratorAssignment assignment_from_json(const Json& j) {
    GeneratorAssignment a;
    a.source = presentation_from_json(j.at("source"));
    a.target = presentation_from_json(j.at("target"));
    const Json& images = j.at("images");
    for (int g = 0; g < a.source->num_generators(); ++g) {
        std::string key = a.source->gen_label(g).to_string();
        if (!images.contains(key))
            throw std::runtime_error("assignment JSON: missing image of generator " + key);
        NCPoly img;
        for (const auto& term : images.at(key)) {
            Monomial word;
            for (const auto& vj : term.at("word")) {
                int idx = a.target->gen_index(vertex_from_json(vj));
                if (idx < 0) throw std::runtime_error("assignment JSON: unknown target generator");
                word.push_back(idx);
            }
            img += NCPoly::monomial(std::move(word), ratpoly_from_json(term.at("coeff")));
        }
        a.images.push_back(std::move(img));
    }
    return a;
}

Json load_json_file(const std::string& path_or_dash) {
    if (path_or_dash == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return Json::parse(ss.str());
    }
    std::ifstream f(path_or_dash);
    if (!f) throw std::runtime_error("cannot open " + path_or_dash);
    Json j;
    f >> j;
    return j;
}

}  // namespace nckit

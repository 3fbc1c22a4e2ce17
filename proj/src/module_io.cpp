#include "qsaa/module_io.hpp"

#include <fstream>

#include "qsaa/error.hpp"

namespace qsaa {

using nlohmann::json;

json cyclo_to_json(const CycloNum& x) { return x.to_strings(); }

CycloNum cyclo_from_json(int l, const json& j) {
    if (j.is_number_integer()) return CycloNum(l, j.get<long>());
    if (j.is_string()) return parse_cyclo(l, j.get<std::string>());
    if (!j.is_array()) fail(ErrorKind::Parse, "scalar must be a coefficient array, a literal string or an integer");
    std::vector<Rational> coeffs;
    for (const auto& c : j) {
        if (c.is_number_integer()) coeffs.emplace_back(c.get<long>());
        else if (c.is_string()) coeffs.push_back(parse_rational(c.get<std::string>()));
        else fail(ErrorKind::Parse, "coefficient must be a rational string or an integer");
    }
    return CycloNum(l, coeffs);
}

json module_to_json(const MatrixModule& m) {
    json mats = json::object();
    for (const auto& [g, a] : m.actions()) {
        if (g == Gen::Kinv) continue;
        json rows = json::array();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(cyclo_to_json(a(i, k)));
            rows.push_back(std::move(row));
        }
        mats[std::string(gen_name(g))] = std::move(rows);
    }
    return json{{"l", m.order()},
                {"presentation", std::string(presentation_name(m.presentation()))},
                {"dim", m.dim()},
                {"labels", m.labels()},
                {"matrices", std::move(mats)}};
}

namespace {

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) fail(ErrorKind::Parse, std::string("module JSON lacks \"") + key + "\"");
    return j.at(key);
}

}  // namespace

MatrixModule module_from_json(const json& j, bool verify) {
    try {
        const int l = field(j, "l").get<int>();
        const PresentationName pres = parse_presentation(field(j, "presentation").get<std::string>());
        const std::size_t dim = field(j, "dim").get<std::size_t>();
        std::vector<std::string> labels;
        if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
        else
            for (std::size_t i = 0; i < dim; ++i) labels.push_back("v" + std::to_string(i));
        if (labels.size() != dim) fail(ErrorKind::Parse, "label count differs from dim");

        std::map<Gen, Matrix> action;
        for (const auto& [name, rows] : field(j, "matrices").items()) {
            const Gen g = parse_gen(name);
            if (!rows.is_array() || rows.size() != dim) fail(ErrorKind::Parse, "matrix " + name + " must have dim rows");
            Matrix a(l, dim, dim);
            for (std::size_t i = 0; i < dim; ++i) {
                const json& row = rows[i];
                if (!row.is_array() || row.size() != dim) fail(ErrorKind::Parse, "matrix " + name + " must have dim columns");
                for (std::size_t k = 0; k < dim; ++k) a(i, k) = cyclo_from_json(l, row[k]);
            }
            action.emplace(g, std::move(a));
        }
        return MatrixModule(pres, l, std::move(labels), std::move(action), verify);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, std::string("module JSON: ") + e.what());
    }
}

MatrixModule read_module_file(const std::string& path, bool verify) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorKind::Parse, path + ": " + e.what());
    }
    return module_from_json(j, verify);
}

}  // namespace qsaa

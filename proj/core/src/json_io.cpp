#include "cliffgrass/json_io.hpp"

#include "cliffgrass/error.hpp"

namespace cliffgrass::io {

namespace {

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ValidationError("json: expected a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(m.at(r, c).str());
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries")) {
        throw ValidationError("json: matrix needs rows, cols and entries");
    }
    const std::size_t rows = j.at("rows").get<std::size_t>();
    const std::size_t cols = j.at("cols").get<std::size_t>();
    const Json& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows * cols) {
        throw ValidationError("json: matrix entries length must be rows*cols");
    }
    Matrix m(rows, cols);
    std::size_t idx = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rational_from_json(entries[idx++]);
    }
    return m;
}

Json complex_matrix_to_json(const ComplexMatrix& m) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            entries.push_back(Json{{"re", m.at(r, c).re.str()}, {"im", m.at(r, c).im.str()}});
        }
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json octonion_to_json(const Octonion& o) {
    Json j = Json::array();
    for (std::size_t t = 0; t < 8; ++t) j.push_back(o.coord(t).str());
    return j;
}

Octonion octonion_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 8) {
        throw ValidationError("json: octonion must be an array of 8 strings");
    }
    std::array<Rational, 8> c;
    for (std::size_t t = 0; t < 8; ++t) c[t] = rational_from_json(j[t]);
    return Octonion(std::move(c));
}

Json model_to_json(const clifford::TangentModel& t) {
    Json blocks = Json::array();
    for (const auto& b : t.blocks) {
        Json row = Json::array();
        for (const auto& x : b) row.push_back(x.str());
        blocks.push_back(std::move(row));
    }
    return Json{{"kind", clifford::kind_name(t.kind)}, {"n", t.n()}, {"blocks", std::move(blocks)}};
}

clifford::TangentModel model_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("n") || !j.contains("blocks")) {
        throw ValidationError("json: tangent model needs kind, n and blocks");
    }
    clifford::TangentModel t;
    t.kind = clifford::kind_from_name(j.at("kind").get<std::string>());
    const Json& blocks = j.at("blocks");
    if (!blocks.is_array() || blocks.size() != j.at("n").get<std::size_t>()) {
        throw ValidationError("json: tangent model n must equal the number of blocks");
    }
    const std::size_t dim = clifford::block_dimension(t.kind);
    for (const Json& row : blocks) {
        if (!row.is_array() || row.size() != dim) {
            throw ValidationError("json: tangent model block has the wrong dimension");
        }
        std::vector<Rational> b;
        b.reserve(dim);
        for (const Json& x : row) b.push_back(rational_from_json(x));
        t.blocks.push_back(std::move(b));
    }
    clifford::validate_model(t);
    return t;
}

Json element_to_json(const clifford::EvenCliffordElement& e) {
    Json out = Json::array();
    // canonical order: cardinality, then lexicographic
    for (const auto subset : clifford::even_basis(e.rank())) {
        const auto it = e.terms().find(subset);
        if (it == e.terms().end()) continue;
        Json indices = Json::array();
        for (std::size_t idx : clifford::subset_indices(subset)) indices.push_back(idx);
        out.push_back(Json{{"subset", std::move(indices)}, {"coeff", it->second.str()}});
    }
    return out;
}

clifford::EvenCliffordElement element_from_json(const Json& j, std::size_t rank) {
    if (!j.is_array()) throw ValidationError("json: element must be an array of terms");
    clifford::EvenCliffordElement e(rank);
    for (const Json& term : j) {
        if (!term.is_object() || !term.contains("subset") || !term.contains("coeff")) {
            throw ValidationError("json: element term needs subset and coeff");
        }
        std::vector<std::size_t> indices;
        for (const Json& idx : term.at("subset")) indices.push_back(idx.get<std::size_t>());
        e.add_term(clifford::subset_from_indices(indices, rank),
                   rational_from_json(term.at("coeff")));
    }
    return e;
}

Json poincare_to_json(const cohomology::PoincarePolynomial& p) {
    Json j = Json::object();
    for (const auto& [d, v] : p.coefficients()) j[std::to_string(d)] = v;
    return j;
}

}  // namespace cliffgrass::io

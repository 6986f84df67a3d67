#pragma once

// JSON descriptors for groups, subgroups, polynomials and result records.
// Group descriptors:
//   {"kind": "affine",      "q": 7, "H": [1, 6]}
//   {"kind": "affine_full", "q": 7}
//   {"kind": "fg",          "q": 3, "d": 1}
//   {"kind": "zpmzp",       "p": 3, "m": 2, "A": [[1,1],[0,1]]}

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hssp/group.hpp"
#include "hssp/linalg.hpp"
#include "hssp/poly.hpp"
#include "hssp/vandermonde.hpp"

namespace hssp {

using Json = nlohmann::json;

// smallest prime factor decomposition q = p^k
inline std::pair<int, int> prime_power(int q) {
    if (q < 2) throw DomainMismatchError("field size must be at least 2");
    int p = 2;
    while (q % p != 0) ++p;
    int k = 0, rest = q;
    while (rest % p == 0) { rest /= p; ++k; }
    if (rest != 1) throw NotPrimeError("field size is not a prime power");
    return {p, k};
}

inline FieldPtr field_from_q(int q) {
    auto [p, k] = prime_power(q);
    return field_make(p, k);
}

struct ParsedGroup {
    GroupPtr group;
    ActionPtr action;
    FieldPtr field;
    std::shared_ptr<const AffineGroup> affine;
    std::shared_ptr<const FunctionGraphGroup> fg;
    std::shared_ptr<const ZpmZpGroup> zpmzp;
};

inline ParsedGroup parse_group(const Json& j) {
    ParsedGroup out;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "affine" || kind == "affine_full") {
        out.field = field_from_q(j.at("q").get<int>());
        if (kind == "affine_full") {
            out.affine = make_full_affine(out.field);
        } else {
            out.affine = make_affine(out.field, j.at("H").get<std::vector<int>>());
        }
        out.group = out.affine;
        out.action = std::make_shared<KernelAction>(out.group);
    } else if (kind == "fg") {
        out.field = field_from_q(j.at("q").get<int>());
        out.fg = make_function_graph(out.field, j.at("d").get<int>());
        out.group = out.fg;
        out.action = std::make_shared<ShiftingAction>(out.fg);
    } else if (kind == "zpmzp") {
        int p = j.at("p").get<int>();
        out.field = field_make(p, 1);
        out.zpmzp = make_zpmzp(p, j.at("m").get<int>(),
                               j.at("A").get<std::vector<std::vector<int>>>());
        out.group = out.zpmzp;
    } else {
        throw DomainMismatchError("unknown group kind: " + kind);
    }
    return out;
}

inline Json subgroup_to_json(const Subgroup& h) {
    Json elems = Json::array();
    for (const auto& e : h.elements()) elems.push_back({e.k, e.h});
    return Json{{"order", h.size()}, {"elements", elems}};
}

inline Json poly_to_json(const FieldPoly& p) {
    return Json{{"degree", p.degree()}, {"coeffs", p.coeffs()}};
}

inline Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) terms.push_back({{"exponent", e}, {"coeff", c}});
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const FieldPtr& f, const Json& j) {
    MultiPoly p(f, j.at("nvars").get<int>());
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("exponent").get<std::vector<int>>(), t.at("coeff").get<int>());
    return p;
}

inline Json matrix_to_json(const MatrixFq& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json vandermonde_to_json(const VandermondeSystem& sys) {
    return Json{{"q", sys.exponents.q},
                {"j", sys.exponents.j},
                {"d", sys.exponents.d},
                {"exponents", sys.exponents.exponents},
                {"points", sys.points},
                {"matrix", matrix_to_json(sys.matrix)},
                {"size", sys.points.size()}};
}

}  // namespace hssp

#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "pkla/blocks.hpp"
#include "pkla/curvature.hpp"
#include "pkla/extensions.hpp"
#include "pkla/families.hpp"
#include "pkla/jordan.hpp"
#include "pkla/lie_algebra.hpp"

namespace pkla {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Matrices: {"rows": r, "cols": c, "entries": [["p/q", ...], ...]}.

inline Json matrix_to_json(const RMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_string(m(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

inline Json matrix_to_json(const CMat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(gauss_to_string(m(i, j)));
        rows.push_back(row);
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

namespace detail {

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

inline int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

inline std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw SchemaError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace detail

inline RMat matrix_from_json(const Json& j) {
    int rows = detail::int_field(j, "rows");
    int cols = detail::int_field(j, "cols");
    const Json& entries = detail::field(j, "entries");
    if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw SchemaError("matrix entries do not match the declared shape");
    RMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = entries.at(i);
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw SchemaError("matrix entries do not match the declared shape");
        for (int jx = 0; jx < cols; ++jx) {
            if (!row.at(jx).is_string()) throw SchemaError("matrix entries must be rational strings");
            m(i, jx) = parse_scalar(row.at(jx).get<std::string>());
        }
    }
    return m;
}

// ---------------------------------------------------------------------------
// Lie algebras: {"dim": n, "brackets": [{"i":1,"j":2,"k":3,"c":"1/1"}, ...]}
// with 1-based basis indices.

inline Json lie_algebra_to_json(const LieAlgebra& l) {
    Json br = Json::array();
    for (const auto& t : l.brackets)
        br.push_back(Json{{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"c", scalar_to_string(t.c)}});
    return Json{{"dim", l.dim}, {"brackets", br}};
}

inline LieAlgebra lie_algebra_from_json(const Json& j) {
    LieAlgebra l;
    l.dim = detail::int_field(j, "dim");
    if (l.dim < 0) throw SchemaError("dim must be nonnegative");
    const Json& br = detail::field(j, "brackets");
    if (!br.is_array()) throw SchemaError("brackets must be an array");
    for (const Json& t : br) {
        int i = detail::int_field(t, "i"), jj = detail::int_field(t, "j"), k = detail::int_field(t, "k");
        if (i < 1 || i > l.dim || jj < 1 || jj > l.dim || k < 1 || k > l.dim)
            throw SchemaError("bracket index out of range");
        l.brackets.push_back({i - 1, jj - 1, k - 1, parse_scalar(detail::string_field(t, "c"))});
    }
    return l;
}

// ---------------------------------------------------------------------------
// Block types: [{"kind":"pm","m":1,"eps":1,"zeta":"0/1+1/1 i","mult":2}, ...].

inline Json block_type_to_json(const BlockType& t) {
    Json out = Json::array();
    for (const auto& [b, mult] : t.items) {
        Json item;
        item["kind"] = b.pair ? "pair" : "pm";
        item["m"] = b.m;
        if (!b.pair) item["eps"] = b.eps;
        item["zeta"] = gauss_to_string(b.zeta);
        item["mult"] = mult;
        out.push_back(item);
    }
    return out;
}

inline BlockType block_type_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("block type must be an array");
    BlockType t;
    for (const Json& item : j) {
        std::string kind = detail::string_field(item, "kind");
        int m = detail::int_field(item, "m");
        Gauss zeta = parse_gauss(detail::string_field(item, "zeta"));
        int mult = item.contains("mult") ? detail::int_field(item, "mult") : 1;
        if (mult <= 0) throw SchemaError("block multiplicity must be positive");
        if (kind == "pm") {
            int eps = detail::int_field(item, "eps");
            if (eps != 1 && eps != -1) throw SchemaError("eps must be +1 or -1");
            t.add(pm_block(m, eps, zeta), mult);
        } else if (kind == "pair") {
            t.add(pair_block(m, zeta), mult);
        } else {
            throw SchemaError("block kind must be \"pm\" or \"pair\"");
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// x-assignments: {"pm_0_+":"1/1", "pm_1_-":"1/2", ...}.

inline std::string x_key(int m, int eps) { return "pm_" + std::to_string(m) + "_" + (eps > 0 ? "+" : "-"); }

inline Json assignment_to_json(const XtAssignment& x) {
    Json out = Json::object();
    for (const auto& [key, val] : x) out[x_key(key.first, key.second)] = scalar_to_string(val);
    return out;
}

inline XtAssignment assignment_from_json(const Json& j) {
    if (!j.is_object()) throw SchemaError("x assignment must be an object");
    XtAssignment x;
    for (const auto& [key, val] : j.items()) {
        if (key.size() < 6 || key.rfind("pm_", 0) != 0) throw SchemaError("x key must look like \"pm_<m>_<+/->\"");
        std::size_t us = key.rfind('_');
        std::string sign = key.substr(us + 1);
        if (sign != "+" && sign != "-") throw SchemaError("x key must end in + or -");
        int m = 0;
        try {
            m = std::stoi(key.substr(3, us - 3));
        } catch (const std::exception&) {
            throw SchemaError("x key must look like \"pm_<m>_<+/->\"");
        }
        if (!val.is_string()) throw SchemaError("x values must be rational strings");
        x[{m, sign == "+" ? 1 : -1}] = parse_scalar(val.get<std::string>());
    }
    return x;
}

// ---------------------------------------------------------------------------
// Family instances: {"family":3, "t":[...], "params":{...}}.

inline Json family_instance_to_json(const FamilyInstance& p) {
    Json params = Json::object();
    params["a"] = scalar_to_string(p.a);
    params["c1"] = scalar_to_string(p.c1);
    params["c2"] = scalar_to_string(p.c2);
    params["eps"] = p.eps;
    params["x"] = assignment_to_json(p.x);
    return Json{{"family", p.family}, {"t", block_type_to_json(p.t)}, {"params", params}};
}

inline FamilyInstance family_instance_from_json(const Json& j) {
    FamilyInstance p;
    p.family = detail::int_field(j, "family");
    if (p.family < 0 || p.family > 6) throw SchemaError("family must be in 0..6");
    p.t = block_type_from_json(detail::field(j, "t"));
    if (j.contains("params")) {
        const Json& params = j.at("params");
        if (!params.is_object()) throw SchemaError("params must be an object");
        if (params.contains("a")) p.a = parse_scalar(detail::string_field(params, "a"));
        if (params.contains("c1")) p.c1 = parse_scalar(detail::string_field(params, "c1"));
        if (params.contains("c2")) p.c2 = parse_scalar(detail::string_field(params, "c2"));
        if (params.contains("eps")) {
            p.eps = detail::int_field(params, "eps");
            if (p.eps != 1 && p.eps != -1) throw SchemaError("eps must be +1 or -1");
        }
        if (params.contains("x")) p.x = assignment_from_json(params.at("x"));
    }
    return p;
}

// ---------------------------------------------------------------------------
// Jordan types: [{"kind":"J","m":1,"alpha":"0/1","mult":2},
//                {"kind":"C","m":0,"zeta":"0/1+1/1 i","mult":1}].

inline Json jordan_type_to_json(const JordanType& t) {
    Json out = Json::array();
    for (const auto& b : t.blocks) {
        Json item;
        item["kind"] = b.complex_pair ? "C" : "J";
        item["m"] = b.m;
        if (b.complex_pair)
            item["zeta"] = gauss_to_string(b.value);
        else
            item["alpha"] = scalar_to_string(b.value.re);
        item["mult"] = b.mult;
        out.push_back(item);
    }
    return out;
}

inline JordanType jordan_type_from_json(const Json& j) {
    if (!j.is_array()) throw SchemaError("Jordan type must be an array");
    JordanType t;
    for (const Json& item : j) {
        std::string kind = detail::string_field(item, "kind");
        int m = detail::int_field(item, "m");
        int mult = item.contains("mult") ? detail::int_field(item, "mult") : 1;
        if (mult <= 0) throw SchemaError("Jordan block multiplicity must be positive");
        if (kind == "J") {
            t.add_j(m, parse_scalar(detail::string_field(item, "alpha")), mult);
        } else if (kind == "C") {
            Gauss zeta = parse_gauss(detail::string_field(item, "zeta"));
            if (sgn(zeta.im) <= 0) throw SchemaError("C blocks require zeta with positive imaginary part");
            t.add_c(m, zeta, mult);
        } else {
            throw SchemaError("Jordan block kind must be \"J\" or \"C\"");
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Reports.

inline Json pk_structure_to_json(const PKStructure& s) {
    return Json{{"dim", s.dim},
                {"D", matrix_to_json(s.D)},
                {"J", matrix_to_json(s.J)},
                {"g", matrix_to_json(s.g)},
                {"isotropic", s.isotropic}};
}

inline PKStructure pk_structure_from_json(const Json& j) {
    PKStructure s;
    s.dim = detail::int_field(j, "dim");
    s.D = matrix_from_json(detail::field(j, "D"));
    s.J = matrix_from_json(detail::field(j, "J"));
    s.g = matrix_from_json(detail::field(j, "g"));
    const Json& iso = detail::field(j, "isotropic");
    if (!iso.is_boolean()) throw SchemaError("isotropic must be a boolean");
    s.isotropic = iso.get<bool>();
    if (s.D.rows() != s.dim - 1 || s.D.cols() != s.dim - 1 || s.J.rows() != s.dim || s.g.rows() != s.dim)
        throw SchemaError("structure matrices do not match the declared dimension");
    return s;
}

inline Json pk_report_to_json(const PKReport& r) {
    Json out{{"almost_complex", r.almost_complex},
             {"metric", r.metric},
             {"integrable", r.integrable},
             {"closed", r.closed},
             {"ok", r.ok()}};
    if (!r.witness.empty()) out["witness"] = r.witness;
    return out;
}

inline Json curvature_report_to_json(const LieAlgebra& l, const RMat& g) {
    CurvatureData cd = curvature(l, g);
    Json out;
    out["flat"] = cd.flat();
    out["ricci_flat"] = cd.ricci_flat();
    out["ricci"] = matrix_to_json(cd.ricci);
    if (auto sol = ricci_soliton(l, g)) {
        out["soliton"] = Json{{"lambda", scalar_to_string(sol->lambda)}, {"delta", matrix_to_json(sol->delta)}};
    } else {
        out["soliton"] = nullptr;
    }
    return out;
}

inline Json decide_report_to_json(const JordanType& t) {
    return Json{{"complex", admits_complex(t)},
                {"symplectic", admits_symplectic(t)},
                {"pseudo_kahler", admits_pk(t)},
                {"cs_not_pk", cs_not_pk(t)}};
}

inline Json extension_to_json(const EinsteinExtension& e) {
    Json out{{"algebra", lie_algebra_to_json(e.algebra)},
             {"J", matrix_to_json(e.J)},
             {"g", matrix_to_json(e.g)},
             {"einstein_constant", scalar_to_string(e.einstein_constant)}};
    out["curvature"] = curvature_report_to_json(e.algebra, e.g);
    return out;
}

inline Json error_to_json(const std::string& code, const std::string& message) {
    return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace pkla

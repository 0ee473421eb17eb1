#pragma once

// JSON and CSV serialization for the command-line tool. Layouts are documented in docs/schemas.md.

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "alcove/characters.hpp"
#include "alcove/identities.hpp"
#include "alcove/stabilizers.hpp"
#include "alcove/verlinde.hpp"

namespace alcove::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json header(const std::string& schema) {
    Json j;
    j["schema"] = "alcove." + schema;
    j["schema_version"] = kSchemaVersion;
    return j;
}

inline Json rational_json(const Rational& r) { return to_string(r); }

inline Json vector_json(const RationalVector& v) {
    Json a = Json::array();
    for (const auto& r : v) a.push_back(rational_json(r));
    return a;
}

inline Json vector_json(const IntVector& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

inline Json weight_json(const Weight& w) { return vector_json(w.coords); }

inline Json complex_json(const ComplexValue& z) { return Json::array({z.real(), z.imag()}); }

inline Json matrix_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

inline Json matrix_json(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector_json(m.row(i)));
    return a;
}

inline Json columns_json(const IntMatrix& m) {
    Json a = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(vector_json(m.column(j)));
    return a;
}

inline Json columns_json(const RationalMatrix& m) {
    Json a = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) a.push_back(vector_json(m.column(j)));
    return a;
}

inline Json roots_json(const RootSystem& rs) {
    Json j = header("roots");
    j["type"] = rs.type().name();
    j["rank"] = rs.rank();
    j["cartan_matrix"] = matrix_json(rs.cartan());
    j["symmetrizers"] = vector_json(rs.symmetrizers());
    Json roots = Json::array();
    for (const auto& r : rs.positive_roots()) {
        Json e;
        e["weight"] = weight_json(r.weight);
        e["simple"] = vector_json(r.simple);
        e["height"] = r.height();
        roots.push_back(e);
    }
    j["positive_roots"] = roots;
    j["highest_root"] = weight_json(rs.highest_root().weight);
    j["marks"] = vector_json(rs.marks());
    j["comarks"] = vector_json(rs.comarks());
    j["dual_coxeter"] = rs.dual_coxeter();
    j["rho"] = weight_json(rs.rho());
    j["lattice_m_basis"] = columns_json(rs.lattice_m_basis());
    j["lattice_mstar_basis"] = columns_json(rs.lattice_mstar_weights());
    j["mstar_over_m"] = mstar_over_m(rs);
    return j;
}

inline Json labels_json(const std::vector<RootLabel>& labels) {
    Json a = Json::array();
    for (const auto& l : labels) a.push_back(l.affine ? Json("affine") : Json(l.index));
    return a;
}

inline Json face_json(const RootSystem& rs, const FaceData& fd) {
    Json j;
    j["walls"] = fd.walls;
    j["mu"] = weight_json(fd.mu);
    j["on_affine_wall"] = fd.on_affine_wall;
    j["delta0"] = fd.delta0;
    j["delta_mu"] = labels_json(fd.delta_mu);
    Json fw = Json::array();
    for (const auto& w : fd.fund_weights_mu) fw.push_back(weight_json(w));
    j["fund_weights_mu"] = fw;
    j["rho_mu"] = weight_json(fd.rho_mu);
    j["n"] = fd.n_value;
    j["epsilon_covee"] = vector_json(fd.epsilon_covee);
    j["isotropy_order"] = fd.isotropy_order;
    j["isotropy_order_lattice"] = isotropy_order_by_lattice(rs, fd);
    return j;
}

inline Json faces_json(const RootSystem& rs) {
    Json j = header("faces");
    j["type"] = rs.type().name();
    Json rows = Json::array();
    for (const auto& fd : enumerate_faces(rs)) rows.push_back(face_json(rs, fd));
    j["faces"] = rows;
    return j;
}

inline Json grid_json(const RootSystem& rs, const CharacterTable& t) {
    Json j = header("grid");
    j["type"] = rs.type().name();
    j["level"] = t.level;
    j["grid"] = to_string(t.mode);
    Json pts = Json::array();
    for (std::size_t c = 0; c < t.grid.size(); ++c) {
        Json p;
        p["label"] = t.grid[c].label;
        p["mu_star"] = weight_json(t.grid[c].point.mu_star());
        p["regular"] = static_cast<bool>(t.regular[c]);
        pts.push_back(p);
    }
    j["points"] = pts;
    Json ws = Json::array();
    for (const auto& w : t.weights) ws.push_back(weight_json(w));
    j["weights"] = ws;
    Json vals = Json::array();
    for (std::size_t r = 0; r < t.weights.size(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < t.grid.size(); ++c) row.push_back(t.regular[c] ? complex_json(t.values[r][c]) : Json());
        vals.push_back(row);
    }
    j["values"] = vals;
    return j;
}

inline Json fusion_json(const RootSystem& rs, const FusionTable& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    Json j = header("fusion");
    j["type"] = rs.type().name();
    j["level"] = t.level;
    Json ws = Json::array();
    for (const auto& w : t.weights) ws.push_back(weight_json(w));
    j["weights"] = ws;
    Json triples = Json::array();
    for (auto [a, b] : pairs)
        for (std::size_t c = 0; c < t.size(); ++c) {
            Integer v = t(a, b, c);
            if (v == 0) continue;
            triples.push_back(Json{{"a", weight_json(t.weights[a])}, {"b", weight_json(t.weights[b])},
                                   {"c", weight_json(t.weights[c])}, {"N", v}});
        }
    j["coefficients"] = triples;
    j["max_rounding_residual"] = t.max_residual;
    Json viol = Json::array();
    for (const auto& v : fusion_invariant_violations(t)) viol.push_back(v);
    j["invariant_violations"] = viol;
    return j;
}

inline Json report_json(const IdentityReport& r) {
    Json j;
    j["identity"] = r.name;
    j["system"] = r.system;
    j["level"] = r.level < 0 ? Json() : Json(r.level);
    j["samples"] = r.residuals.size();
    j["max_residual"] = r.max_residual;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    Json d = Json::object();
    for (const auto& [k, v] : r.details) d[k] = v;
    j["details"] = d;
    j["sample_points"] = r.sample_points;
    j["residuals"] = r.residuals;
    return j;
}

inline Json reports_json(const std::vector<IdentityReport>& reports) {
    Json j = header("verify");
    Json a = Json::array();
    bool ok = true;
    for (const auto& r : reports) {
        a.push_back(report_json(r));
        ok = ok && r.passed;
    }
    j["passed"] = ok;
    j["reports"] = a;
    return j;
}

// CSV

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string csv_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

/// "re+imi" with round-trip precision.
inline std::string csv_complex(const ComplexValue& z) {
    std::string im = csv_double(z.imag());
    if (im.front() != '-') im = "+" + im;
    return csv_double(z.real()) + im + "i";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
    std::string s;
    for (std::size_t i = 0; i < fields.size(); ++i) s += (i ? "," : "") + csv_field(fields[i]);
    return s + "\n";
}

inline std::string roots_csv(const RootSystem& rs) {
    std::string out = csv_row({"index", "height", "simple", "weight"});
    std::size_t i = 0;
    for (const auto& r : rs.positive_roots())
        out += csv_row({std::to_string(i++), std::to_string(r.height()), to_string(Weight(r.simple)), to_string(r.weight)});
    return out;
}

inline std::string faces_csv(const RootSystem& rs) {
    std::string out = csv_row({"walls", "mu", "on_affine_wall", "rho_mu", "n", "epsilon_covee", "isotropy_order"});
    for (const auto& fd : enumerate_faces(rs)) {
        std::string walls;
        for (auto w : fd.walls) walls += (walls.empty() ? "" : " ") + std::to_string(w);
        out += csv_row({walls, to_string(fd.mu), fd.on_affine_wall ? "true" : "false", to_string(fd.rho_mu),
                        std::to_string(fd.n_value), to_string(Weight(fd.epsilon_covee)), std::to_string(fd.isotropy_order)});
    }
    return out;
}

inline std::string grid_csv(const CharacterTable& t) {
    std::vector<std::string> head{"weight"};
    for (const auto& g : t.grid) head.push_back(g.label);
    std::string out = csv_row(head);
    for (std::size_t r = 0; r < t.weights.size(); ++r) {
        std::vector<std::string> row{to_string(t.weights[r])};
        for (std::size_t c = 0; c < t.grid.size(); ++c) row.push_back(t.regular[c] ? csv_complex(t.values[r][c]) : "");
        out += csv_row(row);
    }
    return out;
}

/// Dense slabs: one row per (a, b), one column per c.
inline std::string fusion_csv(const FusionTable& t, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::vector<std::string> head{"a", "b"};
    for (const auto& w : t.weights) head.push_back(to_string(w));
    std::string out = csv_row(head);
    for (auto [a, b] : pairs) {
        std::vector<std::string> row{to_string(t.weights[a]), to_string(t.weights[b])};
        for (std::size_t c = 0; c < t.size(); ++c) row.push_back(std::to_string(t(a, b, c)));
        out += csv_row(row);
    }
    return out;
}

inline std::string reports_csv(const std::vector<IdentityReport>& reports) {
    std::string out = csv_row({"identity", "system", "level", "samples", "max_residual", "tolerance", "passed"});
    for (const auto& r : reports)
        out += csv_row({r.name, r.system, r.level < 0 ? "" : std::to_string(r.level), std::to_string(r.residuals.size()),
                        csv_double(r.max_residual), csv_double(r.tolerance), r.passed ? "true" : "false"});
    return out;
}

}  // namespace alcove::io

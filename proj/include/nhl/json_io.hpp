#pragma once

// JSON formats for every object the CLI exchanges. All rationals travel as
// strings "p/q" in lowest terms with positive q (integers as "p/1"); sparse
// vectors are objects mapping the coordinate index (as a string) to such a
// rational. Parse failures throw input_error naming the offending field.
// Rational scalars only: files are the exact-arithmetic contract.

#include <string>
#include <vector>

#include <json.hpp>

#include "nhl/cohomology.hpp"
#include "nhl/deformation.hpp"
#include "nhl/extension.hpp"
#include "nhl/representation.hpp"

namespace nhl {

using json = nlohmann::json;

namespace jio {

inline const json& expect(const json& j, const char* field) {
    if (!j.is_object()) throw input_error("expected an object with field '" + std::string(field) + "'");
    auto it = j.find(field);
    if (it == j.end()) throw input_error("missing field '" + std::string(field) + "'");
    return *it;
}

inline int get_int(const json& j, const char* field) {
    const json& v = expect(j, field);
    if (!v.is_number_integer()) throw input_error("field '" + std::string(field) + "' must be an integer");
    return v.get<int>();
}

inline Rational get_rational(const json& v, const std::string& where) {
    if (!v.is_string()) throw input_error("field '" + where + "' must be a rational string \"p/q\"");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const input_error& e) {
        throw input_error("field '" + where + "': " + e.what());
    }
}

inline Combo get_combo(const json& v, const std::string& where) {
    if (!v.is_array()) throw input_error("field '" + where + "' must be an index array");
    Combo c;
    for (const json& x : v) {
        if (!x.is_number_integer()) throw input_error("field '" + where + "' must hold integers");
        c.push_back(x.get<int>());
    }
    return c;
}

inline Matrix<Rational> get_matrix(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) throw input_error("field '" + where + "' must be a nonempty matrix");
    int rows = static_cast<int>(v.size());
    int cols = -1;
    Matrix<Rational> m;
    for (int i = 0; i < rows; ++i) {
        const json& row = v[static_cast<std::size_t>(i)];
        if (!row.is_array()) throw input_error("field '" + where + "' must be an array of rows");
        if (cols < 0) {
            cols = static_cast<int>(row.size());
            m = Matrix<Rational>(rows, cols);
        }
        if (static_cast<int>(row.size()) != cols)
            throw input_error("field '" + where + "' has ragged rows");
        for (int j = 0; j < cols; ++j)
            m(i, j) = get_rational(row[static_cast<std::size_t>(j)],
                                   where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return m;
}

inline Vec<Rational> get_sparse_vec(const json& v, int dim, const std::string& where) {
    if (!v.is_object()) throw input_error("field '" + where + "' must be a sparse index->rational map");
    Vec<Rational> out = zero_vec<Rational>(dim);
    for (auto it = v.begin(); it != v.end(); ++it) {
        int idx;
        try {
            idx = std::stoi(it.key());
        } catch (...) {
            throw input_error("field '" + where + "' has non-integer key '" + it.key() + "'");
        }
        if (idx < 0 || idx >= dim)
            throw input_error("field '" + where + "' key " + it.key() + " out of range [0," +
                              std::to_string(dim) + ")");
        out[static_cast<std::size_t>(idx)] = get_rational(it.value(), where + "." + it.key());
    }
    return out;
}

inline json matrix_json(const Matrix<Rational>& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline json sparse_vec_json(const Vec<Rational>& v) {
    json out = json::object();
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out[std::to_string(i)] = v[i].str();
    return out;
}

inline json combo_json(const Combo& c) {
    json out = json::array();
    for (Index i : c) out.push_back(i);
    return out;
}

// shared by algebra brackets, deformation tables and generalized derivations
inline json table_json(const std::map<Combo, Vec<Rational>>& table) {
    json out = json::array();
    for (const auto& [c, v] : table) {
        json entry;
        entry["args"] = combo_json(c);
        entry["value"] = sparse_vec_json(v);
        out.push_back(entry);
    }
    return out;
}

inline std::map<Combo, Vec<Rational>> get_table(const json& v, int dim, const std::string& where) {
    if (!v.is_array()) throw input_error("field '" + where + "' must be an array of entries");
    std::map<Combo, Vec<Rational>> table;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const json& entry = v[i];
        std::string at = where + "[" + std::to_string(i) + "]";
        Combo args = get_combo(expect(entry, "args"), at + ".args");
        Vec<Rational> value = get_sparse_vec(expect(entry, "value"), dim, at + ".value");
        if (table.count(args)) throw input_error("field '" + at + "' repeats combo " + combo_str(args));
        table.emplace(std::move(args), std::move(value));
    }
    return table;
}

} // namespace jio

// ---- algebra ----

inline NHomLieAlgebra<Rational> algebra_from_json(const json& j) {
    int n = jio::get_int(j, "n");
    int dim = jio::get_int(j, "dim");
    Matrix<Rational> alpha = jio::get_matrix(jio::expect(j, "alpha"), "alpha");
    BracketTable<Rational> table;
    if (j.contains("brackets")) table = jio::get_table(j["brackets"], dim, "brackets");
    NHomLieAlgebra<Rational> alg(n, dim, std::move(table), std::move(alpha));
    // the coboundary and Nijenhuis formulas need alpha^{-1}; reject here
    if (!alg.alpha().is_invertible()) throw structural_error("field 'alpha' must be invertible");
    return alg;
}

inline json algebra_to_json(const NHomLieAlgebra<Rational>& alg) {
    json j;
    j["n"] = alg.arity();
    j["dim"] = alg.dim();
    j["alpha"] = jio::matrix_json(alg.alpha());
    j["brackets"] = jio::table_json(alg.bracket());
    return j;
}

// ---- representation ----

inline Representation<Rational> representation_from_json(const NHomLieAlgebra<Rational>& alg,
                                                         const json& j) {
    int dimv = jio::get_int(j, "dimV");
    Matrix<Rational> beta = jio::get_matrix(jio::expect(j, "beta"), "beta");
    std::map<Combo, Matrix<Rational>> rho;
    if (j.contains("rho")) {
        const json& entries = j["rho"];
        if (!entries.is_array()) throw input_error("field 'rho' must be an array");
        for (std::size_t i = 0; i < entries.size(); ++i) {
            std::string at = "rho[" + std::to_string(i) + "]";
            Combo args = jio::get_combo(jio::expect(entries[i], "args"), at + ".args");
            Matrix<Rational> m = jio::get_matrix(jio::expect(entries[i], "matrix"), at + ".matrix");
            if (rho.count(args)) throw input_error("field '" + at + "' repeats combo " + combo_str(args));
            rho.emplace(std::move(args), std::move(m));
        }
    }
    Representation<Rational> rep(alg, dimv, std::move(rho), std::move(beta));
    if (!rep.beta().is_invertible()) throw structural_error("field 'beta' must be invertible");
    return rep;
}

inline json representation_to_json(const Representation<Rational>& rep) {
    json j;
    j["dimV"] = rep.dimV();
    j["beta"] = jio::matrix_json(rep.beta());
    json entries = json::array();
    for (const auto& [c, m] : rep.rho()) {
        json entry;
        entry["args"] = jio::combo_json(c);
        entry["matrix"] = jio::matrix_json(m);
        entries.push_back(entry);
    }
    j["rho"] = entries;
    return j;
}

// ---- linear maps ----

inline Matrix<Rational> linear_map_from_json(const json& j) {
    int rows = jio::get_int(j, "rows");
    int cols = jio::get_int(j, "cols");
    Matrix<Rational> m = jio::get_matrix(jio::expect(j, "entries"), "entries");
    if (m.rows() != rows || m.cols() != cols)
        throw input_error("field 'entries' shape differs from rows/cols");
    return m;
}

inline json linear_map_to_json(const Matrix<Rational>& m) {
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = jio::matrix_json(m);
    return j;
}

// ---- generalized derivations ----

inline GeneralizedDerivation<Rational> gderivation_from_json(const NHomLieAlgebra<Rational>& alg,
                                                             const json& j) {
    GeneralizedDerivation<Rational> gd;
    gd.table = jio::get_table(j, alg.dim(), "derivation");
    return gd;
}

inline json gderivation_to_json(const GeneralizedDerivation<Rational>& gd) {
    return jio::table_json(gd.table);
}

// ---- deformation families ----

inline DeformationFamily<Rational> family_from_json(const NHomLieAlgebra<Rational>& alg,
                                                    const json& j) {
    if (!j.is_array()) throw input_error("deformation family file must be an array of bracket tables");
    DeformationFamily<Rational> fam;
    for (std::size_t i = 0; i < j.size(); ++i)
        fam.omegas.push_back(jio::get_table(j[i], alg.dim(), "family[" + std::to_string(i) + "]"));
    if (static_cast<int>(fam.omegas.size()) != alg.arity() - 1)
        throw input_error("deformation family must list exactly n-1 bracket tables");
    return fam;
}

inline json family_to_json(const DeformationFamily<Rational>& fam) {
    json j = json::array();
    for (const auto& table : fam.omegas) j.push_back(jio::table_json(table));
    return j;
}

// ---- cochains ----

inline Cochain<Rational> cochain_from_json(const NHomLieAlgebra<Rational>& alg, int dimv,
                                           const json& j) {
    Cochain<Rational> f;
    f.p = jio::get_int(j, "p");
    if (f.p < 1) throw input_error("field 'p' must be >= 1");
    const json& entries = jio::expect(j, "entries");
    if (!entries.is_array()) throw input_error("field 'entries' must be an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const json& e = entries[i];
        std::string at = "entries[" + std::to_string(i) + "]";
        const json& combos = jio::expect(e, "combos");
        if (!combos.is_array()) throw input_error("field '" + at + ".combos' must be an array");
        CochainKey key;
        if (f.p == 1) {
            if (!combos.empty()) throw input_error("field '" + at + ".combos' must be empty for p=1");
            int z = jio::get_int(e, "z");
            if (z < 0 || z >= alg.dim()) throw input_error("field '" + at + ".z' out of range");
            key.push_back(Combo{z});
        } else {
            if (static_cast<int>(combos.size()) != f.p - 1)
                throw input_error("field '" + at + ".combos' must list p-1 combos");
            for (std::size_t s = 0; s < combos.size(); ++s) {
                Combo c = jio::get_combo(combos[s], at + ".combos[" + std::to_string(s) + "]");
                int want = (s + 1 < combos.size()) ? alg.arity() - 1 : alg.arity();
                if (static_cast<int>(c.size()) != want)
                    throw input_error("field '" + at + ".combos[" + std::to_string(s) +
                                      "]' must have length " + std::to_string(want));
                key.push_back(std::move(c));
            }
        }
        Vec<Rational> value = jio::get_sparse_vec(jio::expect(e, "value"), dimv, at + ".value");
        if (f.values.count(key)) throw input_error("field '" + at + "' repeats a basis key");
        if (!vec_is_zero(value)) f.values.emplace(std::move(key), std::move(value));
    }
    return f;
}

inline json cochain_to_json(const Cochain<Rational>& f) {
    json j;
    j["p"] = f.p;
    json entries = json::array();
    for (const auto& [key, value] : f.values) {
        json e;
        if (f.p == 1) {
            e["combos"] = json::array();
            e["z"] = key.front().front();
        } else {
            json combos = json::array();
            for (const Combo& c : key) combos.push_back(jio::combo_json(c));
            e["combos"] = combos;
        }
        e["value"] = jio::sparse_vec_json(value);
        entries.push_back(e);
    }
    j["entries"] = entries;
    return j;
}

// ---- reports ----

inline json report_to_json(const Report& rep, const std::string& command,
                           const std::string& verdict) {
    json j;
    j["command"] = command;
    j["verdict"] = verdict;
    json defects = json::array();
    for (const Defect& d : rep.defects) {
        json e;
        e["location"] = d.location;
        e["expected"] = d.expected;
        e["actual"] = d.actual;
        defects.push_back(e);
    }
    j["defects"] = defects;
    j["metrics"] = json::object();
    for (const auto& [k, v] : rep.metrics) j["metrics"][k] = v;
    return j;
}

inline json report_to_json(const Report& rep, const std::string& command) {
    return report_to_json(rep, command, rep.pass() ? "pass" : "fail");
}

} // namespace nhl

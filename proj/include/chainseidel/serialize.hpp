#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "block_string.hpp"
#include "certificate.hpp"
#include "families.hpp"
#include "spectrum.hpp"
#include "switching.hpp"

namespace chainseidel {

using Json = nlohmann::ordered_json;

inline Json to_json(const ExactSpectrum& sp) {
    Json out = Json::array();
    for (const auto& e : sp.entries()) out.push_back({{"value", to_string(e.value)}, {"mult", e.multiplicity}});
    return out;
}

/// "int:-1*11;int:-5*1;..." for single-cell renderings.
inline std::string compact_string(const ExactSpectrum& sp) {
    std::string out;
    for (const auto& e : sp.entries()) {
        if (!out.empty()) out += ';';
        out += to_string(e.value) + "*" + std::to_string(e.multiplicity);
    }
    return out;
}

inline Json to_json(const SwitchingWitness& w) {
    Json out{{"subsetBits", w.subset.to_hex()}, {"degrees", w.degrees}};
    out["splitPerCell"] = w.split_per_cell ? Json(*w.split_per_cell) : Json::array();
    return out;
}

inline Json to_json(const ClassCertificate& c) {
    return {{"prefilterHash", c.prefilter_hex()}, {"canonicalBits", c.canonical.to_hex()}};
}

struct FamilyRecord {
    std::string family;
    long long r = 0;
    long long n = 0;
    long long m = 0;
    BlockString string;
    ExactSpectrum spectrum;
    bool verified = false;
};

inline Json to_json(const FamilyRecord& f) {
    return {{"family", f.family}, {"r", f.r},          {"n", f.n},
            {"m", f.m},           {"string", f.string.render()}, {"spectrum", to_json(f.spectrum)},
            {"verified", f.verified}};
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_scalar(const Json& v) {
    if (v.is_string()) return csv_field(v.get<std::string>());
    if (v.is_null()) return "";
    if (v.is_array()) {
        // spectrum lists collapse to value*mult; scalar lists to space-separated
        std::string out;
        for (const auto& x : v) {
            if (!out.empty()) out += x.is_object() ? ";" : " ";
            if (x.is_object() && x.contains("value") && x.contains("mult"))
                out += x["value"].get<std::string>() + "*" + x["mult"].dump();
            else
                out += x.is_string() ? x.get<std::string>() : x.dump();
        }
        return csv_field(out);
    }
    return v.dump();
}

namespace detail {

inline void flatten_row(const Json& v, const std::string& prefix, Json& out) {
    for (const auto& [key, child] : v.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (child.is_object())
            flatten_row(child, name, out);
        else
            out[name] = child;
    }
}

} // namespace detail

/// One CSV line per row; nested objects become dotted columns, arrays collapse
/// into one cell. Columns follow the first row.
inline std::string render_csv_rows(const Json& rows) {
    std::ostringstream os;
    if (!rows.is_array() || rows.empty()) return "";
    std::vector<Json> flat;
    for (const auto& row : rows) {
        Json f = Json::object();
        detail::flatten_row(row, "", f);
        flat.push_back(std::move(f));
    }
    std::vector<std::string> columns;
    for (const auto& [key, _] : flat.front().items()) columns.push_back(key);
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : flat) {
        for (std::size_t i = 0; i < columns.size(); ++i)
            os << (i ? "," : "") << (row.contains(columns[i]) ? csv_scalar(row[columns[i]]) : "");
        os << '\n';
    }
    return os.str();
}

namespace detail {

inline void flatten(const Json& v, const std::string& path, Json& out) {
    const bool leaf_array = v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& x) {
                                return !x.is_structured() || (x.is_object() && x.contains("mult"));
                            });
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
    } else if (v.is_array() && !leaf_array) {
        for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.push_back({{"key", path}, {"value", v}});
    }
}

inline void render_text(const Json& v, int indent, std::ostringstream& os) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    auto inline_value = [](const Json& x) -> std::string {
        if (x.is_string()) return x.get<std::string>();
        if (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) { return !y.is_structured(); })) {
            std::string s = "[";
            for (std::size_t i = 0; i < x.size(); ++i)
                s += (i ? ", " : "") + (x[i].is_string() ? x[i].get<std::string>() : x[i].dump());
            return s + "]";
        }
        if (x.is_array() && std::all_of(x.begin(), x.end(), [](const Json& y) {
                return y.is_object() && y.size() == 2 && y.contains("value") && y.contains("mult");
            })) {
            std::string s = "{";
            for (std::size_t i = 0; i < x.size(); ++i) {
                s += (i ? ", " : "") + x[i]["value"].get<std::string>();
                if (x[i]["mult"].get<std::size_t>() != 1) s += " x" + x[i]["mult"].dump();
            }
            return s + "}";
        }
        return x.is_structured() ? std::string() : x.dump();
    };
    if (v.is_object()) {
        for (const auto& [key, child] : v.items()) {
            const std::string flat = inline_value(child);
            if (!flat.empty() || !child.is_structured()) {
                os << pad << key << ": " << flat << '\n';
            } else {
                os << pad << key << ":\n";
                render_text(child, indent + 2, os);
            }
        }
    } else if (v.is_array()) {
        for (const auto& child : v) {
            const std::string flat = inline_value(child);
            if (!flat.empty() || !child.is_structured()) {
                os << pad << "- " << flat << '\n';
            } else {
                os << pad << "-\n";
                render_text(child, indent + 2, os);
            }
        }
    } else {
        os << pad << inline_value(v) << '\n';
    }
}

} // namespace detail

/// key,value rows for an arbitrary payload.
inline std::string render_csv_flat(const Json& payload) {
    Json rows = Json::array();
    detail::flatten(payload, "", rows);
    return render_csv_rows(rows);
}

/// Indented "key: value" listing carrying the same fields as the JSON form.
inline std::string render_text(const Json& payload) {
    std::ostringstream os;
    detail::render_text(payload, 0, os);
    return os.str();
}

} // namespace chainseidel

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "quasiham/cayley_table.hpp"
#include "quasiham/error.hpp"
#include "quasiham/galois_field.hpp"
#include "quasiham/isotope.hpp"
#include "quasiham/prime_field.hpp"
#include "quasiham/quaternion.hpp"
#include "quasiham/rationals.hpp"

namespace quasiham {

using AnyAlgebra = std::variant<PrimeField, GaloisField, Rationals, Quaternions, Octonions, CayleyTable>;

/// A validated algebra together with the canonical form of its spec.
struct LoadedAlgebra {
    AnyAlgebra algebra;
    nlohmann::json spec;                      // canonical (keys sorted)
    std::optional<std::vector<std::string>> pivots;  // literals, when the spec supplies them
    std::string digest;
};

/// FNV-1a 64 of the canonical JSON text, as 16 hex digits.
inline std::string spec_digest(const nlohmann::json& spec) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : spec.dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

namespace detail {

inline std::string field_path(const std::string& parent, const std::string& key) { return parent.empty() ? key : parent + "." + key; }

inline const nlohmann::json& require_field(const nlohmann::json& obj, const std::string& key, const std::string& parent) {
    if (!obj.is_object() || !obj.contains(key)) throw parse_error("missing field '" + field_path(parent, key) + "'");
    return obj.at(key);
}

inline std::uint32_t as_u32(const nlohmann::json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 0xffffffffLL)
        throw parse_error("field '" + path + "' must be a nonnegative integer");
    return static_cast<std::uint32_t>(v.get<long long>());
}

inline std::vector<std::uint32_t> as_u32_list(const nlohmann::json& v, const std::string& path) {
    if (!v.is_array()) throw parse_error("field '" + path + "' must be a list of integers");
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_u32(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline IndexTable as_table(const nlohmann::json& v, const std::string& path) {
    if (!v.is_array()) throw parse_error("field '" + path + "' must be a matrix");
    IndexTable out;
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_u32_list(v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

inline std::string kind_of(const nlohmann::json& spec) {
    const auto& k = require_field(spec, "kind", "");
    if (!k.is_string()) throw parse_error("field 'kind' must be a string");
    return k.get<std::string>();
}

inline GaloisField galois_from(const nlohmann::json& spec, const std::string& path);

/// Preset names map to specs; everything goes through the same loader.
inline std::optional<nlohmann::json> preset_spec(const std::string& name) {
    using nlohmann::json;
    static const std::regex prime(R"(f(\d+))");
    if (name == "f4" || name == "f8" || name == "f9" || name == "f25") return preset_spec("g" + name);
    std::smatch m;
    if (std::regex_match(name, m, prime)) return json{{"kind", "prime-field"}, {"p", std::stoul(m[1].str())}};
    if (name == "gf4") return json{{"kind", "galois-field"}, {"p", 2}, {"poly", {1, 1, 1}}};
    if (name == "gf8") return json{{"kind", "galois-field"}, {"p", 2}, {"poly", {1, 1, 0, 1}}};
    if (name == "gf9") return json{{"kind", "galois-field"}, {"p", 3}, {"poly", {1, 0, 1}}};
    if (name == "gf25") return json{{"kind", "galois-field"}, {"p", 5}, {"poly", {2, 1, 1}}};
    if (name == "rationals") return json{{"kind", "rationals"}};
    if (name == "quaternions") return json{{"kind", "quaternions"}};
    if (name == "octonions") return json{{"kind", "octonions"}};
    if (name == "gf9-isotope") return json{{"kind", "isotope"}, {"isotope", {{"base", "gf9"}, {"a", "t"}}}};
    return std::nullopt;
}

inline GaloisField galois_from(const nlohmann::json& spec, const std::string& path) {
    if (spec.is_string()) {
        const auto preset = preset_spec(spec.get<std::string>());
        if (!preset || kind_of(*preset) != "galois-field")
            throw parse_error("field '" + path + "' names no Galois-field preset: " + spec.get<std::string>());
        return galois_from(*preset, path);
    }
    if (kind_of(spec) != "galois-field") throw parse_error("field '" + path + "' must be a galois-field spec");
    return GaloisField(as_u32(require_field(spec, "p", path), field_path(path, "p")),
                       as_u32_list(require_field(spec, "poly", path), field_path(path, "poly")));
}

inline long height_of(const nlohmann::json& spec) {
    if (!spec.contains("height")) return 10;
    const auto h = as_u32(spec.at("height"), "height");
    if (h == 0) throw parse_error("field 'height' must be positive");
    return h;
}

}  // namespace detail

/// Builds the algebra a spec describes, enforcing every structural invariant.
inline AnyAlgebra build_algebra(const nlohmann::json& spec) {
    const std::string kind = detail::kind_of(spec);
    const std::string label = spec.contains("label") && spec.at("label").is_string() ? spec.at("label").get<std::string>() : "";
    if (kind == "prime-field") return PrimeField(detail::as_u32(detail::require_field(spec, "p", ""), "p"));
    if (kind == "galois-field") return detail::galois_from(spec, "");
    if (kind == "rationals") return Rationals(detail::height_of(spec));
    if (kind == "quaternions") return Quaternions(detail::height_of(spec));
    if (kind == "octonions") return Octonions(detail::height_of(spec));
    if (kind == "cayley-table") {
        const auto& tables = detail::require_field(spec, "tables", "");
        auto add = detail::as_table(detail::require_field(tables, "add", "tables"), "tables.add");
        auto mul = detail::as_table(detail::require_field(tables, "mul", "tables"), "tables.mul");
        std::vector<std::string> names;
        if (spec.contains("names")) {
            if (!spec.at("names").is_array()) throw parse_error("field 'names' must be a list of strings");
            for (const auto& n : spec.at("names")) {
                if (!n.is_string()) throw parse_error("field 'names' must be a list of strings");
                names.push_back(n.get<std::string>());
            }
        }
        return CayleyTable(std::move(add), std::move(mul), std::move(names), label.empty() ? "cayley-table" : label);
    }
    if (kind == "isotope") {
        const auto& iso = detail::require_field(spec, "isotope", "");
        const GaloisField base = detail::galois_from(detail::require_field(iso, "base", "isotope"), "isotope.base");
        const auto& a_field = detail::require_field(iso, "a", "isotope");
        if (!a_field.is_string()) throw parse_error("field 'isotope.a' must be a scalar literal");
        const GfElement a = base.parse(a_field.get<std::string>());
        std::optional<Matrix<Residue>> v;
        if (iso.contains("V")) {
            const auto rows = detail::as_table(iso.at("V"), "isotope.V");
            Matrix<Residue> vm;
            for (const auto& row : rows) {
                std::vector<Residue> r;
                for (auto x : row) r.push_back(base.subfield().from_integer(x));
                vm.push_back(std::move(r));
            }
            v = std::move(vm);
        }
        auto table = make_isotope(base, a, v);
        if (!label.empty()) {
            return CayleyTable(table.add_table(), table.mul_table(), table.names(), label);
        }
        return table;
    }
    throw parse_error("unknown algebra kind '" + kind + "'");
}

inline LoadedAlgebra load_algebra_json(const nlohmann::json& spec) {
    LoadedAlgebra out{build_algebra(spec), spec, std::nullopt, spec_digest(spec)};
    if (spec.contains("pivots")) {
        if (!spec.at("pivots").is_array()) throw parse_error("field 'pivots' must be a list of scalar literals");
        std::vector<std::string> p;
        for (const auto& x : spec.at("pivots")) {
            if (!x.is_string()) throw parse_error("field 'pivots' must be a list of scalar literals");
            p.push_back(x.get<std::string>());
        }
        out.pivots = std::move(p);
    }
    return out;
}

inline LoadedAlgebra load_algebra_text(const std::string& text) {
    nlohmann::json spec;
    try {
        spec = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }
    return load_algebra_json(spec);
}

/// A preset name or a path to a JSON spec file.
inline LoadedAlgebra parse_algebra_spec(const std::string& preset_or_path) {
    if (auto preset = detail::preset_spec(preset_or_path)) return load_algebra_json(*preset);
    std::ifstream in(preset_or_path);
    if (!in) throw parse_error("'" + preset_or_path + "' is neither a preset nor a readable spec file");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_algebra_text(buf.str());
}

inline std::vector<std::string> preset_names() {
    return {"f2", "f3", "f5", "f7", "gf4", "gf8", "gf9", "gf25", "rationals", "quaternions", "octonions", "gf9-isotope"};
}

}  // namespace quasiham

#include "fibscramble/keyfile.hpp"

#include "fibscramble/errors.hpp"

#include <fstream>
#include <set>

namespace fibscramble {

using nlohmann::json;

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [name, _] : obj.items()) {
        if (!allowed.contains(name)) throw KeyFormatError("unknown field '" + name + "' in " + where);
    }
}

std::int64_t int_field(const json& obj, const char* name, const std::string& where) {
    const auto it = obj.find(name);
    if (it == obj.end()) throw KeyFormatError(std::string("missing field '") + name + "' in " + where);
    if (!it->is_number_integer()) throw KeyFormatError(std::string("field '") + name + "' in " + where + " must be an integer");
    return it->get<std::int64_t>();
}

Series parse_series(const json& params) {
    const auto it = params.find("series");
    if (it == params.end() || !it->is_string()) throw KeyFormatError("flt params need a string 'series'");
    const std::string s = it->get<std::string>();
    if (s == "fib11") return Series::Fib11;
    if (s == "fib32") return Series::Fib32;
    if (s == "fib31") return Series::Fib31;
    throw KeyFormatError("unknown flt series '" + s + "' (expected fib11, fib32 or fib31)");
}

int variant_field(const json& params, int limit, const std::string& where) {
    const std::int64_t v = int_field(params, "variant", where);
    if (v < 0 || v >= limit) {
        throw KeyFormatError("variant in " + where + " must be in 0.." + std::to_string(limit - 1));
    }
    return static_cast<int>(v);
}

}  // namespace

std::string family_tag(const TransformMap& map) {
    return std::visit(overloaded{
                          [](const family::Arnold&) { return std::string("arnold"); },
                          [](const family::GeneralizedArnold&) { return std::string("gat"); },
                          [](const family::FibonacciQ&) { return std::string("fibonacci-q"); },
                          [](const family::GeneralizedFibonacci&) { return std::string("gft"); },
                          [](const family::FiboLucas&) { return std::string("flt"); },
                          [](const family::Triangular&) { return std::string("triangular"); },
                          [](const family::Raw&) { return std::string("raw"); },
                      },
                      map.family);
}

json map_params(const TransformMap& map) {
    return std::visit(overloaded{
                          [](const family::Arnold&) { return json::object(); },
                          [](const family::GeneralizedArnold& f) { return json{{"k", f.k}, {"variant", f.variant}}; },
                          [](const family::FibonacciQ&) { return json::object(); },
                          [](const family::GeneralizedFibonacci& f) { return json{{"i", f.i}}; },
                          [](const family::FiboLucas& f) {
                              return json{{"series", std::string(series_name(f.series))}, {"i", f.i}};
                          },
                          [](const family::Triangular& f) { return json{{"k", f.k}, {"variant", f.variant}}; },
                          [&map](const family::Raw&) {
                              const Matrix2& m = map.entries;
                              return json{{"entries", {m.a, m.b, m.c, m.d}}};
                          },
                      },
                      map.family);
}

TransformMap map_from_tag(const std::string& tag, const json& params) {
    if (!params.is_object()) throw KeyFormatError("params must be a JSON object");
    const std::string where = "params of family '" + tag + "'";
    try {
        if (tag == "arnold" || tag == "fibonacci-q") {
            reject_unknown(params, {}, where);
            return tag == "arnold" ? make_arnold() : make_fibonacci_q();
        }
        if (tag == "gat") {
            reject_unknown(params, {"k", "variant"}, where);
            return make_generalized_arnold(int_field(params, "k", where), variant_field(params, 8, where));
        }
        if (tag == "gft") {
            reject_unknown(params, {"i"}, where);
            return make_gft(int_field(params, "i", where));
        }
        if (tag == "flt") {
            reject_unknown(params, {"series", "i"}, where);
            return make_flt(parse_series(params), int_field(params, "i", where));
        }
        if (tag == "f11lt" || tag == "f32lt" || tag == "f31lt") {
            reject_unknown(params, {"i"}, where);
            const Series s = tag == "f11lt" ? Series::Fib11 : tag == "f32lt" ? Series::Fib32 : Series::Fib31;
            return make_flt(s, int_field(params, "i", where));
        }
        if (tag == "triangular") {
            reject_unknown(params, {"k", "variant"}, where);
            return make_triangular(int_field(params, "k", where), variant_field(params, 4, where));
        }
        if (tag == "raw") {
            reject_unknown(params, {"entries"}, where);
            const auto it = params.find("entries");
            if (it == params.end() || !it->is_array() || it->size() != 4) {
                throw KeyFormatError("raw params need 'entries': [a, b, c, d]");
            }
            for (const json& e : *it) {
                if (!e.is_number_integer()) throw KeyFormatError("raw entries must be integers");
            }
            return make_raw((*it)[0].get<std::int64_t>(), (*it)[1].get<std::int64_t>(), (*it)[2].get<std::int64_t>(),
                            (*it)[3].get<std::int64_t>());
        }
    } catch (const std::invalid_argument& e) {
        throw KeyFormatError(e.what());
    }
    throw KeyFormatError("unknown map family '" + tag + "'");
}

json key_to_json(const ScrambleKey& key) {
    return json{{"version", kKeyFileVersion},
                {"family", family_tag(key.map)},
                {"params", map_params(key.map)},
                {"n", key.modulus},
                {"iterations", key.iterations}};
}

ScrambleKey key_from_json(const json& j) {
    if (!j.is_object()) throw KeyFormatError("key file must contain a JSON object");
    reject_unknown(j, {"version", "family", "params", "n", "iterations"}, "key file");
    const std::int64_t version = int_field(j, "version", "key file");
    if (version != kKeyFileVersion) {
        throw KeyFormatError("unsupported key file version " + std::to_string(version) + " (expected " +
                             std::to_string(kKeyFileVersion) + ")");
    }
    const auto fam = j.find("family");
    if (fam == j.end() || !fam->is_string()) throw KeyFormatError("key file needs a string 'family'");
    const auto params = j.find("params");
    ScrambleKey key;
    key.map = map_from_tag(fam->get<std::string>(), params == j.end() ? json::object() : *params);
    key.modulus = int_field(j, "n", "key file");
    if (key.modulus < 2) throw KeyFormatError("key modulus n must be >= 2");
    const std::int64_t t = int_field(j, "iterations", "key file");
    if (t < 0) throw KeyFormatError("key iterations must be >= 0");
    key.iterations = static_cast<std::uint64_t>(t);
    return key;
}

ScrambleKey load_key(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw KeyFormatError("cannot open key file " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw KeyFormatError("key file " + path.string() + " is not valid JSON: " + e.what());
    }
    return key_from_json(j);
}

void save_key(const ScrambleKey& key, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw KeyFormatError("cannot write key file " + path.string());
    out << key_to_json(key).dump(2) << '\n';
}

}  // namespace fibscramble

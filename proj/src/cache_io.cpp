#include "lascoux/cache_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lascoux/errors.hpp"

namespace lascoux {

namespace {

std::string join_elements(const IndexSet& s) {
    std::string out;
    for (size_t i = 0; i < s.elements().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.elements()[i]);
    }
    return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

int parse_nonneg_int(const std::string& s, const std::string& context) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw input_error("bad integer \"" + s + "\" in " + context);
    try {
        return std::stoi(s);
    } catch (const std::exception&) {
        throw input_error("integer out of range in " + context);
    }
}

} // namespace

std::string cache_key(const LascouxKey& key) {
    std::string out = type_name(key.type) + "|I=" + join_elements(key.I);
    if (key.type == LType::A) out += "|J=" + join_elements(key.J);
    return out + "|n=" + std::to_string(key.n);
}

LascouxKey parse_cache_key(const std::string& s) {
    const std::vector<std::string> parts = split(s, '|');
    const std::string context = "cache key \"" + s + "\"";
    LascouxKey key;
    key.type = type_from_name(parts.empty() ? "" : parts[0]);
    const size_t expected = key.type == LType::A ? 4 : 3;
    if (parts.size() != expected)
        throw input_error(context + ": expected " + std::to_string(expected) + " |-fields");
    if (parts[1].rfind("I=", 0) != 0) throw input_error(context + ": missing I=");
    key.I = parse_index_set(parts[1].substr(2));
    if (key.type == LType::A) {
        if (parts[2].rfind("J=", 0) != 0) throw input_error(context + ": missing J=");
        key.J = parse_index_set(parts[2].substr(2));
        if (key.I.size() != key.J.size()) throw input_error(context + ": |I| != |J|");
    }
    const std::string& last = parts.back();
    if (last.rfind("n=", 0) != 0) throw input_error(context + ": missing n=");
    key.n = parse_nonneg_int(last.substr(2), context);
    return key;
}

CacheFile cache_from_memo(const MemoTable& memo) {
    CacheFile file;
    for (const auto& [key, value] : memo.snapshot()) file.entries.emplace(cache_key(key), value.str());
    return file;
}

void memo_from_cache(const CacheFile& file, MemoTable& memo) {
    std::map<LascouxKey, BigRational> entries;
    for (const auto& [key_str, value_str] : file.entries)
        entries.emplace(parse_cache_key(key_str), BigRational::from_string(value_str));
    memo.populate(entries);
}

CacheFile load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read cache file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cache file " + path + " is not valid JSON: " + e.what());
    }
    if (!j.is_object() || !j.contains("version") || !j.contains("entries") ||
        !j["version"].is_number_integer() || !j["entries"].is_object())
        throw input_error("cache file " + path + " has the wrong shape");
    CacheFile file;
    file.version = j["version"].get<int>();
    if (file.version != 1)
        throw input_error("cache file " + path + " has unsupported version " +
                          std::to_string(file.version));
    for (const auto& [key_str, value] : j["entries"].items()) {
        if (!value.is_string())
            throw input_error("cache file " + path + " entry " + key_str + " is not a string");
        parse_cache_key(key_str); // rejects malformed keys early
        const std::string value_str = value.get<std::string>();
        if (!BigRational::from_string(value_str).is_integer())
            throw input_error("cache file " + path + " entry " + key_str +
                              " has non-integer value " + value_str);
        file.entries.emplace(key_str, value_str);
    }
    return file;
}

void save_cache(const CacheFile& file, const std::string& path) {
    nlohmann::json j;
    j["version"] = file.version;
    j["entries"] = nlohmann::json::object();
    for (const auto& [key, value] : file.entries) j["entries"][key] = value;

    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw input_error("cannot write cache file " + tmp);
        out << j.dump(2) << "\n";
        if (!out) throw input_error("failed writing cache file " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw input_error("cannot move cache file into place at " + path + ": " + ec.message());
}

} // namespace lascoux

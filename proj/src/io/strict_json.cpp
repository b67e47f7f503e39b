#include "shadowsum/io/strict_json.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "shadowsum/error.hpp"

namespace shadowsum::io {

json parse_text(const std::string &text, const std::string &source) {
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(source + ": malformed JSON: " + e.what());
    }
}

json read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return parse_text(os.str(), path);
}

ObjectReader::ObjectReader(const json &j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object())
        throw ParseError(path_ + ": expected an object");
}

bool ObjectReader::has(const std::string &key) const { return j_.contains(key); }

const json &ObjectReader::get(const std::string &key) {
    if (!j_.contains(key))
        throw ParseError(path(key) + ": missing required key");
    used_.insert(key);
    return j_.at(key);
}

int as_integer(const json &j, const std::string &path) {
    if (!j.is_number_integer())
        throw ParseError(path + ": expected an integer");
    const auto v = j.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw ParseError(path + ": integer out of range");
    return static_cast<int>(v);
}

bool as_boolean(const json &j, const std::string &path) {
    if (!j.is_boolean())
        throw ParseError(path + ": expected true or false");
    return j.get<bool>();
}

int ObjectReader::integer(const std::string &key) { return as_integer(get(key), path(key)); }

std::optional<int> ObjectReader::opt_integer(const std::string &key) {
    if (!has(key))
        return std::nullopt;
    return integer(key);
}

bool ObjectReader::boolean(const std::string &key) { return as_boolean(get(key), path(key)); }

std::optional<bool> ObjectReader::opt_boolean(const std::string &key) {
    if (!has(key))
        return std::nullopt;
    return boolean(key);
}

std::string ObjectReader::string(const std::string &key) {
    const json &j = get(key);
    if (!j.is_string())
        throw ParseError(path(key) + ": expected a string");
    return j.get<std::string>();
}

std::optional<std::string> ObjectReader::opt_string(const std::string &key) {
    if (!has(key))
        return std::nullopt;
    return string(key);
}

std::vector<std::pair<const json *, std::string>> ObjectReader::array(const std::string &key, bool optional) {
    std::vector<std::pair<const json *, std::string>> out;
    if (optional && !has(key))
        return out;
    const json &j = get(key);
    if (!j.is_array())
        throw ParseError(path(key) + ": expected an array");
    for (std::size_t i = 0; i < j.size(); ++i)
        out.emplace_back(&j[i], path(key) + "[" + std::to_string(i) + "]");
    return out;
}

const json &ObjectReader::raw(const std::string &key) { return get(key); }

void ObjectReader::finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it)
        if (!used_.count(it.key()))
            throw ParseError(path(it.key()) + ": unknown key");
}

void throw_size(const std::string &path, std::size_t want, std::size_t got) {
    throw ParseError(path + ": expected " + std::to_string(want) + " entries, found " + std::to_string(got));
}

std::string dump(const ordered_json &j) { return j.dump(2) + "\n"; }

} // namespace shadowsum::io

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace shadowsum::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void throw_size(const std::string &path, std::size_t want, std::size_t got);

json parse_text(const std::string &text, const std::string &source = "<input>");
json read_file(const std::string &path);

// View of a JSON object that records which keys were read, so that unknown
// keys can be rejected. Errors name the full path of the offending key.
class ObjectReader {
public:
    ObjectReader(const json &j, std::string path);

    bool has(const std::string &key) const;
    int integer(const std::string &key);
    std::optional<int> opt_integer(const std::string &key);
    bool boolean(const std::string &key);
    std::optional<bool> opt_boolean(const std::string &key);
    std::string string(const std::string &key);
    std::optional<std::string> opt_string(const std::string &key);
    // Array elements with their paths; empty when the key is absent and
    // optional.
    std::vector<std::pair<const json *, std::string>> array(const std::string &key, bool optional = false);
    template <std::size_t N, class T>
    std::array<T, N> fixed(const std::string &key);
    const json &raw(const std::string &key);
    std::string path(const std::string &key) const { return path_ + "." + key; }
    const std::string &path() const { return path_; }

    // Throws if any key was never read.
    void finish() const;

private:
    const json &get(const std::string &key);

    const json &j_;
    std::string path_;
    std::set<std::string> used_;
};

int as_integer(const json &j, const std::string &path);
bool as_boolean(const json &j, const std::string &path);

template <std::size_t N, class T>
std::array<T, N> ObjectReader::fixed(const std::string &key) {
    const auto items = array(key);
    if (items.size() != N)
        throw_size(path(key), N, items.size());
    std::array<T, N> out{};
    for (std::size_t i = 0; i < N; ++i) {
        if constexpr (std::is_same_v<T, bool>)
            out[i] = as_boolean(*items[i].first, items[i].second);
        else
            out[i] = as_integer(*items[i].first, items[i].second);
    }
    return out;
}

std::string dump(const ordered_json &j);

} // namespace shadowsum::io

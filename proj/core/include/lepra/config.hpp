#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace lepra {

/// Minimal sectioned key-value format:
///   [section]
///   key = value        # comment
/// Key order is preserved; keys may repeat.
struct ConfigDoc {
    using Entry = std::pair<std::string, std::string>;
    struct Section {
        std::string name;
        std::vector<Entry> entries;
    };
    std::vector<Section> sections;

    Section* find(const std::string& name);
    const Section* find(const std::string& name) const;
    Section& get_or_add(const std::string& name);

    static ConfigDoc parse(std::istream& in);
    static ConfigDoc parse_string(const std::string& text);
    std::string dump() const;
};

/// 17 significant digits, round-trips any finite double.
std::string format_double(double v);
double parse_double(const std::string& s, const std::string& context);

}  // namespace lepra

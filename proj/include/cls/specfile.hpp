#ifndef CLS_SPECFILE_HPP
#define CLS_SPECFILE_HPP

#include <map>
#include <string>
#include <vector>

#include "cls/errors.hpp"

namespace cls {

/// Line-oriented `key = value` file with `[section]` headers. Values keep
/// their text; surrounding double quotes are stripped. Repeated keys keep
/// every occurrence in file order.
class SpecFile {
public:
    static SpecFile parse(const std::string& text);
    static SpecFile load(const std::string& path);  // throws Error on I/O failure

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;
    /// Single-valued lookup; throws Error when missing or repeated.
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key, const std::string& fallback) const;
    std::vector<std::string> get_all(const std::string& section, const std::string& key) const;
    /// All keys of a section in file order (with duplicates).
    std::vector<std::pair<std::string, std::string>> entries(const std::string& section) const;

private:
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections_;
};

}  // namespace cls

#endif

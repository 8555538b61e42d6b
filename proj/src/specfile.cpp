#include "cls/specfile.hpp"

#include <fstream>
#include <sstream>

namespace cls {

namespace {

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

SpecFile SpecFile::parse(const std::string& text) {
    SpecFile file;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        if (t.front() == '[') {
            if (t.back() != ']') throw Error("unterminated section header at line " + std::to_string(lineno));
            section = trim(t.substr(1, t.size() - 2));
            file.sections_.try_emplace(section);
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw Error("expected `key = value` at line " + std::to_string(lineno));
        std::string key = trim(t.substr(0, eq));
        std::string value = trim(t.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        if (key.empty()) throw Error("empty key at line " + std::to_string(lineno));
        file.sections_[section].emplace_back(key, value);
    }
    return file;
}

SpecFile SpecFile::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool SpecFile::has_section(const std::string& section) const { return sections_.count(section) > 0; }

bool SpecFile::has(const std::string& section, const std::string& key) const {
    auto it = sections_.find(section);
    if (it == sections_.end()) return false;
    for (const auto& [k, v] : it->second)
        if (k == key) return true;
    return false;
}

std::string SpecFile::get(const std::string& section, const std::string& key) const {
    auto all = get_all(section, key);
    if (all.empty()) throw Error("missing key `" + key + "` in section [" + section + "]");
    if (all.size() > 1) throw Error("repeated key `" + key + "` in section [" + section + "]");
    return all.front();
}

std::string SpecFile::get_or(const std::string& section, const std::string& key,
                             const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

std::vector<std::string> SpecFile::get_all(const std::string& section, const std::string& key) const {
    std::vector<std::string> out;
    auto it = sections_.find(section);
    if (it == sections_.end()) return out;
    for (const auto& [k, v] : it->second)
        if (k == key) out.push_back(v);
    return out;
}

std::vector<std::pair<std::string, std::string>> SpecFile::entries(const std::string& section) const {
    auto it = sections_.find(section);
    return it == sections_.end() ? std::vector<std::pair<std::string, std::string>>{} : it->second;
}

}  // namespace cls

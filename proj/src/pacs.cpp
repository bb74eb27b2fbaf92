#include "subvis/pacs.hpp"

#include "subvis/errors.hpp"

#include <cctype>

namespace subvis {

namespace {

std::string_view trim(std::string_view text)
{
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) {
        text.remove_prefix(1);
    }
    while (!text.empty() && is_space(text.back())) {
        text.remove_suffix(1);
    }
    return text;
}

} // namespace

PacsCode parse_pacs(std::string_view text)
{
    auto const code = trim(text);
    auto fail = [&](const char* why) {
        return MalformedPacs("'" + std::string(text) + "': " + why);
    };

    if (code.empty()) {
        throw fail("empty code");
    }
    for (char c : code) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            throw fail("internal whitespace");
        }
    }
    if (code.size() < 5 || !SubfieldKey::is_valid(code.substr(0, 5))) {
        throw fail("expected two digit pairs separated by a dot");
    }

    PacsCode out;
    out.level1 = code[0];
    out.level2 = std::string(code.substr(0, 2));
    out.level3 = std::string(code.substr(0, 5));

    auto rest = code.substr(5);
    if (!rest.empty() && rest.front() == '.') {
        rest.remove_prefix(1);
    }
    out.suffix = std::string(rest);
    return out;
}

SubfieldKey subfield_key(const PacsCode& code)
{
    return SubfieldKey(code.level3);
}

} // namespace subvis

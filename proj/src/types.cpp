#include "subvis/types.hpp"

#include "subvis/errors.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

namespace subvis {

namespace {

bool parse_int(std::string_view text, int& out)
{
    if (text.empty()) {
        return false;
    }
    auto const* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc() && ptr == end;
}

bool all_digits(std::string_view text)
{
    for (char c : text) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return !text.empty();
}

} // namespace

// =================================================================================================
//      Date
// =================================================================================================

Date Date::parse(std::string_view text)
{
    Date date;
    int month = 1;
    int day = 1;
    bool ok = false;
    if (text.size() == 4 && all_digits(text)) {
        ok = parse_int(text, date.year);
    } else if (text.size() == 10 && text[4] == '-' && text[7] == '-'
               && all_digits(text.substr(0, 4)) && all_digits(text.substr(5, 2))
               && all_digits(text.substr(8, 2))) {
        ok = parse_int(text.substr(0, 4), date.year) && parse_int(text.substr(5, 2), month)
             && parse_int(text.substr(8, 2), day);
    }
    if (ok) {
        std::chrono::year_month_day ymd{std::chrono::year{date.year},
                                        std::chrono::month{static_cast<unsigned>(month)},
                                        std::chrono::day{static_cast<unsigned>(day)}};
        ok = ymd.ok();
    }
    if (!ok) {
        throw SchemaError("bad date '" + std::string(text) + "', expected YYYY-MM-DD or YYYY");
    }
    date.month = static_cast<unsigned>(month);
    date.day = static_cast<unsigned>(day);
    return date;
}

std::string Date::to_string() const
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", year, month, day);
    return buf;
}

// =================================================================================================
//      YearRange
// =================================================================================================

YearRange::YearRange(int first, int last)
    : first_(first)
    , last_(last)
{
    if (first > last) {
        throw InvalidSelector("year range " + std::to_string(first) + ":" + std::to_string(last)
                              + " is empty");
    }
}

YearRange YearRange::parse(std::string_view text)
{
    auto const colon = text.find(':');
    int first = 0;
    int last = 0;
    bool ok;
    if (colon == std::string_view::npos) {
        ok = parse_int(text, first);
        last = first;
    } else {
        ok = parse_int(text.substr(0, colon), first) && parse_int(text.substr(colon + 1), last);
    }
    if (!ok) {
        throw InvalidSelector("cannot parse year range '" + std::string(text) + "', expected A:B");
    }
    return YearRange(first, last);
}

YearRange YearRange::trailing(int last, int count)
{
    if (count < 1) {
        throw InvalidConfig("window must span at least one year");
    }
    return YearRange(last - count + 1, last);
}

std::string YearRange::to_string() const
{
    return std::to_string(first_) + ":" + std::to_string(last_);
}

// =================================================================================================
//      SubfieldKey / PacsCode
// =================================================================================================

bool SubfieldKey::is_valid(std::string_view text) noexcept
{
    return text.size() == 5 && all_digits(text.substr(0, 2)) && text[2] == '.'
           && all_digits(text.substr(3, 2));
}

SubfieldKey::SubfieldKey(std::string_view text)
    : key_(text)
{
    if (!is_valid(text)) {
        throw MalformedPacs("'" + std::string(text) + "' is not a level-3 key NN.NN");
    }
}

std::string PacsCode::text() const
{
    return suffix.empty() ? level3 : level3 + "." + suffix;
}

// =================================================================================================
//      Selectors
// =================================================================================================

void GroupFilter::validate() const
{
    if (!journal && !subfield) {
        throw InvalidSelector("a group needs a journal, a subfield, or both");
    }
    if (journal && journal->empty()) {
        throw InvalidSelector("empty journal name");
    }
}

std::string GroupFilter::to_string() const
{
    std::string out;
    if (journal) {
        out += *journal;
    }
    if (subfield) {
        if (!out.empty()) {
            out += ":";
        }
        out += subfield->str();
    }
    return out;
}

GroupSelector::GroupSelector(GroupFilter filter, YearRange pub_years)
    : filter_(std::move(filter))
    , pub_years_(pub_years)
{
    filter_.validate();
}

GroupSelector::GroupSelector(std::optional<std::string> journal,
                             std::optional<SubfieldKey> subfield, YearRange pub_years)
    : GroupSelector(GroupFilter{std::move(journal), std::move(subfield)}, pub_years)
{}

} // namespace subvis

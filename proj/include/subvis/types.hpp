#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace subvis {

// =================================================================================================
//      Dates and year windows
// =================================================================================================

/// Calendar date. Metrics only ever look at the year.
struct Date {
    int year = 0;
    unsigned month = 1;
    unsigned day = 1;

    /// Accepts "YYYY-MM-DD" or a bare "YYYY" (read as January 1st). Throws SchemaError.
    static Date parse(std::string_view text);

    std::string to_string() const;

    friend auto operator<=>(const Date&, const Date&) = default;
};

/// Inclusive range of calendar years, first <= last.
class YearRange {
public:
    /// Throws InvalidSelector when first > last.
    YearRange(int first, int last);

    /// Parses "A:B" or a single year "A".
    static YearRange parse(std::string_view text);

    /// The `count` years ending at (and including) `last`.
    static YearRange trailing(int last, int count);

    int first() const noexcept { return first_; }
    int last() const noexcept { return last_; }
    int size() const noexcept { return last_ - first_ + 1; }
    bool contains(int year) const noexcept { return year >= first_ && year <= last_; }

    std::string to_string() const;

    friend bool operator==(const YearRange&, const YearRange&) = default;

private:
    int first_;
    int last_;
};

// =================================================================================================
//      Classification codes
// =================================================================================================

/// Level-3 PACS key, always of the form "NN.NN".
class SubfieldKey {
public:
    /// Throws MalformedPacs unless `text` is exactly digit digit '.' digit digit.
    explicit SubfieldKey(std::string_view text);

    static bool is_valid(std::string_view text) noexcept;

    const std::string& str() const noexcept { return key_; }

    friend auto operator<=>(const SubfieldKey&, const SubfieldKey&) = default;

private:
    std::string key_;
};

/// A parsed PACS code such as "05.45.-a".
struct PacsCode {
    char level1 = '0';   ///< "0"
    std::string level2;  ///< "05"
    std::string level3;  ///< "05.45"
    std::string suffix;  ///< "-a", verbatim, possibly empty

    /// Canonical text: level3, plus "." and the suffix when there is one.
    std::string text() const;

    friend bool operator==(const PacsCode&, const PacsCode&) = default;
};

// =================================================================================================
//      Papers, edges, selectors
// =================================================================================================

struct Paper {
    std::string id;
    std::string journal;
    Date pub_date;
    std::vector<PacsCode> pacs;

    int pub_year() const noexcept { return pub_date.year; }

    friend bool operator==(const Paper&, const Paper&) = default;
};

struct CitationEdge {
    std::string citing;
    std::string cited;

    friend auto operator<=>(const CitationEdge&, const CitationEdge&) = default;
};

/// Journal and/or subfield constraint without a year window.
struct GroupFilter {
    std::optional<std::string> journal;
    std::optional<SubfieldKey> subfield;

    /// Throws InvalidSelector when neither field is set.
    void validate() const;

    std::string to_string() const;
};

/// A declarative paper group: filter plus an inclusive publication-year window.
class GroupSelector {
public:
    GroupSelector(GroupFilter filter, YearRange pub_years);

    GroupSelector(std::optional<std::string> journal, std::optional<SubfieldKey> subfield,
                  YearRange pub_years);

    const GroupFilter& filter() const noexcept { return filter_; }
    const std::optional<std::string>& journal() const noexcept { return filter_.journal; }
    const std::optional<SubfieldKey>& subfield() const noexcept { return filter_.subfield; }
    const YearRange& pub_years() const noexcept { return pub_years_; }

private:
    GroupFilter filter_;
    YearRange pub_years_;
};

} // namespace subvis

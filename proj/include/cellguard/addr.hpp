#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

namespace cellguard {

inline constexpr int kMaxRow = 1048576;
inline constexpr int kMaxCol = 16384;

// 1-based row/col position on a named sheet.
struct CellAddr {
    std::string sheet;
    int row = 0;
    int col = 0;

    friend auto operator<=>(const CellAddr&, const CellAddr&) = default;
};

std::string col_to_letters(int col);
std::optional<int> col_from_letters(std::string_view letters);

struct A1Parts {
    int row = 0;
    int col = 0;
    bool col_abs = false;
    bool row_abs = false;
};

// Strict A1 form: optional $ before column letters and row digits, nothing else.
std::optional<A1Parts> parse_a1(std::string_view text);
std::string to_a1(int row, int col, bool col_abs = false, bool row_abs = false);

// Sheet names that are not plain identifiers get single quotes, with
// embedded quotes doubled: 'Sao Paolo', 'It''s'.
bool sheet_needs_quotes(std::string_view name);
std::string quote_sheet(std::string_view name);

// "Sheet!B7", quoting the sheet name when required.
std::string format_addr(const CellAddr& a);
std::string format_range(const std::string& sheet, int top, int left, int bottom, int right);

// Sheet names compare case-insensitively (ASCII), as in Excel.
bool sheet_name_equal(std::string_view a, std::string_view b);
std::string lower_ascii(std::string_view s);

// Shortest decimal form that parses back to exactly the same double.
std::string format_number(double v);

}  // namespace cellguard

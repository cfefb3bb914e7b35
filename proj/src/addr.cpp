#include "cellguard/addr.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace cellguard {

std::string col_to_letters(int col) {
    std::string out;
    while (col > 0) {
        int rem = (col - 1) % 26;
        out.insert(out.begin(), static_cast<char>('A' + rem));
        col = (col - 1) / 26;
    }
    return out;
}

std::optional<int> col_from_letters(std::string_view letters) {
    if (letters.empty() || letters.size() > 3) return std::nullopt;
    long col = 0;
    for (char c : letters) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
        if (c < 'A' || c > 'Z') return std::nullopt;
        col = col * 26 + (c - 'A' + 1);
    }
    if (col < 1 || col > kMaxCol) return std::nullopt;
    return static_cast<int>(col);
}

std::optional<A1Parts> parse_a1(std::string_view text) {
    A1Parts out;
    size_t i = 0;
    if (i < text.size() && text[i] == '$') {
        out.col_abs = true;
        ++i;
    }
    size_t col_start = i;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) ++i;
    auto col = col_from_letters(text.substr(col_start, i - col_start));
    if (!col) return std::nullopt;
    out.col = *col;
    if (i < text.size() && text[i] == '$') {
        out.row_abs = true;
        ++i;
    }
    size_t row_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i != text.size() || row_start == i) return std::nullopt;
    long row = std::strtol(std::string(text.substr(row_start)).c_str(), nullptr, 10);
    if (row < 1 || row > kMaxRow) return std::nullopt;
    out.row = static_cast<int>(row);
    return out;
}

std::string to_a1(int row, int col, bool col_abs, bool row_abs) {
    std::string out;
    if (col_abs) out += '$';
    out += col_to_letters(col);
    if (row_abs) out += '$';
    out += std::to_string(row);
    return out;
}

bool sheet_needs_quotes(std::string_view name) {
    if (name.empty()) return true;
    if (std::isdigit(static_cast<unsigned char>(name[0]))) return true;
    for (char c : name) {
        bool plain = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        if (!plain) return true;
    }
    // A name that reads as a cell address (e.g. "A1") must be quoted too.
    return parse_a1(name).has_value();
}

std::string quote_sheet(std::string_view name) {
    if (!sheet_needs_quotes(name)) return std::string(name);
    std::string out = "'";
    for (char c : name) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

std::string format_addr(const CellAddr& a) {
    return quote_sheet(a.sheet) + "!" + to_a1(a.row, a.col);
}

std::string format_range(const std::string& sheet, int top, int left, int bottom, int right) {
    return quote_sheet(sheet) + "!" + to_a1(top, left) + ":" + to_a1(bottom, right);
}

std::string lower_ascii(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool sheet_name_equal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        char x = a[i], y = b[i];
        if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
        if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
        if (x != y) return false;
    }
    return true;
}

std::string format_number(double v) {
    if (v == 0.0) return "0";  // avoid "-0"
    char buf[64];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

}  // namespace cellguard

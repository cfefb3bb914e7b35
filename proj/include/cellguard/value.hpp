#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace cellguard {

enum class ErrorCode { div0, na, name, null, num, ref, value };

std::string_view error_code_text(ErrorCode c);
// Accepts canonical spellings plus common localized ones (e.g. Dutch
// "#DEEL/0!" for "#DIV/0!").
std::optional<ErrorCode> error_code_from_text(std::string_view t);

// A computed or stored scalar: blank, number, text, boolean, or error.
// Numbers are 64-bit floats; comparisons elsewhere use kNumberTolerance.
struct Value {
    std::variant<std::monostate, double, std::string, bool, ErrorCode> data;

    static Value blank() { return {}; }
    static Value number(double v) {
        Value r;
        r.data = v;
        return r;
    }
    static Value text(std::string s) {
        Value r;
        r.data = std::move(s);
        return r;
    }
    static Value boolean(bool b) {
        Value r;
        r.data = b;
        return r;
    }
    static Value error(ErrorCode c) {
        Value r;
        r.data = c;
        return r;
    }

    bool is_blank() const { return std::holds_alternative<std::monostate>(data); }
    bool is_number() const { return std::holds_alternative<double>(data); }
    bool is_text() const { return std::holds_alternative<std::string>(data); }
    bool is_boolean() const { return std::holds_alternative<bool>(data); }
    bool is_error() const { return std::holds_alternative<ErrorCode>(data); }

    double as_number() const { return std::get<double>(data); }
    const std::string& as_text() const { return std::get<std::string>(data); }
    bool as_boolean() const { return std::get<bool>(data); }
    ErrorCode as_error() const { return std::get<ErrorCode>(data); }

    friend bool operator==(const Value&, const Value&) = default;
};

inline constexpr double kNumberTolerance = 1e-9;
bool numbers_equal(double a, double b);

// Display form: "487", "hello", "TRUE", "#DIV/0!", "" for blank.
std::string value_to_display(const Value& v);

// Parses a decimal number under the given decimal separator; rejects
// anything but an optionally signed decimal with optional exponent.
std::optional<double> parse_number(std::string_view text, char decimal_sep = '.');

}  // namespace cellguard

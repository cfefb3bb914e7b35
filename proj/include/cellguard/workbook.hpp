#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cellguard/addr.hpp"
#include "cellguard/value.hpp"

namespace cellguard {

enum class SheetVisibility { visible, hidden, very_hidden };

std::string_view visibility_name(SheetVisibility v);
std::optional<SheetVisibility> visibility_from_name(std::string_view n);

struct Formula {
    std::string text;             // includes the leading '='
    std::optional<Value> cached;  // last stored result, if any

    friend bool operator==(const Formula&, const Formula&) = default;
};

// A stored cell is either a non-blank literal Value or a Formula.
struct Cell {
    std::variant<Value, Formula> content;

    Cell() : content(Value::blank()) {}
    explicit Cell(Value v) : content(std::move(v)) {}
    explicit Cell(Formula f) : content(std::move(f)) {}

    bool is_formula() const { return std::holds_alternative<Formula>(content); }
    const Formula* formula() const { return std::get_if<Formula>(&content); }
    Formula* formula() { return std::get_if<Formula>(&content); }
    const Value* literal() const { return std::get_if<Value>(&content); }

    // Literal value, or the formula's cached value (blank if uncached).
    Value effective_value() const {
        if (auto* f = std::get_if<Formula>(&content)) return f->cached.value_or(Value::blank());
        return std::get<Value>(content);
    }

    friend bool operator==(const Cell&, const Cell&) = default;
};

struct Sheet {
    std::string name;
    SheetVisibility visibility = SheetVisibility::visible;
    std::map<std::pair<int, int>, Cell> cells;  // key (row, col), row-major order

    const Cell* cell_at(int row, int col) const {
        auto it = cells.find({row, col});
        return it == cells.end() ? nullptr : &it->second;
    }
    void set_cell(int row, int col, Cell c) { cells[{row, col}] = std::move(c); }

    int max_row() const;
    int max_col() const;

    friend bool operator==(const Sheet&, const Sheet&) = default;
};

struct ExternalSource {
    std::string book;  // e.g. "Budget.xlsx"
    bool resolved = false;

    friend bool operator==(const ExternalSource&, const ExternalSource&) = default;
};

struct Workbook {
    std::string name;
    std::vector<Sheet> sheets;
    std::vector<ExternalSource> external_sources;        // derived from formulas
    std::map<std::string, std::string> defined_names;    // name -> range text
    std::map<std::string, Value> external_values;        // "[Book]Sheet!A1" -> stub value

    const Sheet* find_sheet(std::string_view name) const;
    Sheet* find_sheet(std::string_view name);
    // Index in sheet order, or -1. Case-insensitive like Excel.
    int sheet_index(std::string_view name) const;

    const Cell* cell_at(const CellAddr& a) const {
        const Sheet* s = find_sheet(a.sheet);
        return s ? s->cell_at(a.row, a.col) : nullptr;
    }

    friend bool operator==(const Workbook&, const Workbook&) = default;
};

// Rebuilds external_sources from the distinct external book names referenced
// by any formula; a source is resolved when external_values carries at least
// one entry for it. Unparseable formulas are ignored here.
void refresh_external_sources(Workbook& wb);

// Key used in Workbook::external_values.
std::string external_value_key(const std::string& book, const std::string& sheet, int row, int col);

}  // namespace cellguard

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cellguard/addr.hpp"
#include "cellguard/value.hpp"

namespace cellguard {

// Ingestion locale. Decimal comma implies ';' as the list separator, the
// way Excel swaps them for European locales.
struct FormulaLocale {
    char decimal_sep = '.';
    char arg_sep() const { return decimal_sep == ',' ? ';' : ','; }
};

struct RefCoord {
    int col = 0;
    int row = 0;
    bool col_abs = false;
    bool row_abs = false;

    friend bool operator==(const RefCoord&, const RefCoord&) = default;
};

// One cell or range reference as written: optional external book, optional
// sheet qualifier, start coordinate, optional end for ranges (normalized so
// start <= end on both axes).
struct RefSpan {
    std::optional<std::string> book;
    std::optional<std::string> sheet;
    RefCoord start;
    std::optional<RefCoord> end;

    bool is_range() const { return end.has_value(); }
    int top() const { return start.row; }
    int left() const { return start.col; }
    int bottom() const { return end ? end->row : start.row; }
    int right() const { return end ? end->col : start.col; }
    long long area() const {
        return static_cast<long long>(bottom() - top() + 1) * (right() - left() + 1);
    }

    friend bool operator==(const RefSpan&, const RefSpan&) = default;
};

enum class BinaryOp { add, sub, mul, div, pow, concat, eq, ne, lt, le, gt, ge };
enum class UnaryOp { plus, minus, percent };  // percent is postfix

std::string_view binary_op_text(BinaryOp op);
std::string_view unary_op_text(UnaryOp op);

struct Ast;
using AstPtr = std::unique_ptr<Ast>;

struct LiteralNode {
    Value value;
};
struct RefNode {
    RefSpan span;
};
struct FunctionNode {
    std::string name;  // stored upper-case
    std::vector<AstPtr> args;
};
struct UnaryNode {
    UnaryOp op;
    AstPtr child;
};
struct BinaryNode {
    BinaryOp op;
    AstPtr left;
    AstPtr right;
};
struct ParenNode {
    AstPtr child;
};

struct Ast {
    std::variant<LiteralNode, RefNode, FunctionNode, UnaryNode, BinaryNode, ParenNode> node;

    AstPtr clone() const;
};

bool ast_equal(const Ast& a, const Ast& b);

AstPtr make_literal(Value v);
AstPtr make_ref(RefSpan span);
AstPtr make_function(std::string name, std::vector<AstPtr> args);
AstPtr make_unary(UnaryOp op, AstPtr child);
AstPtr make_binary(BinaryOp op, AstPtr left, AstPtr right);
AstPtr make_paren(AstPtr child);

// Parses "=..." into an AST. Grammar subset: numbers, strings with ""
// escapes, TRUE/FALSE, A1 references with optional $, ranges, sheet and
// external-book qualifiers, function calls, %, ^, * /, + -, &, comparisons,
// unary +/-, parentheses. Excel precedence; see docs/grammar.md. Throws
// FormulaSyntaxError / EmptyFormulaError.
AstPtr parse_formula(std::string_view text, const FormulaLocale& locale = {});

// Inverse of parse_formula for the same locale: parse(print(ast)) is
// structurally equal to ast. The default locale is the canonical form.
std::string print_formula(const Ast& ast, const FormulaLocale& locale = {});

// All ref/range nodes in source order, with unqualified sheets resolved to
// home_sheet. Duplicates kept.
std::vector<RefSpan> extract_refs(const Ast& ast, const std::string& home_sheet);

// Canonical copy-fill-invariant encoding: relative reference axes become
// R1C1-style offsets from origin ("RC[-1]"), absolute axes stay absolute
// ("R1C1"). Two formulas are copy-fill equivalents iff their normal forms
// are byte-identical.
std::string relative_normal_form(const Ast& ast, const CellAddr& origin);

struct FormulaMetrics {
    int function_count = 0;
    int distinct_ref_groups = 0;
    std::vector<double> numeric_literals;  // source order; excludes string contents
    int max_nesting_depth = 0;             // function nesting depth
    std::map<std::string, int> sheets_referenced;  // explicit qualifiers only
};

// A ref group is a maximal run of consecutive ref/range operands, within one
// operator chain or argument list, whose union stays one contiguous
// rectangle (so B4+B5+...+B10 is a single group, like B4:B10 written out).
// distinct_ref_groups counts the distinct resulting spans.
FormulaMetrics formula_metrics(const Ast& ast);

}  // namespace cellguard

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cellguard {

struct CellguardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Formula text rejected by the grammar.
struct FormulaSyntaxError : CellguardError {
    std::size_t offset;
    std::string expected;
    FormulaSyntaxError(std::size_t off, std::string exp)
        : CellguardError("syntax error at offset " + std::to_string(off) + ": expected " + exp),
          offset(off),
          expected(std::move(exp)) {}
};

struct EmptyFormulaError : CellguardError {
    EmptyFormulaError() : CellguardError("empty formula") {}
};

// Interchange document violating the schema.
struct SchemaViolation : CellguardError {
    std::string pointer;
    std::string detail;
    SchemaViolation(std::string ptr, std::string det)
        : CellguardError("schema violation at " + ptr + ": " + det),
          pointer(std::move(ptr)),
          detail(std::move(det)) {}
};

struct NotAnArchive : CellguardError {
    NotAnArchive() : CellguardError("not a ZIP archive") {}
};

struct MalformedWorkbookXml : CellguardError {
    std::string part;
    std::string detail;
    MalformedWorkbookXml(std::string p, std::string det)
        : CellguardError("malformed " + p + ": " + det), part(std::move(p)), detail(std::move(det)) {}
};

struct UnsupportedFeature : CellguardError {
    std::string name;
    explicit UnsupportedFeature(std::string n)
        : CellguardError("unsupported feature: " + n), name(std::move(n)) {}
};

struct UnsupportedFunction : CellguardError {
    std::string name;
    explicit UnsupportedFunction(std::string n)
        : CellguardError("unsupported function: " + n), name(std::move(n)) {}
};

struct CycleDetected : CellguardError {
    std::string path;
    explicit CycleDetected(std::string p)
        : CellguardError("cycle detected: " + p), path(std::move(p)) {}
};

struct InsufficientTargets : CellguardError {
    std::string category;
    int wanted;
    int available;
    InsufficientTargets(std::string cat, int w, int a)
        : CellguardError("not enough injection targets for " + cat + ": wanted " +
                         std::to_string(w) + ", available " + std::to_string(a)),
          category(std::move(cat)),
          wanted(w),
          available(a) {}
};

struct PlanMismatch : CellguardError {
    using CellguardError::CellguardError;
};

}  // namespace cellguard

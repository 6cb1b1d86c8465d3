#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace bayesproof {

enum class ErrorKind {
    DegenerateEvidence,
    NoConditionedSamples,
    NonIntegralCounts,
    EmptyGrid,
    MissingKey,
    DuplicateKey,
    Range,
    Syntax,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. `kind()` lets callers switch
/// without a cascade of catch clauses.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Conditioning on evidence of probability zero.
class DegenerateEvidence : public Error {
public:
    explicit DegenerateEvidence(const std::string& message)
        : Error(ErrorKind::DegenerateEvidence, message) {}
};

class NoConditionedSamples : public Error {
public:
    explicit NoConditionedSamples(const std::string& message)
        : Error(ErrorKind::NoConditionedSamples, message) {}
};

class NonIntegralCounts : public Error {
public:
    explicit NonIntegralCounts(const std::string& message)
        : Error(ErrorKind::NonIntegralCounts, message) {}
};

class EmptyGrid : public Error {
public:
    explicit EmptyGrid(const std::string& message)
        : Error(ErrorKind::EmptyGrid, message) {}
};

/// Bad user input. Carries the 1-based line number when it came from a
/// scenario document.
class InputError : public Error {
public:
    InputError(ErrorKind kind, const std::string& message,
               std::optional<std::size_t> line = std::nullopt)
        : Error(kind, line ? "line " + std::to_string(*line) + ": " + message : message),
          line_(line) {}

    std::optional<std::size_t> line() const noexcept { return line_; }

private:
    std::optional<std::size_t> line_;
};

class MissingKey : public InputError {
public:
    explicit MissingKey(std::string key)
        : InputError(ErrorKind::MissingKey, "missing required key '" + key + "'"),
          key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class DuplicateKey : public InputError {
public:
    DuplicateKey(std::string key, std::size_t line)
        : InputError(ErrorKind::DuplicateKey, "duplicate key '" + key + "'", line),
          key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

class RangeError : public InputError {
public:
    explicit RangeError(const std::string& message,
                        std::optional<std::size_t> line = std::nullopt)
        : InputError(ErrorKind::Range, message, line) {}
};

class SyntaxError : public InputError {
public:
    SyntaxError(const std::string& message, std::size_t line)
        : InputError(ErrorKind::Syntax, message, line) {}
};

/// Process exit code for the CLI: 3 when the evidence (or the simulated
/// evidence) is impossible, 2 for every other input problem.
inline int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DegenerateEvidence:
    case ErrorKind::NoConditionedSamples:
        return 3;
    default:
        return 2;
    }
}

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::DegenerateEvidence: return "DegenerateEvidence";
    case ErrorKind::NoConditionedSamples: return "NoConditionedSamples";
    case ErrorKind::NonIntegralCounts: return "NonIntegralCounts";
    case ErrorKind::EmptyGrid: return "EmptyGrid";
    case ErrorKind::MissingKey: return "MissingKey";
    case ErrorKind::DuplicateKey: return "DuplicateKey";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Syntax: return "SyntaxError";
    }
    return "Error";
}

} // namespace bayesproof

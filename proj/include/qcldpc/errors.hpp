// Copyright 2026 the qcldpc authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qcldpc {

// Error taxonomy mirrored by the C ABI status codes and the CLI exit codes:
// input/parse map to exit 2, limit/internal to exit 3.
enum class ErrorKind {
    input,     // caller handed us something invalid (bad argument, bad matrix)
    parse,     // malformed QCPM text
    limit,     // a size guard refused the computation
    internal,  // broken invariant inside the library
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class InputError : public Error {
public:
    explicit InputError(std::string message) : Error(ErrorKind::input, std::move(message)) {}
};

class ParseError : public Error {
public:
    ParseError(int line, std::string message)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

class LimitError : public Error {
public:
    explicit LimitError(std::string message) : Error(ErrorKind::limit, std::move(message)) {}
};

class InternalError : public Error {
public:
    explicit InternalError(std::string message) : Error(ErrorKind::internal, std::move(message)) {}
};

}  // namespace qcldpc

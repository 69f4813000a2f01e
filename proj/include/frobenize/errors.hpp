#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace frobenize {

/// Error categories. The numeric values double as CLI exit codes.
enum class ErrorCode : int {
    Input = 2,
    Parse = 2,
    Eligibility = 3,
    NotFound = 4,
    RedFlag = 5,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string tag, const std::string& what)
        : std::runtime_error(what), code_(code), tag_(std::move(tag)) {}

    ErrorCode code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }
    /// Stable machine-readable tag, e.g. "PARSE_ERROR".
    const std::string& tag() const noexcept { return tag_; }

private:
    ErrorCode code_;
    std::string tag_;
};

class InputError : public Error {
public:
    explicit InputError(const std::string& what) : Error(ErrorCode::Input, "INPUT_ERROR", what) {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorCode::Parse, "PARSE_ERROR",
                what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// A polynomial that had to split into rational linear factors did not.
class SplitFailure : public Error {
public:
    explicit SplitFailure(const std::string& what)
        : Error(ErrorCode::Eligibility, "SPLIT_FAILURE", what) {}
};

class NotFuchsian : public Error {
public:
    explicit NotFuchsian(const std::string& what)
        : Error(ErrorCode::Eligibility, "NOT_FUCHSIAN", what) {}
};

class EligibilityError : public Error {
public:
    EligibilityError(std::string tag, const std::string& what)
        : Error(ErrorCode::Eligibility, std::move(tag), what) {}
};

class NotFound : public Error {
public:
    explicit NotFound(const std::string& what) : Error(ErrorCode::NotFound, "NOT_FOUND", what) {}
};

class RedFlag : public Error {
public:
    explicit RedFlag(const std::string& what) : Error(ErrorCode::RedFlag, "RED_FLAG", what) {}
};

}  // namespace frobenize

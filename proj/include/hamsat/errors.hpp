#ifndef HAMSAT_ERRORS_HPP
#define HAMSAT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hamsat {

// Every library error carries a stable one-word code; the CLI prints it as
// `error[<code>]: <message>` and maps it to an exit code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& message) : Error("parse", message) {}
};

class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error("validation", message) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& message) : Error("io", message) {}
};

class TooLargeError : public Error {
public:
    explicit TooLargeError(const std::string& message) : Error("too-large", message) {}
};

class CycleOverflowError : public Error {
public:
    CycleOverflowError(const std::string& message, std::uint64_t limit)
        : Error("cycle-overflow", message), limit_(limit) {}

    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

class ExpansionOverflowError : public Error {
public:
    ExpansionOverflowError(const std::string& message, std::uint64_t limit)
        : Error("expansion-overflow", message), limit_(limit) {}

    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::uint64_t limit_;
};

class WidthMismatchError : public Error {
public:
    explicit WidthMismatchError(const std::string& message) : Error("width-mismatch", message) {}
};

class TooManyVariablesError : public Error {
public:
    explicit TooManyVariablesError(const std::string& message)
        : Error("too-many-variables", message) {}
};

class ModelParseError : public Error {
public:
    explicit ModelParseError(const std::string& message) : Error("model-parse", message) {}
};

class VarOutOfRangeError : public Error {
public:
    explicit VarOutOfRangeError(const std::string& message)
        : Error("var-out-of-range", message) {}
};

class ModelInvalidError : public Error {
public:
    explicit ModelInvalidError(const std::string& message) : Error("model-invalid", message) {}
};

// Lazy refinement ran out of rounds; carries the progress made so far.
class RoundLimitError : public Error {
public:
    RoundLimitError(const std::string& message, std::uint64_t assignments_tested, int rounds,
                    int blocks_added)
        : Error("round-limit", message),
          assignments_tested_(assignments_tested),
          rounds_(rounds),
          blocks_added_(blocks_added) {}

    std::uint64_t assignments_tested() const noexcept { return assignments_tested_; }
    int rounds() const noexcept { return rounds_; }
    int blocks_added() const noexcept { return blocks_added_; }

private:
    std::uint64_t assignments_tested_;
    int rounds_;
    int blocks_added_;
};

}  // namespace hamsat

#endif  // HAMSAT_ERRORS_HPP

#pragma once
#include <stdexcept>
#include <string>

namespace binocobar {

/* Every failure the library can signal carries a stable kind tag; the CLI
 * maps kinds to JSON error payloads and exit codes. */
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

class parse_error : public error {
public:
    parse_error(std::size_t position, std::string expected)
        : error("ParseError",
                "parse error at byte " + std::to_string(position) + ": expected " + expected),
          position_(position), expected_(std::move(expected)) {}
    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

class context_violation : public error {
public:
    context_violation(std::string atom, const std::string& ctx)
        : error("ContextViolation", "'" + atom + "' is not available in context " + ctx),
          atom_(std::move(atom)) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

} // namespace binocobar

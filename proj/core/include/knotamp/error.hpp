#pragma once

#include <stdexcept>
#include <string>

namespace knotamp {

enum class ErrorKind {
    parse,         // malformed input text / json
    precondition,  // structurally valid input violating an operation contract
    internal
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorKind::parse, msg); }
[[noreturn]] inline void fail_pre(const std::string& msg) { throw Error(ErrorKind::precondition, msg); }

}  // namespace knotamp

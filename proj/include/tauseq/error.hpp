#pragma once

#include <stdexcept>
#include <string>

namespace tauseq {

/// Failure categories; the CLI maps each onto an exit code.
enum class ErrorKind { Parse, Domain, CapExceeded };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    [[nodiscard]] ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorKind::Domain, what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(ErrorKind::CapExceeded, what) {}
};

}  // namespace tauseq

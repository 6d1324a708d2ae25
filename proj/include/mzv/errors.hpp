#pragma once

#include <stdexcept>
#include <string>

namespace mzv {

// Errors are deliberately fine-grained: callers (CLI, verifiers) report them
// by name and a usage error must never look like a failed verification.

struct EmptyIndex : std::domain_error {
    explicit EmptyIndex(const std::string& what) : std::domain_error(what) {}
};

struct DepthMismatch : std::domain_error {
    explicit DepthMismatch(const std::string& what) : std::domain_error(what) {}
};

struct DepthTooSmall : std::domain_error {
    explicit DepthTooSmall(const std::string& what) : std::domain_error(what) {}
};

struct NotAdmissible : std::domain_error {
    explicit NotAdmissible(const std::string& what) : std::domain_error(what) {}
};

struct NotPrime : std::domain_error {
    explicit NotPrime(const std::string& what) : std::domain_error(what) {}
};

struct InvalidParams : std::domain_error {
    explicit InvalidParams(const std::string& what) : std::domain_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mzv

#pragma once

#include <stdexcept>
#include <string>

namespace wg {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct RankError : DomainError {
    explicit RankError(const std::string& what) : DomainError(what) {}
};

struct NotACorner : DomainError {
    explicit NotACorner(const std::string& what) : DomainError(what) {}
};

struct NotSimple : DomainError {
    explicit NotSimple(const std::string& what) : DomainError(what) {}
};

struct NotIsotropic : DomainError {
    explicit NotIsotropic(const std::string& what) : DomainError(what) {}
};

struct SpecError : DomainError {
    explicit SpecError(const std::string& what) : DomainError(what) {}
};

struct EmptyChain : DomainError {
    explicit EmptyChain(const std::string& what) : DomainError(what) {}
};

struct NoSupportingPath : DomainError {
    explicit NoSupportingPath(const std::string& what) : DomainError(what) {}
};

// Raised when a partial action gives conflicting answers on two members of
// one equivalence class.  Well-definedness of the extended action rules this
// out; hitting it means an internal invariant broke.
struct AmbiguousAction : std::logic_error {
    explicit AmbiguousAction(const std::string& what) : std::logic_error(what) {}
};

}  // namespace wg

#pragma once

#include <stdexcept>
#include <string>

namespace hds {

enum class ErrorKind {
    Overflow,
    SizeMismatch,
    InvalidArgument,
    PromiseViolated,
    TooLarge,
    NotInZeroSet,
    ForcingViolated,
    Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every library failure is reported through this one exception type; callers
// that need to branch on the failure inspect kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hds

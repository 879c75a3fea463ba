#include "hds/error.hpp"

namespace hds {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::SizeMismatch: return "size_mismatch";
    case ErrorKind::InvalidArgument: return "invalid_argument";
    case ErrorKind::PromiseViolated: return "promise_violated";
    case ErrorKind::TooLarge: return "too_large";
    case ErrorKind::NotInZeroSet: return "not_in_zero_set";
    case ErrorKind::ForcingViolated: return "forcing_violated";
    case ErrorKind::Parse: return "parse";
    }
    return "unknown";
}

} // namespace hds

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace swc {

enum class ErrorCode {
    InvalidDirection,
    NotPairwiseIndependent,
    NotSpanning,
    DimensionError,
    UnsupportedOrientation,
    DegenerateGhost,
    InvalidParameter,
    InvalidProfileSet,
    OutOfGrid,
    DegeneratePolygon,
    DegenerateFunctional,
    ResourceLimit,
    InternalError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::ResourceLimit, "64-bit integer overflow");
    return r;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::ResourceLimit, "64-bit integer overflow");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::ResourceLimit, "64-bit integer overflow");
    return r;
}

inline std::int64_t checked_pow(std::int64_t base, std::uint64_t exp) {
    std::int64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace detail
}  // namespace swc

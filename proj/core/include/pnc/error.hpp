#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pnc {

enum class Errc {
    InvalidArgument,
    ParseError,
    Overflow,
    // field
    NonPrimeCharacteristic,
    ReducibleModulus,
    NoDefaultModulus,
    FieldTooLarge,
    ZeroInverse,
    NotASubfieldSize,
    // polyring
    DimensionMismatch,
    // variety
    NotPrimePower,
    BrokenTower,
    NonMonotone,
    SizeOne,
    AmbientTooSmall,
    TooManyPoints,
    ZeroPoint,
    // invariants
    IndexOutOfRange,
    PointNotInX,
    NotStandardRep,
    // codes
    DimensionTooLarge,
    SearchTooLarge,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the `Errc` kinds so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what);

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& what);

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);

}  // namespace pnc

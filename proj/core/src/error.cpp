#include "pnc/error.hpp"

namespace pnc {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
        case Errc::Overflow: return "Overflow";
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::ReducibleModulus: return "ReducibleModulus";
        case Errc::NoDefaultModulus: return "NoDefaultModulus";
        case Errc::FieldTooLarge: return "FieldTooLarge";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::NotASubfieldSize: return "NotASubfieldSize";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotPrimePower: return "NotPrimePower";
        case Errc::BrokenTower: return "BrokenTower";
        case Errc::NonMonotone: return "NonMonotone";
        case Errc::SizeOne: return "SizeOne";
        case Errc::AmbientTooSmall: return "AmbientTooSmall";
        case Errc::TooManyPoints: return "TooManyPoints";
        case Errc::ZeroPoint: return "ZeroPoint";
        case Errc::IndexOutOfRange: return "IndexOutOfRange";
        case Errc::PointNotInX: return "PointNotInX";
        case Errc::NotStandardRep: return "NotStandardRep";
        case Errc::DimensionTooLarge: return "DimensionTooLarge";
        case Errc::SearchTooLarge: return "SearchTooLarge";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(Errc code, const std::string& what) { throw Error(code, what); }

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) fail(Errc::Overflow, "64-bit addition overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) fail(Errc::Overflow, "64-bit multiplication overflow");
    return r;
}

}  // namespace pnc

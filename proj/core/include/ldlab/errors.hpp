#pragma once

#include <stdexcept>
#include <string>

namespace ldlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& what) : Error(what) {}
};

struct ReducibleModulus : Error {
    explicit ReducibleModulus(const std::string& what) : Error(what) {}
};

struct InverseOfZero : Error {
    explicit InverseOfZero(const std::string& what) : Error(what) {}
};

struct LengthMismatch : Error {
    explicit LengthMismatch(const std::string& what) : Error(what) {}
};

struct SymbolOutOfRange : Error {
    explicit SymbolOutOfRange(const std::string& what) : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what) : Error(what) {}
};

/// An exhaustive operation would exceed its enumeration budget.
struct SizeOverBudget : Error {
    explicit SizeOverBudget(const std::string& what) : Error(what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

/// A certified claim was contradicted by the exhaustive oracle.  This is
/// always an implementation bug, never a statistical fluke.
struct SoundnessViolation : Error {
    explicit SoundnessViolation(const std::string& what) : Error(what) {}
};

}  // namespace ldlab

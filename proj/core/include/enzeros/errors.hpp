#pragma once

#include <stdexcept>
#include <string>

namespace enz {

// Base class for everything this library throws on contract violations.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Interval division where the divisor enclosure contains zero.
class DivisorContainsZero : public Error {
public:
    explicit DivisorContainsZero(const std::string& what) : Error(what) {}
};

// exp() Taylor remainder majorant is not finite for the requested order.
class RemainderDiverges : public Error {
public:
    explicit RemainderDiverges(const std::string& what) : Error(what) {}
};

// Geometric tail majorant diverges (|q| too close to 1).
class TailDiverges : public Error {
public:
    explicit TailDiverges(const std::string& what) : Error(what) {}
};

// The point's q value leaves the region where the tail bound applies.
class RegionViolation : public Error {
public:
    explicit RegionViolation(const std::string& what) : Error(what) {}
};

// Level N outside {2, 3, 5, 7}.
class UnsupportedLevel : public Error {
public:
    explicit UnsupportedLevel(const std::string& what) : Error(what) {}
};

// Enclosure does not lie strictly in the upper half plane.
class NotUpperHalfPlane : public Error {
public:
    explicit NotUpperHalfPlane(const std::string& what) : Error(what) {}
};

// Control form does not match the level (E6 for N=2,5; E4 for N=3,7).
class ControlMismatch : public Error {
public:
    explicit ControlMismatch(const std::string& what) : Error(what) {}
};

// Exact linear system for a relation is inconsistent.
class NoRelation : public Error {
public:
    explicit NoRelation(const std::string& what) : Error(what) {}
};

// Exact linear system for a relation is rank deficient.
class NotUnique : public Error {
public:
    explicit NotUnique(const std::string& what) : Error(what) {}
};

}  // namespace enz

#pragma once

#include <stdexcept>
#include <string>

namespace xkraw {

// Base class for all domain errors raised by the library.  Callers that
// want to distinguish "the math rejected this input" from a genuine bug can
// catch this instead of std::exception.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Division of polynomials left a nonzero remainder.
class NotDivisible : public Error {
public:
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

// Attempted to add/compare quasi-polynomials with different geometric bases.
class MixedBase : public Error {
public:
    explicit MixedBase(const std::string& what) : Error(what) {}
};

// Parameter combination outside the domain of a family/operator.
class InvalidParam : public Error {
public:
    explicit InvalidParam(const std::string& what) : Error(what) {}
};

// Casorati normalizer nu_n vanished: the requested index is a special
// member and must be built through its dedicated constructor.
class SpecialMemberRequired : public Error {
public:
    explicit SpecialMemberRequired(const std::string& what) : Error(what) {}
};

// A denominator polynomial vanished at a grid point.
class WeightPole : public Error {
public:
    explicit WeightPole(const std::string& what) : Error(what) {}
};

// Input is not in the span of the requested basis.
class NotInSpan : public Error {
public:
    explicit NotInSpan(const std::string& what) : Error(what) {}
};

// Index combination excluded from the operator-symbol recurrence method.
class ExcludedIndex : public Error {
public:
    explicit ExcludedIndex(const std::string& what) : Error(what) {}
};

} // namespace xkraw

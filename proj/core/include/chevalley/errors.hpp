#pragma once

#include <stdexcept>
#include <string>

namespace chevalley {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MixedRingsError : public Error {
public:
    explicit MixedRingsError(const std::string& w = "operands belong to different rings") : Error(w) {}
};

class NotAUnitError : public Error {
public:
    explicit NotAUnitError(const std::string& w = "element is not a unit") : Error(w) {}
};

class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& w) : Error(w) {}
};

class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& w = "integer overflow") : Error(w) {}
};

class UnsupportedTypeError : public Error {
public:
    explicit UnsupportedTypeError(const std::string& w) : Error(w) {}
};

class NotUnipotentError : public Error {
public:
    explicit NotUnipotentError(const std::string& w = "matrix is not unipotent on the expected roots") : Error(w) {}
};

class NotAFieldError : public Error {
public:
    explicit NotAFieldError(const std::string& w = "operation requires a field") : Error(w) {}
};

class NotInBigCellError : public Error {
public:
    explicit NotInBigCellError(const std::string& w = "element is not in the big cell") : Error(w) {}
};

class OppositeRootsError : public Error {
public:
    explicit OppositeRootsError(const std::string& w = "roots are opposite") : Error(w) {}
};

class CentralInputError : public Error {
public:
    explicit CentralInputError(const std::string& w = "input element is central") : Error(w) {}
};

class SearchExhaustedError : public Error {
public:
    explicit SearchExhaustedError(const std::string& w) : Error(w) {}
};

class HypothesisFailsError : public Error {
public:
    explicit HypothesisFailsError(const std::string& w) : Error(w) {}
};

class NotFoundError : public Error {
public:
    explicit NotFoundError(const std::string& w) : Error(w) {}
};

class NoCommonRootError : public Error {
public:
    explicit NoCommonRootError(const std::string& w = "no root subgroup in both the radical and the Levi") : Error(w) {}
};

class NotUnderRadicalError : public Error {
public:
    explicit NotUnderRadicalError(const std::string& w = "element is not congruent to a central element mod the radical") : Error(w) {}
};

class ClearingFailedError : public Error {
public:
    explicit ClearingFailedError(const std::string& w) : Error(w) {}
};

class NotNormalClosureShapeError : public Error {
public:
    explicit NotNormalClosureShapeError(const std::string& w = "certificate does not have normal-closure shape") : Error(w) {}
};

class LevelInconsistentError : public Error {
public:
    explicit LevelInconsistentError(const std::string& w) : Error(w) {}
};

class ConditionViolatedError : public Error {
public:
    explicit ConditionViolatedError(const std::string& w) : Error(w) {}
};

class SandwichFailsError : public Error {
public:
    explicit SandwichFailsError(const std::string& w) : Error(w) {}
};

class HypothesisViolatedError : public Error {
public:
    explicit HypothesisViolatedError(const std::string& w) : Error(w) {}
};

class EnumerationCapError : public Error {
public:
    explicit EnumerationCapError(const std::string& w) : Error(w) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& w) : Error(w) {}
};

}  // namespace chevalley

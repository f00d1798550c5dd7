#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace shx {

// Error taxonomy shared by the library and the CLI. The CLI maps these to
// exit codes: ParseError -> 2, ScaleMismatchError -> 3, everything else
// (mathematical failures) -> 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ScaleMismatchError : public Error {
public:
    using Error::Error;
};

class SingularError : public Error {
public:
    using Error::Error;
};

class PatternViolationError : public Error {
public:
    using Error::Error;
};

class NullConeError : public Error {
public:
    using Error::Error;
};

class NoBranchError : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class NotLeftRegularError : public Error {
public:
    NotLeftRegularError(std::string msg, std::array<double, 4> witness, double residual)
        : Error(std::move(msg)), witness_(witness), residual_(residual) {}

    const std::array<double, 4>& witness() const noexcept { return witness_; }
    double residual() const noexcept { return residual_; }

private:
    std::array<double, 4> witness_;
    double residual_;
};

}  // namespace shx

#pragma once

#include <stdexcept>
#include <string>

namespace merocusp {

enum class ErrorKind { parse, domain, numerical };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::parse, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Violated precondition: bad weight, nonconvergent regime, non-invertible series.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class CongruenceError : public DomainError {
public:
    explicit CongruenceError(const std::string& what) : DomainError(what) {}
};

class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(ErrorKind::numerical, what) {}
};

// Residual principal part that no combination of basis elements absorbs.
class ResidualError : public NumericalError {
public:
    ResidualError(const std::string& what, std::string residual)
        : NumericalError(what), residual_(std::move(residual)) {}
    const std::string& residual() const { return residual_; }

private:
    std::string residual_;
};

}  // namespace merocusp

#pragma once

#include <stdexcept>
#include <string>

namespace shadowsum {

// Base class for every error the library raises. The exit_code() values are
// the ones the command-line tool reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const { return 4; }
    virtual const char *kind() const { return "internal"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
    const char *kind() const override { return "parse"; }
};

class ValidationError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
    const char *kind() const override { return "validation"; }
};

class DomainError : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 2; }
    const char *kind() const override { return "domain"; }
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
    int exit_code() const override { return 3; }
    const char *kind() const override { return "budget"; }
};

class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace shadowsum

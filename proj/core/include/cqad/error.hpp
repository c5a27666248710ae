#pragma once

#include <stdexcept>
#include <string>

namespace cqad {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

// E_J(flux) == 0: the transmon formula has no real frequency.
class DegenerateQubit : public Error
{
public:
    using Error::Error;
};

class DispersiveInvalid : public Error
{
public:
    using Error::Error;
};

class NonUniqueSteadyState : public Error
{
public:
    using Error::Error;
};

class ConvergenceError : public Error
{
public:
    using Error::Error;
};

class UndefinedTransmission : public Error
{
public:
    using Error::Error;
};

// Solver failure at a specific grid coordinate of a sweep.
class SweepError : public Error
{
public:
    SweepError(const std::string& what, double flux, double probe_mhz)
        : Error(what), flux_(flux), probe_mhz_(probe_mhz)
    {}

    double flux() const noexcept { return flux_; }
    double probe_mhz() const noexcept { return probe_mhz_; }

private:
    double flux_;
    double probe_mhz_;
};

class ConfigError : public Error
{
public:
    ConfigError(const std::string& what, std::string key, int line)
        : Error(what), key_(std::move(key)), line_(line)
    {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    std::string key_;
    int line_;
};

class IoError : public Error
{
public:
    using Error::Error;
};

} // namespace cqad

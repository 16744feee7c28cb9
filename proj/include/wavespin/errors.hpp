#pragma once

#include <stdexcept>
#include <string>

namespace wavespin {

// Invalid input value; `field` names the offending parameter so the CLI can
// report it and exit with the validation code.
class validation_error : public std::invalid_argument {
public:
    validation_error(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Evaluation requested outside an operation's spatial domain.
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Non-finite sample or failed numerical contract; carries the location when known.
class numerical_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inconsistent run configuration (grid vs. step sizes and the like).
class config_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Filesystem failure while emitting or reading artifacts.
class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace wavespin

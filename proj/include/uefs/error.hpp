#pragma once

#include <stdexcept>
#include <string>

namespace uefs {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input files or cells that fail to parse.
class IngestionError : public Error {
public:
    using Error::Error;
};

// Arguments or configuration values outside their contract.
class ValidationError : public Error {
public:
    using Error::Error;
};

// An operation left no usable data (e.g. a filter dropped every row).
class DegenerateDataError : public Error {
public:
    using Error::Error;
};

}  // namespace uefs

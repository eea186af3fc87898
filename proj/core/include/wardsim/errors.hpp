#pragma once

#include <stdexcept>
#include <string>

namespace wardsim {

/// Caller supplied an argument or configuration outside its documented range.
class parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Base for anything wrong with input data rather than with the call itself.
class data_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A required column or structural element is missing from an input file.
class schema_error : public data_error {
public:
    using data_error::data_error;
};

/// Record content violates a domain invariant.
class validation_error : public data_error {
public:
    using data_error::data_error;
};

/// Rate estimation failed for a cluster (too few spells, degenerate times).
class estimation_error : public data_error {
public:
    using data_error::data_error;
};

/// A sweep or scenario point could not be scored.
class evaluation_error : public data_error {
public:
    using data_error::data_error;
};

} // namespace wardsim

#pragma once

#include <stdexcept>
#include <string>

namespace circsep {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed caller input: bad labels, unreadable files, vertices missing
// from an ordering, parameters out of range.
class input_error : public error {
public:
    using error::error;
};

// A documented precondition of an internal operation was violated.
class contract_error : public error {
public:
    using error::error;
};

// Instance is outside the supported size limits.
class capability_error : public error {
public:
    using error::error;
};

// Input parsed fine but is not a valid instance of the required structure
// (broken embedding, region decomposition that cannot exist, ...).
class structural_error : public error {
public:
    using error::error;
};

class not_series_parallel : public error {
public:
    using error::error;
};

} // namespace circsep

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmv {

/// Invalid caller-supplied input (bad vertex index, malformed record, ...).
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed text record; carries the byte offset of the defect.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t offset)
        : input_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Numerical failure: non-convergence, singular normal form, unresolved drift.
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Spectral gap below tolerance; the requested subspace is not well defined.
class gap_error : public numeric_error {
public:
    using numeric_error::numeric_error;
};

/// A checker's hypothesis does not hold for this input; callers report a skip.
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gmv

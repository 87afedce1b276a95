#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ea {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed group spec or parameter outside the supported range.
class DescriptorError : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (face counts, closure of products, ...).
class InvariantError : public Error {
public:
    using Error::Error;
};

/// Face algebra element is not constant on W-orbits of faces.
class InvarianceError : public Error {
public:
    using Error::Error;
};

class IdempotencyError : public Error {
public:
    using Error::Error;
};

class SubgroupError : public Error {
public:
    using Error::Error;
};

class StabilizerError : public Error {
public:
    using Error::Error;
};

/// The product of (a - lambda) over the supplied eigenvalues is not zero.
class MissingEigenvalueError : public Error {
public:
    using Error::Error;
};

/// Operation only defined for coincidental groups.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

class RewritingError : public Error {
public:
    using Error::Error;
};

/// Ray counts differ between two flats of the same dimension, so the
/// by-dimension spectrum does not exist.
class DichotomyError : public Error {
public:
    DichotomyError(const std::string& what, std::uint32_t flat_a, std::uint32_t flat_b, long rays_a, long rays_b)
        : Error(what), flat_a(flat_a), flat_b(flat_b), rays_a(rays_a), rays_b(rays_b) {}

    std::uint32_t flat_a;
    std::uint32_t flat_b;
    long rays_a;
    long rays_b;
};

}  // namespace ea

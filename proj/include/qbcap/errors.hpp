#pragma once

#include <stdexcept>
#include <string>

namespace qbcap {

// Base of every error raised by the library. Callers that only care about
// "the computation was rejected" can catch this one type.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Parameter outside its mathematical domain (p, k, eta, omega, T ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class SymmetryError : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

class OrderingError : public Error {
public:
    using Error::Error;
};

class DensityMatrixError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace qbcap

#pragma once

#include <stdexcept>
#include <string>

namespace graphzeta {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Graph ingestion and validation.
class GraphError : public Error {
public:
    using Error::Error;
};

class SelfLoopError : public GraphError {
public:
    using GraphError::GraphError;
};

class DuplicateEdgeError : public GraphError {
public:
    using GraphError::GraphError;
};

class DisconnectedError : public GraphError {
public:
    using GraphError::GraphError;
};

class InvalidOrderError : public GraphError {
public:
    using GraphError::GraphError;
};

class ParseError : public GraphError {
public:
    using GraphError::GraphError;
};

// Eigensolves, spectral maps, multiplicity bookkeeping.
class SpectralError : public Error {
public:
    using Error::Error;
};

class EigensolveFailure : public SpectralError {
public:
    using SpectralError::SpectralError;
};

class OutOfRangeError : public SpectralError {
public:
    using SpectralError::SpectralError;
};

class AmbiguousClustering : public SpectralError {
public:
    using SpectralError::SpectralError;
};

class RemovalUnderflow : public SpectralError {
public:
    using SpectralError::SpectralError;
};

// Zeta evaluation.
class ZetaError : public Error {
public:
    using Error::Error;
};

class PoleAtU : public ZetaError {
public:
    using ZetaError::ZetaError;
};

class OracleMismatch : public ZetaError {
public:
    using ZetaError::ZetaError;
};

}  // namespace graphzeta

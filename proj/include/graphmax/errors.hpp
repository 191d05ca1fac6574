#pragma once

#include <stdexcept>
#include <string>

namespace graphmax {

/// Invalid vertex id, loop edge, or a family size below its minimum.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two sequences (function vs graph, x vs y) disagree in length.
class LengthMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A ratio was requested whose denominator vanishes (f constant on every component).
class ZeroVariation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnsortedInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Out-of-domain scalar parameter (p <= 0, alpha outside [0,1], n too small, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed JSON document or a document that does not match the expected schema.
class FormatError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace graphmax

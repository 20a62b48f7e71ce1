#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace obsharm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Value outside the domain of a rule set.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Unsupported compass granularity or an invalid granularity transition.
class GranularityError : public Error {
public:
    using Error::Error;
};

/// Unrecognized text. Carries the byte offset where recognition failed.
class ParseError : public Error {
public:
    ParseError(std::size_t position, std::string reason)
        : Error(reason + " (at offset " + std::to_string(position) + ")"),
          position_(position), reason_(std::move(reason)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t position_;
    std::string reason_;
};

/// A relative direction that cannot be expressed as a compass bearing.
class UnmappableError : public Error {
public:
    using Error::Error;
};

/// Span whose endpoints are antipodal, so the shorter arc is undefined.
class AmbiguousSpanError : public Error {
public:
    using Error::Error;
};

/// Ordinal to interval conversion attempted without midpoint mode.
class ReverseMappingError : public Error {
public:
    using Error::Error;
};

class UnknownNameError : public Error {
public:
    using Error::Error;
};

class NotFoundError : public Error {
public:
    using Error::Error;
};

class ConfigError : public Error {
public:
    using Error::Error;
};

class ConceptMismatchError : public Error {
public:
    using Error::Error;
};

} // namespace obsharm

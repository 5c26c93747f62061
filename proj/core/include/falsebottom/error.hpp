#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace falsebottom {

// Base class for every error this library raises deliberately.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Two grids that must be aligned have different shapes.
class ShapeError : public Error {
    using Error::Error;
};

// An argument is outside its documented range (window < 1, bad connectivity, ...).
class ParameterError : public Error {
    using Error::Error;
};

// Arithmetic precondition violated, e.g. a seabed range at or below the
// logging range in the alias equations.
class DomainError : public Error {
    using Error::Error;
};

// A key (typically a frequency) is missing from a configuration table.
class LookupError : public Error {
    using Error::Error;
};

// Malformed input. offset() is the position where parsing failed: a byte
// offset for binary streams, a line number for text formats.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset = 0)
        : Error(what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Filesystem-level failure: missing file, unreadable directory, short write.
class IoError : public Error {
    using Error::Error;
};

}  // namespace falsebottom

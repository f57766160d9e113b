#pragma once

#include <stdexcept>
#include <string>

namespace qbridge {

// Base class for all qbridge errors. Subsystems derive more specific
// types so callers can catch per failure family.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

} // namespace qbridge

#pragma once

#include <stdexcept>
#include <string>

namespace adq {

// Malformed input file or string.
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Request exceeds a configured enumeration limit.
class limit_error : public std::runtime_error {
  public:
    explicit limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adq

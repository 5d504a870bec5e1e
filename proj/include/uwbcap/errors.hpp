#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uwbcap {

/// Malformed structured input (unit strings, catalog files).
class parse_error : public std::runtime_error {
  public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
    parse_error(std::size_t line, const std::string& field, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", field '" + field + "': " + what) {}
};

/// Requested data rate lies at or above the 1/d_RMS asymptote; no operating
/// frequency can reach it.
class infeasible_target_error : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A simulation grid would exceed the configured cell cap.
class grid_limit_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace uwbcap

#pragma once
// Error taxonomy for the pipeline. config_error covers configuration and
// usage problems (CLI exit code 1); data_error covers malformed or
// inconsistent input data (CLI exit code 2).

#include <stdexcept>
#include <string>

namespace scngen {

class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

class data_error : public std::runtime_error {
public:
  explicit data_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace scngen

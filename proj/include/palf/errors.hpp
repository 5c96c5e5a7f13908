#pragma once

#include <stdexcept>
#include <string>

namespace palf {

// Bad flags, bad config files, incompatible options. CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unrecoverable input problems: truncated streams, corrupt count maps,
// I/O failures. CLI exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace palf

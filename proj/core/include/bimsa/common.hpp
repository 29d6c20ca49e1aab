#pragma once

#include <stdexcept>
#include <string>

namespace bimsa {

// Bad user-supplied configuration (file, flag, or constructor argument).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called outside its documented contract.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

// I/O failure (missing file, bad PNG, orphan label, unknown color, ...).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bimsa

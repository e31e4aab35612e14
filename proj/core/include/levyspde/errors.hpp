#pragma once

#include <stdexcept>
#include <string>

namespace levyspde {

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& m) : std::runtime_error(m) {}
};

struct Overflow : std::runtime_error {
    explicit Overflow(const std::string& m) : std::runtime_error(m) {}
};

struct DivergentIntegral : std::runtime_error {
    explicit DivergentIntegral(const std::string& m) : std::runtime_error(m) {}
};

struct GridTooCoarse : std::runtime_error {
    explicit GridTooCoarse(const std::string& m) : std::runtime_error(m) {}
};

struct Unsupported : std::runtime_error {
    explicit Unsupported(const std::string& m) : std::runtime_error(m) {}
};

struct SupportError : std::runtime_error {
    explicit SupportError(const std::string& m) : std::runtime_error(m) {}
};

struct TruncationError : std::runtime_error {
    explicit TruncationError(const std::string& m) : std::runtime_error(m) {}
};

struct QuadratureFail : std::runtime_error {
    explicit QuadratureFail(const std::string& m) : std::runtime_error(m) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace levyspde

#pragma once

#include <stdexcept>
#include <string>

namespace edgewave {

// File access or parse failure. The CLI maps this to exit code 4.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// LGLMS stability contract violated at startup. CLI exit code 3.
class StabilityError : public std::runtime_error {
public:
    StabilityError(const std::string& what, double margin)
        : std::runtime_error(what), margin_(margin) {}

    double margin() const noexcept { return margin_; }

private:
    double margin_;
};

}  // namespace edgewave

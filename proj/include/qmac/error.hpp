#pragma once

#include <stdexcept>
#include <string>

namespace qmac {

// Library error with a stable machine-readable code ("division-by-zero",
// "not-divisible", ...) surfaced verbatim by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail = "")
        : std::runtime_error(detail.empty() ? code : code + ": " + detail),
          code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace qmac

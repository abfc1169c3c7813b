#ifndef DEMROOTS_ERRORS_HPP
#define DEMROOTS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace demroots {

// Input outside an operation's domain (bad cone, non-coprime pair, ...).
// `code` is a stable machine-readable identifier used by the CLI diagnostics.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

} // namespace demroots

#endif

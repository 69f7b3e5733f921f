#ifndef PROPCHOOSE_ERRORS_HPP
#define PROPCHOOSE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace propchoose {

// Thrown when an instance exceeds the enumeration guard without an override.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when a step that a proof guarantees to succeed fails. Carries the
// name of the step so the failure can be traced back to the argument it
// contradicts. Never caught internally.
class InternalError : public std::logic_error {
public:
    InternalError(std::string step, const std::string& detail)
        : std::logic_error(step + ": " + detail), step_(std::move(step)) {}
    const std::string& step() const { return step_; }

private:
    std::string step_;
};

} // namespace propchoose

#endif

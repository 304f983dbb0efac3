#ifndef RFLAMP_ERRORS_HPP
#define RFLAMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rflamp {

// Violated operation precondition (bad modulus, division by zero, ...).
// The CLI maps this to exit code 2.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured resource cap was exceeded. CLI exit code 3.
class cap_exceeded_error : public std::runtime_error {
public:
    explicit cap_exceeded_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input rejected; `position` is the byte offset of the offending character.
class parse_error : public std::invalid_argument {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace rflamp

#endif

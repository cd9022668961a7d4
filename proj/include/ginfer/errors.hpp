#ifndef GINFER_ERRORS_HPP
#define GINFER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ginfer {

// Malformed or invalid input: bad file contents, bad configuration,
// violated preconditions. CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that leaves nothing to work on (no terms,
// no labeled users). CLI maps this to exit code 3.
class EmptyInputError : public std::runtime_error {
public:
    explicit EmptyInputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ginfer

#endif  // GINFER_ERRORS_HPP

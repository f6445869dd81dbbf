#ifndef BNINV_ERROR_HPP
#define BNINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bninv {

enum class ErrorCode {
    invalid_argument,
    unknown_node,
    parse,
    cycle,
    precondition,
    bound,
    io,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace bninv

#endif

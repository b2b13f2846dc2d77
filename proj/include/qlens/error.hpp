#ifndef QLENS_ERROR_HPP
#define QLENS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qlens {

enum class Errc {
    NotInvertible,
    InvalidWeights,
    PatternMismatch,
    NotKept,
    BadPosition,
    SizeMismatch,
    NotIsomorphic,
    CountMismatch,
    BadParams,
    InvalidN,
    ThreeDoesNotDivide,
    Integrality,
    Overflow,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

} // namespace qlens

#endif

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zetafio {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised at an exact pole; carries the order and, for simple poles, the residue.
class PoleError : public Error {
public:
    PoleError(const std::string& what, int order, Complex residue)
        : Error(what), order_(order), residue_(residue) {}
    int order() const { return order_; }
    Complex residue() const { return residue_; }

private:
    int order_;
    Complex residue_;
};

class NearPoleError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NonIntegrableError : public Error {
public:
    using Error::Error;
};

class ExtrapolationError : public Error {
public:
    using Error::Error;
};

class MorseError : public Error {
public:
    using Error::Error;
};

class RequiresStatphaseError : public Error {
public:
    using Error::Error;
};

class UnimplementedBranchError : public Error {
public:
    using Error::Error;
};

inline Complex check_finite(Complex v, const char* where) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw DomainError(std::string("non-finite value in ") + where);
    return v;
}

}  // namespace zetafio

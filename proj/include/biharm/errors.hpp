#pragma once

#include <stdexcept>
#include <string>

namespace biharm {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// A λ± branch was requested for the (0,0) label, or a label is out of range.
class InvalidLabel : public Error {
public:
    using Error::Error;
};

// A characteristic polynomial kept a nonzero √2 part: the matrix was built wrong.
class IrrationalCoefficient : public Error {
public:
    using Error::Error;
};

class NotNegative : public Error {
public:
    using Error::Error;
};

class AsymmetricBlock : public Error {
public:
    using Error::Error;
};

class InexactDivision : public Error {
public:
    using Error::Error;
};

class DegenerateThreshold : public Error {
public:
    using Error::Error;
};

class QuadratureNotConverged : public Error {
public:
    using Error::Error;
};

class NotProper : public Error {
public:
    using Error::Error;
};

class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace biharm

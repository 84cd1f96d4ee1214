#pragma once

#include <stdexcept>
#include <string>

namespace quasiham {

/// Base of every error raised by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands outside the algebra, zero where a nonzero is required, mismatched ambients.
class domain_error : public error {
public:
    using error::error;
};

/// The operation is not available for this algebra or mode.
class unsupported_error : public error {
public:
    using error::error;
};

class invalid_parameter : public error {
public:
    using error::error;
};

/// A construction whose hypotheses hold syntactically but produce a degenerate object.
class degenerate_construction : public error {
public:
    using error::error;
};

/// A supposedly perfect code returned something no perfect code can return.
class inconsistency_error : public error {
public:
    using error::error;
};

/// A coordinate map that is not injective on the vector it was applied to.
class invalid_isometry : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

}  // namespace quasiham

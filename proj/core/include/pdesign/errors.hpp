#pragma once

#include <stdexcept>
#include <string>

namespace pdesign {

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ArityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDesign : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InconsistentStructure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SizeLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyPattern : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pdesign

#pragma once

#include <stdexcept>
#include <string>

namespace kflag {

struct InvalidParameter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// raised when an exact identity that must hold by construction fails
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}

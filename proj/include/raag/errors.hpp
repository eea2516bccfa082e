#pragma once

#include <stdexcept>
#include <string>

namespace raag {

// Error taxonomy, mirrored by the C API status codes and the CLI exit codes:
//   input_error        (1) malformed input (parse failures, unknown names)
//   precondition_error (2) well-formed input outside an operation's domain
//   invariant_error    (3) an internal consistency check failed
//   resource_error     (4) a configured cap was exceeded
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Status codes shared by the C API and the CLI.
enum class status : int {
    ok = 0,
    bad_input = 1,
    bad_precondition = 2,
    broken_invariant = 3,
    cap_exceeded = 4,
};

}  // namespace raag

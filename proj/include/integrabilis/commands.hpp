#ifndef INTEGRABILIS_COMMANDS_HPP
#define INTEGRABILIS_COMMANDS_HPP

#include "integrabilis/serialize.hpp"

namespace integrabilis {

struct CommandOutcome {
    int exit_code;  // 0 success, 1 domain error, 2 usage error
    Json document;  // deterministic: identical requests give identical bytes
};

// Dispatches a structured request {"command": name, ...flags} to the library.
// All inputs are echoed back in the output document. Domain errors become
// {"error": {"code", "message"}} with exit code 1; malformed requests get
// exit code 2.
CommandOutcome run_command(const Json& request);

// Flattened deterministic "key = value" rendering of an output document.
std::string render_text(const Json& doc);

} // namespace integrabilis

#endif

#pragma once

#include <string>

namespace bti {

// Status codes shared by the C API and the CLI exit code.
enum ApiStatus {
    kOk = 0,
    kValidationError = 2,
    kNotRealizable = 3,
    kResourceLimit = 4,
    kInternalError = 5,
};

// Dispatch a named command with a JSON request document. The response is
// serialized JSON with stable key order; every document carries
// "schema_version". Errors come back as {"error": ...} with a nonzero
// status.
int run_command(const std::string& command, const std::string& request_json,
                std::string& response_json);

const char* api_version();

}  // namespace bti

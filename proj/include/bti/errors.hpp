#pragma once

#include <stdexcept>
#include <string>

namespace bti {

struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A signature/weight combination whose index is a non-integral rational.
// The classification map is not surjective, so these inputs are expected
// and must stay diagnosable.
struct not_realizable : std::runtime_error {
    explicit not_realizable(const std::string& msg) : std::runtime_error(msg) {}
};

struct precondition_failed : std::runtime_error {
    explicit precondition_failed(const std::string& msg) : std::runtime_error(msg) {}
};

struct resource_limit : std::runtime_error {
    explicit resource_limit(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace bti

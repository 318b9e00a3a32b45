#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsk {

// Malformed or semantically invalid input (CLI exit 1). `code` carries the
// machine-readable reason, e.g. "NotSharp", "NotAFace", "RayConditionViolated".
class input_error : public std::runtime_error {
public:
    input_error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// A configured resource bound was exceeded (CLI exit 2).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; always a bug (CLI exit 3).
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// Enumeration bounds. The CLI populates these from flags / environment.
struct limits {
    std::size_t max_hilbert = 10000;
    std::size_t max_faces = 10000;
};

} // namespace tsk

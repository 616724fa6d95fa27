#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace removal {

// Exit-code contract: validation errors -> 2, capacity/budget errors -> 3.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when list_triangles would exceed its cap; carries the exact count.
struct ListCapExceeded : CapacityError {
    std::uint64_t exact_count;
    ListCapExceeded(const std::string& what, std::uint64_t count)
        : CapacityError(what), exact_count(count) {}
};

struct ParseError : ValidationError {
    int line;
    ParseError(const std::string& what, int line_no)
        : ValidationError(what + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

}  // namespace removal

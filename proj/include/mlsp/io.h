#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mlsp/instance.h"

namespace mlsp {

// Thrown for malformed instance or result documents. The message names the
// offending line/column (syntax errors) or JSON field path (schema errors).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Instance parse_instance(const std::string& text);
// Canonical form: sorted keys, two-space indentation, trailing newline.
std::string print_instance(const Instance& inst);

struct ResultDoc {
    Coord distance = 0;
    int links = 0;
    std::vector<Point> path;
    std::map<std::string, std::int64_t> stats;
    bool operator==(const ResultDoc&) const = default;
};

ResultDoc parse_result(const std::string& text);
std::string print_result(const ResultDoc& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace mlsp

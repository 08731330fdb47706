#pragma once

#include "s4embed/manifold.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace s4embed {

// Parsed input: one lens sum, Seifert term or pretzel term.
struct ManifoldExpr {
    Manifold value;
    bool operator==(const ManifoldExpr&) const = default;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position, std::string token);
    std::size_t position;  // 0-based offset into the input
    std::string token;
};

// lens(p,q) [+ lens(p,q) ...] | S3 | seifert(BASE; r; (a,b), ...) | pretzel(a,b,c[,d])
// with BASE one of S2, O(g), N(k).
ManifoldExpr parse_manifold(std::string_view text);
std::string print_manifold(const ManifoldExpr& e);

}  // namespace s4embed

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "contrastix/formula.hpp"

namespace contrastix {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}

    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses `formula := disj; disj := conj ('|' conj)*; conj := unary ('&' unary)*;
/// unary := '!' unary | atom; atom := IDENT | 'true' | 'false' | '(' formula ')'`.
/// New identifiers are interned into `vocab` in first-occurrence order.
Formula parse_formula(std::string_view text, Vocabulary& vocab);

}  // namespace contrastix

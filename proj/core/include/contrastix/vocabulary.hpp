#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace contrastix {

/// A proposition symbol: a dense index into a Vocabulary.
struct Symbol {
    std::uint32_t id = 0;

    friend auto operator<=>(Symbol, Symbol) = default;
};

/// Interning table for proposition symbol names. Ids are dense and assigned
/// in first-intern order; names are unique.
class Vocabulary {
public:
    Vocabulary() = default;

    Symbol intern(std::string_view name);
    [[nodiscard]] std::optional<Symbol> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(Symbol s) const;
    [[nodiscard]] std::size_t size() const { return names_.size(); }
    [[nodiscard]] std::vector<Symbol> symbols() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace contrastix

#include "contrastix/vocabulary.hpp"

#include <stdexcept>

namespace contrastix {

Symbol Vocabulary::intern(std::string_view name) {
    std::string key(name);
    if (auto it = index_.find(key); it != index_.end()) return Symbol{it->second};
    auto id = static_cast<std::uint32_t>(names_.size());
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return Symbol{id};
}

std::optional<Symbol> Vocabulary::find(std::string_view name) const {
    if (auto it = index_.find(std::string(name)); it != index_.end()) return Symbol{it->second};
    return std::nullopt;
}

const std::string& Vocabulary::name(Symbol s) const {
    if (s.id >= names_.size()) throw std::out_of_range("symbol id outside vocabulary");
    return names_[s.id];
}

std::vector<Symbol> Vocabulary::symbols() const {
    std::vector<Symbol> out;
    out.reserve(names_.size());
    for (std::uint32_t i = 0; i < names_.size(); ++i) out.push_back(Symbol{i});
    return out;
}

}  // namespace contrastix

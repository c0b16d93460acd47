#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace tgwa {

enum class SymbolKind { parameter, variable };

// Interned name. Ids follow interning order, which fixes the monomial order:
// earlier symbols are larger.
class Symbol {
 public:
  static Symbol intern(std::string_view name, SymbolKind kind);
  static std::optional<Symbol> lookup(std::string_view name);

  const std::string& name() const;
  SymbolKind kind() const { return kind_; }
  bool is_variable() const { return kind() == SymbolKind::variable; }
  std::uint32_t id() const { return id_; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend bool operator!=(Symbol a, Symbol b) { return a.id_ != b.id_; }
  friend bool operator<(Symbol a, Symbol b) { return a.id_ < b.id_; }

 private:
  Symbol(std::uint32_t id, SymbolKind kind) : id_(id), kind_(kind) {}
  std::uint32_t id_;
  SymbolKind kind_;
};

inline Symbol parameter(std::string_view name) { return Symbol::intern(name, SymbolKind::parameter); }
inline Symbol variable(std::string_view name) { return Symbol::intern(name, SymbolKind::variable); }

// Names usable as symbols: identifiers other than the reserved literal "i".
bool valid_symbol_name(std::string_view name);

}  // namespace tgwa

template <>
struct std::hash<tgwa::Symbol> {
  std::size_t operator()(tgwa::Symbol s) const noexcept { return s.id(); }
};

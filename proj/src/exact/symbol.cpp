#include "tgwa/exact/symbol.hpp"

#include <cctype>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "tgwa/exact/errors.hpp"

namespace tgwa {
namespace {

struct Entry {
  std::string name;
  SymbolKind kind;
};

struct Table {
  std::mutex mutex;
  std::vector<std::unique_ptr<Entry>> entries;
  std::unordered_map<std::string, std::uint32_t> index;
};

Table& table() {
  static Table t;
  return t;
}

const Entry& entry(std::uint32_t id) {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  return *t.entries.at(id);
}

const char* kind_name(SymbolKind k) { return k == SymbolKind::parameter ? "parameter" : "variable"; }

}  // namespace

bool valid_symbol_name(std::string_view name) {
  if (name.empty() || name == "i") return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_') return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Symbol Symbol::intern(std::string_view name, SymbolKind kind) {
  if (!valid_symbol_name(name)) throw DomainError("invalid symbol name '" + std::string(name) + "'");
  Table& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.index.find(std::string(name));
  if (it != t.index.end()) {
    const Entry& e = *t.entries[it->second];
    if (e.kind != kind) {
      throw DomainError("symbol '" + e.name + "' already declared as a " + kind_name(e.kind));
    }
    return Symbol(it->second, kind);
  }
  auto id = static_cast<std::uint32_t>(t.entries.size());
  t.entries.push_back(std::make_unique<Entry>(Entry{std::string(name), kind}));
  t.index.emplace(std::string(name), id);
  return Symbol(id, kind);
}

std::optional<Symbol> Symbol::lookup(std::string_view name) {
  Table& t = table();
  std::lock_guard lock(t.mutex);
  auto it = t.index.find(std::string(name));
  if (it == t.index.end()) return std::nullopt;
  return Symbol(it->second, t.entries[it->second]->kind);
}

const std::string& Symbol::name() const { return entry(id_).name; }

}  // namespace tgwa

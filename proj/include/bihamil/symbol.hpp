#pragma once
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bihamil {

enum class SymbolKind { Coordinate, Parameter };

struct Symbol {
  int id = -1;
  bool operator==(const Symbol& o) const { return id == o.id; }
  bool operator!=(const Symbol& o) const { return id != o.id; }
  bool operator<(const Symbol& o) const { return id < o.id; }
};

// Symbol table. Names are unique; the kind is fixed at declaration.
class Context {
 public:
  Context() = default;
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  Symbol coordinate(const std::string& name) { return intern(name, SymbolKind::Coordinate); }
  Symbol parameter(const std::string& name) { return intern(name, SymbolKind::Parameter); }

  bool has(const std::string& name) const { return index_.count(name) != 0; }

  Symbol lookup(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw std::invalid_argument("undeclared identifier: " + name);
    return Symbol{it->second};
  }

  const std::string& name(Symbol s) const { return names_.at(s.id); }
  SymbolKind kind(Symbol s) const { return kinds_.at(s.id); }
  bool is_coordinate(Symbol s) const { return kind(s) == SymbolKind::Coordinate; }

  // Name order is stable under later declarations; used for canonical term order.
  int cmp(Symbol a, Symbol b) const {
    if (a.id == b.id) return 0;
    return name(a) < name(b) ? -1 : (name(a) == name(b) ? 0 : 1);
  }

 private:
  Symbol intern(const std::string& name, SymbolKind kind) {
    auto it = index_.find(name);
    if (it != index_.end()) {
      if (kinds_[it->second] != kind)
        throw std::invalid_argument("symbol redeclared with different kind: " + name);
      return Symbol{it->second};
    }
    int id = static_cast<int>(names_.size());
    names_.push_back(name);
    kinds_.push_back(kind);
    index_.emplace(name, id);
    return Symbol{id};
  }

  std::vector<std::string> names_;
  std::vector<SymbolKind> kinds_;
  std::map<std::string, int> index_;
};

}  // namespace bihamil

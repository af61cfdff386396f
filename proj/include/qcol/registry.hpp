#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcol/diagram.hpp"

namespace qcol {

struct RegistryEntry {
  std::string name;
  PdCode pd;
};

// `name = PD[...]` per line; blank lines and text after '#' are ignored.
class Registry {
 public:
  static Registry parse(std::string_view text, const std::string& source = "<registry>");
  static Registry load(const std::string& path);
  // $QF_REGISTRY when set, otherwise the path compiled into the library.
  static Registry load_default();

  const std::vector<RegistryEntry>& entries() const { return entries_; }
  std::optional<PdCode> find(std::string_view name) const;

 private:
  std::vector<RegistryEntry> entries_;
};

std::string default_registry_path();

enum class InputKind { Registry, PdString, Torus, Pretzel, File };

struct ResolvedInput {
  InputKind kind = InputKind::Registry;
  std::string name;
  PdCode pd;
  Diagram diagram;
  int torus_a = 0, torus_b = 0;  // set for InputKind::Torus
  int pretzel_a = 0;             // set for InputKind::Pretzel
};

// Accepts, in order: a PD string, `torus:a,b`, `pretzel:a`, an existing file
// holding one PD code, or a registry name.
ResolvedInput resolve_input(const std::string& text, const Registry& registry);
ResolvedInput resolve_input(const std::string& text);

}  // namespace qcol

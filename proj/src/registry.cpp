#include "qcol/registry.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcol/families.hpp"

namespace qcol {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(std::string_view s, const std::string& what) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    std::string_view tok = trim(s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    std::string buf(tok);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(buf, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (buf.empty() || used != buf.size()) throw PreconditionError("bad " + what + " specifier");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

Registry Registry::parse(std::string_view text, const std::string& source) {
  Registry r;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    const std::string where = source + ":" + std::to_string(line_no);
    if (eq == std::string_view::npos) throw PreconditionError(where + ": expected `name = PD[...]`");
    std::string name(trim(line.substr(0, eq)));
    if (name.empty()) throw PreconditionError(where + ": empty name");
    if (r.find(name)) throw PreconditionError(where + ": duplicate name " + name);
    try {
      r.entries_.push_back({name, parse_pd(trim(line.substr(eq + 1)))});
    } catch (const Error& e) {
      throw PreconditionError(where + ": " + e.what());
    }
  }
  return r;
}

Registry Registry::load(const std::string& path) { return parse(read_file(path), path); }

std::string default_registry_path() {
  if (const char* env = std::getenv("QF_REGISTRY"); env && *env) return env;
  return QCOL_DEFAULT_REGISTRY;
}

Registry Registry::load_default() { return load(default_registry_path()); }

std::optional<PdCode> Registry::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return e.pd;
  return std::nullopt;
}

ResolvedInput resolve_input(const std::string& text_in, const Registry& registry) {
  const std::string text(trim(text_in));
  ResolvedInput r;
  if (text.rfind("PD", 0) == 0) {
    r.kind = InputKind::PdString;
    r.name = "PD";
    r.pd = parse_pd(text);
    r.diagram = build_diagram(r.pd, r.name);
    return r;
  }
  if (text.rfind("torus:", 0) == 0) {
    auto v = parse_int_list(std::string_view(text).substr(6), "torus");
    if (v.size() != 2) throw PreconditionError("torus specifier needs two integers: torus:a,b");
    TorusParams tp = TorusParams::make(v[0], v[1]);
    r.kind = InputKind::Torus;
    r.torus_a = tp.a;
    r.torus_b = tp.b;
    r.pd = torus_pd(tp);
    r.diagram = torus_diagram(tp);
    r.name = r.diagram.name();
    return r;
  }
  if (text.rfind("pretzel:", 0) == 0) {
    auto v = parse_int_list(std::string_view(text).substr(8), "pretzel");
    if (v.size() != 1) throw PreconditionError("pretzel specifier needs one integer: pretzel:a");
    PretzelParams pp = PretzelParams::from_a(v[0]);
    r.kind = InputKind::Pretzel;
    r.pretzel_a = pp.a;
    r.pd = pretzel_pd(pp);
    r.diagram = pretzel_diagram(pp);
    r.name = r.diagram.name();
    return r;
  }
  if (std::error_code ec; std::filesystem::is_regular_file(text, ec)) {
    r.kind = InputKind::File;
    r.name = std::filesystem::path(text).stem().string();
    r.pd = parse_pd(trim(read_file(text)));
    r.diagram = build_diagram(r.pd, r.name);
    return r;
  }
  if (auto pd = registry.find(text)) {
    r.kind = InputKind::Registry;
    r.name = text;
    r.pd = *pd;
    r.diagram = build_diagram(r.pd, r.name);
    return r;
  }
  throw PreconditionError("unknown input '" + text + "': not a PD code, family specifier, file or registry name");
}

ResolvedInput resolve_input(const std::string& text) {
  const std::string s(trim(text));
  if (s.rfind("PD", 0) == 0 || s.rfind("torus:", 0) == 0 || s.rfind("pretzel:", 0) == 0) {
    return resolve_input(s, Registry{});
  }
  return resolve_input(s, Registry::load_default());
}

}  // namespace qcol

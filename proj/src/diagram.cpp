#include "qcol/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace qcol {

// ---------------------------------------------------------------------------
// PD text
// ---------------------------------------------------------------------------

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view text) : text_(text) {}

  PdCode run() {
    PdCode pd;
    expect("PD");
    expect("[");
    skip_ws();
    if (peek() == ']') {
      ++pos_;
      finish();
      return pd;
    }
    while (true) {
      pd.crossings.push_back(crossing());
      skip_ws();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect("]");
      break;
    }
    finish();
    return pd;
  }

 private:
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) {
      throw PdSyntaxError("expected '" + std::string(token) + "'", pos_);
    }
    pos_ += token.size();
  }

  void finish() {
    skip_ws();
    if (pos_ != text_.size()) throw PdSyntaxError("trailing characters", pos_);
  }

  int label() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw PdSyntaxError("expected positive integer label", start);
    if (pos_ - start > 9) throw PdSyntaxError("label too large", start);
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (v < 1) throw PdSyntaxError("labels must be positive", start);
    return v;
  }

  PdCrossing crossing() {
    expect("X");
    expect("[");
    std::size_t start = pos_;
    std::vector<int> labels;
    labels.push_back(label());
    while (peek() == ',') {
      ++pos_;
      labels.push_back(label());
    }
    expect("]");
    if (labels.size() != 4) {
      throw PdSyntaxError("crossing has " + std::to_string(labels.size()) + " labels, expected 4", start);
    }
    return {labels[0], labels[1], labels[2], labels[3]};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Edge components of a PD code: strands pass a->c and b->d through each
// crossing, so joining those pairs partitions the edges into link components.
struct PdComponents {
  std::vector<int> comp;  // indexed by label; comp[0] unused
  std::vector<int> lo, hi;

  int size(int c) const { return hi[c] - lo[c] + 1; }
  int next(int e) const {
    int c = comp[e];
    return e == hi[c] ? lo[c] : e + 1;
  }
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

PdComponents pd_components(const PdCode& pd) {
  int edges = static_cast<int>(2 * pd.size());
  std::vector<int> parent(edges + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) { parent[find_root(parent, a)] = find_root(parent, b); };
  for (const auto& x : pd.crossings) {
    unite(x[0], x[2]);
    unite(x[1], x[3]);
  }
  PdComponents out;
  out.comp.assign(edges + 1, -1);
  std::map<int, int> root_to_comp;
  for (int e = 1; e <= edges; ++e) {
    int r = find_root(parent, e);
    auto [it, fresh] = root_to_comp.emplace(r, static_cast<int>(out.lo.size()));
    if (fresh) {
      out.lo.push_back(e);
      out.hi.push_back(e);
    }
    int c = it->second;
    out.comp[e] = c;
    out.lo[c] = std::min(out.lo[c], e);
    out.hi[c] = std::max(out.hi[c], e);
  }
  return out;
}

}  // namespace

PdCode parse_pd(std::string_view text) {
  PdCode pd = PdParser(text).run();
  validate_pd(pd);
  return pd;
}

std::string render_pd(const PdCode& pd) {
  std::ostringstream os;
  os << "PD[";
  for (std::size_t i = 0; i < pd.crossings.size(); ++i) {
    const auto& x = pd.crossings[i];
    if (i) os << ", ";
    os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  os << ']';
  return os.str();
}

void validate_pd(const PdCode& pd) {
  int edges = static_cast<int>(2 * pd.size());
  std::vector<int> count(edges + 1, 0);
  for (const auto& x : pd.crossings) {
    for (int label : x) {
      if (label < 1 || label > edges) {
        throw DiagramError(DiagramError::Kind::LabelCount,
                           "edge label " + std::to_string(label) + " outside 1.." + std::to_string(edges));
      }
      ++count[label];
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (count[e] != 2) {
      throw DiagramError(DiagramError::Kind::LabelCount, "edge label " + std::to_string(e) + " appears " +
                                                             std::to_string(count[e]) + " times, expected 2");
    }
  }
  PdComponents comps = pd_components(pd);
  std::vector<int> members(comps.lo.size(), 0);
  for (int e = 1; e <= edges; ++e) ++members[comps.comp[e]];
  for (std::size_t c = 0; c < comps.lo.size(); ++c) {
    if (members[c] != comps.size(static_cast<int>(c))) {
      throw DiagramError(DiagramError::Kind::NonConsecutive,
                         "component containing edge " + std::to_string(comps.lo[c]) +
                             " is not numbered consecutively");
    }
  }
}

bool is_alternating(const PdCode& pd) {
  std::vector<int> under(2 * pd.size() + 1, 0);
  for (const auto& x : pd.crossings) {
    ++under[x[0]];
    ++under[x[2]];
  }
  return std::all_of(under.begin() + 1, under.end(), [](int u) { return u == 1; });
}

// ---------------------------------------------------------------------------
// Diagram
// ---------------------------------------------------------------------------

Diagram::Diagram(std::size_t arc_count, std::vector<Crossing> crossings, int components, std::string name,
                 bool alternating)
    : arc_count_(arc_count),
      crossings_(std::move(crossings)),
      components_(components),
      name_(std::move(name)),
      alternating_(alternating) {}

Diagram Diagram::with_name(std::string name) const {
  Diagram d = *this;
  d.name_ = std::move(name);
  return d;
}

Diagram Diagram::relabel_arcs(const std::vector<ArcIndex>& perm) const {
  if (perm.size() != arc_count_) throw PreconditionError("relabel_arcs: permutation has wrong size");
  std::vector<bool> seen(arc_count_, false);
  for (ArcIndex p : perm) {
    if (p >= arc_count_ || seen[p]) throw PreconditionError("relabel_arcs: not a permutation");
    seen[p] = true;
  }
  Diagram d = *this;
  for (auto& x : d.crossings_) {
    x.under_in = perm[x.under_in];
    x.over = perm[x.over];
    x.under_out = perm[x.under_out];
  }
  return d;
}

Diagram build_diagram(const PdCode& pd, std::string name) {
  validate_pd(pd);
  const int n = static_cast<int>(pd.size());
  if (n == 0) throw DiagramError(DiagramError::Kind::FreeLoop, "diagram has a component with no crossings");
  const int edges = 2 * n;
  PdComponents comps = pd_components(pd);

  using Kind = DiagramError::Kind;
  auto inconsistent = [](const std::string& msg) { return DiagramError(Kind::InconsistentOrientation, msg); };

  std::vector<int> head_at(edges + 1, -1), tail_at(edges + 1, -1);
  auto set_head = [&](int e, int i) {
    if (head_at[e] != -1) throw inconsistent("edge " + std::to_string(e) + " enters two crossings");
    head_at[e] = i;
  };
  auto set_tail = [&](int e, int i) {
    if (tail_at[e] != -1) throw inconsistent("edge " + std::to_string(e) + " leaves two crossings");
    tail_at[e] = i;
  };

  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings[i];
    if (comps.size(comps.comp[x[0]]) == 1 || comps.size(comps.comp[x[1]]) == 1) {
      throw DiagramError(Kind::Degenerate, "crossing " + std::to_string(i + 1) + " closes a one-edge component");
    }
    if (comps.next(x[0]) != x[2]) {
      throw inconsistent("under-strand " + std::to_string(x[0]) + "->" + std::to_string(x[2]) +
                         " disagrees with the edge numbering");
    }
    set_head(x[0], i);
    set_tail(x[2], i);
  }

  // over_out[i] is 1 or 3 (tuple position of the outgoing over-edge).
  std::vector<int> over_out(n, 0);
  std::vector<int> pending;
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings[i];
    if (comps.size(comps.comp[x[1]]) >= 3) {
      if (comps.next(x[1]) == x[3]) {
        over_out[i] = 3;
      } else if (comps.next(x[3]) == x[1]) {
        over_out[i] = 1;
      } else {
        throw inconsistent("over-strand edges " + std::to_string(x[1]) + ", " + std::to_string(x[3]) +
                           " are not consecutive");
      }
    } else {
      pending.push_back(i);
    }
  }
  auto commit_over = [&](int i) {
    const auto& x = pd.crossings[i];
    int in = over_out[i] == 3 ? x[1] : x[3];
    int out = over_out[i] == 3 ? x[3] : x[1];
    set_head(in, i);
    set_tail(out, i);
  };
  for (int i = 0; i < n; ++i)
    if (over_out[i] != 0) commit_over(i);

  // Two-edge components: labels alone cannot orient them, so use how the
  // same edges meet other crossings. A component that only ever passes over
  // gets oriented with its lower label entering the first such crossing.
  while (!pending.empty()) {
    bool progress = false;
    for (auto it = pending.begin(); it != pending.end();) {
      int i = *it;
      const auto& x = pd.crossings[i];
      int decided = 0;
      if (head_at[x[1]] != -1 || tail_at[x[3]] != -1) decided = 1;  // b leaves here
      else if (head_at[x[3]] != -1 || tail_at[x[1]] != -1) decided = 3;  // d leaves here
      if (decided) {
        over_out[i] = decided;
        commit_over(i);
        it = pending.erase(it);
        progress = true;
      } else {
        ++it;
      }
    }
    if (!progress) {
      int i = pending.front();
      const auto& x = pd.crossings[i];
      over_out[i] = x[1] < x[3] ? 3 : 1;
      commit_over(i);
      pending.erase(pending.begin());
    }
  }
  for (int e = 1; e <= edges; ++e) {
    if (head_at[e] == -1 || tail_at[e] == -1) throw inconsistent("edge " + std::to_string(e) + " is not oriented");
  }

  // Walk arcs: an arc starts at an outgoing under-edge and continues through
  // over-passages until it enters a crossing as the incoming under-edge.
  std::vector<bool> starts_arc(edges + 1, false), ends_arc(edges + 1, false);
  std::vector<int> continues(edges + 1, 0);
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings[i];
    starts_arc[x[2]] = true;
    ends_arc[x[0]] = true;
    int in = over_out[i] == 3 ? x[1] : x[3];
    continues[in] = over_out[i] == 3 ? x[3] : x[1];
  }
  std::vector<int> comp_has_under(comps.lo.size(), 0);
  for (int e = 1; e <= edges; ++e)
    if (starts_arc[e]) comp_has_under[comps.comp[e]] = 1;
  for (std::size_t c = 0; c < comps.lo.size(); ++c) {
    if (!comp_has_under[c]) {
      throw DiagramError(Kind::OverOnlyComponent,
                         "component containing edge " + std::to_string(comps.lo[c]) + " never passes under");
    }
  }
  std::vector<ArcIndex> arc_of(edges + 1, 0);
  ArcIndex arcs = 0;
  for (int e = 1; e <= edges; ++e) {
    if (!starts_arc[e]) continue;
    int cur = e;
    while (true) {
      arc_of[cur] = arcs;
      if (ends_arc[cur]) break;
      cur = continues[cur];
    }
    ++arcs;
  }

  std::vector<Crossing> crossings;
  crossings.reserve(n);
  for (int i = 0; i < n; ++i) {
    const auto& x = pd.crossings[i];
    crossings.push_back({over_out[i] == 1 ? +1 : -1, arc_of[x[0]], arc_of[x[1]], arc_of[x[2]]});
  }
  return Diagram(arcs, std::move(crossings), static_cast<int>(comps.lo.size()), std::move(name),
                 is_alternating(pd));
}

std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> out;
  const std::size_t q = d.arc_count();
  std::vector<int> as_in(q, 0), as_out(q, 0);
  for (std::size_t i = 0; i < d.crossings().size(); ++i) {
    const auto& x = d.crossings()[i];
    std::string where = "crossing " + std::to_string(i + 1);
    if (x.sign != 1 && x.sign != -1) out.push_back(where + ": sign must be +1 or -1");
    for (auto [role, arc] : {std::pair{"under_in", x.under_in}, {"over", x.over}, {"under_out", x.under_out}}) {
      if (arc >= q) out.push_back(where + ": " + role + " refers to missing arc " + std::to_string(arc + 1));
    }
    if (x.under_in < q) ++as_in[x.under_in];
    if (x.under_out < q) ++as_out[x.under_out];
  }
  auto check_once = [&](const std::vector<int>& counts, const char* role) {
    std::string bad;
    for (std::size_t a = 0; a < q; ++a)
      if (counts[a] != 1) bad += (bad.empty() ? "" : ", ") + std::to_string(a + 1);
    if (!bad.empty()) out.push_back(std::string("arcs not used exactly once as ") + role + ": " + bad);
  };
  check_once(as_in, "under_in");
  check_once(as_out, "under_out");
  if (d.components() == 1 && !d.crossings().empty() && q != d.crossings().size()) {
    out.push_back("knot diagram has " + std::to_string(q) + " arcs but " + std::to_string(d.crossings().size()) +
                  " crossings");
  }
  return out;
}

std::string canonical_form(const Diagram& d) {
  if (d.components() != 1) throw PreconditionError("canonical_form is defined for knot diagrams only");
  const std::size_t q = d.arc_count();
  std::vector<ArcIndex> succ(q, 0);
  for (const auto& x : d.crossings()) succ[x.under_in] = x.under_out;
  std::string best;
  for (ArcIndex start = 0; start < q; ++start) {
    std::vector<ArcIndex> pos(q, q);
    ArcIndex a = start;
    for (std::size_t k = 0; k < q; ++k) {
      pos[a] = k;
      a = succ[a];
    }
    std::vector<std::array<long, 4>> rows;
    for (const auto& x : d.crossings()) {
      rows.push_back({x.sign, static_cast<long>(pos[x.under_in]), static_cast<long>(pos[x.over]),
                      static_cast<long>(pos[x.under_out])});
    }
    std::sort(rows.begin(), rows.end());
    std::ostringstream os;
    for (const auto& r : rows) os << r[0] << ':' << r[1] << ',' << r[2] << ',' << r[3] << ';';
    if (best.empty() || os.str() < best) best = os.str();
  }
  return best;
}

// ---------------------------------------------------------------------------
// PlanarBuilder
// ---------------------------------------------------------------------------

std::size_t PlanarBuilder::add_crossing(bool sw_ne_over) {
  sw_ne_over_.push_back(sw_ne_over);
  partner_.resize(partner_.size() + 4);
  return sw_ne_over_.size() - 1;
}

void PlanarBuilder::join(Slot a, Slot b) {
  std::size_t ia = index(a), ib = index(b);
  if (ia >= partner_.size() || ib >= partner_.size() || ia == ib) throw PreconditionError("join: bad slot");
  if (partner_[ia] || partner_[ib]) throw PreconditionError("join: slot already joined");
  partner_[ia] = ib;
  partner_[ib] = ia;
}

PdCode PlanarBuilder::trace(const std::vector<Slot>& starts) const {
  const std::size_t slots = partner_.size();
  const std::size_t n = sw_ne_over_.size();
  for (std::size_t s = 0; s < slots; ++s)
    if (!partner_[s]) throw PreconditionError("trace: corner left unjoined");

  struct Pass {
    std::size_t entry, exit;
    int in = 0, out = 0;
  };
  // passes[i] holds the (up to two) strands through crossing i.
  std::vector<std::vector<Pass>> passes(n);
  std::vector<bool> visited(slots, false);
  int next_label = 1;

  auto run = [&](std::size_t start) {
    std::vector<std::pair<std::size_t, std::size_t>> walk;  // (crossing, index into passes)
    std::size_t cur = start;
    do {
      if (visited[cur]) throw PreconditionError("trace: strand re-enters a visited corner");
      std::size_t crossing = cur / 4;
      std::size_t exit = crossing * 4 + (cur % 4 + 2) % 4;
      visited[cur] = visited[exit] = true;
      passes[crossing].push_back({cur, exit});
      walk.emplace_back(crossing, passes[crossing].size() - 1);
      cur = *partner_[exit];
    } while (cur != start);
    const int len = static_cast<int>(walk.size());
    const int base = next_label;
    for (int k = 0; k < len; ++k) {
      Pass& p = passes[walk[k].first][walk[k].second];
      p.out = base + k;
      p.in = base + (k + len - 1) % len;
    }
    next_label += len;
  };

  for (const Slot& s : starts)
    if (!visited[index(s)]) run(index(s));
  for (std::size_t s = 0; s < slots; ++s)
    if (!visited[s]) run(s);

  static constexpr int kX[4] = {-1, 1, 1, -1};
  static constexpr int kY[4] = {-1, -1, 1, 1};
  PdCode pd;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ps = passes[i];
    if (ps.size() != 2) throw PreconditionError("trace: crossing not traversed by two strands");
    auto is_over = [&](const Pass& p) {
      bool sw_ne = (p.entry % 4) % 2 == 0;
      return sw_ne == static_cast<bool>(sw_ne_over_[i]);
    };
    const Pass& over = is_over(ps[0]) ? ps[0] : ps[1];
    const Pass& under = is_over(ps[0]) ? ps[1] : ps[0];
    int ox = kX[over.exit % 4] - kX[over.entry % 4], oy = kY[over.exit % 4] - kY[over.entry % 4];
    int ux = kX[under.exit % 4] - kX[under.entry % 4], uy = kY[under.exit % 4] - kY[under.entry % 4];
    bool positive = ox * uy - oy * ux > 0;
    if (positive) {
      pd.crossings.push_back({under.in, over.out, under.out, over.in});
    } else {
      pd.crossings.push_back({under.in, over.in, under.out, over.out});
    }
  }
  return pd;
}

}  // namespace qcol

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcol/error.hpp"

namespace qcol {

// ---------------------------------------------------------------------------
// PD codes
// ---------------------------------------------------------------------------

// One X[a,b,c,d] entry: edge labels counterclockwise, starting from the
// incoming under-edge. So c is the outgoing under-edge and {b, d} is the
// over-strand.
using PdCrossing = std::array<int, 4>;

struct PdCode {
  std::vector<PdCrossing> crossings;

  std::size_t size() const { return crossings.size(); }
  friend bool operator==(const PdCode&, const PdCode&) = default;
};

// Syntax error in PD text; position is a 0-based byte offset into the input.
class PdSyntaxError : public Error {
 public:
  PdSyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Structural problem with a PD code or the diagram derived from it.
class DiagramError : public Error {
 public:
  enum class Kind {
    LabelCount,             // labels are not 1..2n each used exactly twice
    NonConsecutive,         // a component's labels are not a consecutive run
    InconsistentOrientation,
    FreeLoop,               // a component with no crossings
    OverOnlyComponent,      // a component that never passes under
    Degenerate,             // a one-edge component
  };
  DiagramError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Parses `PD[X[a,b,c,d], ...]` (whitespace-insensitive) and validates the
// label invariants.
PdCode parse_pd(std::string_view text);
std::string render_pd(const PdCode& pd);
// Throws DiagramError if labels are not 1..2n twice each or a component is
// not numbered consecutively.
void validate_pd(const PdCode& pd);

// True iff every edge joins an over-passage to an under-passage.
bool is_alternating(const PdCode& pd);

// ---------------------------------------------------------------------------
// Arc-level diagrams
// ---------------------------------------------------------------------------

using ArcIndex = std::size_t;

struct Crossing {
  int sign = 1;  // +1 or -1
  ArcIndex under_in = 0;
  ArcIndex over = 0;
  ArcIndex under_out = 0;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// An oriented diagram as seen by colorings: arcs run from undercrossing to
// undercrossing. Arcs are indexed 0..arc_count-1 and shown 1-based.
class Diagram {
 public:
  Diagram() = default;
  Diagram(std::size_t arc_count, std::vector<Crossing> crossings, int components,
          std::string name = {}, bool alternating = false);

  std::size_t arc_count() const { return arc_count_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int components() const { return components_; }
  const std::string& name() const { return name_; }
  bool alternating() const { return alternating_; }

  Diagram with_name(std::string name) const;
  // perm[old] = new. Must be a permutation of 0..arc_count-1.
  Diagram relabel_arcs(const std::vector<ArcIndex>& perm) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::size_t arc_count_ = 0;
  std::vector<Crossing> crossings_;
  int components_ = 0;
  std::string name_;
  bool alternating_ = false;
};

// Arcs are numbered by the label of their first edge; crossings keep the PD
// order. Crossing sign is +1 when the over-strand leaves through the second
// tuple entry and -1 when it leaves through the fourth.
Diagram build_diagram(const PdCode& pd, std::string name = {});

// Empty iff all Diagram invariants hold.
std::vector<std::string> validate(const Diagram& d);

// Canonical string for knot diagrams, invariant under arc relabeling and
// crossing reordering. Used to test diagram isomorphism.
std::string canonical_form(const Diagram& d);

// ---------------------------------------------------------------------------
// Planar construction
// ---------------------------------------------------------------------------

// Builds PD codes from crossings placed in the plane. Each crossing has four
// corners in counterclockwise order SW, SE, NE, NW; strands run SW<->NE and
// SE<->NW. Callers join corners pairwise with edges, then trace components.
class PlanarBuilder {
 public:
  enum Corner { SW = 0, SE = 1, NE = 2, NW = 3 };
  struct Slot {
    std::size_t crossing;
    Corner corner;
    friend bool operator==(const Slot&, const Slot&) = default;
  };

  // `sw_ne_over`: the SW<->NE strand passes over.
  std::size_t add_crossing(bool sw_ne_over);
  void join(Slot a, Slot b);

  // Traces every component. Each start slot is a corner through which a
  // strand enters its crossing; components not reached from a start slot are
  // traced from their lowest unvisited slot. Edge labels come out
  // consecutive along each component.
  PdCode trace(const std::vector<Slot>& starts = {}) const;

 private:
  std::size_t index(Slot s) const { return s.crossing * 4 + s.corner; }

  std::vector<bool> sw_ne_over_;
  std::vector<std::optional<std::size_t>> partner_;
};

}  // namespace qcol

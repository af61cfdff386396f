#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "qcol/alexander.hpp"
#include "qcol/bounds.hpp"
#include "qcol/coloring.hpp"
#include "qcol/families.hpp"
#include "qcol/numtheory.hpp"
#include "qcol/registry.hpp"
#include "qcol/serialize.hpp"

using namespace qcol;

namespace {

enum class Format { Text, Json, Csv };

struct Range {
  long from = 0, to = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos) throw PreconditionError("range must look like A..B, got '" + s + "'");
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string a = s.substr(0, dots), b = s.substr(dots + 2);
    Range r{std::stol(a, &u1), std::stol(b, &u2)};
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument(s);
    if (r.from > r.to) throw PreconditionError("empty range " + s);
    return r;
  } catch (const std::logic_error&) {
    throw PreconditionError("range must look like A..B, got '" + s + "'");
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

// p from --p, or the reduced polynomial at m when that is an odd prime.
std::uint64_t resolve_p(const Diagram& d, const std::optional<std::uint64_t>& p_opt, long m, bool* derived) {
  *derived = false;
  if (p_opt) return *p_opt;
  BigInt v = evaluate(reduced_alexander(d).reduced, BigInt(m));
  if (v >= 3 && mpz_odd_p(v.get_mpz_t()) && is_prime(v) && v.fits_ulong_p()) {
    *derived = true;
    return v.get_ui();
  }
  throw PreconditionError("--p is required: the reduced polynomial at m=" + std::to_string(m) + " is " +
                          v.get_str() + ", not an odd prime");
}

// Knot bound when poly(m) is prime and matches p; otherwise the bound from
// a prime factor p of poly(m).
BoundReport bound_for(const ResolvedInput& in, const LaurentPoly& poly, long m, const std::optional<std::uint64_t>& p_opt) {
  const Diagram& d = in.diagram;
  BigInt value = evaluate(poly, BigInt(m));
  const bool value_prime = value >= 3 && mpz_odd_p(value.get_mpz_t()) && is_prime(value);
  BoundReport r;
  if (d.components() == 1 && value_prime && (!p_opt || BigInt(*p_opt) == value)) {
    r = in.kind == InputKind::Pretzel ? pretzel_mincol_report(PretzelParams::from_a(in.pretzel_a), m)
                                      : improved_lower_bound(poly, m, in.name);
    r.knot_name = in.name;
  } else {
    BigInt p;
    if (p_opt) {
      p = BigInt(*p_opt);
    } else if (value_prime) {
      p = value;
    } else {
      throw PreconditionError("--p is required: the reduced polynomial at m=" + std::to_string(m) + " is " +
                              value.get_str() + ", not an odd prime");
    }
    r = link_lower_bound(poly, m, p, in.name);
    if (d.components() == 1) {
      r.notes.back() = "p differs from poly(m): only the 2 + floor(log_M p) bound applies";
    }
  }
  if (in.kind == InputKind::Torus && r.improved) {
    TorusParams tp = TorusParams::make(in.torus_a, in.torus_b);
    r.upper = UpperBound{static_cast<std::size_t>(tp.crossing_number()), "crossing number", {}, {}};
  }
  return r;
}

void print_bound_text(const BoundReport& r) {
  std::cout << "knot: " << r.knot_name << "\n"
            << "poly: " << r.poly << "\n"
            << "m: " << r.m << "\n"
            << "value: " << r.value << "\n"
            << "p: " << r.p << (r.p_probabilistic ? " (probable prime)" : "") << "\n"
            << "degree: " << r.degree << "\n"
            << "applicability: " << to_string(r.applicability) << "\n"
            << "case: " << (r.bound_case ? to_string(*r.bound_case) : "-") << "\n"
            << "improved: " << opt_str(r.improved) << "\n"
            << "kl: " << r.kl << "\n";
  if (r.upper) std::cout << "upper: " << r.upper->value << " (" << r.upper->source << ")\n";
  for (const auto& n : r.notes) std::cout << "note: " << n << "\n";
}

std::string coloring_text(const Coloring& c) {
  std::ostringstream os;
  os << "colors:";
  for (std::size_t a = 0; a < c.colors.size(); ++a) os << " " << (a + 1) << "=" << c.colors[a];
  os << "\n";
  return os.str();
}

Coloring read_coloring(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw PreconditionError("cannot read " + path);
  try {
    return coloring_from_json(Json::parse(f));
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionError(path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle colorings, Alexander polynomials and minimum-color bounds for knot diagrams"};
  app.require_subcommand(1);

  std::string input;
  std::string format_name = "text";
  std::optional<long> m_opt;
  std::optional<std::uint64_t> p_opt;
  std::string scan_range, verify_file, coloring_file;
  bool want_min = false, want_kh = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", input, "registry name, PD[...] string, torus:a,b, pretzel:a, or file")->required();
    sub->add_option("--format", format_name, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* parse = app.add_subcommand("parse", "parse and validate a diagram");
  add_common(parse);
  auto* alex = app.add_subcommand("alexander", "reduced Alexander polynomial and the raw first minor");
  add_common(alex);
  auto* bounds = app.add_subcommand("bounds", "improved and Kauffman-Lopes lower bounds");
  add_common(bounds);
  auto* b_m = bounds->add_option("--m", m_opt, "quandle parameter m");
  auto* b_scan = bounds->add_option("--scan", scan_range, "scan m over A..B, reporting prime values");
  b_m->excludes(b_scan);
  bounds->add_option("--p", p_opt, "prime p (default: the reduced polynomial at m)");
  auto* color = app.add_subcommand("color", "colorability, minimum colors, arc-injective colorings");
  add_common(color);
  color->add_option("--m", m_opt, "quandle parameter m")->required();
  color->add_option("--p", p_opt, "prime p (default: the reduced polynomial at m)");
  auto* c_min = color->add_flag("--min", want_min, "minimum number of distinct colors");
  auto* c_kh = color->add_flag("--kh", want_kh, "search for a coloring with all arcs distinct");
  auto* c_verify = color->add_option("--verify", verify_file, "check a coloring JSON file");
  c_min->excludes(c_kh)->excludes(c_verify);
  c_kh->excludes(c_verify);
  auto* collapse = app.add_subcommand("collapse", "column-collapse determinant check on a minimal coloring");
  add_common(collapse);
  collapse->add_option("--m", m_opt, "quandle parameter m")->required();
  collapse->add_option("--p", p_opt, "prime p (default: the reduced polynomial at m)");
  collapse->add_option("--coloring", coloring_file, "use this coloring JSON instead of a minimal one");
  auto* families = app.add_subcommand("families", "torus interval or pretzel report");
  add_common(families);
  families->add_option("--m", m_opt, "quandle parameter m")->required();
  auto* scan = app.add_subcommand("scan", "values m in A..B where the reduced polynomial is an odd prime");
  add_common(scan);
  scan->add_option("--range", scan_range, "A..B")->required();

  CLI11_PARSE(app, argc, argv);
  const Format fmt = format_name == "json" ? Format::Json : format_name == "csv" ? Format::Csv : Format::Text;

  try {
    const ResolvedInput in = resolve_input(input);
    const Diagram& d = in.diagram;

    if (parse->parsed()) {
      if (fmt == Format::Json) {
        Json j = to_json(d);
        j["pd"] = render_pd(in.pd);
        j["alternating"] = d.alternating();
        print_json(j);
      } else {
        std::cout << "name: " << d.name() << "\n"
                  << "pd: " << render_pd(in.pd) << "\n"
                  << "crossings: " << d.crossings().size() << "\n"
                  << "arcs: " << d.arc_count() << "\n"
                  << "components: " << d.components() << "\n"
                  << "alternating: " << (d.alternating() ? "yes" : "no") << "\n";
        for (std::size_t i = 0; i < d.crossings().size(); ++i) {
          const Crossing& x = d.crossings()[i];
          std::cout << "crossing " << (i + 1) << ": sign " << (x.sign > 0 ? "+" : "-") << " under_in "
                    << (x.under_in + 1) << " over " << (x.over + 1) << " under_out " << (x.under_out + 1) << "\n";
        }
      }
      return 0;
    }

    const AlexanderResult alex_r = reduced_alexander(d);

    if (alex->parsed()) {
      if (fmt == Format::Json) {
        print_json(Json{{"name", d.name()},
                        {"reduced", alex_r.reduced.to_string()},
                        {"reduced_coeffs", to_json(alex_r.reduced)},
                        {"minor", alex_r.minor.to_string()},
                        {"minor_coeffs", to_json(alex_r.minor)}});
      } else {
        std::cout << alex_r.reduced << "\n" << "minor: " << alex_r.minor << "\n";
      }
      return 0;
    }

    if (bounds->parsed()) {
      if (!m_opt && scan_range.empty()) throw PreconditionError("bounds needs --m or --scan");
      if (m_opt) {
        BoundReport r = bound_for(in, alex_r.reduced, *m_opt, p_opt);
        if (fmt == Format::Json) print_json(to_json(r));
        else if (fmt == Format::Csv) std::cout << "m,value\n" << r.m << "," << r.value << "\n";
        else print_bound_text(r);
        return 0;
      }
      const Range range = parse_range(scan_range);
      const auto entries = prime_scan(alex_r.reduced, range.from, range.to);
      if (fmt == Format::Csv) {
        std::cout << "m,value\n";
        for (const auto& e : entries) std::cout << e.m << "," << e.value << "\n";
        return 0;
      }
      std::vector<BoundReport> reports;
      for (const auto& e : entries) {
        if (e.m <= 1) continue;  // the bounds need M = max(|m|, |m - 1|) >= 2
        reports.push_back(bound_for(in, alex_r.reduced, e.m, std::nullopt));
      }
      if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        print_json(arr);
      } else {
        std::cout << "m value improved kl\n";
        for (const auto& r : reports) std::cout << r.m << " " << r.value << " " << opt_str(r.improved) << " " << r.kl << "\n";
      }
      return 0;
    }

    if (color->parsed()) {
      bool derived = false;
      const std::uint64_t p = resolve_p(d, p_opt, *m_opt, &derived);
      const QuandleParams q = QuandleParams::make(p, *m_opt);
      Json j{{"name", d.name()}, {"p", p}, {"m", q.m}, {"p_derived", derived}};
      std::ostringstream text;
      text << "p: " << p << (derived ? " (from the reduced polynomial at m)" : "") << "\nm: " << q.m << "\n";
      if (!verify_file.empty()) {
        Coloring c = read_coloring(verify_file);
        if (c.colors.size() != d.arc_count()) {
          throw PreconditionError("coloring has " + std::to_string(c.colors.size()) + " arcs, diagram has " +
                                  std::to_string(d.arc_count()));
        }
        if (!(c.params == q)) throw PreconditionError("coloring file has different p or m");
        const bool ok = verify_coloring(d, c);
        j["valid"] = ok;
        j["trivial"] = c.is_trivial();
        j["distinct"] = c.distinct_count();
        text << "valid: " << (ok ? "yes" : "no") << "\ntrivial: " << (c.is_trivial() ? "yes" : "no")
             << "\ndistinct: " << c.distinct_count() << "\n";
        if (fmt == Format::Json) print_json(j);
        else std::cout << text.str();
        return ok ? 0 : 1;
      }
      if (want_min) {
        MinColorsResult r = min_colors_on_diagram(d, q);
        j["min_colors"] = to_json(r);
        text << "min colors: " << r.count << "\nkernel dim: " << r.kernel_dim << "\nclasses: " << r.classes << "\n"
             << coloring_text(r.witness);
      } else if (want_kh) {
        KhResult r = kh_check(d, q, d.alternating());
        j["kh"] = to_json(r);
        text << "kh: " << (r.kh ? "true" : "false") << "\nclasses: " << r.classes << "\n";
        if (r.witness) text << coloring_text(*r.witness);
      } else {
        const bool ok = is_nontrivially_colorable(d, q);
        j["colorable"] = ok;
        text << "colorable: " << (ok ? "yes" : "no") << "\n";
      }
      if (fmt == Format::Json) print_json(j);
      else std::cout << text.str();
      return 0;
    }

    if (collapse->parsed()) {
      bool derived = false;
      const std::uint64_t p = resolve_p(d, p_opt, *m_opt, &derived);
      const QuandleParams q = QuandleParams::make(p, *m_opt);
      Coloring c = coloring_file.empty() ? min_colors_on_diagram(d, q).witness : read_coloring(coloring_file);
      if (!(c.params == q)) throw PreconditionError("coloring file has different p or m");
      CollapseReport r = collapse_and_check(d, c);
      if (fmt == Format::Json) {
        Json j = to_json(r);
        j["coloring"] = to_json(c);
        print_json(j);
      } else {
        std::cout << "p: " << r.p << "\nm: " << r.m << "\nd: " << r.distinct << "\nrank A1: " << r.rank_a1
                  << "\ndet B: " << r.det_b << "\nbound M^(d-1): " << r.bound
                  << "\np divides det B: " << (r.divisible ? "yes" : "no")
                  << "\n|det B| within bound: " << (r.within_bound ? "yes" : "no") << "\n";
        std::cout << coloring_text(c);
      }
      return r.bounds_ok ? 0 : 2;
    }

    if (families->parsed()) {
      const long m = *m_opt;
      if (in.kind == InputKind::Torus) {
        TorusParams tp = TorusParams::make(in.torus_a, in.torus_b);
        TorusInterval r = torus_mincol_interval(tp, m);
        if (fmt == Format::Json) {
          Json j = to_json(r);
          j["name"] = d.name();
          j["m"] = m;
          j["poly"] = torus_alexander(tp).to_string();
          j["crossing_number"] = tp.crossing_number();
          print_json(j);
        } else {
          std::cout << "knot: " << d.name() << "\npoly: " << torus_alexander(tp) << "\nm: " << m
                    << "\nvalue: " << r.value << "\ncrossing number: " << tp.crossing_number() << "\n";
          if (r.p) std::cout << "interval: [" << *r.lower << ", " << *r.upper << "]\n";
          else std::cout << "interval: withheld (value is not an odd prime)\n";
          if (r.kl) std::cout << "kl: " << *r.kl << " (p = " << *r.kl_prime << ")\n";
        }
        return 0;
      }
      if (in.kind == InputKind::Pretzel) {
        BoundReport r = pretzel_mincol_report(PretzelParams::from_a(in.pretzel_a), m);
        if (fmt == Format::Json) print_json(to_json(r));
        else {
          print_bound_text(r);
          if (r.upper && r.upper->coloring) std::cout << coloring_text(*r.upper->coloring);
        }
        return 0;
      }
      throw PreconditionError("families needs a torus:a,b or pretzel:a input");
    }

    if (scan->parsed()) {
      const Range range = parse_range(scan_range);
      const auto entries = prime_scan(alex_r.reduced, range.from, range.to);
      if (fmt == Format::Json) {
        Json arr = Json::array();
        for (const auto& e : entries) arr.push_back(to_json(e));
        print_json(arr);
      } else {
        std::cout << "m,value\n";
        for (const auto& e : entries) std::cout << e.m << "," << e.value << "\n";
      }
      return 0;
    }
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

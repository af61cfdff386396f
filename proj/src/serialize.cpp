#include "qcol/serialize.hpp"

namespace qcol {

Json to_json(const BigInt& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw PreconditionError("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_json(c));
  return Json{{"min_exp", p.min_exp()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const Json& j) {
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(bigint_from_json(c));
  return LaurentPoly(std::move(coeffs), j.at("min_exp").get<int>());
}

Json to_json(const Diagram& d) {
  Json xs = Json::array();
  for (const auto& x : d.crossings()) {
    xs.push_back({{"sign", x.sign}, {"under_in", x.under_in + 1}, {"over", x.over + 1}, {"under_out", x.under_out + 1}});
  }
  return Json{{"name", d.name()}, {"arcs", d.arc_count()}, {"crossings", xs}, {"components", d.components()}};
}

Diagram diagram_from_json(const Json& j) {
  try {
    const auto arcs = j.at("arcs").get<std::size_t>();
    std::vector<Crossing> xs;
    auto arc = [&](const Json& v) {
      auto a = v.get<std::size_t>();
      if (a < 1 || a > arcs) throw PreconditionError("arc index out of range: " + std::to_string(a));
      return a - 1;
    };
    for (const auto& x : j.at("crossings")) {
      xs.push_back({x.at("sign").get<int>(), arc(x.at("under_in")), arc(x.at("over")), arc(x.at("under_out"))});
    }
    Diagram d(arcs, std::move(xs), j.at("components").get<int>(), j.value("name", std::string{}));
    if (auto v = validate(d); !v.empty()) throw PreconditionError("invalid diagram: " + v.front());
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed diagram JSON: ") + e.what());
  }
}

Json to_json(const Coloring& c) {
  Json colors = Json::object();
  for (std::size_t a = 0; a < c.colors.size(); ++a) colors[std::to_string(a + 1)] = c.colors[a];
  return Json{{"p", c.params.n}, {"m", c.params.m}, {"colors", colors}};
}

Coloring coloring_from_json(const Json& j) {
  try {
    QuandleParams q = QuandleParams::make(j.at("p").get<std::uint64_t>(), j.at("m").get<std::int64_t>());
    const Json& colors = j.at("colors");
    Coloring c{q, ModVector(colors.size())};
    std::vector<bool> seen(colors.size(), false);
    for (const auto& [key, value] : colors.items()) {
      std::size_t used = 0, arc = 0;
      try {
        arc = std::stoul(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size() || arc < 1 || arc > colors.size() || seen[arc - 1]) {
        throw PreconditionError("coloring keys must be the arcs 1.." + std::to_string(colors.size()));
      }
      seen[arc - 1] = true;
      c.colors[arc - 1] = value.get<std::uint64_t>() % q.n;
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed coloring JSON: ") + e.what());
  }
}

namespace {

Json matrix_json(const std::vector<std::vector<BigInt>>& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(to_json(v));
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

Json to_json(const BoundReport& r) {
  Json j{{"knot", r.knot_name},
         {"poly", r.poly.to_string()},
         {"poly_coeffs", to_json(r.poly)},
         {"m", r.m},
         {"value", to_json(r.value)},
         {"p", to_json(r.p)},
         {"p_probabilistic", r.p_probabilistic},
         {"degree", r.degree},
         {"leading", to_json(r.leading)},
         {"penultimate", r.penultimate ? to_json(*r.penultimate) : Json(nullptr)},
         {"applicability", to_string(r.applicability)},
         {"case", r.bound_case ? Json(to_string(*r.bound_case)) : Json(nullptr)},
         {"kl", r.kl},
         {"improved", r.improved ? Json(*r.improved) : Json(nullptr)}};
  if (r.upper) {
    Json u{{"value", r.upper->value}, {"source", r.upper->source}};
    if (r.upper->coloring) u["coloring"] = to_json(*r.upper->coloring);
    j["upper"] = u;
  } else {
    j["upper"] = nullptr;
  }
  j["notes"] = r.notes;
  return j;
}

Json to_json(const CollapseReport& r) {
  return Json{{"p", r.p},
              {"m", r.m},
              {"d", r.distinct},
              {"column_colors", r.column_colors},
              {"a1", matrix_json(r.a1)},
              {"rank_a1", r.rank_a1},
              {"selected_rows", r.selected_rows},
              {"b", matrix_json(r.b)},
              {"det_b", to_json(r.det_b)},
              {"bound", to_json(r.bound)},
              {"divisible", r.divisible},
              {"within_bound", r.within_bound},
              {"ok", r.bounds_ok}};
}

Json to_json(const MinColorsResult& r) {
  return Json{{"count", r.count}, {"kernel_dim", r.kernel_dim}, {"classes", r.classes}, {"witness", to_json(r.witness)}};
}

Json to_json(const KhResult& r) {
  return Json{{"kh", r.kh}, {"classes", r.classes}, {"witness", r.witness ? to_json(*r.witness) : Json(nullptr)}};
}

Json to_json(const TorusInterval& r) {
  auto opt = [](const auto& o) { return o ? Json(*o) : Json(nullptr); };
  return Json{{"value", to_json(r.value)},
              {"p", r.p ? to_json(*r.p) : Json(nullptr)},
              {"lower", opt(r.lower)},
              {"upper", opt(r.upper)},
              {"kl", opt(r.kl)},
              {"kl_prime", r.kl_prime ? to_json(*r.kl_prime) : Json(nullptr)}};
}

Json to_json(const ScanEntry& e) {
  return Json{{"m", e.m}, {"value", to_json(e.value)}, {"probabilistic", e.probabilistic}};
}

}  // namespace qcol

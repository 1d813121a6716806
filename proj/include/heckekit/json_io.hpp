#pragma once

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>

#include "heckekit/cells.hpp"
#include "heckekit/hecke.hpp"
#include "heckekit/jucys.hpp"
#include "heckekit/laurent.hpp"
#include "heckekit/permutations.hpp"
#include "heckekit/qsl2.hpp"
#include "heckekit/tangles.hpp"

namespace heckekit {

using Json = nlohmann::ordered_json;

/// Array of [exponent, coefficient] pairs sorted by exponent.  Coefficients
/// that do not fit a JSON integer are emitted as decimal strings.
inline Json laurent_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json pair = Json::array();
    pair.push_back(e);
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      pair.push_back(c.convert_to<std::int64_t>());
    else
      pair.push_back(c.str());
    arr.push_back(std::move(pair));
  }
  return arr;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& pair : j) {
    int e = pair.at(0).get<int>();
    Int c = pair.at(1).is_string() ? Int(pair.at(1).get<std::string>()) : Int(pair.at(1).get<std::int64_t>());
    p += LaurentPoly::monomial(c, e);
  }
  return p;
}

/// Permutations serialize as arrays of images in one-line order.
inline Json permutation_json(const Permutation& w) { return Json(w.images()); }

inline Permutation permutation_from_json(const Json& j) {
  return Permutation(j.get<std::vector<int>>());
}

/// KL table dump: rows keyed by one-line permutation strings, coefficient
/// values as Laurent strings.
inline Json kl_table_json(const KLTable& table) {
  Json out;
  out["n"] = table.n();
  Json rows;
  for (const auto& x : table.elements()) {
    Json row;
    for (const auto& y : table.elements()) {
      LaurentPoly h = table.h(y, x);
      if (!h.is_zero()) row[y.str()] = h.str();
    }
    rows[x.str()] = std::move(row);
  }
  out["kl"] = std::move(rows);
  return out;
}

inline KLTable kl_table_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  std::map<Permutation, HeckeElt> kl;
  for (const auto& [xs, row] : j.at("kl").items()) {
    Permutation x = Permutation::parse(xs);
    HeckeElt elt(n);
    for (const auto& [ys, hs] : row.items())
      elt.add_term(Permutation::parse(ys), LaurentPoly::parse(hs.get<std::string>()));
    kl.emplace(std::move(x), std::move(elt));
  }
  return KLTable::from_precomputed(n, std::move(kl));
}

/// Load a cached KL table from <dir>/kl_<n>.json, or compute and cache it.
/// Any unreadable or invalid cache entry is recomputed and overwritten.
inline KLTable kl_table_cached(int n, const std::string& cache_dir) {
  const std::string path = cache_dir + "/kl_" + std::to_string(n) + ".json";
  {
    std::ifstream in(path);
    if (in) {
      try {
        Json j = Json::parse(in);
        return kl_table_from_json(j);
      } catch (const std::exception&) {
        // fall through to recompute
      }
    }
  }
  KLTable table(n);
  std::ofstream out(path);
  if (out) out << kl_table_json(table).dump(2) << "\n";
  return table;
}

inline std::string cell_kind_name(CellKind k) {
  switch (k) {
    case CellKind::Left: return "left";
    case CellKind::Right: return "right";
    default: return "two-sided";
  }
}

/// Cell partition report with tableau labels: right cells share p, left
/// cells share q, two-sided cells share the shape.
inline Json cells_json(const CellPartition& part) {
  Json out;
  out["n"] = part.n;
  out["kind"] = cell_kind_name(part.kind);
  Json classes = Json::array();
  for (const auto& cls : part.classes) {
    Json c;
    auto [p, q] = rsk(cls.front());
    if (part.kind == CellKind::Right) c["p_tableau"] = p.str();
    else if (part.kind == CellKind::Left) c["q_tableau"] = q.str();
    c["shape"] = Json(p.shape());
    Json elems = Json::array();
    for (const auto& w : cls) elems.push_back(w.str());
    c["elements"] = std::move(elems);
    classes.push_back(std::move(c));
  }
  out["classes"] = std::move(classes);
  return out;
}

inline Json specht_json(const KLTable& table) {
  Json out;
  out["n"] = table.n();
  auto left = cells(table, CellKind::Left);
  Json rows = Json::array();
  for (const auto& cls : left.classes) {
    auto rep = cell_module(table, cls, CellKind::Left, &left);
    auto report = specialize_and_test_specht(rep);
    Json r;
    r["cell"] = cls.front().str();
    r["shape"] = Json(rsk(cls.front()).first.shape());
    r["dimension"] = report.dimension;
    Json character;
    for (const auto& [type, chi] : report.character) {
      std::string key;
      for (std::size_t i = 0; i < type.size(); ++i) key += (i ? "," : "") + std::to_string(type[i]);
      character[key] = chi.convert_to<std::int64_t>();
    }
    r["character"] = std::move(character);
    r["norm"] = Rat(report.norm) == Rat(1) ? Json(1) : Json(report.norm.str());
    rows.push_back(std::move(r));
  }
  out["cells"] = std::move(rows);
  return out;
}

inline Json wedderburn_json(const KLTable& table) {
  Json out;
  out["n"] = table.n();
  auto basis = wedderburn_basis(table);
  Json fw;
  for (const auto& [w, f] : basis) {
    Json row;
    for (const auto& [u, c] : f) row[u.str()] = c.convert_to<std::int64_t>();
    fw[w.str()] = std::move(row);
  }
  out["f"] = std::move(fw);
  auto report = verify_wedderburn(table);
  Json checks;
  checks["basis_invertible"] = report.basis_invertible;
  checks["spans_invariant"] = report.spans_invariant;
  checks["spans_irreducible"] = report.spans_irreducible;
  checks["matrix_unit_pattern"] = report.matrix_unit_pattern;
  if (!report.failures.empty()) checks["failures"] = Json(report.failures);
  out["checks"] = std::move(checks);
  return out;
}

/// Block report: field, then the list of blocks with gamma and dimension.
inline Json jm_json(const JMDecomposition<Zmod>& dec) {
  Json out;
  out["field"] = "F_" + std::to_string(dec.p);
  out["n"] = dec.n;
  Json blocks = Json::array();
  for (const auto& [gamma, dim] : block_dimensions(dec)) {
    Json b;
    b["gamma"] = Json(gamma);
    b["dimension"] = dim.convert_to<std::int64_t>();
    blocks.push_back(std::move(b));
  }
  out["blocks"] = std::move(blocks);
  return out;
}

inline Json character_json(const FormalCharacter& ch) {
  Json out;
  out["field"] = ch.p == 0 ? std::string("Q") : "F_" + std::to_string(ch.p);
  out["n"] = ch.n;
  Json weights = Json::array();
  for (const auto& [content, mult] : ch.weights) {
    Json w;
    w["content"] = Json(content);
    w["multiplicity"] = mult.convert_to<std::int64_t>();
    weights.push_back(std::move(w));
  }
  out["weights"] = std::move(weights);
  return out;
}

inline std::string diagram_kind_name(DiagramKind k) {
  switch (k) {
    case DiagramKind::Cup: return "Cup";
    case DiagramKind::Cap: return "Cap";
    case DiagramKind::PosCross: return "PosCross";
    default: return "NegCross";
  }
}

/// Tangle word as {"source_arity": a, "steps": [{"kind": .., "position": ..}]}.
inline Json tangle_word_json(const TangleWord& w) {
  Json out;
  out["source_arity"] = w.source_arity();
  Json steps = Json::array();
  for (const auto& d : w.steps()) {
    Json s;
    s["kind"] = diagram_kind_name(d.kind);
    s["position"] = d.position;
    steps.push_back(std::move(s));
  }
  out["steps"] = std::move(steps);
  return out;
}

inline TangleWord tangle_word_from_json(const Json& j) {
  std::vector<ElementaryDiagram> steps;
  for (const auto& s : j.at("steps")) {
    std::string kind = s.at("kind").get<std::string>();
    DiagramKind k;
    if (kind == "Cup") k = DiagramKind::Cup;
    else if (kind == "Cap") k = DiagramKind::Cap;
    else if (kind == "PosCross") k = DiagramKind::PosCross;
    else if (kind == "NegCross") k = DiagramKind::NegCross;
    else throw std::invalid_argument("tangle_word_from_json: unknown kind '" + kind + "'");
    steps.push_back({k, s.at("position").get<int>()});
  }
  return TangleWord(j.at("source_arity").get<int>(), std::move(steps));
}

inline Json uq_character_json(const UqModule& m) {
  Json out;
  out["dimension"] = m.dim;
  auto ch = character(m);
  out["family"] = ch.sign > 0 ? "plain" : "hat";
  Json weights;
  for (const auto& [k, mult] : ch.weights) weights[std::to_string(k)] = mult;
  out["weights"] = std::move(weights);
  Json dec = Json::array();
  for (const auto& [key, mult] : decompose_by_character(m)) {
    Json d;
    d["n"] = key.first;
    d["variant"] = key.second == UqVariant::Hat ? "hat" : "plain";
    d["multiplicity"] = mult;
    dec.push_back(std::move(d));
  }
  out["decomposition"] = std::move(dec);
  return out;
}

}  // namespace heckekit

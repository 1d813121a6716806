// heckekit: exact Hecke-algebra, cell, and link-invariant computations on
// the command line.  Every subcommand has a stable text rendering and a
// --format json mode whose output is byte-identical across runs.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "heckekit/cells.hpp"
#include "heckekit/hecke.hpp"
#include "heckekit/json_io.hpp"
#include "heckekit/jucys.hpp"
#include "heckekit/laurent.hpp"
#include "heckekit/permutations.hpp"
#include "heckekit/qsl2.hpp"
#include "heckekit/tangles.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

using namespace heckekit;

KLTable load_table(int n) {
  const char* dir = std::getenv("HECKEKIT_CACHE");
  if (dir && *dir) return kl_table_cached(n, dir);
  return KLTable(n);
}

int require_range(int value, int lo, int hi, const std::string& what) {
  if (value < lo || value > hi) {
    std::cerr << "error: " << what << " must be between " << lo << " and " << hi << "\n";
    std::exit(kExitUsage);
  }
  return value;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_kl(int n, bool dual, bool json) {
  require_range(n, 1, 6, "n");
  KLTable table = load_table(n);
  if (json) {
    if (!dual) {
      emit(kl_table_json(table));
    } else {
      Json out;
      out["n"] = n;
      Json rows;
      for (const auto& x : table.elements()) {
        Json row;
        for (const auto& [z, c] : table.dual_table().at(x).terms()) row[z.str()] = c.str();
        rows[x.str()] = std::move(row);
      }
      out["dual_kl"] = std::move(rows);
      emit(out);
    }
    return 0;
  }
  std::cout << (dual ? "dual " : "") << "Kazhdan-Lusztig basis for S_" << n << "\n";
  for (const auto& x : table.elements()) {
    const HeckeElt& elt = dual ? table.dual_table().at(x) : table.kl_elt(x);
    std::cout << (dual ? "KLdual" : "KL") << x.str() << " = " << elt.str() << "\n";
  }
  return 0;
}

int cmd_cells(int n, const std::string& kind_name, bool json) {
  require_range(n, 1, 6, "n");
  CellKind kind;
  if (kind_name == "left") kind = CellKind::Left;
  else if (kind_name == "right") kind = CellKind::Right;
  else if (kind_name == "two-sided") kind = CellKind::TwoSided;
  else {
    std::cerr << "error: --kind must be left, right or two-sided\n";
    return kExitUsage;
  }
  KLTable table = load_table(n);
  auto part = cells(table, kind);
  if (json) {
    emit(cells_json(part));
    return 0;
  }
  std::cout << kind_name << " cells of S_" << n << "\n";
  for (const auto& cls : part.classes) {
    auto [p, q] = rsk(cls.front());
    std::cout << "{";
    for (std::size_t i = 0; i < cls.size(); ++i) std::cout << (i ? ", " : "") << cls[i].str();
    std::cout << "}";
    if (kind == CellKind::Right) std::cout << "  p = " << p.str();
    if (kind == CellKind::Left) std::cout << "  q = " << q.str();
    std::cout << "  shape = (";
    auto shape = p.shape();
    for (std::size_t i = 0; i < shape.size(); ++i) std::cout << (i ? "," : "") << shape[i];
    std::cout << ")\n";
  }
  return 0;
}

int cmd_specht(int n, bool json) {
  require_range(n, 1, 6, "n");
  KLTable table = load_table(n);
  if (json) {
    emit(specht_json(table));
    return 0;
  }
  auto left = cells(table, CellKind::Left);
  std::cout << "Specht modules from left cells of S_" << n << "\n";
  for (const auto& cls : left.classes) {
    auto rep = cell_module(table, cls, CellKind::Left, &left);
    auto report = specialize_and_test_specht(rep);
    auto shape = rsk(cls.front()).first.shape();
    std::cout << "cell " << cls.front().str() << "  shape (";
    for (std::size_t i = 0; i < shape.size(); ++i) std::cout << (i ? "," : "") << shape[i];
    std::cout << ")  dim " << report.dimension << "  norm " << report.norm << "\n";
  }
  return 0;
}

int cmd_wedderburn(int n, bool json) {
  require_range(n, 1, 5, "n");
  KLTable table = load_table(n);
  if (json) {
    emit(wedderburn_json(table));
    return 0;
  }
  auto basis = wedderburn_basis(table);
  std::cout << "Wedderburn basis of Q[S_" << n << "]\n";
  for (const auto& [w, f] : basis) {
    std::cout << "f_" << w.str() << " =";
    bool first = true;
    for (const auto& [u, c] : f) {
      if (c > 0 && !first) std::cout << " +";
      if (c == 1) std::cout << " ";
      else if (c == -1) std::cout << " -";
      else std::cout << " " << c << "*";
      std::cout << u.str();
      first = false;
    }
    std::cout << "\n";
  }
  auto report = verify_wedderburn(table);
  std::cout << "basis invertible: " << (report.basis_invertible ? "yes" : "no") << "\n"
            << "right-cell spans invariant: " << (report.spans_invariant ? "yes" : "no") << "\n"
            << "right-cell spans irreducible: " << (report.spans_irreducible ? "yes" : "no") << "\n"
            << "matrix-unit pattern up to scalars: " << (report.matrix_unit_pattern ? "yes" : "no") << "\n";
  for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
  return report.all_ok() ? 0 : kExitInvariant;
}

int cmd_jm(int n, long long p, bool json) {
  require_range(n, 1, 5, "n");
  if (!is_prime(p) || p > 7) {
    std::cerr << "error: p must be a prime <= 7\n";
    return kExitUsage;
  }
  auto dec = jm_decompose_modular(n, p);
  if (json) {
    emit(jm_json(dec));
    return 0;
  }
  std::cout << "Jucys-Murphy blocks of F_" << p << "[S_" << n << "]\n";
  for (const auto& [gamma, dim] : block_dimensions(dec)) {
    std::cout << "gamma = (";
    for (std::size_t i = 0; i < gamma.size(); ++i) std::cout << (i ? "," : "") << gamma[i];
    std::cout << ")  dimension " << dim << "\n";
  }
  return 0;
}

std::vector<int> parse_braid(const std::string& text) {
  std::vector<int> letters;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size() || v == 0) throw std::invalid_argument(tok);
      letters.push_back(v);
    } catch (const std::exception&) {
      std::cerr << "error: bad braid letter '" << tok << "'\n";
      std::exit(kExitUsage);
    }
  }
  return letters;
}

int cmd_jones(const std::string& braid, int strands, const std::string& method, bool json) {
  require_range(strands, 1, 8, "strands");
  if (method != "rt" && method != "kauffman" && method != "both") {
    std::cerr << "error: --method must be rt, kauffman or both\n";
    return kExitUsage;
  }
  auto letters = parse_braid(braid);
  for (int l : letters)
    if (std::abs(l) >= strands) {
      std::cerr << "error: braid letter " << l << " needs at least " << std::abs(l) + 1 << " strands\n";
      return kExitUsage;
    }
  TangleWord word = braid_closure(letters, strands);
  Json out;
  out["n_plus"] = word.n_plus();
  out["n_minus"] = word.n_minus();
  std::optional<RTInvariant> rt;
  std::optional<KauffmanInvariant> kauf;
  if (method != "kauffman") rt = rt_invariant(word);
  if (method != "rt") kauf = kauffman_jones(word);
  if (rt && kauf && (rt->j_hat != kauf->j_hat || rt->j != kauf->j)) {
    std::cerr << "error: oracle mismatch: rt j_hat = " << rt->j_hat.str()
              << " vs kauffman j_hat = " << kauf->j_hat.str() << "\n";
    return kExitInvariant;
  }
  if (rt) out["phi"] = rt->phi.str();
  if (kauf) out["bracket"] = kauf->bracket.str();
  out["j_hat"] = (rt ? rt->j_hat : kauf->j_hat).str();
  out["j"] = (rt ? rt->j : kauf->j).str();
  if (method == "both") out["oracles_agree"] = true;
  if (json) {
    emit(out);
    return 0;
  }
  if (rt) std::cout << "phi     = " << rt->phi.str() << "\n";
  if (kauf) std::cout << "bracket = " << kauf->bracket.str() << "\n";
  std::cout << "j_hat   = " << out["j_hat"].get<std::string>() << "\n"
            << "j       = " << out["j"].get<std::string>() << "\n";
  if (method == "both") std::cout << "oracles agree\n";
  return 0;
}

int cmd_uq(const std::string& modules, bool hat, bool json) {
  std::vector<int> ns;
  std::istringstream in(modules);
  int v = 0;
  while (in >> v) {
    if (v < 0 || v > 8) {
      std::cerr << "error: module index must be between 0 and 8\n";
      return kExitUsage;
    }
    ns.push_back(v);
  }
  if (ns.empty()) {
    std::cerr << "error: --modules must list at least one index\n";
    return kExitUsage;
  }
  int log_dim = 0;
  for (int k : ns) log_dim += k;
  if (log_dim > 10) {
    std::cerr << "error: tensor product too large\n";
    return kExitUsage;
  }
  UqVariant variant = hat ? UqVariant::Hat : UqVariant::Plain;
  UqModule m = simple_module(ns[0], variant);
  for (std::size_t i = 1; i < ns.size(); ++i) m = tensor(m, simple_module(ns[i], variant));
  if (!verify_relations(m)) {
    std::cerr << "error: relation check failed\n";
    return kExitInvariant;
  }
  if (json) {
    emit(uq_character_json(m));
    return 0;
  }
  auto ch = character(m);
  std::cout << "dimension " << m.dim << ", family " << (ch.sign > 0 ? "plain" : "hat") << "\n";
  std::cout << "weights:";
  for (const auto& [k, mult] : ch.weights) std::cout << " " << k << ":" << mult;
  std::cout << "\ndecomposition:";
  for (const auto& [key, mult] : decompose_by_character(m)) {
    std::cout << " " << mult << "*V_" << key.first;
    if (key.second == UqVariant::Hat) std::cout << "^";
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"heckekit: exact Kazhdan-Lusztig, cell, quantum-sl2 and link-invariant computations"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options (e.g. --format) after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "output format: text or json")->capture_default_str();

  int n = 3;
  bool dual = false;
  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis table (1 <= n <= 6)");
  kl->add_option("n", n, "symmetric group size")->required();
  kl->add_flag("--dual", dual, "print the dual KL basis");

  std::string kind = "right";
  auto* cellscmd = app.add_subcommand("cells", "cell partition of S_n (1 <= n <= 6)");
  cellscmd->add_option("n", n, "symmetric group size")->required();
  cellscmd->add_option("--kind", kind, "left, right or two-sided")->capture_default_str();

  auto* specht = app.add_subcommand("specht", "Specht data of every left cell (1 <= n <= 6)");
  specht->add_option("n", n, "symmetric group size")->required();

  auto* wedd = app.add_subcommand("wedderburn", "Wedderburn basis f_w and verification (1 <= n <= 5)");
  wedd->add_option("n", n, "symmetric group size")->required();

  long long prime = 2;
  auto* jm = app.add_subcommand("jm", "Jucys-Murphy blocks of F_p[S_n] (1 <= n <= 5)");
  jm->add_option("n", n, "symmetric group size")->required();
  jm->add_option("p", prime, "prime characteristic")->required();

  std::string braid;
  int strands = 2;
  std::string method = "both";
  auto* jones = app.add_subcommand("jones", "Jones polynomial of a braid closure");
  jones->add_option("--braid", braid, "whitespace-separated signed generator indices, e.g. \"1 1\"");
  jones->add_option("--strands", strands, "number of braid strands")->required();
  jones->add_option("--method", method, "rt, kauffman or both")->capture_default_str();

  std::string modules = "1";
  bool hat = false;
  auto* uq = app.add_subcommand("uq", "characters and decompositions of U_v(sl2) tensor products");
  uq->add_option("--modules", modules, "tensor factors, e.g. \"1 2\"")->capture_default_str();
  uq->add_flag("--hat", hat, "use the hat variants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  const bool json = format == "json";
  if (!json && format != "text") {
    std::cerr << "error: --format must be text or json\n";
    return kExitUsage;
  }

  try {
    if (kl->parsed()) return cmd_kl(n, dual, json);
    if (cellscmd->parsed()) return cmd_cells(n, kind, json);
    if (specht->parsed()) return cmd_specht(n, json);
    if (wedd->parsed()) return cmd_wedderburn(n, json);
    if (jm->parsed()) return cmd_jm(n, prime, json);
    if (jones->parsed()) return cmd_jones(braid, strands, method, json);
    if (uq->parsed()) return cmd_uq(modules, hat, json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitUsage;
}

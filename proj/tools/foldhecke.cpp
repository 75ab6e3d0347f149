#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foldhecke/alcove.hpp"
#include "foldhecke/errors.hpp"
#include "foldhecke/folding.hpp"
#include "foldhecke/hecke_algebra.hpp"
#include "foldhecke/hecke_params.hpp"
#include "foldhecke/lie_engine.hpp"
#include "foldhecke/verify.hpp"

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json envelope(const std::string& verb) { return json{{"format", "foldhecke-" + verb}, {"version", kSchemaVersion}}; }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_int(const std::string& s, const std::string& what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw fh::ValidationError(what + ": expected an integer, got \"" + s + "\"");
  }
  if (pos != s.size()) throw fh::ValidationError(what + ": expected an integer, got \"" + s + "\"");
  return v;
}

fh::IVec parse_ivec(const std::string& s, const std::string& what) {
  fh::IVec v;
  for (const auto& part : split(s, ',')) v.push_back(parse_int(part, what));
  return v;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string mat_str(const fh::IMat& m) {
  std::string out;
  for (const auto& row : m) {
    out += "  ";
    for (std::size_t j = 0; j < row.size(); ++j) out += (j ? " " : "") + std::to_string(row[j]);
    out += "\n";
  }
  return out;
}

template <class T>
std::string list_str(const std::vector<T>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

// Options shared by every verb that selects an ambient fold.
struct FoldOpts {
  std::string type;
  int d = 1;
  void add(CLI::App* app, bool required = true) {
    auto* t = app->add_option("--type", type, "simply-laced type code, e.g. E6, D4, A5");
    auto* dd = app->add_option("--d", d, "order of the diagram automorphism (1, 2 or 3)");
    if (required) {
      t->required();
      dd->required();
    }
  }
};

struct CaseOpts {
  FoldOpts fold;
  std::string family, case_id;
  std::optional<long long> a, b, s;
  bool serial = false;
  void add(CLI::App* app) {
    fold.add(app, false);
    app->add_option("--family", family, "family id: an-even, an-odd, dn-orthogonal, dn-spin");
    app->add_option("--a", a, "family parameter a");
    app->add_option("--b", b, "family parameter b");
    app->add_option("--s", s, "family parameter s");
    app->add_option("--case", case_id, "keep only the row with this id");
    app->add_flag("--serial", serial, "compute rows on one thread");
  }
  std::vector<fh::CuspidalCase> cases() const {
    std::vector<fh::CuspidalCase> out;
    if (!family.empty()) {
      if (!fold.type.empty()) throw fh::ValidationError("give either --family or --type/--d, not both");
      if (!a || !b || !s) throw fh::ValidationError("--family needs --a, --b and --s");
      out.push_back(fh::family_case(family, *a, *b, *s));
    } else {
      if (fold.type.empty()) throw fh::ValidationError("give --type and --d, or --family with --a --b --s");
      out = fh::enumerate_cases(fold.type, fold.d);
    }
    if (!case_id.empty()) {
      std::vector<fh::CuspidalCase> keep;
      for (auto& c : out)
        if (c.id == case_id) keep.push_back(c);
      if (keep.empty()) throw fh::ValidationError("no row with id \"" + case_id + "\" for this input");
      out = keep;
    }
    return out;
  }
};

int run_fold(const FoldOpts& o, bool json_out) {
  auto f = fh::FoldedRootDatum::standard(o.type, o.d);
  if (json_out) {
    json j = envelope("fold");
    j["fold"] = f.to_json();
    print_json(j);
    return 0;
  }
  std::cout << "fold " << f.label() << " (d=" << f.d() << "), restricted type "
            << f.to_json()["reduced_type"].get<std::string>() << "\n";
  std::cout << "tau orbits:";
  for (const auto& orb : f.orbits()) std::cout << " " << list_str(orb);
  std::cout << "\n";
  for (int i = 0; i < f.num_nodes(); ++i) {
    const auto& beta = f.beta_nodes()[i];
    std::cout << "node " << i << ": beta=" << list_str(beta) << " d=" << f.d_nodes()[i]
              << " d'=" << f.dprime_nodes()[i] << " d''=" << f.dsec_nodes()[i] << " n=" << f.marks()[i] << "\n";
  }
  std::cout << "a[i][j] = gamma_j(h_i):\n" << mat_str(f.a());
  std::cout << "restricted roots: " << f.rroots().size() << "\n";
  return 0;
}

int run_reduce(const FoldOpts& o, const std::vector<std::string>& points, bool json_out) {
  fh::Alcove alc(fh::FoldedRootDatum::standard(o.type, o.d));
  std::vector<fh::AlcovePoint> xs;
  for (const auto& p : points) {
    auto x = fh::Alcove::parse_point(p);
    if (static_cast<int>(x.c.size()) != alc.num_nodes())
      throw fh::ValidationError("point \"" + p + "\" has " + std::to_string(x.c.size()) + " coordinates; " +
                                alc.folded().label() + " with d=" + std::to_string(o.d) + " needs " +
                                std::to_string(alc.num_nodes()) + " (one per affine node)");
    xs.push_back(x);
  }
  auto res = alc.reduce_batch(xs);
  if (json_out) {
    json j = envelope("reduce");
    j["type"] = o.type;
    j["d"] = o.d;
    j["results"] = json::array();
    for (std::size_t i = 0; i < xs.size(); ++i) j["results"].push_back(alc.to_json(res[i], xs[i]));
    print_json(j);
    return 0;
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::cout << "input:     " << fh::point_str(xs[i]) << "\n";
    std::cout << "canonical: " << fh::point_str(res[i].canonical) << "\n";
    std::cout << "cell S:    " << list_str(res[i].S) << "\n";
    std::string w;
    for (int s : res[i].w.word) w += (w.empty() ? "s" : " s") + std::to_string(s);
    std::cout << "word:      " << (w.empty() ? "1" : w) << "\n";
  }
  return 0;
}

int run_tables(const CaseOpts& o, bool json_out) {
  auto rows = fh::table_rows(o.cases(), !o.serial);
  if (json_out) {
    json j = envelope("tables");
    j["rows"] = json::array();
    for (const auto& r : rows) j["rows"].push_back(r.to_json());
    print_json(j);
  } else {
    for (std::size_t i = 0; i < rows.size(); ++i) std::cout << (i ? "\n" : "") << rows[i].to_text();
  }
  for (const auto& r : rows)
    if (!r.checks_failed.empty()) throw fh::InvariantError("row " + r.input.id + ": " + r.checks_failed.front());
  return 0;
}

// Small root data with named presentations; X = Y = Z^r.
fh::HeckeRootDatum named_datum(const std::string& name) {
  if (name == "SL2") return {{{2}}, {{1}}};
  if (name == "PGL2") return {{{1}}, {{2}}};
  if (name == "A2") return {{{2, -1}, {-1, 2}}, {{1, 0}, {0, 1}}};
  if (name == "B2") return {{{1, -1}, {0, 1}}, {{1, -1}, {0, 2}}};
  if (name == "C2") return {{{1, -1}, {0, 2}}, {{1, -1}, {0, 1}}};
  if (name == "GL2") return {{{1, -1}}, {{1, -1}}};
  throw fh::ValidationError("unknown root datum \"" + name + "\"; known: SL2, PGL2, GL2, A2, B2, C2");
}

struct HeckeOpts {
  CaseOpts cases;
  std::string datum, lambda, lambda_star, x;
};

json theta_json(const fh::ThetaPoly& p) {
  json arr = json::array();
  for (const auto& [x, c] : p) arr.push_back({{"x", x}, {"coefficient", c.to_json()}});
  return arr;
}

std::string theta_str(const fh::ThetaPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : p) {
    std::string xs;
    for (std::size_t j = 0; j < x.size(); ++j) xs += (j ? "," : "") + std::to_string(x[j]);
    out += (out.empty() ? "" : " + ") + ("(" + c.str() + ")·θ_(" + xs + ")");
  }
  return out;
}

int run_hecke_datum(const HeckeOpts& o, bool json_out) {
  auto rd = named_datum(o.datum);
  if (o.lambda.empty()) throw fh::ValidationError("--datum needs --lambda");
  fh::IVec lam = parse_ivec(o.lambda, "--lambda");
  if (static_cast<int>(lam.size()) != rd.num_simple())
    throw fh::ValidationError("--lambda needs " + std::to_string(rd.num_simple()) + " entries");
  std::vector<std::optional<int>> star(rd.num_simple());
  if (!o.lambda_star.empty()) {
    auto parts = split(o.lambda_star, ',');
    if (static_cast<int>(parts.size()) != rd.num_simple())
      throw fh::ValidationError("--lambda-star needs " + std::to_string(rd.num_simple()) +
                                " entries; leave an entry empty where the coroot is not in 2Y");
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!parts[i].empty()) star[i] = static_cast<int>(parse_int(parts[i], "--lambda-star"));
  }
  fh::AffineHecke H(rd, std::vector<int>(lam.begin(), lam.end()), star);
  std::optional<fh::IVec> x;
  if (!o.x.empty()) {
    x = parse_ivec(o.x, "--x");
    if (static_cast<int>(x->size()) != rd.rank())
      throw fh::ValidationError("--x needs " + std::to_string(rd.rank()) + " entries");
  }
  json j = envelope("hecke");
  j["datum"] = o.datum;
  j["roots"] = rd.roots;
  j["coroots"] = rd.coroots;
  j["simple"] = json::array();
  for (int i = 0; i < rd.num_simple(); ++i) {
    auto g = H.gamma_factor(i);
    json s{{"index", i + 1}, {"lambda", H.lambda(i)}, {"coroot_in_2Y", rd.coroot_in_2Y(i)}, {"gamma", g.str()}};
    if (rd.coroot_in_2Y(i)) s["lambda_star"] = H.lambda_star(i);
    if (x) s["cross"] = theta_json(H.bernstein_cross(*x, i));
    j["simple"].push_back(s);
    if (!json_out) {
      std::cout << "s" << i + 1 << ": λ=" << H.lambda(i);
      if (rd.coroot_in_2Y(i)) std::cout << " λ*=" << H.lambda_star(i);
      std::cout << "  𝒢(α" << i + 1 << ") = " << g.str() << "\n";
      if (x) std::cout << "    (θ_x - θ_{s x})𝒢 at x=" << list_str(*x) << ": " << theta_str(H.bernstein_cross(*x, i)) << "\n";
    }
  }
  j["weyl_order"] = H.weyl().size();
  if (json_out)
    print_json(j);
  else
    std::cout << "|W0| = " << H.weyl().size() << "\n";
  return 0;
}

int run_hecke_cases(const HeckeOpts& o, bool json_out) {
  auto rows = fh::table_rows(o.cases.cases(), !o.cases.serial);
  json j = envelope("hecke");
  j["rows"] = json::array();
  for (const auto& r : rows) {
    json lam_star = json::array();
    for (const auto& ls : r.hecke.lambda_star) lam_star.push_back(ls ? json(*ls) : json(nullptr));
    j["rows"].push_back({{"id", r.input.id},
                         {"root_type", r.hecke.root_type},
                         {"degenerate", r.hecke.degenerate},
                         {"lambda", r.hecke.lambda},
                         {"lambda_star", lam_star},
                         {"cartan", r.hecke.cartan},
                         {"ha", r.ha},
                         {"ha_printed", r.input.ha}});
    if (!json_out) {
      std::cout << r.input.id << ": " << (r.hecke.root_type.empty() ? "-" : r.hecke.root_type) << "  λ=" << list_str(r.hecke.lambda);
      std::string ls;
      for (const auto& v : r.hecke.lambda_star) ls += (ls.empty() ? "" : ",") + (v ? std::to_string(*v) : std::string("-"));
      std::cout << "  λ*={" << ls << "}  H.A. " << r.ha << "\n";
    }
  }
  if (json_out) print_json(j);
  return 0;
}

int run_verify(const std::string& suite, uint64_t seed, bool json_out) {
  std::vector<fh::SuiteResult> res;
  if (suite == "all")
    res = fh::run_all(seed);
  else
    res.push_back(fh::run_suite(fh::suite_id(suite), seed));
  bool ok = true;
  json j = envelope("verify");
  j["seed"] = seed;
  j["suites"] = json::array();
  for (const auto& r : res) {
    ok = ok && r.passed;
    j["suites"].push_back(r.to_json());
    if (!json_out) {
      std::cout << r.line() << "\n";
      if (!r.passed)
        for (const auto& m : r.messages) std::cout << "    " << m << "\n";
    }
  }
  j["passed"] = ok;
  if (json_out) print_json(j);
  return ok ? 0 : 1;
}

int run_dump(const FoldOpts& o, bool json_out) {
  fh::ChevalleyAlgebra g(o.type, o.d);
  json j = envelope("dump");
  j["algebra"] = g.dump();
  j["fold"] = g.folded().to_json();
  if (json_out) {
    print_json(j);
    return 0;
  }
  std::cout << "Chevalley basis of " << o.type << ": dim " << g.dim() << "\n";
  for (int p = 0; p < g.dim(); ++p)
    for (int q = p + 1; q < g.dim(); ++q)
      for (auto [k, c] : g.bracket_basis(p, q))
        std::cout << "[" << g.basis_label(p) << ", " << g.basis_label(q) << "] = " << c << "·" << g.basis_label(k) << "\n";
  std::cout << "graded pieces (beta, j, dim):\n";
  for (const auto& piece : g.pieces())
    std::cout << "  " << list_str(piece.beta) << " " << piece.j << " " << piece.basis.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Folding, alcove reduction and Hecke parameters for twisted loop groups"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  FoldOpts fold_o, reduce_o, dump_o;
  std::vector<std::string> points;
  CaseOpts tables_o;
  HeckeOpts hecke_o;
  std::string suite = "all";
  uint64_t seed = 20240611;

  auto* fold = app.add_subcommand("fold", "folded root datum of (type, d)");
  fold_o.add(fold);
  auto* reduce = app.add_subcommand("reduce", "reduce points of the level-1 hyperplane to the fundamental domain");
  reduce_o.add(reduce);
  reduce->add_option("--point", points, "comma-separated coordinates c_i, e.g. \"1/2,1/4+1/3i,1/4\"")->required();
  auto* tables = app.add_subcommand("tables", "regenerate table rows with diagrams and H.A. strings");
  tables_o.add(tables);
  auto* hecke = app.add_subcommand("hecke", "Hecke parameters of table rows, or 𝒢 factors of a small root datum");
  hecke_o.cases.add(hecke);
  hecke->add_option("--datum", hecke_o.datum, "SL2, PGL2, GL2, A2, B2 or C2");
  hecke->add_option("--lambda", hecke_o.lambda, "λ per simple root, comma-separated");
  hecke->add_option("--lambda-star", hecke_o.lambda_star, "λ* per simple root; empty entries off 2Y");
  hecke->add_option("--x", hecke_o.x, "weight x for the cross term (θ_x - θ_{sx})𝒢");
  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  verify->add_option("--suite", suite, "\"all\", a suite name or its number");
  verify->add_option("--seed", seed, "random seed");
  auto* dump = app.add_subcommand("dump", "Chevalley structure constants and folded data");
  dump_o.add(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  bool json_out = format == "json";
  try {
    if (*fold) return run_fold(fold_o, json_out);
    if (*reduce) return run_reduce(reduce_o, points, json_out);
    if (*tables) return run_tables(tables_o, json_out);
    if (*hecke) {
      if (!hecke_o.datum.empty()) return run_hecke_datum(hecke_o, json_out);
      return run_hecke_cases(hecke_o, json_out);
    }
    if (*verify) return run_verify(suite, seed, json_out);
    if (*dump) return run_dump(dump_o, json_out);
  } catch (const fh::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fh::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

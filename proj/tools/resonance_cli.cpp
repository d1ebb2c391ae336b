// Command-line interface for resonance computations on line arrangements:
// catalog inspection, resonance strata, kernel maps, constituent
// decompositions, line-complex carriers, and Schubert degree checks.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "resonance/decomposition.hpp"
#include "resonance/line_geometry.hpp"
#include "resonance/matroid.hpp"
#include "resonance/os_algebra.hpp"
#include "resonance/schubert.hpp"

namespace {

using namespace resonance;
using nlohmann::json;

constexpr uint64_t kDefaultCap = 10000000;

Matroid load_matroid(const std::string& spec) {
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw std::invalid_argument("cannot open matroid file: " + spec.substr(1));
    json j;
    in >> j;
    return matroid_from_json(j);
  }
  return catalog(spec);
}

Vec parse_weight(const FieldPtr& f, const std::string& s, int n) {
  Vec w;
  if (f->q() == 2 && s.find(',') == std::string::npos) {
    for (char c : s) {
      if (c != '0' && c != '1')
        throw std::invalid_argument("bit-string weight may contain only 0/1");
      w.push_back(f->fe(c - '0'));
    }
  } else {
    size_t i = 0;
    while (i <= s.size()) {
      size_t j = s.find(',', i);
      if (j == std::string::npos) j = s.size();
      w.push_back(f->parse(s.substr(i, j - i)));
      i = j + 1;
      if (j == s.size()) break;
    }
  }
  if (static_cast<int>(w.size()) != n)
    throw std::invalid_argument("weight has " + std::to_string(w.size()) +
                                " entries; matroid has " + std::to_string(n));
  return w;
}

std::string format_weight(const FieldPtr& f, const Vec& w) {
  std::string s;
  if (f->q() == 2) {
    for (Fe x : w) s += x.code ? '1' : '0';
    return s;
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += f->to_string(w[i]);
  }
  return s;
}

json weight_json(const FieldPtr& f, const Vec& w) {
  json a = json::array();
  for (Fe x : w) a.push_back(f->to_string(x));
  return a;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) rows.push_back(weight_json(m.field(), m.row(r)));
  return rows;
}

struct Options {
  std::string field = "2";
  int k = 1;
  uint64_t cap_points = kDefaultCap;
  uint64_t cap_lines = kDefaultCap;
  uint64_t cap_structures = kDefaultCap;
  bool as_json = false;
};

void print_lines(std::ostream& os, const std::vector<std::vector<int>>& lines) {
  for (const auto& l : lines) {
    os << " {";
    for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    os << "}";
  }
}

int cmd_catalog(const std::string& name, const Options& opt) {
  if (name.empty()) {
    if (opt.as_json) {
      json j;
      j["matroids"] = catalog_names();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "available matroids:";
      for (const auto& n : catalog_names()) std::cout << " " << n;
      std::cout << "\n";
    }
    return 0;
  }
  Matroid m = load_matroid(name);
  if (opt.as_json) {
    std::cout << matroid_to_json(m).dump(2) << "\n";
    return 0;
  }
  std::cout << m.name << ": n=" << m.n << "\nlines:";
  print_lines(std::cout, m.lines);
  std::cout << "\ntrivial:";
  print_lines(std::cout, trivial_lines(m));
  std::cout << "\nrealization: " << (m.realization ? "yes" : "no") << "\n";
  std::cout << "dim A2 = " << Degree2Basis(m).dim() << "\n";
  return 0;
}

int cmd_resonance(const std::string& name, const Options& opt) {
  Matroid m = load_matroid(name);
  FieldPtr f = Field::parse_spec(opt.field);
  ScanResult scan = resonance_scan(m, f, opt.cap_points);
  auto pts = stratum(scan, opt.k);
  if (opt.as_json) {
    json j;
    j["matroid"] = m.name;
    j["field"] = f->spec();
    j["k"] = opt.k;
    j["points"] = json::array();
    for (const auto& pt : pts) {
      json e;
      e["weight"] = weight_json(f, pt.w);
      e["zdim"] = pt.zdim;
      e["depth"] = pt.zdim - 1;
      j["points"].push_back(std::move(e));
    }
    j["count"] = pts.size();
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "stratum k=" << opt.k << " of " << m.name << " over GF("
            << f->spec() << "): " << pts.size() << " points\n";
  for (const auto& pt : pts)
    std::cout << "  " << format_weight(f, pt.w) << "  dimZ=" << pt.zdim
              << " depth=" << pt.zdim - 1 << "\n";
  return 0;
}

int cmd_zmap(const std::string& name, const std::string& weight,
             const Options& opt) {
  Matroid m = load_matroid(name);
  FieldPtr f = Field::parse_spec(opt.field);
  Vec la = parse_weight(f, weight, m.n);
  Degree2Basis b(m);
  Matrix z = z_of(b, f, la);
  json j;
  j["matroid"] = m.name;
  j["field"] = f->spec();
  j["weight"] = weight_json(f, la);
  j["zdim"] = z.rows();
  j["depth"] = z.rows() - 1;
  j["z_basis"] = matrix_json(z);
  std::string gamma;
  if (z.rows() >= 2) gamma = format_structure(gamma_lambda(m, f, la));
  if (!gamma.empty()) j["gamma"] = gamma;
  if (opt.as_json) {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dim Z = " << z.rows() << " (depth " << z.rows() - 1 << ")\n";
  for (int r = 0; r < z.rows(); ++r)
    std::cout << "  " << format_weight(f, z.row(r)) << "\n";
  if (!gamma.empty()) std::cout << "gamma = " << gamma << "\n";
  return 0;
}

int cmd_constituents(const std::string& name, const Options& opt) {
  Matroid m = load_matroid(name);
  FieldPtr f = Field::parse_spec(opt.field);
  auto dec = decompose(m, f, opt.k, opt.cap_points, opt.cap_structures);
  if (opt.as_json) {
    json j;
    j["matroid"] = m.name;
    j["field"] = f->spec();
    j["k"] = opt.k;
    j["constituents"] = json::array();
    for (const auto& c : dec.constituents) {
      json e;
      e["gamma"] = format_structure(c.gamma);
      e["essential"] = c.gamma.cones.empty();
      e["dim_k"] = c.dim_k;
      e["dim_k0"] = c.dim_k0;
      e["points"] = json::array();
      for (const auto& w : c.points) e["points"].push_back(weight_json(f, w));
      e["projective_dim"] = c.proj_dim;
      j["constituents"].push_back(std::move(e));
    }
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << dec.constituents.size() << " maximal constituents of "
            << m.name << " over GF(" << f->spec() << "), k=" << opt.k << "\n";
  for (const auto& c : dec.constituents) {
    std::cout << "  " << format_structure(c.gamma) << "  dimK=" << c.dim_k
              << " dimK0=" << c.dim_k0 << " points=" << c.points.size()
              << " projdim=" << c.proj_dim
              << (c.gamma.cones.empty() ? " essential" : "") << "\n";
  }
  return 0;
}

int cmd_carrier(const std::string& name, const std::string& gamma,
                bool improper, const Options& opt) {
  Matroid m = load_matroid(name);
  FieldPtr f = Field::parse_spec(opt.field);
  NeighborlyStructure ns = parse_structure(gamma, m.n);
  if (!is_neighborly(m, ns))
    throw std::invalid_argument("structure is not neighborly for " + m.name);
  DirectrixSystem sys = directrices(m, f, ns);
  LineComplex lc = line_complex(sys, opt.cap_lines, !improper);
  Carrier car = carrier_of(lc, &sys.k0);
  auto stratum_pts = v_stratum(m, f, ns, 1, opt.cap_points);
  std::set<std::vector<uint32_t>> carrier_set, stratum_set;
  for (const auto& cp : car.points) {
    std::vector<uint32_t> c;
    for (Fe x : cp.ambient) c.push_back(x.code);
    carrier_set.insert(std::move(c));
  }
  for (const auto& w : stratum_pts) {
    std::vector<uint32_t> c;
    for (Fe x : w) c.push_back(x.code);
    stratum_set.insert(std::move(c));
  }
  bool match = carrier_set == stratum_set;
  if (opt.as_json) {
    json j;
    j["matroid"] = m.name;
    j["field"] = f->spec();
    j["gamma"] = format_structure(ns);
    j["dim_k"] = sys.k.rows();
    j["dim_k0"] = sys.k0.rows();
    j["directrices"] = json::array();
    for (const auto& d : sys.ds) {
      json e;
      e["s"] = d.s;
      e["proj_dim"] = d.coords.rows() - 1;
      e["codim"] = d.codim;
      e["basis"] = matrix_json(d.ambient);
      j["directrices"].push_back(std::move(e));
    }
    j["lines"] = lc.lines.size();
    j["carrier"] = json::array();
    for (const auto& cp : car.points) {
      json e;
      e["coords"] = weight_json(f, cp.coords);
      e["ambient"] = weight_json(f, cp.ambient);
      e["depth"] = cp.depth;
      j["carrier"].push_back(std::move(e));
    }
    j["matches_stratum"] = match;
    std::cout << j.dump(2) << "\n";
    return match ? 0 : 1;
  }
  std::cout << "gamma " << format_structure(ns) << " over GF(" << f->spec()
            << "): dimK=" << sys.k.rows() << " dimK0=" << sys.k0.rows() << "\n";
  for (const auto& d : sys.ds) {
    std::cout << "  directrix {";
    for (size_t i = 0; i < d.s.size(); ++i) std::cout << (i ? "," : "") << d.s[i];
    std::cout << "}  projdim=" << d.coords.rows() - 1 << " codim=" << d.codim
              << "\n";
  }
  std::cout << "complex: " << lc.lines.size() << " lines; carrier: "
            << car.points.size() << " points\n";
  for (const auto& cp : car.points)
    std::cout << "  " << format_weight(f, cp.ambient) << "  depth=" << cp.depth
              << "\n";
  std::cout << "carrier matches stratum: " << (match ? "yes" : "NO") << "\n";
  return match ? 0 : 1;
}

int cmd_schubert(const std::string& expr, int k, const std::string& codims,
                 int depth, const Options& opt) {
  if (!codims.empty()) {
    std::vector<int> cs;
    size_t i = 0;
    while (i <= codims.size() && !codims.empty()) {
      size_t j = codims.find(',', i);
      if (j == std::string::npos) j = codims.size();
      cs.push_back(std::stoi(codims.substr(i, j - i)));
      i = j + 1;
      if (j == codims.size()) break;
    }
    DegreeResult r = carrier_degree(k, cs, depth);
    if (opt.as_json) {
      json j;
      j["k"] = k;
      j["codims"] = cs;
      j["depth"] = depth;
      j["s"] = r.s;
      j["sigma"] = {r.sigma.first, r.sigma.second};
      j["product"] = chow_to_string(r.product);
      j["degree"] = r.degree.str();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "product = " << chow_to_string(r.product) << "\n"
                << "sigma = W(" << r.sigma.first << "," << r.sigma.second
                << "), s = " << r.s << "\n"
                << "degree = " << r.degree.str() << "\n";
    }
    return 0;
  }
  ChowClass c = parse_schubert_expr(k, expr);
  if (opt.as_json) {
    json j;
    j["k"] = k;
    j["expr"] = expr;
    j["value"] = chow_to_string(c);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << chow_to_string(c) << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& name, const Options& opt) {
  Matroid m = load_matroid(name);
  FieldPtr f = Field::parse_spec(opt.field);
  VerifyReport rep = verify_decomposition(m, f, opt.k, opt.cap_points,
                                          opt.cap_structures);
  if (opt.as_json) {
    json j;
    j["matroid"] = m.name;
    j["field"] = f->spec();
    j["k"] = opt.k;
    j["stratum_size"] = rep.stratum_size;
    j["union_size"] = rep.union_size;
    j["structures"] = rep.structures;
    j["ok"] = rep.ok;
    j["missing"] = json::array();
    for (const auto& w : rep.missing) j["missing"].push_back(weight_json(f, w));
    j["extra"] = json::array();
    for (const auto& w : rep.extra) j["extra"].push_back(weight_json(f, w));
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verify " << m.name << " over GF(" << f->spec() << ") k="
              << opt.k << ": stratum=" << rep.stratum_size << " union="
              << rep.union_size << " structures=" << rep.structures << " -> "
              << (rep.ok ? "OK" : "MISMATCH") << "\n";
    for (const auto& w : rep.missing)
      std::cout << "  missing from union: " << format_weight(f, w) << "\n";
    for (const auto& w : rep.extra)
      std::cout << "  extra in union: " << format_weight(f, w) << "\n";
  }
  return rep.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resonance varieties of line arrangements over finite fields"};
  app.require_subcommand(1);
  Options opt;

  std::string name, weight, gamma, expr, codims;
  bool improper = false;
  int k_grass = 4, depth = 1;

  auto add_common = [&](CLI::App* sub, bool with_field = true) {
    if (with_field) sub->add_option("--field", opt.field, "field spec p or p^e");
    sub->add_option("--cap-points", opt.cap_points, "point enumeration cap");
    sub->add_option("--cap-lines", opt.cap_lines, "line enumeration cap");
    sub->add_option("--cap-structures", opt.cap_structures,
                    "structure enumeration cap");
    sub->add_flag("--json", opt.as_json, "machine-readable output");
  };

  auto* c_cat = app.add_subcommand("catalog", "list or show built-in matroids");
  c_cat->add_option("matroid", name, "catalog name or @file.json");
  add_common(c_cat, false);

  auto* c_res = app.add_subcommand("resonance", "resonance stratum points");
  c_res->add_option("matroid", name)->required();
  c_res->add_option("--k", opt.k, "stratum index (dim Z >= k+1)");
  add_common(c_res);

  auto* c_z = app.add_subcommand("zmap", "kernel of multiplication by a weight");
  c_z->add_option("matroid", name)->required();
  c_z->add_option("--weight", weight, "weight vector")->required();
  add_common(c_z);

  auto* c_con = app.add_subcommand("constituents",
                                   "maximal constituents of the stratum");
  c_con->add_option("matroid", name)->required();
  c_con->add_option("--k", opt.k, "stratum index");
  add_common(c_con);

  auto* c_car = app.add_subcommand("carrier",
                                   "line complex carrier of a structure");
  c_car->add_option("matroid", name)->required();
  c_car->add_option("--gamma", gamma, "partition structure, e.g. 127|3|4|5|6")
      ->required();
  c_car->add_flag("--improper", improper,
                  "use every directrix, not just the proper part");
  add_common(c_car);

  auto* c_sch = app.add_subcommand("schubert",
                                   "Schubert classes and carrier degrees");
  c_sch->add_option("expr", expr, "product of special classes, e.g. s(1)^4");
  c_sch->add_option("--k", k_grass, "lines in P^(k-1)")->required();
  c_sch->add_option("--codims", codims, "directrix codimensions, e.g. 1,1,1,1");
  c_sch->add_option("--depth", depth, "depth of the deepest carrier point");
  add_common(c_sch, false);

  auto* c_ver = app.add_subcommand("verify",
                                   "check stratum == union of constituents");
  c_ver->add_option("matroid", name)->required();
  c_ver->add_option("--k", opt.k, "stratum index");
  add_common(c_ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_cat->parsed()) return cmd_catalog(name, opt);
    if (c_res->parsed()) return cmd_resonance(name, opt);
    if (c_z->parsed()) return cmd_zmap(name, weight, opt);
    if (c_con->parsed()) return cmd_constituents(name, opt);
    if (c_car->parsed()) return cmd_carrier(name, gamma, improper, opt);
    if (c_sch->parsed()) return cmd_schubert(expr, k_grass, codims, depth, opt);
    if (c_ver->parsed()) return cmd_verify(name, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 2;
}

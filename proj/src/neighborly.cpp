#include "resonance/neighborly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <set>
#include <stdexcept>

namespace resonance {
namespace {

const char* kSymbols = "123456789abc";

int symbol_value(char c) {
  const char* pos = strchr(kSymbols, c);
  if (!pos || c == '\0') return -1;
  return static_cast<int>(pos - kSymbols) + 1;
}

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) {
    for (int i = 0; i < n; ++i) up[i] = i;
  }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<int> NeighborlyStructure::support() const {
  std::vector<int> s;
  for (const auto& b : blocks) s.insert(s.end(), b.begin(), b.end());
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<std::pair<int, int>> NeighborlyStructure::edges() const {
  std::set<std::pair<int, int>> es;
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.size(); ++i)
      for (size_t j = i + 1; j < b.size(); ++j) es.insert({b[i], b[j]});
  for (int c : cones)
    for (int t = 1; t <= n; ++t)
      if (t != c) es.insert({std::min(c, t), std::max(c, t)});
  return {es.begin(), es.end()};
}

NeighborlyStructure make_structure(int n, std::vector<int> cones,
                                   std::vector<std::vector<int>> blocks) {
  if (n < 1) throw std::invalid_argument("structure needs n >= 1");
  std::vector<int> seen(n + 1, 0);
  auto mark = [&](int x) {
    if (x < 1 || x > n)
      throw std::invalid_argument("structure element out of range: " +
                                  std::to_string(x));
    if (seen[x]++)
      throw std::invalid_argument("structure element repeated: " +
                                  std::to_string(x));
  };
  for (int c : cones) mark(c);
  for (auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    for (int x : b) mark(x);
    std::sort(b.begin(), b.end());
  }
  for (int x = 1; x <= n; ++x)
    if (!seen[x])
      throw std::invalid_argument("element in neither cones nor blocks: " +
                                  std::to_string(x));
  std::sort(cones.begin(), cones.end());
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return a[0] < b[0]; });
  return NeighborlyStructure{n, std::move(cones), std::move(blocks)};
}

std::string format_structure(const NeighborlyStructure& ns) {
  bool symbolic = ns.n <= 12;
  auto elems = [&](const std::vector<int>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
      if (symbolic) {
        s += kSymbols[xs[i] - 1];
      } else {
        if (i) s += ",";
        s += std::to_string(xs[i]);
      }
    }
    return s;
  };
  std::string out;
  for (size_t i = 0; i < ns.blocks.size(); ++i) {
    if (i) out += "|";
    out += elems(ns.blocks[i]);
  }
  if (!ns.cones.empty()) out += " cones=" + elems(ns.cones);
  return out;
}

NeighborlyStructure parse_structure(const std::string& input, int n) {
  std::string s = input;
  std::vector<int> cones;
  bool cones_given = false;
  size_t cpos = s.find("cones=");
  std::string cone_part;
  if (cpos != std::string::npos) {
    cone_part = s.substr(cpos + 6);
    size_t end = cpos;
    while (end > 0 && (s[end - 1] == ' ' || s[end - 1] == ';')) --end;
    s = s.substr(0, end);
    cones_given = true;
  }
  auto parse_elems = [&](const std::string& part) {
    std::vector<int> xs;
    if (part.find(',') != std::string::npos || n > 12) {
      size_t i = 0;
      while (i < part.size()) {
        size_t j = part.find(',', i);
        if (j == std::string::npos) j = part.size();
        std::string tok = part.substr(i, j - i);
        if (tok.empty()) throw std::invalid_argument("empty element in: " + input);
        xs.push_back(std::stoi(tok));
        i = j + 1;
      }
    } else {
      for (char c : part) {
        int v = symbol_value(c);
        if (v < 0)
          throw std::invalid_argument(std::string("bad element symbol '") + c +
                                      "' in: " + input);
        xs.push_back(v);
      }
    }
    return xs;
  };
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  while (i <= s.size()) {
    size_t j = s.find('|', i);
    if (j == std::string::npos) j = s.size();
    std::string part = s.substr(i, j - i);
    if (part.empty()) throw std::invalid_argument("empty block in: " + input);
    blocks.push_back(parse_elems(part));
    i = j + 1;
    if (j == s.size()) break;
  }
  if (cones_given) {
    cones = parse_elems(cone_part);
  } else {
    std::vector<int> used(n + 1, 0);
    for (const auto& b : blocks)
      for (int x : b) {
        if (x < 1 || x > n)
          throw std::invalid_argument("element out of range in: " + input);
        used[x] = 1;
      }
    for (int x = 1; x <= n; ++x)
      if (!used[x]) cones.push_back(x);
  }
  return make_structure(n, cones, blocks);
}

bool is_neighborly(const Matroid& m, const NeighborlyStructure& ns) {
  if (ns.n != m.n)
    throw std::invalid_argument("structure ground size differs from matroid");
  std::vector<int> block_of(m.n + 1, -1);
  for (size_t b = 0; b < ns.blocks.size(); ++b)
    for (int x : ns.blocks[b]) block_of[x] = static_cast<int>(b);
  for (const auto& line : all_lines(m)) {
    std::vector<int> restricted;
    for (int x : line)
      if (block_of[x] >= 0) restricted.push_back(x);
    if (restricted.size() < 2) continue;
    std::map<int, int> count;
    for (int x : restricted) ++count[block_of[x]];
    int sz = static_cast<int>(restricted.size());
    for (auto [b, c] : count)
      if (c >= sz - 1 && c != sz) return false;
  }
  return true;
}

std::vector<std::vector<int>> x_gamma(const Matroid& m,
                                      const NeighborlyStructure& ns) {
  if (ns.n != m.n)
    throw std::invalid_argument("structure ground size differs from matroid");
  std::vector<int> block_of(m.n + 1, -1);
  for (size_t b = 0; b < ns.blocks.size(); ++b)
    for (int x : ns.blocks[b]) block_of[x] = static_cast<int>(b);
  std::vector<std::vector<int>> out;
  for (const auto& line : m.lines) {
    std::set<int> touched;
    for (int x : line)
      if (block_of[x] >= 0) touched.insert(block_of[x]);
    if (touched.size() > 1) out.push_back(line);  // not a clique
  }
  return out;
}

Matrix incidence_matrix(const FieldPtr& f, int n,
                        const std::vector<std::vector<int>>& lines) {
  Matrix inc(f, static_cast<int>(lines.size()), n);
  for (size_t r = 0; r < lines.size(); ++r)
    for (int x : lines[r]) inc.set(static_cast<int>(r), x - 1, f->one());
  return inc;
}

KSpaces k_spaces(const Matroid& m, const FieldPtr& f,
                 const NeighborlyStructure& ns) {
  auto xs = x_gamma(m, ns);
  Matrix inc = incidence_matrix(f, m.n, xs);
  Matrix k = inc.kernel_basis();
  Matrix ones(f, 1, m.n);
  for (int c = 0; c < m.n; ++c) ones.set(0, c, f->one());
  Matrix k0 = inc.stack(ones).kernel_basis();
  return KSpaces{std::move(k), std::move(k0)};
}

Matrix z_gamma(const Matroid& m, const FieldPtr& f,
               const NeighborlyStructure& ns, const Vec& la) {
  if (static_cast<int>(la.size()) != m.n)
    throw std::invalid_argument("weight length differs from ground size");
  Matrix k = k_spaces(m, f, ns).k;
  auto es = ns.edges();
  // Constrain eta = y * k: for each edge (i,j),
  // sum_b y_b (la_i k[b][j] - la_j k[b][i]) = 0.
  Matrix sys(f, static_cast<int>(es.size()), k.rows());
  for (size_t r = 0; r < es.size(); ++r) {
    auto [i, j] = es[r];
    for (int b = 0; b < k.rows(); ++b)
      sys.set(static_cast<int>(r), b,
              f->sub(f->mul(la[i - 1], k.get(b, j - 1)),
                     f->mul(la[j - 1], k.get(b, i - 1))));
  }
  Matrix y = sys.kernel_basis();
  Matrix out(f, y.rows(), m.n);
  for (int r = 0; r < y.rows(); ++r) out.set_row(r, k.mul_left(y.row(r)));
  return out;
}

std::vector<Vec> v_stratum(const Matroid& m, const FieldPtr& f,
                           const NeighborlyStructure& ns, int k,
                           uint64_t cap) {
  if (k < 1) throw std::invalid_argument("stratum index must be >= 1");
  Matrix kb = k_spaces(m, f, ns).k;
  std::vector<Vec> out;
  if (kb.rows() == 0) return out;
  // A cone vertex is joined to every other vertex, so a weight with a
  // nonzero cone coordinate pins any partner to its own span: dim Z <= 1.
  // The stratum (dim Z >= 2) therefore lies in the slice of K vanishing on
  // the cones, which can be much smaller than K itself.
  if (!ns.cones.empty()) {
    std::vector<Vec> cone_cols;
    for (int c : ns.cones) {
      Vec col;
      for (int r = 0; r < kb.rows(); ++r) col.push_back(kb.get(r, c - 1));
      cone_cols.push_back(std::move(col));
    }
    Matrix coords = Matrix::from_rows(f, cone_cols).kernel_basis();
    std::vector<Vec> sliced;
    for (int r = 0; r < coords.rows(); ++r)
      sliced.push_back(kb.mul_left(coords.row(r)));
    kb = Matrix::from_rows(f, sliced);
    if (kb.rows() == 0) return out;
  }
  for (const Vec& y : projective_points(f, kb.rows(), cap)) {
    Vec la = kb.mul_left(y);
    if (z_gamma(m, f, ns, la).rows() >= k + 1) {
      canonicalize_projective(f, la);
      out.push_back(std::move(la));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Vec& a, const Vec& b) {
              for (size_t i = 0; i < a.size(); ++i)
                if (a[i].code != b[i].code) return a[i].code < b[i].code;
              return false;
            });
  return out;
}

std::vector<NeighborlyStructure> enumerate_neighborly(const Matroid& m,
                                                      uint64_t cap) {
  std::vector<NeighborlyStructure> out;
  auto lines = all_lines(m);
  uint64_t examined = 0;
  if (m.n > 62) throw std::invalid_argument("ground set too large");
  for (uint64_t cmask = 0; cmask < (uint64_t(1) << m.n); ++cmask) {
    std::vector<int> supp, cones;
    for (int x = 1; x <= m.n; ++x)
      (cmask >> (x - 1)) & 1 ? cones.push_back(x) : supp.push_back(x);
    if (supp.size() < 2) continue;

    // Two support elements sharing a line whose support part is exactly that
    // pair must be co-blocked (else that block pair fails the neighborly
    // condition), so partitions are enumerated over the merged units.
    std::vector<int> pos(m.n + 1, -1);
    for (size_t i = 0; i < supp.size(); ++i) pos[supp[i]] = static_cast<int>(i);
    UnionFind uf(static_cast<int>(supp.size()));
    for (const auto& line : lines) {
      std::vector<int> restricted;
      for (int x : line)
        if (pos[x] >= 0) restricted.push_back(x);
      if (restricted.size() == 2)
        uf.unite(pos[restricted[0]], pos[restricted[1]]);
    }
    std::map<int, int> root_unit;
    std::vector<std::vector<int>> units;
    for (size_t i = 0; i < supp.size(); ++i) {
      int r = uf.find(static_cast<int>(i));
      auto it = root_unit.find(r);
      if (it == root_unit.end()) {
        root_unit[r] = static_cast<int>(units.size());
        units.push_back({supp[i]});
      } else {
        units[it->second].push_back(supp[i]);
      }
    }
    int u = static_cast<int>(units.size());
    if (u < 2) continue;

    // Set partitions of the units via restricted growth strings.
    std::vector<int> rgs(u, 0);
    while (true) {
      if (++examined > cap)
        throw CapExceeded(
            "neighborly structure enumeration needs cap >= " +
                std::to_string(examined),
            examined);
      int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
      if (nblocks >= 2) {
        std::vector<std::vector<int>> blocks(nblocks);
        for (int i = 0; i < u; ++i)
          blocks[rgs[i]].insert(blocks[rgs[i]].end(), units[i].begin(),
                                units[i].end());
        NeighborlyStructure ns = make_structure(m.n, cones, std::move(blocks));
        if (is_neighborly(m, ns)) out.push_back(std::move(ns));
      }
      // Next restricted growth string.
      int i = u - 1;
      while (i > 0) {
        int maxprev = *std::max_element(rgs.begin(), rgs.begin() + i);
        if (rgs[i] <= maxprev) break;
        --i;
      }
      if (i == 0) break;
      ++rgs[i];
      std::fill(rgs.begin() + i + 1, rgs.end(), 0);
    }
  }
  return out;
}

}  // namespace resonance

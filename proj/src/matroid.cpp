#include "resonance/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace resonance {
namespace {

void check_range(int n, int x) {
  if (x < 1 || x > n)
    throw std::invalid_argument("ground element out of range: " +
                                std::to_string(x));
}

int64_t igcd(int64_t a, int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

int integer_rank(std::vector<std::vector<int64_t>> m) {
  // Bareiss fraction-free elimination: all intermediate entries are exact
  // minors of the input, and each step's division is exact.
  int rows = static_cast<int>(m.size());
  int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  int r = 0;
  int64_t prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        __int128 num = static_cast<__int128>(m[i][j]) * m[r][c] -
                       static_cast<__int128>(m[i][c]) * m[r][j];
        __int128 v = num / prev;
        if (num % prev != 0 || v > INT64_MAX || v < INT64_MIN)
          throw std::overflow_error("integer elimination overflow");
        m[i][j] = static_cast<int64_t>(v);
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

Matroid matroid_from_lines(const std::string& name, int n,
                           std::vector<std::vector<int>> lines) {
  if (n < 1) throw std::invalid_argument("ground set must be nonempty");
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (l.size() < 3)
      throw std::invalid_argument("line with fewer than 3 points");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw std::invalid_argument("line with repeated point");
    for (int x : l) check_range(n, x);
  }
  std::sort(lines.begin(), lines.end());
  if (std::adjacent_find(lines.begin(), lines.end()) != lines.end())
    throw std::invalid_argument("duplicate line");
  std::set<std::pair<int, int>> covered;
  for (const auto& l : lines)
    for (size_t i = 0; i < l.size(); ++i)
      for (size_t j = i + 1; j < l.size(); ++j)
        if (!covered.insert({l[i], l[j]}).second)
          throw std::invalid_argument(
              "two lines share two points: " + std::to_string(l[i]) + "," +
              std::to_string(l[j]));
  return Matroid{name, n, std::move(lines), std::nullopt};
}

Matroid matroid_from_realization(const std::string& name, Realization r) {
  int n = static_cast<int>(r.size());
  if (n < 1) throw std::invalid_argument("empty realization");

  auto rank_of = [&](const std::vector<int>& idx) -> int {
    if (r.f) {
      std::vector<Vec> rows;
      for (int i : idx) rows.push_back(r.f_rows[i - 1]);
      return Matrix::from_rows(r.f, rows).rank();
    }
    std::vector<std::vector<int64_t>> rows;
    for (int i : idx) rows.push_back(r.q_rows[i - 1]);
    return integer_rank(std::move(rows));
  };

  for (int i = 1; i <= n; ++i)
    if (rank_of({i}) != 1)
      throw std::invalid_argument("zero normal at position " +
                                  std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rank_of({i, j}) != 2)
        throw std::invalid_argument("parallel normals at positions " +
                                    std::to_string(i) + "," +
                                    std::to_string(j));

  std::set<std::vector<int>> lineset;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      std::vector<int> flat = {i, j};
      for (int k = 1; k <= n; ++k) {
        if (k == i || k == j) continue;
        if (rank_of({i, j, k}) <= 2) flat.push_back(k);
      }
      if (flat.size() >= 3) {
        std::sort(flat.begin(), flat.end());
        lineset.insert(flat);
      }
    }
  }
  Matroid m = matroid_from_lines(
      name, n, std::vector<std::vector<int>>(lineset.begin(), lineset.end()));
  m.realization = std::move(r);
  return m;
}

std::vector<std::vector<int>> trivial_lines(const Matroid& m) {
  std::set<std::pair<int, int>> covered;
  for (const auto& l : m.lines)
    for (size_t i = 0; i < l.size(); ++i)
      for (size_t j = i + 1; j < l.size(); ++j) covered.insert({l[i], l[j]});
  std::vector<std::vector<int>> out;
  for (int i = 1; i <= m.n; ++i)
    for (int j = i + 1; j <= m.n; ++j)
      if (!covered.count({i, j})) out.push_back({i, j});
  return out;
}

std::vector<std::vector<int>> all_lines(const Matroid& m) {
  std::vector<std::vector<int>> out = m.lines;
  auto triv = trivial_lines(m);
  out.insert(out.end(), triv.begin(), triv.end());
  return out;
}

Deletion delete_points(const Matroid& m, const std::vector<int>& s) {
  std::set<int> del(s.begin(), s.end());
  for (int x : del) check_range(m.n, x);
  std::vector<int> old_label;
  std::vector<int> new_label(m.n + 1, 0);
  for (int x = 1; x <= m.n; ++x)
    if (!del.count(x)) {
      old_label.push_back(x);
      new_label[x] = static_cast<int>(old_label.size());
    }
  if (old_label.empty()) throw std::invalid_argument("deleting every point");
  std::vector<std::vector<int>> lines;
  for (const auto& l : m.lines) {
    std::vector<int> nl;
    for (int x : l)
      if (new_label[x]) nl.push_back(new_label[x]);
    if (nl.size() >= 3) lines.push_back(nl);
  }
  Matroid res = matroid_from_lines(
      m.name + "\\{...}", static_cast<int>(old_label.size()), lines);
  res.name = m.name + " minus " + std::to_string(s.size()) + " points";
  if (m.realization) {
    Realization r;
    r.f = m.realization->f;
    for (int x : old_label) {
      if (r.f)
        r.f_rows.push_back(m.realization->f_rows[x - 1]);
      else
        r.q_rows.push_back(m.realization->q_rows[x - 1]);
    }
    res.realization = std::move(r);
  }
  return Deletion{std::move(res), std::move(old_label)};
}

Matroid catalog(const std::string& name) {
  auto qreal = [](std::vector<std::vector<int64_t>> rows) {
    Realization r;
    r.q_rows = std::move(rows);
    return r;
  };
  if (name == "braid") {
    return matroid_from_realization(
        "braid", qreal({{1, 1, 0},
                        {1, -1, 0},
                        {0, 1, 1},
                        {0, 1, -1},
                        {1, 0, 1},
                        {-1, 0, 1}}));
  }
  if (name == "nonfano") {
    return matroid_from_realization(
        "nonfano", qreal({{1, 1, 0},
                          {1, -1, 0},
                          {1, 0, 1},
                          {1, 0, -1},
                          {0, 1, 1},
                          {0, 1, -1},
                          {0, 0, 1}}));
  }
  if (name == "deletedB3") {
    return matroid_from_realization(
        "deletedB3", qreal({{1, 1, 1},
                            {1, 1, -1},
                            {1, -1, -1},
                            {1, -1, 1},
                            {1, 0, -1},
                            {1, 0, 0},
                            {1, 0, 1},
                            {0, 0, 1}}));
  }
  if (name == "hessian") {
    return matroid_from_lines("hessian", 12,
                              {{1, 4, 9, 11},
                               {1, 5, 7, 10},
                               {1, 6, 8, 12},
                               {2, 4, 7, 12},
                               {2, 5, 8, 11},
                               {2, 6, 9, 10},
                               {3, 4, 8, 10},
                               {3, 5, 9, 12},
                               {3, 6, 7, 11}});
  }
  if (name.rfind("pencil(", 0) == 0 && name.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(name.substr(7, name.size() - 8));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad pencil size in: " + name);
    }
    if (k < 3) throw std::invalid_argument("pencil(k) requires k >= 3");
    std::vector<int> all(k);
    std::iota(all.begin(), all.end(), 1);
    Matroid m = matroid_from_lines(name, k, {all});
    Realization r;
    for (int t = 0; t < k; ++t) r.q_rows.push_back({1, t});
    m.realization = std::move(r);
    return m;
  }
  throw std::invalid_argument("unknown catalog matroid: " + name);
}

std::vector<std::string> catalog_names() {
  return {"braid", "nonfano", "deletedB3", "hessian", "pencil(k)"};
}

nlohmann::json matroid_to_json(const Matroid& m) {
  nlohmann::json j;
  j["name"] = m.name;
  j["n"] = m.n;
  j["lines"] = m.lines;
  if (m.realization) {
    nlohmann::json r;
    if (m.realization->f) {
      r["field"] = m.realization->f->spec();
      std::vector<std::vector<std::string>> rows;
      for (const auto& row : m.realization->f_rows) {
        std::vector<std::string> s;
        for (Fe x : row) s.push_back(m.realization->f->to_string(x));
        rows.push_back(std::move(s));
      }
      r["rows"] = rows;
    } else {
      r["field"] = "Q";
      r["rows"] = m.realization->q_rows;
    }
    j["realization"] = std::move(r);
  }
  return j;
}

namespace {

std::vector<int64_t> parse_q_row(const nlohmann::json& row) {
  // Entries are integers or "a/b" strings; the row is scaled to clear
  // denominators (scaling a normal does not change the matroid).
  std::vector<std::pair<int64_t, int64_t>> fracs;
  for (const auto& e : row) {
    if (e.is_number_integer()) {
      fracs.push_back({e.get<int64_t>(), 1});
    } else if (e.is_string()) {
      std::string s = e.get<std::string>();
      size_t slash = s.find('/');
      int64_t num = std::stoll(s.substr(0, slash));
      int64_t den = slash == std::string::npos ? 1 : std::stoll(s.substr(slash + 1));
      if (den == 0) throw std::invalid_argument("zero denominator: " + s);
      fracs.push_back({num, den});
    } else {
      throw std::invalid_argument("rational entry must be integer or string");
    }
  }
  int64_t l = 1;
  for (auto& [num, den] : fracs) {
    int64_t d = den < 0 ? -den : den;
    l = l / igcd(l, d) * d;
  }
  std::vector<int64_t> out;
  for (auto& [num, den] : fracs) out.push_back(num * (l / den));
  return out;
}

}  // namespace

Matroid matroid_from_json(const nlohmann::json& j) {
  std::string name = j.value("name", std::string("input"));
  std::optional<Matroid> from_real;
  if (j.contains("realization")) {
    const auto& jr = j.at("realization");
    std::string fs = jr.at("field").get<std::string>();
    Realization r;
    if (fs != "Q") {
      r.f = Field::parse_spec(fs);
      for (const auto& row : jr.at("rows")) {
        std::vector<Fe> fr;
        for (const auto& e : row) {
          if (e.is_number_integer())
            fr.push_back(r.f->from_int(e.get<int64_t>()));
          else
            fr.push_back(r.f->parse(e.get<std::string>()));
        }
        r.f_rows.push_back(std::move(fr));
      }
    } else {
      for (const auto& row : jr.at("rows")) r.q_rows.push_back(parse_q_row(row));
    }
    from_real = matroid_from_realization(name, std::move(r));
  }
  if (j.contains("lines")) {
    int n = j.contains("n") ? j.at("n").get<int>()
                            : (from_real ? from_real->n : 0);
    if (n == 0) throw std::invalid_argument("matroid JSON needs n");
    Matroid m = matroid_from_lines(
        name, n, j.at("lines").get<std::vector<std::vector<int>>>());
    if (from_real) {
      if (from_real->n != m.n || from_real->lines != m.lines)
        throw std::invalid_argument(
            "realization closure disagrees with the given lines");
      m.realization = from_real->realization;
    }
    return m;
  }
  if (!from_real)
    throw std::invalid_argument("matroid JSON needs lines or a realization");
  return *from_real;
}

}  // namespace resonance

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "resonance/matrix.hpp"

namespace resonance {

// A realization of a rank-two-flat structure by hyperplane normals: one row
// per ground element. Exactly one of q_rows / f_rows is used: q_rows holds
// exact integer normals (rationals are scaled row-wise to integers when
// ingested), f_rows holds normals over the finite field f.
struct Realization {
  FieldPtr f;  // null means rational normals in q_rows
  std::vector<std::vector<int64_t>> q_rows;
  std::vector<std::vector<Fe>> f_rows;
  size_t size() const { return f ? f_rows.size() : q_rows.size(); }
};

// Ground set {1..n} with its nontrivial lines: the rank-two flats of size
// >= 3. Any two lines share at most one point; pairs not covered by a line
// are "trivial lines". This is the line data of a simple matroid of rank
// <= 3 (only the rank-two flats matter here).
struct Matroid {
  std::string name;
  int n = 0;
  std::vector<std::vector<int>> lines;  // 1-based, each sorted, size >= 3
  std::optional<Realization> realization;
};

// Validates and normalizes (sorts lines and their members).
Matroid matroid_from_lines(const std::string& name, int n,
                           std::vector<std::vector<int>> lines);
// Lines computed as the pairwise closure of the normals: k joins the line
// through {i, j} iff rank(rows i, j, k) <= 2. Normals must be nonzero and
// pairwise non-parallel.
Matroid matroid_from_realization(const std::string& name, Realization r);

// Pairs contained in no nontrivial line, ascending.
std::vector<std::vector<int>> trivial_lines(const Matroid& m);
// Nontrivial lines followed by trivial pairs; every pair of ground elements
// lies in exactly one member.
std::vector<std::vector<int>> all_lines(const Matroid& m);

// Deletion of the points in s (1-based labels), with ground set relabeled to
// {1..n-|s|}; old_label[i] is the original label of new point i+1. Lines are
// intersected with the remaining points; intersections of size < 3 become
// trivial.
struct Deletion {
  Matroid m;
  std::vector<int> old_label;
};
Deletion delete_points(const Matroid& m, const std::vector<int>& s);

// Built-in instances: "braid", "nonfano", "deletedB3", "hessian", and
// "pencil(k)" for k >= 3.
Matroid catalog(const std::string& name);
std::vector<std::string> catalog_names();

nlohmann::json matroid_to_json(const Matroid& m);
// Accepts {"name", "n", "lines"} and/or {"realization": {"field", "rows"}};
// when both are given the realization's closure must reproduce the lines.
// Realization fields: "Q" for rationals (entries integers or "a/b" strings)
// or a finite field spec "p" / "p^e" (entries integers or element strings).
Matroid matroid_from_json(const nlohmann::json& j);

// Exact rank of an integer matrix (fraction-free elimination).
int integer_rank(std::vector<std::vector<int64_t>> rows);

}  // namespace resonance

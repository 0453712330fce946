#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geodetic/graph.hpp"

namespace geodetic {

struct FieldError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PlaneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Order bound for field construction; GEODETIC_LAB_MAX_Q overrides the
// default of 32. Flag graphs grow as q^3, desk-scale claims need q <= 9.
int max_field_order();

// GF(p^k) with elements encoded 0..q-1 as base-p digit vectors of the
// polynomial representation. The modulus is the lexicographically least
// monic irreducible of degree k over GF(p), so builds are reproducible.
class FiniteField {
 public:
  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }  // c0..ck, ck = 1

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add_[a * q_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int inv(int a) const;
  int generator() const { return generator_; }

  friend FiniteField build_field(int q);

 private:
  int p_ = 0, k_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> add_, mul_, neg_;
  int generator_ = 0;
};

FiniteField build_field(int q);

enum class PlaneKind { affine, projective };

struct IncidenceStructure {
  PlaneKind kind = PlaneKind::affine;
  int q = 0;
  int point_count = 0;
  std::vector<std::string> point_labels;
  std::vector<std::vector<int>> lines;         // sorted point ids per line
  std::vector<std::string> line_labels;
  std::vector<std::vector<int>> lines_through; // sorted line ids per point
  std::vector<std::vector<int>> parallel_classes;  // affine only

  int line_count() const { return static_cast<int>(lines.size()); }
  bool incident(int point, int line) const;
  // The unique line through two distinct points (planes guarantee one).
  std::optional<int> line_through(int p1, int p2) const;
  bool lines_disjoint(int l1, int l2) const;
};

// Points are GF(q)^2 in lexicographic order; lines y = m x + b come first
// (ordered by slope then intercept), the vertical class x = c last.
IncidenceStructure affine_plane(int q);

// Points and lines are normalized homogeneous triples over GF(q)
// (leftmost nonzero coordinate 1), each sorted lexicographically.
IncidenceStructure projective_plane(int q);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct PlaneValidation {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
};

// Exhaustively checks the defining axioms of the structure's kind.
PlaneValidation validate_plane(const IncidenceStructure& s);

// The parallel class containing the given affine line.
std::vector<int> parallel_class(const IncidenceStructure& s, int line);

}  // namespace geodetic

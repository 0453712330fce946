#include "geodetic/finite_geometry.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>

namespace geodetic {

int max_field_order() {
  static int bound = [] {
    if (const char* env = std::getenv("GEODETIC_LAB_MAX_Q")) {
      int v = std::atoi(env);
      if (v > 1) return v;
    }
    return 32;
  }();
  return bound;
}

namespace {

bool is_prime(int x) {
  if (x < 2) return false;
  for (int d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

// q = p^k with p prime, or nullopt
std::optional<std::pair<int, int>> prime_power(int q) {
  if (q < 2) return std::nullopt;
  for (int p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime(p)) return std::nullopt;  // smallest divisor is prime anyway
    int k = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, k);
  }
  return std::nullopt;
}

// polynomials over GF(p) as coefficient vectors c0..cd, normalized (no
// trailing zeros)
using Poly = std::vector<int>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(c);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  a = trim(a);
  while (a.size() >= m.size()) {
    int lead = a.back();
    // m is monic here
    size_t shift = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      a[i + shift] = ((a[i + shift] - lead * m[i]) % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

bool divides(const Poly& d, const Poly& f, int p) { return poly_mod(f, d, p).empty(); }

Poly decode(int code, int p, int k) {
  Poly f(k, 0);
  for (int i = 0; i < k; ++i) {
    f[i] = code % p;
    code /= p;
  }
  return f;
}

int encode(const Poly& f, int p) {
  int code = 0;
  for (size_t i = f.size(); i-- > 0;) code = code * p + f[i];
  return code;
}

bool irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;  // monic
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

int FiniteField::inv(int a) const {
  if (a == 0) throw FieldError("zero has no inverse");
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw FieldError("internal: no inverse found");
}

FiniteField build_field(int q) {
  if (q > max_field_order())
    throw FieldError("field order " + std::to_string(q) + " exceeds bound " +
                     std::to_string(max_field_order()));
  auto pk = prime_power(q);
  if (!pk) throw FieldError(std::to_string(q) + " is not a prime power");
  auto [p, k] = *pk;

  FiniteField f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;

  // lexicographically least monic irreducible of degree k
  Poly mod;
  int lowers = 1;
  for (int i = 0; i < k; ++i) lowers *= p;
  for (int code = 0; code < lowers; ++code) {
    Poly cand = decode(code, p, k);
    cand.resize(k + 1, 0);
    cand[k] = 1;
    if (k == 1 || irreducible(cand, p)) {
      mod = cand;
      break;
    }
  }
  f.modulus_ = mod;

  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);
  for (int a = 0; a < q; ++a) {
    Poly fa = decode(a, p, k);
    // digitwise negation
    Poly na = fa;
    for (int& c : na) c = (p - c) % p;
    f.neg_[a] = encode(na, p);
    for (int b = 0; b < q; ++b) {
      Poly fb = decode(b, p, k);
      Poly sum(k, 0);
      for (int i = 0; i < k; ++i) sum[i] = (fa[i] + fb[i]) % p;
      f.add_[a * q + b] = encode(sum, p);
      f.mul_[a * q + b] = encode(poly_mod(poly_mul(trim(fa), trim(fb), p), mod, p), p);
    }
  }

  // sanity: every nonzero element invertible, multiplication associative and
  // distributive (cheap at this scale), and the nonzero group cyclic
  for (int a = 1; a < q; ++a) (void)f.inv(a);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)))
          throw FieldError("internal: multiplication not associative");
        if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
          throw FieldError("internal: distributivity fails");
      }
  for (int g = 1; g < q; ++g) {
    int x = g, order = 1;
    while (x != 1) {
      x = f.mul(x, g);
      ++order;
    }
    if (order == q - 1) {
      f.generator_ = g;
      break;
    }
  }
  if (f.generator_ == 0) throw FieldError("internal: multiplicative group not cyclic");
  return f;
}

bool IncidenceStructure::incident(int point, int line) const {
  const auto& pts = lines[line];
  return std::binary_search(pts.begin(), pts.end(), point);
}

std::optional<int> IncidenceStructure::line_through(int p1, int p2) const {
  if (p1 == p2) return std::nullopt;
  const auto& a = lines_through[p1];
  const auto& b = lines_through[p2];
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  if (common.size() != 1) return std::nullopt;
  return common[0];
}

bool IncidenceStructure::lines_disjoint(int l1, int l2) const {
  const auto& a = lines[l1];
  const auto& b = lines[l2];
  std::vector<int> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.empty();
}

namespace {

void finish_structure(IncidenceStructure& s) {
  s.lines_through.assign(s.point_count, {});
  for (int l = 0; l < s.line_count(); ++l)
    for (int p : s.lines[l]) s.lines_through[p].push_back(l);
  for (auto& ls : s.lines_through) std::sort(ls.begin(), ls.end());
}

}  // namespace

IncidenceStructure affine_plane(int q) {
  FiniteField f = build_field(q);
  IncidenceStructure s;
  s.kind = PlaneKind::affine;
  s.q = q;
  s.point_count = q * q;
  auto pid = [q](int x, int y) { return x * q + y; };
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y)
      s.point_labels.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");

  // finite slopes first: line id = m*q + b
  for (int m = 0; m < q; ++m) {
    std::vector<int> klass;
    for (int b = 0; b < q; ++b) {
      std::vector<int> pts;
      for (int x = 0; x < q; ++x) pts.push_back(pid(x, f.add(f.mul(m, x), b)));
      std::sort(pts.begin(), pts.end());
      klass.push_back(s.line_count());
      s.lines.push_back(std::move(pts));
      s.line_labels.push_back("y=" + std::to_string(m) + "x+" + std::to_string(b));
    }
    s.parallel_classes.push_back(std::move(klass));
  }
  // vertical class: line id = q*q + c
  std::vector<int> vertical;
  for (int c = 0; c < q; ++c) {
    std::vector<int> pts;
    for (int y = 0; y < q; ++y) pts.push_back(pid(c, y));
    std::sort(pts.begin(), pts.end());
    vertical.push_back(s.line_count());
    s.lines.push_back(std::move(pts));
    s.line_labels.push_back("x=" + std::to_string(c));
  }
  s.parallel_classes.push_back(std::move(vertical));
  finish_structure(s);
  return s;
}

IncidenceStructure projective_plane(int q) {
  FiniteField f = build_field(q);
  // normalized homogeneous triples in lexicographic order
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = v[0] != 0 ? v[0] : (v[1] != 0 ? v[1] : v[2]);
        if (lead == 0) continue;
        if (lead != 1) continue;  // keep only normalized representatives
        reps.push_back(v);
      }
  std::sort(reps.begin(), reps.end());

  IncidenceStructure s;
  s.kind = PlaneKind::projective;
  s.q = q;
  s.point_count = static_cast<int>(reps.size());
  for (const auto& v : reps)
    s.point_labels.push_back("(" + std::to_string(v[0]) + ":" + std::to_string(v[1]) + ":" +
                             std::to_string(v[2]) + ")");

  auto dot = [&f](const std::array<int, 3>& a, const std::array<int, 3>& b) {
    int acc = 0;
    for (int i = 0; i < 3; ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
  };
  for (const auto& coef : reps) {  // lines are the dual triples, same order
    std::vector<int> pts;
    for (int p = 0; p < s.point_count; ++p)
      if (dot(coef, reps[p]) == 0) pts.push_back(p);
    s.lines.push_back(std::move(pts));
    s.line_labels.push_back("[" + std::to_string(coef[0]) + ":" + std::to_string(coef[1]) + ":" +
                            std::to_string(coef[2]) + "]");
  }
  finish_structure(s);
  return s;
}

namespace {

void check(PlaneValidation& v, const std::string& axiom, bool pass,
           const std::string& counterexample) {
  v.checks.push_back({axiom, pass, pass ? "" : counterexample});
}

}  // namespace

bool PlaneValidation::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

PlaneValidation validate_plane(const IncidenceStructure& s) {
  PlaneValidation v;
  const int q = s.q;
  const bool affine = s.kind == PlaneKind::affine;

  int expect_points = affine ? q * q : q * q + q + 1;
  int expect_lines = affine ? q * q + q : q * q + q + 1;
  check(v, "point count", s.point_count == expect_points,
        "expected " + std::to_string(expect_points) + ", got " + std::to_string(s.point_count));
  check(v, "line count", s.line_count() == expect_lines,
        "expected " + std::to_string(expect_lines) + ", got " + std::to_string(s.line_count()));

  int per_line = affine ? q : q + 1;
  {
    bool ok = true;
    std::string ce;
    for (int l = 0; l < s.line_count() && ok; ++l)
      if (static_cast<int>(s.lines[l].size()) != per_line) {
        ok = false;
        ce = "line " + std::to_string(l) + " has " + std::to_string(s.lines[l].size()) + " points";
      }
    check(v, "points per line", ok, ce);
  }
  {
    bool ok = true;
    std::string ce;
    for (int p = 0; p < s.point_count && ok; ++p)
      if (static_cast<int>(s.lines_through[p].size()) != q + 1) {
        ok = false;
        ce = "point " + std::to_string(p) + " lies on " +
             std::to_string(s.lines_through[p].size()) + " lines";
      }
    check(v, "lines per point", ok, ce);
  }
  {
    bool ok = true;
    std::string ce;
    for (int p1 = 0; p1 < s.point_count && ok; ++p1)
      for (int p2 = p1 + 1; p2 < s.point_count && ok; ++p2) {
        int common = 0;
        for (int l : s.lines_through[p1])
          if (s.incident(p2, l)) ++common;
        if (common != 1) {
          ok = false;
          ce = "points " + std::to_string(p1) + "," + std::to_string(p2) + " lie on " +
               std::to_string(common) + " common lines";
        }
      }
    check(v, "two points on one line", ok, ce);
  }

  if (affine) {
    bool ok = true;
    std::string ce;
    for (int l = 0; l < s.line_count() && ok; ++l)
      for (int p = 0; p < s.point_count && ok; ++p) {
        if (s.incident(p, l)) continue;
        int misses = 0;
        for (int l2 : s.lines_through[p])
          if (s.lines_disjoint(l, l2)) ++misses;
        if (misses != 1) {
          ok = false;
          ce = "point " + std::to_string(p) + " off line " + std::to_string(l) + " has " +
               std::to_string(misses) + " parallels";
        }
      }
    check(v, "unique parallel through external point", ok, ce);
  } else {
    bool ok = true;
    std::string ce;
    for (int l1 = 0; l1 < s.line_count() && ok; ++l1)
      for (int l2 = l1 + 1; l2 < s.line_count() && ok; ++l2) {
        std::vector<int> common;
        std::set_intersection(s.lines[l1].begin(), s.lines[l1].end(), s.lines[l2].begin(),
                              s.lines[l2].end(), std::back_inserter(common));
        if (common.size() != 1) {
          ok = false;
          ce = "lines " + std::to_string(l1) + "," + std::to_string(l2) + " meet in " +
               std::to_string(common.size()) + " points";
        }
      }
    check(v, "two lines meet in one point", ok, ce);
  }
  return v;
}

std::vector<int> parallel_class(const IncidenceStructure& s, int line) {
  if (s.kind != PlaneKind::affine)
    throw PlaneError("parallel classes exist only in affine planes");
  if (line < 0 || line >= s.line_count()) throw PlaneError("line id out of range");
  for (const auto& klass : s.parallel_classes)
    if (std::find(klass.begin(), klass.end(), line) != klass.end()) return klass;
  throw PlaneError("internal: line missing from parallel classes");
}

}  // namespace geodetic

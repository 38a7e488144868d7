#include "lcalc/rootdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>

#include "lcalc/error.hpp"

namespace lcalc {
namespace {

IntVec add_scaled(const IntVec& x, long k, const IntVec& y) {
  IntVec r = x;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * y[i];
  return r;
}

// Coefficients of `target` in terms of `basis` (linearly independent), if any.
std::optional<std::vector<mpq_class>> rational_coordinates(const std::vector<IntVec>& basis, const IntVec& target) {
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  // Augmented n x (k+1) system.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis[j][i];
    a[i][k] = target[i];
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col <= k && row < n; ++col) {
    std::size_t p = row;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    const mpq_class inv = 1 / a[row][col];
    for (auto& e : a[row]) e *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const mpq_class f = a[r][col];
      for (std::size_t j = 0; j <= k; ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  std::vector<mpq_class> x(k);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][k];
  return x;
}

std::size_t rank_of(const std::vector<IntVec>& vecs, std::size_t dim) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& v : vecs) a.emplace_back(v.begin(), v.end());
  std::size_t row = 0;
  for (std::size_t col = 0; col < dim && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < a.size(); ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[row][col];
      for (std::size_t j = col; j < dim; ++j) a[r][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

std::string parse_name(std::string_view text, std::size_t& pos) {
  std::string name;
  while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) name += text[pos++];
  return name;
}

}  // namespace

long pairing(const IntVec& x, const IntVec& y) {
  if (x.size() != y.size()) throw PreconditionError("pairing: rank mismatch");
  long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

std::string GroupDescriptor::to_string() const {
  switch (kind) {
    case Kind::GL: return "GL(" + std::to_string(n) + ")";
    case Kind::SL: return "SL(" + std::to_string(n) + ")";
    case Kind::PGL: return "PGL(" + std::to_string(n) + ")";
    case Kind::Torus: return "Torus(" + std::to_string(n) + ")";
  }
  return {};
}

GroupDescriptor parse_group_descriptor(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  const std::size_t name_pos = pos;
  const std::string name = parse_name(text, pos);
  GroupDescriptor d;
  if (name == "GL") d.kind = GroupDescriptor::Kind::GL;
  else if (name == "SL") d.kind = GroupDescriptor::Kind::SL;
  else if (name == "PGL") d.kind = GroupDescriptor::Kind::PGL;
  else if (name == "Torus" || name == "T") d.kind = GroupDescriptor::Kind::Torus;
  else throw ParseError("unknown group '" + name + "'", name_pos);
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  unsigned n = 0;
  auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), n);
  if (ec != std::errc()) throw ParseError("expected a non-negative integer", pos);
  pos = static_cast<std::size_t>(ptr - text.data());
  if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
  ++pos;
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  d.n = n;
  if (d.kind != GroupDescriptor::Kind::Torus && n == 0) throw PreconditionError(name + "(0) is not supported; need n >= 1");
  return d;
}

BasedRootDatum::BasedRootDatum(std::size_t rank, std::vector<IntVec> roots, std::vector<IntVec> coroots,
                               std::vector<std::size_t> simple, std::string name)
    : rank_(rank), roots_(std::move(roots)), coroots_(std::move(coroots)), simple_(std::move(simple)),
      name_(std::move(name)) {
  validate();
  compute_positive();
}

void BasedRootDatum::validate() const {
  if (roots_.size() != coroots_.size()) throw PreconditionError("root datum: roots and coroots differ in number");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (roots_[i].size() != rank_ || coroots_[i].size() != rank_) {
      throw PreconditionError("root datum: vector of wrong length");
    }
    if (pairing(roots_[i], coroots_[i]) != 2) throw PreconditionError("root datum: <alpha, alpha-check> != 2");
  }
  // Closure under reflections, with roots and coroots moving together.
  for (std::size_t a = 0; a < roots_.size(); ++a) {
    for (std::size_t b = 0; b < roots_.size(); ++b) {
      const IntVec rb = add_scaled(roots_[b], -pairing(roots_[b], coroots_[a]), roots_[a]);
      const IntVec cb = add_scaled(coroots_[b], -pairing(roots_[a], coroots_[b]), coroots_[a]);
      bool found = false;
      for (std::size_t c = 0; c < roots_.size() && !found; ++c) found = roots_[c] == rb && coroots_[c] == cb;
      if (!found) throw PreconditionError("root datum: root set not closed under reflections");
    }
  }
  for (auto s : simple_) {
    if (s >= roots_.size()) throw PreconditionError("root datum: simple index out of range");
  }
  if (rank_of(simple_roots(), rank_) != simple_.size()) {
    throw PreconditionError("root datum: simple roots are linearly dependent");
  }
  const auto base = simple_roots();
  for (const auto& r : roots_) {
    auto coords = rational_coordinates(base, r);
    if (!coords) throw PreconditionError("root datum: root outside the span of the simple roots");
    bool nonneg = true, nonpos = true;
    for (const auto& c : *coords) {
      if (c.get_den() != 1) throw PreconditionError("root datum: root is not an integral combination of the base");
      nonneg = nonneg && c >= 0;
      nonpos = nonpos && c <= 0;
    }
    if (!nonneg && !nonpos) throw PreconditionError("root datum: simple roots do not form a base");
  }
}

void BasedRootDatum::compute_positive() {
  positive_.clear();
  const auto base = simple_roots();
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    const auto coords = rational_coordinates(base, roots_[i]);
    bool pos = false;
    for (const auto& c : *coords) {
      if (c > 0) pos = true;
    }
    if (pos) positive_.push_back(i);
  }
}

std::vector<IntVec> BasedRootDatum::simple_roots() const {
  std::vector<IntVec> out;
  for (auto s : simple_) out.push_back(roots_[s]);
  return out;
}

std::vector<IntVec> BasedRootDatum::simple_coroots() const {
  std::vector<IntVec> out;
  for (auto s : simple_) out.push_back(coroots_[s]);
  return out;
}

BasedRootDatum BasedRootDatum::build(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupDescriptor::Kind::GL: return gl(d.n);
    case GroupDescriptor::Kind::SL: return sl(d.n);
    case GroupDescriptor::Kind::PGL: return pgl(d.n);
    case GroupDescriptor::Kind::Torus: return torus(d.n);
  }
  throw UnsupportedError("unsupported group descriptor");
}

BasedRootDatum BasedRootDatum::gl(unsigned n) {
  if (n == 0) throw PreconditionError("GL(n) needs n >= 1");
  std::vector<IntVec> roots, coroots;
  std::vector<std::size_t> simple;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVec v(n, 0);
      v[i] = 1;
      v[j] = -1;
      if (j == i + 1) simple.push_back(roots.size());
      roots.push_back(v);
      coroots.push_back(v);
    }
  }
  return BasedRootDatum(n, roots, coroots, simple, "GL(" + std::to_string(n) + ")");
}

BasedRootDatum BasedRootDatum::pgl(unsigned n) {
  if (n == 0) throw PreconditionError("PGL(n) needs n >= 1");
  const std::size_t r = n - 1;
  std::vector<IntVec> roots, coroots;
  std::vector<std::size_t> simple;
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      IntVec full(n, 0);
      full[i] = 1;
      full[j] = -1;
      // Character: truncate. Cocharacter: normalize the last coordinate to 0, then truncate.
      IntVec root(full.begin(), full.begin() + static_cast<long>(r));
      IntVec coroot(r);
      for (std::size_t k = 0; k < r; ++k) coroot[k] = full[k] - full[n - 1];
      if (j == i + 1) simple.push_back(roots.size());
      roots.push_back(root);
      coroots.push_back(coroot);
    }
  }
  return BasedRootDatum(r, roots, coroots, simple, "PGL(" + std::to_string(n) + ")");
}

BasedRootDatum BasedRootDatum::sl(unsigned n) {
  BasedRootDatum d = pgl(n).dual();
  d.name_ = "SL(" + std::to_string(n) + ")";
  return d;
}

BasedRootDatum BasedRootDatum::torus(unsigned r) {
  return BasedRootDatum(r, {}, {}, {}, "Torus(" + std::to_string(r) + ")");
}

BasedRootDatum BasedRootDatum::dual() const {
  std::string dual_name;
  if (name_.rfind("GL(", 0) == 0 || name_.rfind("Torus(", 0) == 0) dual_name = name_;
  else if (name_.rfind("PGL(", 0) == 0) dual_name = "SL(" + name_.substr(4);
  else if (name_.rfind("SL(", 0) == 0) dual_name = "PGL(" + name_.substr(3);
  else if (!name_.empty()) dual_name = "dual(" + name_ + ")";
  return BasedRootDatum(rank_, coroots_, roots_, simple_, dual_name);
}

IntVec BasedRootDatum::reflect_character(std::size_t i, const IntVec& x) const {
  return add_scaled(x, -pairing(x, coroots_.at(i)), roots_.at(i));
}

IntVec BasedRootDatum::reflect_cocharacter(std::size_t i, const IntVec& y) const {
  return add_scaled(y, -pairing(roots_.at(i), y), coroots_.at(i));
}

bool BasedRootDatum::is_dominant_cocharacter(const IntVec& mu) const {
  for (auto s : simple_) {
    if (pairing(roots_[s], mu) < 0) return false;
  }
  return true;
}

IntVec BasedRootDatum::dominant_cocharacter(const IntVec& mu) const {
  if (mu.size() != rank_) throw PreconditionError("cocharacter of wrong rank");
  IntVec y = mu;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto s : simple_) {
      if (pairing(roots_[s], y) < 0) {
        y = reflect_cocharacter(s, y);
        changed = true;
      }
    }
  }
  return y;
}

bool BasedRootDatum::is_dominant_character(const IntVec& lambda) const {
  for (auto s : simple_) {
    if (pairing(lambda, coroots_[s]) < 0) return false;
  }
  return true;
}

IntVec BasedRootDatum::dominant_character(const IntVec& lambda) const {
  if (lambda.size() != rank_) throw PreconditionError("character of wrong rank");
  IntVec x = lambda;
  for (bool changed = true; changed;) {
    changed = false;
    for (auto s : simple_) {
      if (pairing(x, coroots_[s]) < 0) {
        x = reflect_character(s, x);
        changed = true;
      }
    }
  }
  return x;
}

bool operator==(const BasedRootDatum& a, const BasedRootDatum& b) {
  if (a.rank_ != b.rank_ || a.roots_.size() != b.roots_.size()) return false;
  // Compare as sets of (root, coroot) pairs plus the set of simple roots.
  std::set<std::pair<IntVec, IntVec>> pa, pb;
  for (std::size_t i = 0; i < a.roots_.size(); ++i) pa.insert(std::make_pair(a.roots_[i], a.coroots_[i]));
  for (std::size_t i = 0; i < b.roots_.size(); ++i) pb.insert(std::make_pair(b.roots_[i], b.coroots_[i]));
  if (pa != pb) return false;
  std::set<IntVec> sa, sb;
  for (const auto& r : a.simple_roots()) sa.insert(r);
  for (const auto& r : b.simple_roots()) sb.insert(r);
  return sa == sb;
}

IntVec two_rho(const BasedRootDatum& d) {
  IntVec s(d.rank(), 0);
  for (auto i : d.positive_indices()) s = add_scaled(s, 1, d.roots()[i]);
  return s;
}

IntVec two_rho_check(const BasedRootDatum& d) {
  IntVec s(d.rank(), 0);
  for (auto i : d.positive_indices()) s = add_scaled(s, 1, d.coroots()[i]);
  return s;
}

DeltaZ delta_and_zG(const BasedRootDatum& d) {
  DeltaZ out;
  out.delta = two_rho(d);
  for (long v : out.delta) out.z_signs.push_back(v % 2 == 0 ? 1 : -1);
  return out;
}

int evaluate_at_signs(const IntVec& mu, const std::vector<int>& signs) {
  if (mu.size() != signs.size()) throw PreconditionError("evaluate_at_signs: rank mismatch");
  int v = 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (signs[i] == -1 && mu[i] % 2 != 0) v = -v;
  }
  return v;
}

long d_G(const BasedRootDatum& d, const IntVec& mu) { return pairing(two_rho(d), d.dominant_cocharacter(mu)); }

WeylOrbit weyl_orbit(const BasedRootDatum& d, const IntVec& mu, std::size_t bound) {
  if (mu.size() != d.rank()) throw PreconditionError("cocharacter of wrong rank");
  std::set<IntVec> seen{mu};
  std::deque<IntVec> queue{mu};
  while (!queue.empty()) {
    IntVec y = std::move(queue.front());
    queue.pop_front();
    for (auto s : d.simple_indices()) {
      IntVec r = d.reflect_cocharacter(s, y);
      if (seen.insert(r).second) {
        if (seen.size() > bound) {
          throw PreconditionError("Weyl orbit exceeds the bound of " + std::to_string(bound) + " elements");
        }
        queue.push_back(std::move(r));
      }
    }
  }
  WeylOrbit out;
  out.elements.assign(seen.begin(), seen.end());
  bool have = false;
  for (const auto& y : out.elements) {
    if (d.is_dominant_cocharacter(y) && (!have || y > out.dominant)) {
      out.dominant = y;
      have = true;
    }
  }
  return out;
}

std::size_t weyl_group_order(const BasedRootDatum& d, std::size_t bound) {
  return weyl_orbit(d, two_rho_check(d), bound).elements.size();
}

IntMatrix integer_identity(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntVec transform(const IntMatrix& m, const IntVec& v) {
  IntVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw PreconditionError("integer matrix shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  }
  return r;
}

LGroupSpec::LGroupSpec(BasedRootDatum dual_datum)
    : dual_(std::move(dual_datum)), galois_order_(1), galois_action_(integer_identity(dual_.rank())) {}

LGroupSpec::LGroupSpec(BasedRootDatum dual_datum, unsigned galois_order, IntMatrix galois_action)
    : dual_(std::move(dual_datum)), galois_order_(galois_order), galois_action_(std::move(galois_action)) {
  const std::size_t n = dual_.rank();
  if (galois_order_ == 0) throw PreconditionError("Galois order must be positive");
  if (galois_action_.size() != n) throw PreconditionError("Galois action has wrong size");
  for (const auto& row : galois_action_) {
    if (row.size() != n) throw PreconditionError("Galois action has wrong size");
  }
  // Order divides galois_order.
  IntMatrix pw = integer_identity(n);
  for (unsigned k = 0; k < galois_order_; ++k) {
    IntMatrix next(n, IntVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t l = 0; l < n; ++l) next[i][j] += galois_action_[i][l] * pw[l][j];
      }
    }
    pw = std::move(next);
  }
  if (pw != integer_identity(n)) throw PreconditionError("Galois action does not have the stated order");
  // Preserves roots, the base, and the pairing with coroots.
  const auto& roots = dual_.roots();
  const auto& coroots = dual_.coroots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const IntVec image = transform(galois_action_, roots[i]);
    const auto it = std::find(roots.begin(), roots.end(), image);
    if (it == roots.end()) throw PreconditionError("Galois action does not permute the roots");
    const std::size_t j = static_cast<std::size_t>(it - roots.begin());
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const IntVec rk = transform(galois_action_, roots[k]);
      if (pairing(rk, coroots[j]) != pairing(roots[k], coroots[i])) {
        throw PreconditionError("Galois action does not preserve the pairing");
      }
    }
  }
  const auto simple = dual_.simple_roots();
  const std::set<IntVec> base(simple.begin(), simple.end());
  for (const auto& s : simple) {
    if (!base.count(transform(galois_action_, s))) throw PreconditionError("Galois action does not preserve the base");
  }
}

LGroupSpec LGroupSpec::split(const GroupDescriptor& g) {
  LGroupSpec l(BasedRootDatum::build(g).dual());
  l.group_ = g;
  return l;
}

IntVec LGroupSpec::act(const IntVec& x) const { return transform(galois_action_, x); }

bool operator==(const LGroupSpec& a, const LGroupSpec& b) {
  return a.dual_ == b.dual_ && a.galois_order_ == b.galois_order_ && a.galois_action_ == b.galois_action_ &&
         a.group_ == b.group_;
}

}  // namespace lcalc

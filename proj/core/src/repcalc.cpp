#include "lcalc/repcalc.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "lcalc/error.hpp"

namespace lcalc {

struct RepExpr::Node {
  Kind kind = Kind::Std;
  std::vector<RepExpr> children;
  long k = 0;
  std::vector<Scalar> values;
};

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void multisets_rec(std::size_t d, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    cur.push_back(i);
    multisets_rec(d, k, i, cur, out);
    cur.pop_back();
  }
}

void subsets_rec(std::size_t d, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < d; ++i) {
    cur.push_back(i);
    subsets_rec(d, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> multisets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  multisets_rec(d, k, 0, cur, out);
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t d, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets_rec(d, k, 0, cur, out);
  return out;
}

std::map<std::vector<std::size_t>, std::size_t> index_of(const std::vector<std::vector<std::size_t>>& basis) {
  std::map<std::vector<std::size_t>, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = i;
  return idx;
}

// Sorts in place; returns the sign of the sorting permutation, 0 on repeats.
int sort_with_sign(std::vector<std::size_t>& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      } else if (v[j] == v[j + 1]) {
        return 0;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] == v[j + 1]) return 0;
  }
  return sign;
}

Matrix sym_derivation(const Matrix& x, unsigned k) {
  const std::size_t d = x.rows();
  const auto basis = multisets(d, k);
  const auto idx = index_of(basis);
  Matrix r(x.field(), basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& mono = basis[col];
    for (std::size_t j = 0; j < mono.size(); ++j) {
      for (std::size_t a = 0; a < d; ++a) {
        const Scalar& xa = x(a, mono[j]);
        if (xa.is_zero()) continue;
        auto m = mono;
        m[j] = a;
        std::sort(m.begin(), m.end());
        r(idx.at(m), col) += xa;
      }
    }
  }
  return r;
}

Matrix alt_derivation(const Matrix& x, unsigned k) {
  const std::size_t d = x.rows();
  if (k > d) throw PreconditionError("Alt^k with k larger than the dimension");
  const auto basis = subsets(d, k);
  const auto idx = index_of(basis);
  Matrix r(x.field(), basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& set = basis[col];
    for (std::size_t j = 0; j < set.size(); ++j) {
      for (std::size_t a = 0; a < d; ++a) {
        const Scalar& xa = x(a, set[j]);
        if (xa.is_zero()) continue;
        auto m = set;
        m[j] = a;
        const int sign = sort_with_sign(m);
        if (sign == 0) continue;
        r(idx.at(m), col) += sign > 0 ? xa : -xa;
      }
    }
  }
  return r;
}

Scalar twist_factor(const RepExpr& r, const WeilElement& w, const FieldPtr& f) {
  if (r.kind() == RepExpr::Kind::UnramTwist) return r.twist_values().front().pow(w.d_F());
  Scalar v = Scalar::one(f);
  for (const auto& l : w.letters()) {
    if (l.kind != WeilLetter::Kind::Inertia) continue;
    if (l.index >= r.twist_values().size()) {
      throw PreconditionError("finite twist has no value for inertia generator " + std::to_string(l.index));
    }
    v *= r.twist_values()[l.index].pow(l.exponent);
  }
  return v;
}

Matrix evaluate_node(const RepExpr& r, const Matrix& g, const WeilElement& w) {
  using K = RepExpr::Kind;
  switch (r.kind()) {
    case K::Std: return g;
    case K::Dual: return evaluate_node(r.child(), inverse(g), w.inverse()).transpose();
    case K::Sum: return block_diagonal({evaluate_node(r.child(0), g, w), evaluate_node(r.child(1), g, w)});
    case K::Tensor: return kronecker(evaluate_node(r.child(0), g, w), evaluate_node(r.child(1), g, w));
    case K::Sym: return sym_power(evaluate_node(r.child(), g, w), static_cast<unsigned>(r.power()));
    case K::Alt: return alt_power(evaluate_node(r.child(), g, w), static_cast<unsigned>(r.power()));
    case K::DetPow: return Matrix::scalar(determinant(g).pow(r.power()), 1);
    case K::UnramTwist:
    case K::FiniteTwist: return evaluate_node(r.child(), g, w) * twist_factor(r, w, g.field());
  }
  throw UnsupportedError("unknown representation node");
}

class RepParser {
 public:
  explicit RepParser(std::string_view text) : text_(text) {}

  RepExpr parse() {
    RepExpr r = sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  long integer() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    const std::string s(text_.substr(start, pos_ - start));
    if (s.size() > 9) {
      pos_ = start;
      fail("integer out of range");
    }
    return std::stol(s);
  }

  unsigned nonnegative() {
    const std::size_t start = pos_;
    const long v = integer();
    if (v < 0) {
      pos_ = start;
      fail("expected a non-negative integer");
    }
    return static_cast<unsigned>(v);
  }

  RepExpr sum() {
    RepExpr r = tensor();
    while (accept("\xE2\x8A\x95") || accept("+")) r = RepExpr::sum(r, tensor());
    return r;
  }

  RepExpr tensor() {
    RepExpr r = atom();
    while (accept("\xE2\x8A\x97") || accept("*") || accept("x")) r = RepExpr::tensor(r, atom());
    return r;
  }

  RepExpr atom() {
    if (accept("Std")) return RepExpr::standard();
    if (accept("det^")) return RepExpr::det_pow(integer());
    if (accept("det")) return RepExpr::det_pow(1);
    if (accept("Sym^")) {
      const unsigned k = nonnegative();
      expect("(");
      RepExpr r = sum();
      expect(")");
      return RepExpr::sym(k, r);
    }
    if (accept("Alt^")) {
      const unsigned k = nonnegative();
      expect("(");
      RepExpr r = sum();
      expect(")");
      return RepExpr::alt(k, r);
    }
    if (accept("Dual(")) {
      RepExpr r = sum();
      expect(")");
      return RepExpr::dual(r);
    }
    if (accept("(")) {
      RepExpr r = sum();
      expect(")");
      return r;
    }
    skip();
    fail("expected a representation");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RepExpr RepExpr::standard() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Std;
  return RepExpr(n);
}

RepExpr RepExpr::dual(RepExpr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Dual;
  n->children = {std::move(r)};
  return RepExpr(n);
}

RepExpr RepExpr::sum(RepExpr a, RepExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->children = {std::move(a), std::move(b)};
  return RepExpr(n);
}

RepExpr RepExpr::tensor(RepExpr a, RepExpr b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Tensor;
  n->children = {std::move(a), std::move(b)};
  return RepExpr(n);
}

RepExpr RepExpr::sym(unsigned k, RepExpr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sym;
  n->k = k;
  n->children = {std::move(r)};
  return RepExpr(n);
}

RepExpr RepExpr::alt(unsigned k, RepExpr r) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Alt;
  n->k = k;
  n->children = {std::move(r)};
  return RepExpr(n);
}

RepExpr RepExpr::det_pow(long k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::DetPow;
  n->k = k;
  return RepExpr(n);
}

RepExpr RepExpr::unram_twist(RepExpr r, Scalar u) {
  if (u.is_zero()) throw PreconditionError("unramified twist by zero");
  auto n = std::make_shared<Node>();
  n->kind = Kind::UnramTwist;
  n->children = {std::move(r)};
  n->values = {std::move(u)};
  return RepExpr(n);
}

RepExpr RepExpr::finite_twist(RepExpr r, std::vector<Scalar> values) {
  for (const auto& v : values) {
    if (v.is_zero()) throw PreconditionError("finite twist with a zero value");
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::FiniteTwist;
  n->children = {std::move(r)};
  n->values = std::move(values);
  return RepExpr(n);
}

RepExpr::Kind RepExpr::kind() const noexcept { return node_->kind; }
const RepExpr& RepExpr::child(std::size_t i) const { return node_->children.at(i); }
long RepExpr::power() const noexcept { return node_->k; }
const std::vector<Scalar>& RepExpr::twist_values() const noexcept { return node_->values; }

std::size_t RepExpr::dimension(std::size_t n) const {
  switch (kind()) {
    case Kind::Std: return n;
    case Kind::Dual:
    case Kind::UnramTwist:
    case Kind::FiniteTwist: return child().dimension(n);
    case Kind::Sum: return child(0).dimension(n) + child(1).dimension(n);
    case Kind::Tensor: return child(0).dimension(n) * child(1).dimension(n);
    case Kind::Sym: {
      const std::size_t d = child().dimension(n);
      if (d == 0) return power() == 0 ? 1 : 0;
      return binomial(d + static_cast<std::size_t>(power()) - 1, static_cast<std::size_t>(power()));
    }
    case Kind::Alt: return binomial(child().dimension(n), static_cast<std::size_t>(power()));
    case Kind::DetPow: return 1;
  }
  return 0;
}

bool RepExpr::has_twists() const {
  if (kind() == Kind::UnramTwist || kind() == Kind::FiniteTwist) return true;
  return std::any_of(node_->children.begin(), node_->children.end(), [](const RepExpr& c) { return c.has_twists(); });
}

std::string RepExpr::to_string() const {
  switch (kind()) {
    case Kind::Std: return "Std";
    case Kind::Dual: return "Dual(" + child().to_string() + ")";
    case Kind::Sum: return child(0).to_string() + " \xE2\x8A\x95 " + child(1).to_string();
    case Kind::Tensor: {
      auto wrap = [](const RepExpr& c) {
        return c.kind() == Kind::Sum ? "(" + c.to_string() + ")" : c.to_string();
      };
      return wrap(child(0)) + " \xE2\x8A\x97 " + wrap(child(1));
    }
    case Kind::Sym: return "Sym^" + std::to_string(power()) + "(" + child().to_string() + ")";
    case Kind::Alt: return "Alt^" + std::to_string(power()) + "(" + child().to_string() + ")";
    case Kind::DetPow: return "det^" + std::to_string(power());
    case Kind::UnramTwist: return "[" + child().to_string() + "]{s->" + twist_values().front().to_string() + "}";
    case Kind::FiniteTwist: {
      std::string s = "[" + child().to_string() + "]{";
      for (std::size_t i = 0; i < twist_values().size(); ++i) {
        s += (i ? ", g" : "g") + std::to_string(i) + "->" + twist_values()[i].to_string();
      }
      return s + "}";
    }
  }
  return {};
}

bool operator==(const RepExpr& a, const RepExpr& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.power() == b.power() && a.twist_values() == b.twist_values() &&
         a.node_->children == b.node_->children;
}

RepExpr parse_rep(std::string_view text) { return RepParser(text).parse(); }

Matrix sym_power(const Matrix& m, unsigned k) {
  if (!m.is_square()) throw PreconditionError("Sym^k of a non-square matrix");
  const std::size_t d = m.rows();
  const auto basis = multisets(d, k);
  const auto idx = index_of(basis);
  Matrix r(m.field(), basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    std::map<std::vector<std::size_t>, Scalar> poly;
    poly.emplace(std::vector<std::size_t>{}, Scalar::one(m.field()));
    for (std::size_t factor : basis[col]) {
      std::map<std::vector<std::size_t>, Scalar> next;
      for (const auto& [mono, coef] : poly) {
        for (std::size_t a = 0; a < d; ++a) {
          if (m(a, factor).is_zero()) continue;
          auto nm = mono;
          nm.insert(std::upper_bound(nm.begin(), nm.end(), a), a);
          auto it = next.find(nm);
          if (it == next.end()) next.emplace(std::move(nm), coef * m(a, factor));
          else it->second += coef * m(a, factor);
        }
      }
      poly = std::move(next);
    }
    for (const auto& [mono, coef] : poly) r(idx.at(mono), col) = coef;
  }
  return r;
}

Matrix alt_power(const Matrix& m, unsigned k) {
  if (!m.is_square()) throw PreconditionError("Alt^k of a non-square matrix");
  const std::size_t d = m.rows();
  if (k > d) throw PreconditionError("Alt^k with k larger than the dimension");
  const auto basis = subsets(d, k);
  Matrix r(m.field(), basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (k == 0) {
        r(i, j) = Scalar::one(m.field());
        continue;
      }
      Matrix minor(m.field(), k, k);
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(basis[i][a], basis[j][b]);
      }
      r(i, j) = determinant(minor);
    }
  }
  return r;
}

Matrix evaluate(const RepExpr& r, const Matrix& g) { return evaluate_node(r, g, WeilElement::identity()); }

Matrix evaluate(const RepExpr& r, const Matrix& g, const WeilElement& w) { return evaluate_node(r, g, w); }

Matrix lie_action(const RepExpr& r, const Matrix& x) {
  using K = RepExpr::Kind;
  switch (r.kind()) {
    case K::Std: return x;
    case K::Dual: return -lie_action(r.child(), x).transpose();
    case K::Sum: return block_diagonal({lie_action(r.child(0), x), lie_action(r.child(1), x)});
    case K::Tensor: {
      const Matrix a = lie_action(r.child(0), x);
      const Matrix b = lie_action(r.child(1), x);
      return kronecker(a, Matrix::identity(x.field(), b.rows())) + kronecker(Matrix::identity(x.field(), a.rows()), b);
    }
    case K::Sym: return sym_derivation(lie_action(r.child(), x), static_cast<unsigned>(r.power()));
    case K::Alt: return alt_derivation(lie_action(r.child(), x), static_cast<unsigned>(r.power()));
    case K::DetPow: return Matrix::scalar(x.trace() * mpq_class(r.power()), 1);
    case K::UnramTwist:
    case K::FiniteTwist: return lie_action(r.child(), x);
  }
  throw UnsupportedError("unknown representation node");
}

std::vector<IntVec> weights(const RepExpr& r, std::size_t n) {
  using K = RepExpr::Kind;
  auto add = [](IntVec a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  switch (r.kind()) {
    case K::Std: {
      std::vector<IntVec> out;
      for (std::size_t i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        out.push_back(e);
      }
      return out;
    }
    case K::Dual: {
      auto out = weights(r.child(), n);
      for (auto& w : out) {
        for (auto& c : w) c = -c;
      }
      return out;
    }
    case K::Sum: {
      auto a = weights(r.child(0), n);
      auto b = weights(r.child(1), n);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
    case K::Tensor: {
      const auto a = weights(r.child(0), n);
      const auto b = weights(r.child(1), n);
      std::vector<IntVec> out;
      for (const auto& x : a) {
        for (const auto& y : b) out.push_back(add(x, y));
      }
      return out;
    }
    case K::Sym:
    case K::Alt: {
      const auto base = weights(r.child(), n);
      const auto k = static_cast<std::size_t>(r.power());
      if (r.kind() == K::Alt && k > base.size()) throw PreconditionError("Alt^k with k larger than the dimension");
      const auto basis = r.kind() == K::Sym ? multisets(base.size(), k) : subsets(base.size(), k);
      std::vector<IntVec> out;
      for (const auto& m : basis) {
        IntVec w(n, 0);
        for (auto i : m) w = add(w, base[i]);
        out.push_back(w);
      }
      return out;
    }
    case K::DetPow: return {IntVec(n, r.power())};
    case K::UnramTwist:
    case K::FiniteTwist: return weights(r.child(), n);
  }
  return {};
}

Vector SpanBuilder::reduce(const Vector& v) const {
  Vector r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar f = r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!rows_[i][j].is_zero()) r[j] -= f * rows_[i][j];
    }
  }
  return r;
}

bool SpanBuilder::contains(const Vector& v) const {
  const Vector r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool SpanBuilder::add(const Vector& v) {
  if (v.size() != dim_) throw PreconditionError("SpanBuilder: vector of wrong length");
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const Scalar inv = r[p].inverse();
  for (auto& e : r) e *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  vectors_.push_back(v);
  return true;
}

std::vector<IsotypicPiece> isotypic_decomposition(const RepExpr& r, const DualRealization& real,
                                                  const FieldPtr& field) {
  const std::size_t n = real.dimension();
  const std::size_t dim = r.dimension(n);
  const auto wts = weights(r, n);
  if (wts.size() != dim) throw VerificationError("weight count differs from the dimension");
  std::vector<Matrix> raise, lower;
  for (const auto& e : real.raising(field)) raise.push_back(lie_action(r, e));
  for (const auto& f : real.lowering(field)) lower.push_back(lie_action(r, f));

  // Weight spaces of the monomial basis.
  std::map<IntVec, std::vector<std::size_t>> spaces;
  for (std::size_t i = 0; i < dim; ++i) spaces[wts[i]].push_back(i);

  auto dominant = [&](const IntVec& w) {
    if (real.kind() == DualRealization::Kind::Torus) return true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] < w[i + 1]) return false;
    }
    return true;
  };
  auto key_of = [&](const IntVec& w) {
    if (real.kind() != DualRealization::Kind::SpecialLinear) return w;
    IntVec k = w;
    for (auto& c : k) c -= w.back();
    return k;
  };

  std::map<IntVec, std::vector<Vector>, std::greater<>> highest;
  for (const auto& [w, idx] : spaces) {
    if (!dominant(w)) continue;
    std::vector<Vector> hw;
    if (raise.empty()) {
      for (auto i : idx) {
        Vector v(dim, Scalar(field));
        v[i] = Scalar::one(field);
        hw.push_back(std::move(v));
      }
    } else {
      Matrix stacked(field, dim * raise.size(), idx.size());
      for (std::size_t k = 0; k < raise.size(); ++k) {
        for (std::size_t row = 0; row < dim; ++row) {
          for (std::size_t c = 0; c < idx.size(); ++c) stacked(k * dim + row, c) = raise[k](row, idx[c]);
        }
      }
      for (const auto& coefs : nullspace(stacked)) {
        Vector v(dim, Scalar(field));
        for (std::size_t c = 0; c < idx.size(); ++c) v[idx[c]] = coefs[c];
        hw.push_back(std::move(v));
      }
    }
    if (hw.empty()) continue;
    auto& slot = highest[key_of(w)];
    slot.insert(slot.end(), hw.begin(), hw.end());
  }

  std::vector<IsotypicPiece> pieces;
  SpanBuilder all(field, dim);
  for (const auto& [key, hw] : highest) {
    SpanBuilder span(field, dim);
    std::vector<Vector> queue;
    for (const auto& v : hw) {
      if (span.add(v)) queue.push_back(v);
    }
    const std::size_t multiplicity = span.size();
    while (!queue.empty()) {
      const Vector v = std::move(queue.back());
      queue.pop_back();
      for (const auto& f : lower) {
        Vector w = multiply(f, v);
        if (span.add(w)) queue.push_back(std::move(w));
      }
    }
    for (const auto& v : span.vectors()) {
      if (!all.add(v)) throw VerificationError("isotypic pieces are not independent");
    }
    IsotypicPiece piece;
    piece.highest_weight = key;
    piece.basis = span.vectors();
    piece.multiplicity = multiplicity;
    piece.irreducible_dimension = span.size() / multiplicity;
    pieces.push_back(std::move(piece));
  }
  if (all.size() != dim) throw VerificationError("isotypic pieces do not span the representation");
  return pieces;
}

long piece_dG(const IsotypicPiece& piece, const DualRealization& real) {
  return d_G(real.group_datum(), real.weight_to_cocharacter(piece.highest_weight));
}

Matrix block_scalar(const std::vector<IsotypicPiece>& pieces, const std::vector<Scalar>& scalars, std::size_t dim) {
  if (pieces.size() != scalars.size()) throw PreconditionError("block_scalar: one scalar per piece required");
  if (pieces.empty()) throw PreconditionError("block_scalar: no pieces");
  const FieldPtr& f = scalars.front().field();
  std::vector<Vector> cols;
  std::vector<Scalar> diag;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& v : pieces[i].basis) {
      cols.push_back(v);
      diag.push_back(scalars[i]);
    }
  }
  if (cols.size() != dim) throw PreconditionError("block_scalar: pieces do not span");
  const Matrix s = from_columns(f, dim, cols);
  return s * Matrix::diagonal(diag) * inverse(s);
}

}  // namespace lcalc

#include "lcalc/weil.hpp"

#include <sstream>

namespace lcalc {

bool operator==(const WeilLetter& a, const WeilLetter& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case WeilLetter::Kind::Frobenius: return a.exponent == b.exponent;
    case WeilLetter::Kind::Inertia: return a.index == b.index && a.exponent == b.exponent;
    case WeilLetter::Kind::Tame: return a.tame == b.tame;
  }
  return false;
}

WeilElement WeilElement::frobenius(long m) {
  WeilElement w;
  w.push({WeilLetter::Kind::Frobenius, 0, m, 0});
  return w;
}

WeilElement WeilElement::inertia(std::size_t generator, long k) {
  WeilElement w;
  w.push({WeilLetter::Kind::Inertia, generator, k, 0});
  return w;
}

WeilElement WeilElement::tame(const mpq_class& s) {
  WeilElement w;
  w.push({WeilLetter::Kind::Tame, 0, 0, s});
  return w;
}

WeilElement WeilElement::normal(const std::vector<std::pair<std::size_t, long>>& gamma, const mpq_class& s, long m) {
  WeilElement w;
  for (const auto& [i, k] : gamma) w.push({WeilLetter::Kind::Inertia, i, k, 0});
  w.push({WeilLetter::Kind::Tame, 0, 0, s});
  w.push({WeilLetter::Kind::Frobenius, 0, m, 0});
  return w;
}

void WeilElement::push(WeilLetter letter) {
  letter.tame.canonicalize();
  const bool trivial = letter.kind == WeilLetter::Kind::Tame ? letter.tame == 0 : letter.exponent == 0;
  if (trivial) return;
  if (!letters_.empty()) {
    WeilLetter& last = letters_.back();
    const bool same = last.kind == letter.kind &&
                      (letter.kind != WeilLetter::Kind::Inertia || last.index == letter.index);
    if (same) {
      last.exponent += letter.exponent;
      last.tame += letter.tame;
      const bool vanished = last.kind == WeilLetter::Kind::Tame ? last.tame == 0 : last.exponent == 0;
      if (vanished) letters_.pop_back();
      return;
    }
  }
  letters_.push_back(std::move(letter));
}

long WeilElement::d_F() const {
  long m = 0;
  for (const auto& l : letters_) {
    if (l.kind == WeilLetter::Kind::Frobenius) m += l.exponent;
  }
  return m;
}

std::size_t WeilElement::inertia_generators_used() const {
  std::size_t n = 0;
  for (const auto& l : letters_) {
    if (l.kind == WeilLetter::Kind::Inertia) n = std::max(n, l.index + 1);
  }
  return n;
}

WeilElement WeilElement::inverse() const {
  WeilElement w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    WeilLetter l = *it;
    l.exponent = -l.exponent;
    l.tame = -l.tame;
    w.push(std::move(l));
  }
  return w;
}

WeilElement operator*(const WeilElement& a, const WeilElement& b) {
  WeilElement w = a;
  for (const auto& l : b.letters_) w.push(l);
  return w;
}

std::string WeilElement::to_string() const {
  if (letters_.empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (const auto& l : letters_) {
    if (!first) out << "*";
    first = false;
    switch (l.kind) {
      case WeilLetter::Kind::Frobenius:
        out << "s";
        if (l.exponent != 1) out << "^" << l.exponent;
        break;
      case WeilLetter::Kind::Inertia:
        out << "g" << l.index;
        if (l.exponent != 1) out << "^" << l.exponent;
        break;
      case WeilLetter::Kind::Tame:
        out << "t";
        if (l.tame != 1) out << "^" << l.tame.get_str();
        break;
    }
  }
  return out.str();
}

}  // namespace lcalc

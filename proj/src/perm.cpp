#include "vbw/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vbw {

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("Permutation: negative degree");
  images_.resize(n);
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: images are not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("adjacent: index out of range");
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p(n);
  if (a < 1 || a > n || b < 1 || b > n || a == b)
    throw std::invalid_argument("transposition: bad points");
  std::swap(p.images_[a - 1], p.images_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  Permutation p(n);
  for (const auto& c : cycles) {
    for (size_t k = 0; k < c.size(); ++k) {
      int from = c[k], to = c[(k + 1) % c.size()];
      if (from < 1 || from > n) throw std::invalid_argument("from_cycles: point out of range");
      p.images_[from - 1] = to;
    }
  }
  // validate
  return Permutation(p.images_);
}

Permutation Permutation::parse(const std::string& text, int n) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty() || s == "e" || s == "id") return Permutation(n);
  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("parse: unterminated one-line form");
    std::vector<int> img;
    std::stringstream ss(s.substr(1, s.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ',')) img.push_back(std::stoi(tok));
    if (static_cast<int>(img.size()) != n)
      throw std::invalid_argument("parse: one-line length does not match degree");
    return Permutation(img);
  }
  if (s.front() == '(') {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(') throw std::invalid_argument("parse: expected '('");
      size_t close = s.find(')', pos);
      if (close == std::string::npos) throw std::invalid_argument("parse: unterminated cycle");
      std::vector<int> cyc;
      std::stringstream ss(s.substr(pos + 1, close - pos - 1));
      std::string tok;
      while (std::getline(ss, tok, ',')) cyc.push_back(std::stoi(tok));
      cycles.push_back(cyc);
      pos = close + 1;
    }
    return from_cycles(n, cycles);
  }
  throw std::invalid_argument("parse: unrecognized permutation literal: " + text);
}

int Permutation::apply(int x) const {
  if (x < 1 || x > degree()) throw std::invalid_argument("apply: point out of range");
  return images_[x - 1];
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

int Permutation::order() const {
  int ord = 1;
  for (const auto& c : cycles()) ord = std::lcm(ord, static_cast<int>(c.size()));
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= degree(); ++i) {
    if (seen[i - 1] || images_[i - 1] == i) continue;
    std::vector<int> c{i};
    seen[i - 1] = true;
    for (int j = images_[i - 1]; j != i; j = images_[j - 1]) {
      c.push_back(j);
      seen[j - 1] = true;
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::str() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ",";
    out += std::to_string(images_[i]);
  }
  return out + "]";
}

std::string Permutation::cycle_str() const {
  auto cs = cycles();
  if (cs.empty()) return "e";
  std::string out;
  for (const auto& c : cs) {
    out += "(";
    for (size_t k = 0; k < c.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(c[k]);
    }
    out += ")";
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = p.apply(q.apply(x));
  return Permutation(std::move(img));
}

std::vector<Permutation> all_permutations(int n) {
  if (n > 8) throw std::invalid_argument("all_permutations: n too large for brute force (n <= 8)");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

std::vector<Permutation> centralizer(const std::vector<Permutation>& gens, int n) {
  if (n > 8) throw std::invalid_argument("centralizer: n too large for brute force (n <= 8)");
  for (const auto& g : gens)
    if (g.degree() != n) throw std::invalid_argument("centralizer: generator degree mismatch");
  std::vector<Permutation> out;
  for (const auto& p : all_permutations(n)) {
    bool ok = true;
    for (const auto& g : gens)
      if (compose(p, g) != compose(g, p)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Permutation> canonical_tuple(const std::vector<Permutation>& tuple, int m) {
  if (m > 6) throw std::invalid_argument("canonical_tuple: m too large for brute force (m <= 6)");
  for (const auto& t : tuple)
    if (t.degree() != m) throw std::invalid_argument("canonical_tuple: degree mismatch");
  std::vector<Permutation> best = tuple;
  for (const auto& g : all_permutations(m)) {
    const Permutation gi = g.inverse();
    std::vector<Permutation> cand;
    cand.reserve(tuple.size());
    for (const auto& t : tuple) cand.push_back(compose(compose(g, t), gi));
    if (cand < best) best = std::move(cand);
  }
  return best;
}

const std::array<Permutation, 5>& nu6_images() {
  static const std::array<Permutation, 5> imgs = [] {
    std::array<Permutation, 5> u = {
        Permutation::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
        Permutation::from_cycles(6, {{2, 3}, {1, 5}, {4, 6}}),
        Permutation::from_cycles(6, {{1, 3}, {2, 4}, {5, 6}}),
        Permutation::from_cycles(6, {{1, 2}, {3, 5}, {4, 6}}),
        Permutation::from_cycles(6, {{2, 3}, {1, 4}, {5, 6}}),
    };
    for (int i = 0; i < 5; ++i) {
      if (!compose(u[i], u[i]).is_identity()) throw std::logic_error("nu6: u_i not an involution");
      for (int j = i + 1; j < 5; ++j) {
        if (j - i >= 2) {
          if (compose(u[i], u[j]) != compose(u[j], u[i]))
            throw std::logic_error("nu6: commutation relation fails");
        } else if (compose(compose(u[i], u[j]), u[i]) != compose(compose(u[j], u[i]), u[j])) {
          throw std::logic_error("nu6: braid relation fails");
        }
      }
    }
    return u;
  }();
  return imgs;
}

std::vector<Permutation> involution_class_reps(int m) {
  if (m < 2) throw std::invalid_argument("involution_class_reps: m >= 2 required");
  std::vector<Permutation> out;
  for (int k = 1; 2 * k <= m; ++k) {
    std::vector<std::vector<int>> cycles;
    for (int t = 1; t <= k; ++t) cycles.push_back({2 * t - 1, 2 * t});
    out.push_back(Permutation::from_cycles(m, cycles));
  }
  return out;
}

std::vector<int> adjacent_word(const Permutation& p) {
  // Sort the one-line form to the identity with adjacent swaps; right-
  // multiplying by s_i swaps entries i, i+1, so p * s_{i1} * ... * s_{ik} = id
  // and the word for p is the reversal (adjacent transpositions are involutions).
  std::vector<int> a = p.images();
  std::vector<int> swaps;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(static_cast<int>(i) + 1);
        dirty = true;
      }
    }
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

}  // namespace vbw

#include "vbw/vb.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vbw {

namespace {

void check_vb_index(int index, int n) {
  if (index < 1 || index >= n)
    throw std::invalid_argument("VBWord: generator index out of range for n=" + std::to_string(n));
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

VBWord::VBWord(int n, std::vector<VBLetter> letters) : n_(n) {
  for (auto& l : letters) {
    check_vb_index(l.index, n);
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("VBWord: exponent must be +-1");
    if (l.kind == VBLetter::Tau) l.exp = 1;  // tau_i^2 = 1
    letters_.push_back(l);
  }
}

VBWord VBWord::parse(const std::string& text, int n) {
  VBWord w(n);
  for (const auto& tok : split_tokens(text)) {
    if (tok == "e") continue;
    if (tok.size() < 2) throw std::invalid_argument("VBWord: bad token '" + tok + "'");
    char kind = tok[0];
    std::string rest = tok.substr(1);
    int exp = 1;
    if (!rest.empty() && rest.back() == '\'') {
      exp = -1;
      rest.pop_back();
    }
    int index = std::stoi(rest);
    if (kind == 's')
      w.append({VBLetter::Sigma, index, exp});
    else if (kind == 't')
      w.append({VBLetter::Tau, index, exp});
    else
      throw std::invalid_argument("VBWord: bad token '" + tok + "'");
  }
  return w;
}

VBWord VBWord::concat(const VBWord& o) const {
  if (n_ != o.n_) throw std::invalid_argument("VBWord::concat: strand count mismatch");
  VBWord out = *this;
  for (const auto& l : o.letters_) out.letters_.push_back(l);
  return out;
}

VBWord VBWord::inverse() const {
  VBWord out(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    VBLetter l = *it;
    if (l.kind == VBLetter::Sigma) l.exp = -l.exp;
    out.letters_.push_back(l);
  }
  return out;
}

VBWord& VBWord::append(VBLetter l) {
  check_vb_index(l.index, n_);
  if (l.kind == VBLetter::Tau) l.exp = 1;
  letters_.push_back(l);
  return *this;
}

std::string VBWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += " ";
    out += letters_[k].kind == VBLetter::Sigma ? "s" : "t";
    out += std::to_string(letters_[k].index);
    if (letters_[k].exp < 0) out += "'";
  }
  return out;
}

KBWord::KBWord(int n, std::vector<KBLetter> letters) : n_(n) {
  for (const auto& l : letters) {
    if (l.gen.i == l.gen.j || l.gen.i < 1 || l.gen.j < 1 || l.gen.i > n || l.gen.j > n)
      throw std::invalid_argument("KBWord: bad generator " + l.gen.str());
    if (l.exp != 1 && l.exp != -1) throw std::invalid_argument("KBWord: exponent must be +-1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();  // free reduction
    else
      letters_.push_back(l);
  }
}

KBWord KBWord::parse(const std::string& text, int n) {
  std::vector<KBLetter> letters;
  for (const auto& tok : split_tokens(text)) {
    if (tok == "e") continue;
    if (tok.size() < 4 || tok[0] != 'd')
      throw std::invalid_argument("KBWord: bad token '" + tok + "'");
    std::string rest = tok.substr(1);
    int exp = 1;
    if (rest.back() == '\'') {
      exp = -1;
      rest.pop_back();
    }
    auto dot = rest.find('.');
    if (dot == std::string::npos) throw std::invalid_argument("KBWord: bad token '" + tok + "'");
    int i = std::stoi(rest.substr(0, dot));
    int j = std::stoi(rest.substr(dot + 1));
    letters.push_back({{i, j}, exp});
  }
  return KBWord(n, std::move(letters));
}

KBWord KBWord::single(int n, DeltaGen g, int exp) { return KBWord(n, {{g, exp}}); }

KBWord KBWord::concat(const KBWord& o) const {
  if (n_ != o.n_) throw std::invalid_argument("KBWord::concat: strand count mismatch");
  KBWord out = *this;
  for (const auto& l : o.letters_) {
    if (!out.letters_.empty() && out.letters_.back().gen == l.gen &&
        out.letters_.back().exp == -l.exp)
      out.letters_.pop_back();
    else
      out.letters_.push_back(l);
  }
  return out;
}

KBWord KBWord::inverse() const {
  KBWord out(n_);
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->gen, -it->exp});
  return out;
}

KBWord KBWord::pow(int k) const {
  KBWord base = k >= 0 ? *this : inverse();
  KBWord out(n_);
  for (int t = 0; t < std::abs(k); ++t) out = out.concat(base);
  return out;
}

GeneratorSubset KBWord::support() const {
  GeneratorSubset X(n_);
  for (const auto& l : letters_) X.insert(l.gen);
  return X;
}

std::string KBWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += " ";
    out += letters_[k].gen.str();
    if (letters_[k].exp < 0) out += "'";
  }
  return out;
}

KBWord perm_act_kb(const Permutation& w, const KBWord& a) {
  if (w.degree() != a.strands()) throw std::invalid_argument("perm_act_kb: degree mismatch");
  std::vector<KBLetter> letters;
  letters.reserve(a.letters().size());
  for (const auto& l : a.letters())
    letters.push_back({{w.apply(l.gen.i), w.apply(l.gen.j)}, l.exp});
  return KBWord(a.strands(), std::move(letters));
}

VBWord expand_delta(int n, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("expand_delta: indices out of range");
  VBWord w(n);
  const int lo = std::min(i, j), hi = std::max(i, j);
  for (int t = lo; t <= hi - 2; ++t) w.append({VBLetter::Tau, t, 1});
  if (i > j) w.append({VBLetter::Tau, hi - 1, 1});
  w.append({VBLetter::Sigma, hi - 1, 1});
  if (i > j) w.append({VBLetter::Tau, hi - 1, 1});
  for (int t = hi - 2; t >= lo; --t) w.append({VBLetter::Tau, t, 1});
  return w;
}

std::string SemidirectElement::str() const { return "(" + kb.str() + ", " + perm.str() + ")"; }

SemidirectElement sd_identity(int n) { return {KBWord(n), Permutation(n)}; }

SemidirectElement sd_multiply(const SemidirectElement& x, const SemidirectElement& y) {
  if (x.kb.strands() != y.kb.strands())
    throw std::invalid_argument("sd_multiply: strand count mismatch");
  return {x.kb.concat(perm_act_kb(x.perm, y.kb)), compose(x.perm, y.perm)};
}

SemidirectElement sd_inverse(const SemidirectElement& x) {
  const Permutation wi = x.perm.inverse();
  return {perm_act_kb(wi, x.kb.inverse()), wi};
}

SemidirectElement sd_conjugate(const KBWord& b, const SemidirectElement& x) {
  const SemidirectElement bexp{b, Permutation(b.strands())};
  return sd_multiply(sd_multiply(bexp, x), sd_inverse(bexp));
}

SemidirectElement to_semidirect(const VBWord& w) {
  const int n = w.strands();
  SemidirectElement acc = sd_identity(n);
  for (const auto& l : w.letters()) {
    if (l.kind == VBLetter::Tau) {
      acc = sd_multiply(acc, {KBWord(n), Permutation::adjacent(n, l.index)});
    } else {
      acc = sd_multiply(acc, {KBWord::single(n, {l.index, l.index + 1}, l.exp), Permutation(n)});
    }
  }
  return acc;
}

VBWord from_semidirect(const SemidirectElement& x) {
  const int n = x.kb.strands();
  VBWord out(n);
  for (const auto& l : x.kb.letters()) {
    VBWord d = expand_delta(n, l.gen.i, l.gen.j);
    out = out.concat(l.exp > 0 ? d : d.inverse());
  }
  for (int i : adjacent_word(x.perm)) out.append({VBLetter::Tau, i, 1});
  return out;
}

std::pair<long, int> vb_abelianize(const VBWord& w) {
  long sigma_deg = 0;
  int tau_parity = 0;
  for (const auto& l : w.letters()) {
    if (l.kind == VBLetter::Sigma)
      sigma_deg += l.exp;
    else
      tau_parity ^= 1;
  }
  return {sigma_deg, tau_parity};
}

KBAbelianClasses kb_abelian_classes(int n) {
  if (n < 2) throw std::invalid_argument("kb_abelian_classes: n >= 2 required");
  const auto S = GeneratorSubset::full(n).members();
  auto id_of = [&](const DeltaGen& g) {
    return static_cast<int>(std::lower_bound(S.begin(), S.end(), g) - S.begin());
  };
  std::vector<int> parent(S.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        int a = find(id_of({i, j})), b = find(id_of({j, k}));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  KBAbelianClasses out;
  out.n = n;
  std::vector<int> root_to_class(S.size(), -1);
  for (size_t g = 0; g < S.size(); ++g) {
    int r = find(static_cast<int>(g));
    if (root_to_class[r] == -1) {
      root_to_class[r] = static_cast<int>(out.class_keys.size());
      out.class_keys.push_back(S[r]);
      out.classes.emplace_back();
    }
    out.classes[root_to_class[r]].push_back(S[g]);
  }
  return out;
}

int KBAbelianClasses::class_of(const DeltaGen& g) const {
  for (size_t c = 0; c < classes.size(); ++c)
    for (const auto& m : classes[c])
      if (m == g) return static_cast<int>(c);
  throw std::invalid_argument("class_of: generator out of range");
}

std::vector<long> kb_abelianize(const KBWord& a) {
  const auto cls = kb_abelian_classes(a.strands());
  std::vector<long> out(cls.class_keys.size(), 0);
  for (const auto& l : a.letters()) out[cls.class_of(l.gen)] += l.exp;
  return out;
}

Permutation kb_transposition_image(const KBWord& a) {
  Permutation acc(a.strands());
  for (const auto& l : a.letters())
    acc = compose(acc, Permutation::transposition(a.strands(), l.gen.i, l.gen.j));
  return acc;
}

Permutation pi_k(const VBWord& w) {
  Permutation acc(w.strands());
  for (const auto& l : w.letters())
    if (l.kind == VBLetter::Tau) acc = compose(acc, Permutation::adjacent(w.strands(), l.index));
  return acc;
}

Permutation pi_p(const VBWord& w) {
  Permutation acc(w.strands());
  for (const auto& l : w.letters()) acc = compose(acc, Permutation::adjacent(w.strands(), l.index));
  return acc;
}

}  // namespace vbw

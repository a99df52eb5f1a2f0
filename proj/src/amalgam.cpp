#include "vbw/amalgam.hpp"

#include <algorithm>
#include <cstdlib>

namespace vbw {

GWord::GWord(std::vector<std::pair<int, int>> letters) {
  for (const auto& [g, e] : letters) {
    if (g < 1) throw std::invalid_argument("GWord: generator ids are >= 1");
    if (e != 1 && e != -1) throw std::invalid_argument("GWord: exponent must be +-1");
    if (!letters_.empty() && letters_.back().first == g && letters_.back().second == -e)
      letters_.pop_back();
    else
      letters_.push_back({g, e});
  }
}

GWord GWord::concat(const GWord& o) const {
  GWord out = *this;
  for (const auto& [g, e] : o.letters_) {
    if (!out.letters_.empty() && out.letters_.back().first == g && out.letters_.back().second == -e)
      out.letters_.pop_back();
    else
      out.letters_.push_back({g, e});
  }
  return out;
}

GWord GWord::inverse() const {
  GWord out;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    out.letters_.push_back({it->first, -it->second});
  return out;
}

GWord GWord::pow(int k) const {
  GWord base = k >= 0 ? *this : inverse();
  GWord out;
  for (int t = 0; t < std::abs(k); ++t) out = out.concat(base);
  return out;
}

std::string GWord::str() const {
  if (letters_.empty()) return "e";
  std::string out;
  for (size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += " ";
    out += "g" + std::to_string(letters_[k].first);
    if (letters_[k].second < 0) out += "'";
  }
  return out;
}

AmalgamOracles<GWord> make_free_amalgam(std::vector<std::vector<int>> factor_alphabets,
                                        std::vector<int> base_alphabet) {
  AmalgamOracles<GWord> o;
  o.factor_count = static_cast<int>(factor_alphabets.size());
  o.identity = GWord();
  o.mul = [](const GWord& a, const GWord& b) { return a.concat(b); };
  o.inv = [](const GWord& a) { return a.inverse(); };
  o.eq = [](const GWord& a, const GWord& b) { return a == b; };

  auto in_base = [base_alphabet](int id) {
    return std::find(base_alphabet.begin(), base_alphabet.end(), id) != base_alphabet.end();
  };
  o.theta_beta = [factor_alphabets, in_base](int j, const GWord& g)
      -> std::optional<std::pair<GWord, GWord>> {
    const auto& alpha = factor_alphabets[j - 1];
    for (const auto& [id, e] : g.letters())
      if (std::find(alpha.begin(), alpha.end(), id) == alpha.end())
        throw std::invalid_argument("free amalgam: letter outside factor alphabet");
    // strip the maximal base-letter suffix; the prefix is the coset rep
    const auto& ls = g.letters();
    size_t cut = ls.size();
    while (cut > 0 && in_base(ls[cut - 1].first)) --cut;
    GWord theta(std::vector<std::pair<int, int>>(ls.begin(), ls.begin() + cut));
    GWord beta(std::vector<std::pair<int, int>>(ls.begin() + cut, ls.end()));
    return std::make_pair(theta, beta);
  };
  o.syllabify = [factor_alphabets, in_base](const GWord& w) {
    std::vector<std::pair<int, GWord>> out;
    std::vector<std::pair<int, int>> pending;  // base letters awaiting a factor
    int cur_factor = 0;
    std::vector<std::pair<int, int>> cur;
    auto flush = [&] {
      if (cur_factor != 0) out.push_back({cur_factor, GWord(cur)});
      cur.clear();
      cur_factor = 0;
    };
    for (const auto& l : w.letters()) {
      if (in_base(l.first)) {
        if (cur_factor != 0)
          cur.push_back(l);
        else
          pending.push_back(l);
        continue;
      }
      int f = 0;
      for (size_t j = 0; j < factor_alphabets.size(); ++j)
        if (std::find(factor_alphabets[j].begin(), factor_alphabets[j].end(), l.first) !=
            factor_alphabets[j].end()) {
          f = static_cast<int>(j) + 1;
          break;
        }
      if (f == 0) throw std::invalid_argument("free amalgam: letter in no factor alphabet");
      if (cur_factor != f) {
        flush();
        cur_factor = f;
        cur = pending;
        pending.clear();
      }
      cur.push_back(l);
    }
    flush();
    if (!pending.empty()) out.push_back({1, GWord(pending)});  // pure-base tail
    return out;
  };
  return o;
}

AmalgamAutomorphism<GWord> make_letter_swap(const std::vector<std::pair<int, int>>& swaps,
                                            const std::function<int(int)>& factor_map) {
  AmalgamAutomorphism<GWord> tau;
  tau.factor_map = factor_map;
  tau.elem_map = [swaps](const GWord& w) {
    std::vector<std::pair<int, int>> letters;
    for (auto [id, e] : w.letters()) {
      for (const auto& [x, y] : swaps) {
        if (id == x) {
          id = y;
          break;
        }
        if (id == y) {
          id = x;
          break;
        }
      }
      letters.push_back({id, e});
    }
    return GWord(letters);
  };
  return tau;
}

}  // namespace vbw

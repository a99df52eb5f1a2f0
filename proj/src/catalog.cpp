#include "vbw/catalog.hpp"

#include <stdexcept>

namespace vbw {

GroupElement GroupElement::identity(GroupKind kind, int degree) {
  if (kind == GroupKind::Sym) return sym(Permutation(degree));
  return vb(sd_identity(degree));
}

GroupElement GroupElement::mul(const GroupElement& o) const {
  if (kind != o.kind) throw std::invalid_argument("GroupElement::mul: kind mismatch");
  if (kind == GroupKind::Sym) return sym(compose(perm, o.perm));
  return vb(sd_multiply(sd, o.sd));
}

GroupElement GroupElement::inv() const {
  if (kind == GroupKind::Sym) return sym(perm.inverse());
  return vb(sd_inverse(sd));
}

std::string GroupElement::str() const {
  return kind == GroupKind::Sym ? perm.str() : sd.str();
}

EqVerdict element_trivial(const GroupElement& x, Budget& budget) {
  if (x.kind == GroupKind::Sym) {
    if (x.perm.is_identity()) return {EqOutcome::Equal, "permutation identity", "", budget.spent};
    return {EqOutcome::Distinct, "", "permutation " + x.perm.str() + " != id", budget.spent};
  }
  if (!x.sd.perm.is_identity())
    return {EqOutcome::Distinct, "", "permutation part " + x.sd.perm.str() + " != id",
            budget.spent};
  return kb_trivial(x.sd.kb, budget);
}

EqVerdict element_equal(const GroupElement& x, const GroupElement& y, Budget& budget) {
  return element_trivial(x.mul(y.inv()), budget);
}

GroupElement CatalogHom::eval(const VBWord& w) const {
  if (source != GroupKind::VB) throw std::invalid_argument("eval: source is not VB");
  if (w.strands() != n) throw std::invalid_argument("eval: strand count mismatch");
  GroupElement acc = GroupElement::identity(target, m);
  for (const auto& l : w.letters()) {
    const GroupElement& img =
        l.kind == VBLetter::Sigma ? images_a[l.index - 1] : images_b[l.index - 1];
    acc = acc.mul(l.exp > 0 ? img : img.inv());
  }
  return acc;
}

GroupElement CatalogHom::eval_sym_word(const std::vector<int>& w) const {
  if (source != GroupKind::Sym) throw std::invalid_argument("eval_sym_word: source is not Sym");
  GroupElement acc = GroupElement::identity(target, m);
  for (int g : w) {
    const int idx = std::abs(g);
    if (idx < 1 || idx > n - 1) throw std::invalid_argument("eval_sym_word: index out of range");
    const GroupElement& img = images_a[idx - 1];
    acc = acc.mul(g > 0 ? img : img.inv());
  }
  return acc;
}

GroupElement CatalogHom::eval_perm(const Permutation& p) const {
  std::vector<int> w = adjacent_word(p);
  return eval_sym_word(w);
}

std::vector<VBWord> vb_relators(int n) {
  std::vector<VBWord> rs;
  auto sigma = [](int i, int e = 1) { return VBLetter{VBLetter::Sigma, i, e}; };
  auto tau = [](int i) { return VBLetter{VBLetter::Tau, i, 1}; };
  for (int i = 1; i <= n - 1; ++i) {  // tau_i^2
    VBWord w(n);
    w.append(tau(i)).append(tau(i));
    rs.push_back(w);
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      VBWord a(n);  // sigma commutation
      a.append(sigma(i)).append(sigma(j)).append(sigma(i, -1)).append(sigma(j, -1));
      rs.push_back(a);
      VBWord b(n);  // tau commutation
      b.append(tau(i)).append(tau(j)).append(tau(i)).append(tau(j));
      rs.push_back(b);
      VBWord c(n);  // mixed commutation, both orders
      c.append(tau(i)).append(sigma(j)).append(tau(i)).append(sigma(j, -1));
      rs.push_back(c);
      VBWord d(n);
      d.append(tau(j)).append(sigma(i)).append(tau(j)).append(sigma(i, -1));
      rs.push_back(d);
    }
  for (int i = 1; i <= n - 2; ++i) {
    const int j = i + 1;
    VBWord a(n);  // sigma braid
    a.append(sigma(i)).append(sigma(j)).append(sigma(i));
    a.append(sigma(j, -1)).append(sigma(i, -1)).append(sigma(j, -1));
    rs.push_back(a);
    VBWord b(n);  // tau braid
    b.append(tau(i)).append(tau(j)).append(tau(i)).append(tau(j)).append(tau(i)).append(tau(j));
    rs.push_back(b);
    VBWord c(n);  // tau_i tau_j sigma_i = sigma_j tau_i tau_j
    c.append(tau(i)).append(tau(j)).append(sigma(i));
    c.append(tau(j)).append(tau(i)).append(sigma(j, -1));
    rs.push_back(c);
    VBWord d(n);  // tau_j tau_i sigma_j = sigma_i tau_j tau_i
    d.append(tau(j)).append(tau(i)).append(sigma(j));
    d.append(tau(i)).append(tau(j)).append(sigma(i, -1));
    rs.push_back(d);
  }
  return rs;
}

std::vector<std::vector<int>> sym_relators(int n) {
  std::vector<std::vector<int>> rs;
  for (int i = 1; i <= n - 1; ++i) rs.push_back({i, i});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) rs.push_back({i, j, -i, -j});
  for (int i = 1; i <= n - 2; ++i) rs.push_back({i, i + 1, i, -(i + 1), -i, -(i + 1)});
  return rs;
}

namespace {

GroupElement vb_gen_sigma(int n, int i, int e = 1) {
  return GroupElement::vb({KBWord::single(n, {i, i + 1}, e), Permutation(n)});
}
GroupElement vb_gen_tau(int n, int i) {
  return GroupElement::vb({KBWord(n), Permutation::adjacent(n, i)});
}
GroupElement vb_perm(int n, const Permutation& p) {
  return GroupElement::vb({KBWord(n), p});
}

CatalogHom build(const std::string& name, int n) {
  CatalogHom h;
  h.name = name;
  h.n = n;
  const auto require6 = [&] {
    if (n != 6) throw std::invalid_argument("catalog: " + name + " requires n = 6");
  };
  const auto& u = nu6_images();

  if (name == "piK" || name == "piP") {
    h.source = GroupKind::VB;
    h.target = GroupKind::Sym;
    h.m = n;
    for (int i = 1; i <= n - 1; ++i) {
      h.images_a.push_back(GroupElement::sym(name == "piK" ? Permutation(n)
                                                           : Permutation::adjacent(n, i)));
      h.images_b.push_back(GroupElement::sym(Permutation::adjacent(n, i)));
    }
  } else if (name == "nu6.piK" || name == "nu6.piP") {
    require6();
    h.source = GroupKind::VB;
    h.target = GroupKind::Sym;
    h.m = 6;
    for (int i = 1; i <= 5; ++i) {
      h.images_a.push_back(GroupElement::sym(name == "nu6.piK" ? Permutation(6) : u[i - 1]));
      h.images_b.push_back(GroupElement::sym(u[i - 1]));
    }
  } else if (name == "iota") {
    h.source = GroupKind::Sym;
    h.target = GroupKind::VB;
    h.m = n;
    for (int i = 1; i <= n - 1; ++i) h.images_a.push_back(vb_gen_tau(n, i));
  } else if (name == "iota.nu6") {
    require6();
    h.source = GroupKind::Sym;
    h.target = GroupKind::VB;
    h.m = 6;
    for (int i = 1; i <= 5; ++i) h.images_a.push_back(vb_perm(6, u[i - 1]));
  } else if (name == "nu6") {
    require6();
    h.source = GroupKind::Sym;
    h.target = GroupKind::Sym;
    h.m = 6;
    for (int i = 1; i <= 5; ++i) h.images_a.push_back(GroupElement::sym(u[i - 1]));
  } else if (name == "idSym") {
    h.source = GroupKind::Sym;
    h.target = GroupKind::Sym;
    h.m = n;
    for (int i = 1; i <= n - 1; ++i)
      h.images_a.push_back(GroupElement::sym(Permutation::adjacent(n, i)));
  } else if (name == "id" || name == "zeta1" || name == "zeta2" || name == "zeta1.zeta2") {
    h.source = GroupKind::VB;
    h.target = GroupKind::VB;
    h.m = n;
    for (int i = 1; i <= n - 1; ++i) {
      if (name == "id")
        h.images_a.push_back(vb_gen_sigma(n, i));
      else if (name == "zeta1")  // tau_i sigma_i tau_i folds to (delta_{i+1,i}, id)
        h.images_a.push_back(GroupElement::vb({KBWord::single(n, {i + 1, i}), Permutation(n)}));
      else if (name == "zeta2")
        h.images_a.push_back(vb_gen_sigma(n, i, -1));
      else  // zeta1.zeta2: sigma_i -> tau_i sigma_i^{-1} tau_i = (delta_{i+1,i}^{-1}, id)
        h.images_a.push_back(GroupElement::vb({KBWord::single(n, {i + 1, i}, -1), Permutation(n)}));
      h.images_b.push_back(vb_gen_tau(n, i));
    }
  } else if (name == "iota.piK" || name == "iota.piP") {
    h.source = GroupKind::VB;
    h.target = GroupKind::VB;
    h.m = n;
    for (int i = 1; i <= n - 1; ++i) {
      h.images_a.push_back(name == "iota.piK" ? GroupElement::vb(sd_identity(n))
                                              : vb_gen_tau(n, i));
      h.images_b.push_back(vb_gen_tau(n, i));
    }
  } else if (name == "iota.nu6.piK" || name == "iota.nu6.piP") {
    require6();
    h.source = GroupKind::VB;
    h.target = GroupKind::VB;
    h.m = 6;
    for (int i = 1; i <= 5; ++i) {
      h.images_a.push_back(name == "iota.nu6.piK" ? GroupElement::vb(sd_identity(6))
                                                  : vb_perm(6, u[i - 1]));
      h.images_b.push_back(vb_perm(6, u[i - 1]));
    }
  } else {
    throw std::invalid_argument("catalog: unknown homomorphism '" + name + "'");
  }
  return h;
}

}  // namespace

CatalogHom make_catalog_hom(const std::string& name, int n, long budget) {
  CatalogHom h = build(name, n);
  HomVerification v = verify_catalog_hom(h, budget);
  if (!v.ok) {
    if (v.unknown)
      throw std::runtime_error("catalog: could not certify " + name + " within budget (relator " +
                               v.failed_relator + ")");
    throw std::logic_error("catalog: " + name + " violates relator " + v.failed_relator + ": " +
                           v.detail);
  }
  return h;
}

std::vector<std::string> catalog_hom_names(int n) {
  std::vector<std::string> names = {"piK",      "piP",      "iota", "idSym", "id",
                                    "zeta1",    "zeta2",    "zeta1.zeta2", "iota.piK",
                                    "iota.piP"};
  if (n == 6) {
    for (const char* s : {"nu6", "nu6.piK", "nu6.piP", "iota.nu6", "iota.nu6.piK", "iota.nu6.piP"})
      names.push_back(s);
  }
  return names;
}

HomVerification verify_catalog_hom(const CatalogHom& h, long budget_limit) {
  Budget budget{budget_limit, 0};
  if (h.source == GroupKind::VB) {
    for (const auto& r : vb_relators(h.n)) {
      EqVerdict v = element_trivial(h.eval(r), budget);
      if (!v.equal()) return {false, v.unknown(), r.str(), v.witness};
    }
  } else {
    for (const auto& r : sym_relators(h.n)) {
      EqVerdict v = element_trivial(h.eval_sym_word(r), budget);
      if (!v.equal()) {
        std::string rs;
        for (int g : r) rs += (g < 0 ? " -s" : " s") + std::to_string(std::abs(g));
        return {false, v.unknown(), rs, v.witness};
      }
    }
  }
  return {true, false, "", ""};
}

std::string distinguish_homs(const CatalogHom& a, const CatalogHom& b, long budget_limit) {
  if (a.source != b.source || a.target != b.target || a.n != b.n || a.m != b.m) return "signature";
  Budget budget{budget_limit, 0};
  auto probe = [&](const GroupElement& x, const GroupElement& y,
                   const std::string& gen) -> std::string {
    if (a.target == GroupKind::Sym) {
      if (x.perm != y.perm) return gen + ": " + x.perm.str() + " vs " + y.perm.str();
      return "";
    }
    if (x.sd.perm != y.sd.perm)
      return gen + ": permutation parts " + x.sd.perm.str() + " vs " + y.sd.perm.str();
    auto abx = kb_abelianize(x.sd.kb), aby = kb_abelianize(y.sd.kb);
    if (abx != aby) return gen + ": kb abelianizations differ";
    EqVerdict v = kb_equal(x.sd.kb, y.sd.kb, budget);
    if (v.distinct()) return gen + ": " + v.witness;
    return "";
  };
  for (size_t i = 0; i < a.images_a.size(); ++i) {
    std::string gen =
        a.source == GroupKind::VB ? "sigma_" + std::to_string(i + 1) : "s_" + std::to_string(i + 1);
    std::string d = probe(a.images_a[i], b.images_a[i], gen);
    if (!d.empty()) return d;
  }
  for (size_t i = 0; i < a.images_b.size(); ++i) {
    std::string d = probe(a.images_b[i], b.images_b[i], "tau_" + std::to_string(i + 1));
    if (!d.empty()) return d;
  }
  return "";
}

}  // namespace vbw

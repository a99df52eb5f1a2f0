#include "vbw/homsearch.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "vbw/catalog.hpp"

namespace vbw {

FinitePresentation FinitePresentation::symmetric(int n) {
  FinitePresentation P;
  P.name = "sym" + std::to_string(n);
  P.generators = n - 1;
  P.relators = sym_relators(n);
  return P;
}

FinitePresentation FinitePresentation::virtual_braid(int n) {
  FinitePresentation P;
  P.name = "vb" + std::to_string(n);
  P.generators = 2 * (n - 1);
  // encode sigma_i as i, tau_i as n-1+i, reusing the sigma/tau relator list
  for (const auto& r : vb_relators(n)) {
    std::vector<int> word;
    for (const auto& l : r.letters()) {
      int id = l.kind == VBLetter::Sigma ? l.index : n - 1 + l.index;
      word.push_back(l.exp > 0 ? id : -id);
    }
    P.relators.push_back(word);
  }
  return P;
}

namespace {

Permutation eval_word(const std::vector<int>& word, const std::vector<Permutation>& images,
                      int m) {
  Permutation acc(m);
  for (int g : word) {
    const Permutation& img = images[std::abs(g) - 1];
    acc = compose(acc, g > 0 ? img : img.inverse());
  }
  return acc;
}

bool relators_hold(const std::vector<std::vector<int>>& relators,
                   const std::vector<Permutation>& images, int m) {
  for (const auto& r : relators)
    if (!eval_word(r, images, m).is_identity()) return false;
  return true;
}

std::vector<Permutation> conjugacy_class_reps(int m) {
  std::vector<Permutation> reps;
  const auto all = all_permutations(m);
  std::vector<bool> seen(all.size(), false);
  std::map<std::vector<int>, size_t> index;
  for (size_t k = 0; k < all.size(); ++k) index[all[k].images()] = k;
  for (size_t k = 0; k < all.size(); ++k) {
    if (seen[k]) continue;
    reps.push_back(all[k]);
    for (const auto& g : all) {
      Permutation c = compose(compose(g, all[k]), g.inverse());
      seen[index[c.images()]] = true;
    }
  }
  return reps;
}

bool tuple_commutes(const std::vector<Permutation>& t) {
  for (size_t a = 0; a < t.size(); ++a)
    for (size_t b = a + 1; b < t.size(); ++b)
      if (compose(t[a], t[b]) != compose(t[b], t[a])) return false;
  return true;
}

long orbit_size(const std::vector<Permutation>& tuple, int m) {
  long stab = 0;
  for (const auto& g : all_permutations(m)) {
    const Permutation gi = g.inverse();
    bool fixes = true;
    for (const auto& t : tuple)
      if (compose(compose(g, t), gi) != t) {
        fixes = false;
        break;
      }
    if (fixes) ++stab;
  }
  long fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  return fact / stab;
}

std::string involution_detail(const Permutation& w) {
  if (w.is_identity()) return "trivial";
  return "2^" + std::to_string(w.cycles().size());
}

// Deduplicate image tuples by canonical form and build tagged classes.
std::vector<HomClass> build_classes(const std::vector<std::vector<Permutation>>& tuples, int m) {
  std::map<std::vector<Permutation>, HomClass> by_canonical;
  for (const auto& t : tuples) {
    auto canon = canonical_tuple(t, m);
    if (by_canonical.count(canon)) continue;
    HomClass c;
    c.images = canon;
    c.orbit_size = orbit_size(canon, m);
    by_canonical[canon] = c;
  }
  std::vector<HomClass> out;
  for (auto& [k, c] : by_canonical) out.push_back(std::move(c));
  return out;
}

void run_jobs(int jobs, int branches, const std::function<void(int)>& body) {
  if (jobs <= 1 || branches <= 1) {
    for (int b = 0; b < branches; ++b) body(b);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < std::min(jobs, branches); ++t)
    pool.emplace_back([&] {
      for (int b = next++; b < branches; b = next++) body(b);
    });
  for (auto& th : pool) th.join();
}

}  // namespace

long ClassifyReport::count_tag(const std::string& tag) const {
  long c = 0;
  for (const auto& cls : classes)
    if (cls.tag == tag) ++c;
  return c;
}

std::string ClassifyReport::to_json() const {
  nlohmann::json j;
  j["source"] = source;
  j["target_degree"] = target_degree;
  j["raw_count"] = raw_count;
  j["certified"] = certified;
  j["catalog_match"] = catalog_match;
  j["notes"] = notes;
  j["seconds"] = seconds;
  j["classes"] = nlohmann::json::array();
  for (const auto& c : classes) {
    nlohmann::json jc;
    jc["tag"] = c.tag;
    jc["detail"] = c.detail;
    jc["orbit_size"] = c.orbit_size;
    jc["images"] = nlohmann::json::array();
    for (const auto& p : c.images) jc["images"].push_back(p.images());
    j["classes"].push_back(jc);
  }
  return j.dump(2);
}

ClassifyReport enumerate_homs(const FinitePresentation& P, int m, const ClassifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m > 6) throw std::invalid_argument("enumerate_homs: m <= 6 required for certification");
  const auto all = all_permutations(m);
  const auto first_candidates = conjugacy_class_reps(m);

  // relators become checkable once their highest generator is assigned
  std::vector<std::vector<std::vector<int>>> by_max(P.generators + 1);
  for (const auto& r : P.relators) {
    int mx = 0;
    for (int g : r) mx = std::max(mx, std::abs(g));
    by_max[mx].push_back(r);
  }

  long nodes = 0;
  std::vector<std::vector<Permutation>> found;
  std::vector<Permutation> images;
  std::function<void(int)> assign = [&](int gen) {
    if (gen > P.generators) {
      found.push_back(images);
      return;
    }
    const auto& candidates = gen == 1 ? first_candidates : all;
    for (const auto& c : candidates) {
      if (++nodes > opts.max_nodes)
        throw std::runtime_error("enumerate_homs: node budget exceeded (partial results "
                                 "are a hard error for certification runs)");
      images.push_back(c);
      bool ok = true;
      for (const auto& r : by_max[gen])
        if (!eval_word(r, images, m).is_identity()) {
          ok = false;
          break;
        }
      if (ok) assign(gen + 1);
      images.pop_back();
    }
  };
  assign(1);

  ClassifyReport rep;
  rep.source = P.name;
  rep.target_degree = m;
  rep.classes = build_classes(found, m);
  for (auto& c : rep.classes) {
    if (tuple_commutes(c.images)) {
      c.tag = "abelian";
      bool all_equal = true;
      for (const auto& p : c.images) all_equal &= (p == c.images.front());
      if (all_equal && !c.images.empty()) c.detail = involution_detail(c.images.front());
    } else {
      c.tag = "other";
    }
    rep.raw_count += c.orbit_size;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

namespace {

void retag_sym_classes(ClassifyReport& rep, int n, int m) {
  if (n == m) {
    std::vector<Permutation> id_tuple;
    for (int i = 1; i <= n - 1; ++i) id_tuple.push_back(Permutation::adjacent(n, i));
    const auto id_canon = canonical_tuple(id_tuple, m);
    const auto nu6_canon =
        n == 6 ? canonical_tuple({nu6_images().begin(), nu6_images().end()}, 6) : id_canon;
    for (auto& c : rep.classes) {
      if (c.tag == "abelian") continue;
      if (c.images == id_canon)
        c.tag = "identity";
      else if (n == 6 && c.images == nu6_canon)
        c.tag = "nu6";
    }
  }
}

bool sym_catalog_matches(const ClassifyReport& rep, int n, int m) {
  long expected_abelian = 1 + m / 2;  // trivial plus one class per involution type
  if (rep.count_tag("abelian") != expected_abelian) return false;
  if (rep.count_tag("other") != 0) return false;
  if (rep.count_tag("identity") != (n == m ? 1 : 0)) return false;
  if (rep.count_tag("nu6") != (n == m && n == 6 ? 1 : 0)) return false;
  return true;
}

}  // namespace

ClassifyReport classify_sym_to_sym(int n, int m, const ClassifyOptions& opts) {
  if (m < 1 || m > n || n < 3)
    throw std::invalid_argument("classify_sym_to_sym: need 3 <= n, 1 <= m <= n");
  ClassifyReport rep = enumerate_homs(FinitePresentation::symmetric(n), m, opts);
  retag_sym_classes(rep, n, m);
  const bool in_certified_range = n >= 5 && n <= 6;
  rep.certified = in_certified_range;
  if (in_certified_range) {
    rep.catalog_match = sym_catalog_matches(rep, n, m);
  } else {
    rep.notes.push_back("uncertified: n outside the certified range {5, 6}");
  }
  return rep;
}

ClassifyReport classify_vb_to_sym(int n, int m, const ClassifyOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  if (m < 1 || m > n || n < 3)
    throw std::invalid_argument("classify_vb_to_sym: need 3 <= n, 1 <= m <= n");
  if (m > 6) throw std::invalid_argument("classify_vb_to_sym: m <= 6 required");
  const FinitePresentation P = FinitePresentation::virtual_braid(n);
  ClassifyReport tau_rep = enumerate_homs(FinitePresentation::symmetric(n), m, opts);

  // For each tau-image class, sigma_1 must centralize the images of
  // tau_3..tau_{n-1}; sigma_{i+1} is then forced by the mixed relation.
  std::vector<std::vector<std::vector<Permutation>>> branch_results(tau_rep.classes.size());
  run_jobs(opts.jobs, static_cast<int>(tau_rep.classes.size()), [&](int b) {
    const auto& taus = tau_rep.classes[b].images;
    std::vector<Permutation> cgens(taus.begin() + std::min<size_t>(2, taus.size()), taus.end());
    for (const auto& w2 : centralizer(cgens, m)) {
      std::vector<Permutation> images(2 * (n - 1), Permutation(m));
      for (int i = 1; i <= n - 1; ++i) images[n - 1 + i - 1] = taus[i - 1];
      images[0] = w2;
      for (int i = 1; i <= n - 2; ++i) {
        const Permutation &ti = taus[i - 1], &tj = taus[i];
        images[i] = compose(compose(compose(compose(ti, tj), images[i - 1]), tj), ti);
      }
      if (relators_hold(P.relators, images, m)) branch_results[b].push_back(images);
    }
  });

  std::vector<std::vector<Permutation>> tuples;
  for (const auto& br : branch_results)
    for (const auto& t : br) tuples.push_back(t);

  ClassifyReport rep;
  rep.source = P.name;
  rep.target_degree = m;
  rep.classes = build_classes(tuples, m);

  auto catalog_canon = [&](const std::string& name) {
    CatalogHom h = make_catalog_hom(name, n);
    std::vector<Permutation> t;
    for (const auto& e : h.images_a) t.push_back(e.perm);
    for (const auto& e : h.images_b) t.push_back(e.perm);
    return canonical_tuple(t, m);
  };
  std::map<std::vector<Permutation>, std::string> labels;
  if (n == m) {
    labels[catalog_canon("piK")] = "piK";
    labels[catalog_canon("piP")] = "piP";
    if (n == 6) {
      labels[catalog_canon("nu6.piK")] = "nu6.piK";
      labels[catalog_canon("nu6.piP")] = "nu6.piP";
    }
  }
  for (auto& c : rep.classes) {
    if (tuple_commutes(c.images)) {
      c.tag = "abelian";
      // an abelian VB_n -> S_m hom is generated by the common tau image and
      // the common sigma image
      c.detail = "tau:" + c.images[n - 1].cycle_str() + " sigma:" + c.images[0].cycle_str();
    } else if (auto it = labels.find(c.images); it != labels.end()) {
      c.tag = it->second;
    } else {
      c.tag = "other";
    }
    rep.raw_count += c.orbit_size;
  }

  const bool in_certified_range = n >= 5 && n <= 6;
  rep.certified = in_certified_range;
  if (in_certified_range) {
    bool match = rep.count_tag("other") == 0;
    match &= rep.count_tag("piK") == (n == m ? 1 : 0);
    match &= rep.count_tag("piP") == (n == m ? 1 : 0);
    match &= rep.count_tag("nu6.piK") == (n == m && n == 6 ? 1 : 0);
    match &= rep.count_tag("nu6.piP") == (n == m && n == 6 ? 1 : 0);
    rep.catalog_match = match;
  } else {
    rep.notes.push_back("uncertified: n outside the certified range {5, 6}");
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace vbw

// Command-line front end: normalization, homomorphism evaluation, equality
// verdicts, classification and the verification suites.  JSON goes to stdout,
// human-readable summaries to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 budget exhausted (an Unknown outcome on a certification path).

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "vbw/catalog.hpp"
#include "vbw/homsearch.hpp"
#include "vbw/kbeq.hpp"
#include "vbw/suites.hpp"
#include "vbw/vb.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

long env_budget() {
  if (const char* s = std::getenv("VBW_BUDGET")) {
    try {
      return std::stol(s);
    } catch (...) {
      std::cerr << "warning: ignoring malformed VBW_BUDGET\n";
    }
  }
  return vbw::kDefaultBudget;
}

nlohmann::json envelope(const std::string& command, double ms) {
  nlohmann::json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["time_ms"] = ms;
  return j;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

nlohmann::json element_json(const vbw::GroupElement& e) {
  nlohmann::json j;
  if (e.kind == vbw::GroupKind::Sym) {
    j["perm"] = e.perm.images();
  } else {
    j["kb"] = e.sd.kb.str();
    j["perm"] = e.sd.perm.images();
  }
  return j;
}

std::pair<std::string, int> split_group_token(const std::string& tok) {
  // "sym5" or "vb6" -> (kind, degree)
  size_t pos = 0;
  while (pos < tok.size() && !isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
  if (pos == 0 || pos == tok.size())
    throw std::invalid_argument("expected symN or vbN: " + tok);
  return {tok.substr(0, pos), std::stoi(tok.substr(pos))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vbw: exact computations in virtual braid groups"};
  app.require_subcommand(1);
  const long default_budget = env_budget();

  // normalize
  auto* norm = app.add_subcommand("normalize", "fold a sigma/tau word into (kb, perm) form");
  int norm_n = 0;
  std::string norm_word;
  norm->add_option("--n", norm_n, "strand count")->required();
  norm->add_option("word", norm_word, "word, e.g. \"t1 s1\"")->required();

  // eval
  auto* ev = app.add_subcommand("eval", "evaluate a catalog homomorphism on a word");
  int ev_n = 0;
  std::string ev_hom, ev_word;
  ev->add_option("--hom", ev_hom, "homomorphism name (e.g. piK, piP, iota, zeta1)")->required();
  ev->add_option("--n", ev_n, "source degree")->required();
  ev->add_option("word", ev_word, "word in the source group")->required();

  // kb-eq
  auto* eq = app.add_subcommand("kb-eq", "tiered equality of two kb words");
  int eq_n = 0;
  long eq_budget = default_budget;
  std::string eq_u, eq_v;
  eq->add_option("--n", eq_n, "strand count")->required();
  eq->add_option("--budget", eq_budget, "rewriting node budget");
  eq->add_option("u", eq_u, "first word, e.g. \"d1.2 d3.4\"")->required();
  eq->add_option("v", eq_v, "second word")->required();

  // classify
  auto* cl = app.add_subcommand("classify", "enumerate homomorphism classes into S_m");
  std::string cl_from, cl_to;
  int cl_jobs = 1;
  long cl_nodes = 200000000;
  cl->add_option("--from", cl_from, "source group: symN or vbN")->required();
  cl->add_option("--to", cl_to, "target group: symM")->required();
  cl->add_option("--jobs", cl_jobs, "worker threads (deterministic merge)");
  cl->add_option("--max-nodes", cl_nodes, "search node budget");

  // verify
  auto* vf = app.add_subcommand("verify", "run a verification suite");
  std::string vf_suite;
  long vf_budget = default_budget;
  vf->add_option("--suite", vf_suite, "relations|catalog|nu6|lemma3_8|lemma3_9|lemma3_11|lemma6_0|normalform")
      ->required();
  vf->add_option("--budget", vf_budget, "rewriting node budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Timer timer;
    if (*norm) {
      vbw::VBWord w = vbw::VBWord::parse(norm_word, norm_n);
      vbw::SemidirectElement e = vbw::to_semidirect(w);
      nlohmann::json j = envelope("normalize", timer.ms());
      j["n"] = norm_n;
      j["input"] = norm_word;
      j["kb"] = e.kb.str();
      j["perm"] = e.perm.images();
      j["time_ms"] = timer.ms();
      std::cout << j.dump(2) << "\n";
      std::cerr << "normalize: " << e.str() << "\n";
      return 0;
    }
    if (*ev) {
      vbw::CatalogHom h = vbw::make_catalog_hom(ev_hom, ev_n);
      vbw::GroupElement out = vbw::GroupElement::identity(h.target, h.m);
      if (h.source == vbw::GroupKind::VB) {
        out = h.eval(vbw::VBWord::parse(ev_word, ev_n));
      } else {
        std::vector<int> word;
        const vbw::VBWord parsed = vbw::VBWord::parse(ev_word, ev_n);
        for (const auto& l : parsed.letters()) {
          if (l.kind != vbw::VBLetter::Sigma)
            throw std::invalid_argument("eval: words for a symmetric source use s<i> tokens");
          word.push_back(l.exp > 0 ? l.index : -l.index);
        }
        out = h.eval_sym_word(word);
      }
      nlohmann::json j = envelope("eval", timer.ms());
      j["hom"] = ev_hom;
      j["n"] = ev_n;
      j["input"] = ev_word;
      j["output"] = element_json(out);
      j["time_ms"] = timer.ms();
      std::cout << j.dump(2) << "\n";
      std::cerr << "eval " << ev_hom << ": " << out.str() << "\n";
      return 0;
    }
    if (*eq) {
      vbw::KBWord u = vbw::KBWord::parse(eq_u, eq_n);
      vbw::KBWord v = vbw::KBWord::parse(eq_v, eq_n);
      vbw::EqVerdict verdict = vbw::kb_equal(u, v, eq_budget);
      nlohmann::json j = envelope("kb-eq", timer.ms());
      j["n"] = eq_n;
      j["u"] = eq_u;
      j["v"] = eq_v;
      j["verdict"] = nlohmann::json::parse(verdict.to_json());
      j["time_ms"] = timer.ms();
      std::cout << j.dump(2) << "\n";
      std::cerr << "kb-eq: " << j["verdict"]["outcome"].get<std::string>() << "\n";
      return verdict.unknown() ? 3 : 0;
    }
    if (*cl) {
      auto [from_kind, n] = split_group_token(cl_from);
      auto [to_kind, m] = split_group_token(cl_to);
      if (to_kind != "sym") throw std::invalid_argument("classification targets are symM");
      vbw::ClassifyOptions opts;
      opts.jobs = cl_jobs;
      opts.max_nodes = cl_nodes;
      vbw::ClassifyReport rep;
      if (from_kind == "sym")
        rep = vbw::classify_sym_to_sym(n, m, opts);
      else if (from_kind == "vb")
        rep = vbw::classify_vb_to_sym(n, m, opts);
      else
        throw std::invalid_argument("classification sources are symN or vbN");
      nlohmann::json j = envelope("classify", timer.ms());
      j["report"] = nlohmann::json::parse(rep.to_json());
      j["time_ms"] = timer.ms();
      std::cout << j.dump(2) << "\n";
      std::cerr << "classify " << cl_from << " -> " << cl_to << ": " << rep.classes.size()
                << " classes, raw " << rep.raw_count
                << (rep.certified ? (rep.catalog_match ? ", catalog match" : ", CATALOG MISMATCH")
                                  : ", uncertified")
                << "\n";
      return rep.certified && !rep.catalog_match ? 1 : 0;
    }
    if (*vf) {
      vbw::SuiteReport rep = vbw::run_suite(vf_suite, vf_budget);
      nlohmann::json j = envelope("verify", timer.ms());
      j["report"] = nlohmann::json::parse(rep.to_json());
      j["time_ms"] = timer.ms();
      std::cout << j.dump(2) << "\n";
      std::cerr << "verify " << vf_suite << ": " << rep.passed << " passed, " << rep.failed
                << " failed, " << rep.unknown << " unknown\n";
      if (rep.failed > 0) return 1;
      if (rep.unknown > 0) return 3;
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

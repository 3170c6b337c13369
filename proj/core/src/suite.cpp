#include "higherk/suite.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "higherk/errors.hpp"
#include "higherk/homology.hpp"
#include "higherk/io.hpp"
#include "higherk/random.hpp"

#ifndef HIGHERK_VERSION_STRING
#define HIGHERK_VERSION_STRING "unknown"
#endif

namespace higherk {

const std::vector<CheckKind>& all_checks() {
  static const std::vector<CheckKind> k = {
      CheckKind::Cluster,       CheckKind::Gram,           CheckKind::ErrorTerm,
      CheckKind::RelationMembership, CheckKind::K0Iso,     CheckKind::ConditionH,
      CheckKind::DefectSymmetry, CheckKind::ArFormula,     CheckKind::Determination,
  };
  return k;
}

std::string_view check_name(CheckKind k) {
  switch (k) {
    case CheckKind::Cluster: return "cluster";
    case CheckKind::Gram: return "gram";
    case CheckKind::ErrorTerm: return "error_term";
    case CheckKind::RelationMembership: return "relation_membership";
    case CheckKind::K0Iso: return "k0_iso";
    case CheckKind::ConditionH: return "condition_h";
    case CheckKind::DefectSymmetry: return "defect_symmetry";
    case CheckKind::ArFormula: return "ar_formula";
    case CheckKind::Determination: return "determination";
  }
  return "?";
}

std::optional<CheckKind> parse_check(std::string_view name) {
  for (auto k : all_checks())
    if (check_name(k) == name) return k;
  return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "skipped";
    case Verdict::HypothesesNotMet: return "hypotheses not met";
  }
  return "?";
}

bool SuiteReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) {
    return c.verdict == Verdict::Fail || c.verdict == Verdict::Skipped;
  });
}

const CheckResult* SuiteReport::find(CheckKind k) const {
  for (const auto& c : checks)
    if (c.kind == k) return &c;
  return nullptr;
}

// ---------------------------------------------------------------------------

std::vector<ShortExactSequence> random_ses(const AlgebraPtr& a, const std::vector<Representation>& indecs,
                                           std::uint64_t seed, std::size_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidInput, "probe count must be positive");
  if (indecs.empty()) throw Error(ErrorCode::DegenerateDraw, "no indecomposables to draw from");
  Rng rng(seed);
  auto pick_sum = [&] {
    std::vector<Representation> parts;
    const long n = rng.uniform(1, 2);
    for (long i = 0; i < n; ++i)
      parts.push_back(indecs[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(indecs.size()) - 1))]);
    return direct_sum(parts, a);
  };
  std::vector<ShortExactSequence> out;
  const std::size_t budget = 20 * count + 100;
  for (std::size_t attempt = 0; attempt < budget && out.size() < count; ++attempt) {
    Representation x = pick_sum(), y = pick_sum();
    auto h = hom_basis(x, y);
    if (h.empty()) continue;
    RationalVector c(h.size());
    for (auto& v : c) v = rng.uniform(-3, 3);
    ModuleMorphism phi = linear_combination(h, c);
    if (phi.is_zero()) continue;
    auto k = kernel(phi);
    auto im = image(phi);
    out.push_back(make_ses(k.inclusion, im.surjection));
  }
  if (out.empty())
    throw Error(ErrorCode::DegenerateDraw,
                "every random morphism was zero; try another --seed or a larger indecomposable list");
  return out;
}

std::vector<PairWitness> condition_h_violations(const TiltingData& t) {
  std::vector<PairWitness> out;
  std::vector<Representation> taus;
  for (const auto& s : t.summands) taus.push_back(tau_d(s, t.d));
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (taus[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.size(); ++j)
      if (hom_dimension(t.summands[i], t.summands[j]) > 0 && hom_dimension(t.summands[j], taus[i]) > 0)
        out.push_back({i, j});
  }
  return out;
}

ArFormulaSides ar_formula(const Representation& s, const Representation& t, std::size_t d) {
  ArFormulaSides out;
  Representation x = tau_d(s, d);
  out.lhs = static_cast<long>(hom_dimension(s, t));
  const long back = x.is_zero() ? 0 : static_cast<long>(hom_dimension(t, x));
  out.lhs += d % 2 ? -back : back;
  auto res = minimal_projective_resolution(s, d);
  for (std::size_t i = 0; i <= d; ++i) {
    Representation p = res.term(i);
    if (p.is_zero()) continue;
    const long h = static_cast<long>(hom_dimension(p, t));
    out.rhs += i % 2 ? -h : h;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::string dims_string(const Representation& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
  return s + ")";
}

std::string vector_string(std::span<const Integer> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s + "]";
}

std::string label_of(const TiltingData& t, std::size_t i) { return t.labels[i] + dims_string(t.summands[i]); }

struct Probe {
  std::string origin;
  ShortExactSequence ses;
};

class Runner {
 public:
  explicit Runner(const SuiteConfig& cfg) : cfg_(cfg), t_(cfg.tilting) {}

  SuiteReport run() {
    SuiteReport r;
    r.seed = cfg_.seed;
    r.probes = cfg_.probes;
    r.d = t_.d;
    r.summands = t_.labels;
    r.versions["higherk"] = HIGHERK_VERSION_STRING;
    r.versions["gmp"] = gmp_version;

    indecs_ = cfg_.indecomposables.empty() ? enumerate_indecomposables(t_.algebra, cfg_.max_indecs)
                                           : cfg_.indecomposables;
    r.indecomposables = indecs_.size();

    std::set<CheckKind> wanted(cfg_.checks.begin(), cfg_.checks.end());
    // cluster always runs: nothing downstream is meaningful on an unverified T
    CheckResult cluster = timed(CheckKind::Cluster, [&](CheckResult& c) { check_cluster(c); });
    const bool gate = cluster.verdict == Verdict::Pass;
    r.checks.push_back(std::move(cluster));
    for (auto k : all_checks()) {
      if (k == CheckKind::Cluster || !wanted.count(k)) continue;
      if (!gate) {
        CheckResult c;
        c.kind = k;
        c.verdict = Verdict::Skipped;
        c.summary = "not run: cluster verification failed";
        r.checks.push_back(std::move(c));
        continue;
      }
      r.checks.push_back(timed(k, [&](CheckResult& c) { dispatch(c); }));
    }
    return r;
  }

 private:
  template <class F>
  CheckResult timed(CheckKind k, F&& f) {
    CheckResult c;
    c.kind = k;
    auto start = std::chrono::steady_clock::now();
    try {
      f(c);
    } catch (const std::exception& e) {
      c.verdict = Verdict::Fail;
      c.summary = "construction error";
      c.witnesses.push_back({e.what(), ""});
    }
    if (cfg_.timing)
      c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return c;
  }

  void dispatch(CheckResult& c) {
    switch (c.kind) {
      case CheckKind::Cluster: check_cluster(c); break;
      case CheckKind::Gram: check_gram(c); break;
      case CheckKind::ErrorTerm: check_error_term(c); break;
      case CheckKind::RelationMembership: check_membership(c); break;
      case CheckKind::K0Iso: check_k0(c); break;
      case CheckKind::ConditionH: check_condition_h(c); break;
      case CheckKind::DefectSymmetry: check_defect_symmetry(c); break;
      case CheckKind::ArFormula: check_ar_formula(c); break;
      case CheckKind::Determination: check_determination(c); break;
    }
  }

  // -- shared data -----------------------------------------------------------

  const IntegerMatrix& gram() {
    if (!gram_) gram_ = gram_matrix(t_);
    return *gram_;
  }

  const std::vector<std::pair<std::size_t, DExactSequence>>& ar_sequences() {
    if (!ar_) {
      ar_.emplace();
      for (std::size_t i = 0; i < t_.size(); ++i)
        if (!t_.projective[i]) ar_->emplace_back(i, d_ar_sequence(t_, i));
    }
    return *ar_;
  }

  const K0Presentation& presentation() {
    if (!presentation_) {
      std::vector<DExactSequence> seqs;
      for (const auto& [i, s] : ar_sequences()) seqs.push_back(s);
      presentation_ = k0_presentation(relation_matrix(t_.size(), seqs));
    }
    return *presentation_;
  }

  const std::vector<Probe>& probes() {
    if (!probes_) {
      probes_.emplace();
      auto random = random_ses(t_.algebra, indecs_, cfg_.seed, cfg_.probes);
      for (std::size_t k = 0; k < random.size(); ++k) probes_->push_back({"random #" + std::to_string(k), random[k]});
      for (const auto& [i, s] : ar_sequences()) {
        auto pieces = short_exact_pieces(s);
        for (std::size_t k = 0; k < pieces.size(); ++k)
          probes_->push_back({"piece " + std::to_string(k) + " of the sequence ending at " + t_.labels[i], pieces[k]});
      }
    }
    return *probes_;
  }

  // -- checks ----------------------------------------------------------------

  void check_cluster(CheckResult& c) {
    auto rep = verify_d_cluster_tilting(t_, indecs_);
    c.verdict = rep.passed ? Verdict::Pass : Verdict::Fail;
    std::size_t members = 0;
    for (auto m : rep.membership) members += m != static_cast<std::size_t>(-1);
    c.summary = std::to_string(t_.size()) + " summands, " + std::to_string(members) + " of " +
                std::to_string(indecs_.size()) + " indecomposables in T, d = " + std::to_string(t_.d);
    c.details.push_back(std::string("functorial finiteness: ") + ClusterReport::functorial_finiteness);
    for (const auto& v : rep.violations) {
      const auto& m = indecs_[v.module];
      std::string what;
      if (v.in_t)
        what = "indecomposable #" + std::to_string(v.module) + " " + dims_string(m) + " is in T but Ext^" +
               std::to_string(v.degree) + " with " + (v.summand ? t_.labels[*v.summand] : std::string("?")) +
               " is nonzero";
      else
        what = "indecomposable #" + std::to_string(v.module) + " " + dims_string(m) +
               " is not in T but " + (v.left ? "Ext^i(T, x)" : "Ext^i(x, T)") + " = 0 for 0 < i < d";
      c.witnesses.push_back({what, module_to_json(m)});
    }
  }

  void check_gram(CheckResult& c) {
    const auto& g = gram();
    Integer det = determinant(g);
    bool diag = true;
    for (std::size_t i = 0; i < g.rows(); ++i) diag = diag && g(i, i) >= 1;
    c.verdict = abs(det) == 1 && diag ? Verdict::Pass : Verdict::Fail;
    c.summary = "det G = " + det.get_str();
    c.matrices["G"] = g;
    if (!diag) c.witnesses.push_back({"a diagonal entry of G is zero", integer_matrix_to_json(g)});
    if (abs(det) != 1) c.witnesses.push_back({"G is not unimodular", integer_matrix_to_json(g)});
  }

  void check_error_term(CheckResult& c) {
    const auto& ps = probes();
    std::size_t ok = 0, nonsplit = 0;
    for (const auto& p : ps) {
      auto e = verify_error_term(t_, gram(), p.ses);
      ok += e.holds;
      nonsplit += std::any_of(e.rhs.begin(), e.rhs.end(), [](const Integer& x) { return x != 0; });
      if (!e.holds)
        c.witnesses.push_back({p.origin + ": G*error = " + vector_string(e.lhs) + ", defect = " + vector_string(e.rhs),
                               ses_to_json(p.ses)});
    }
    c.verdict = ok == ps.size() ? Verdict::Pass : Verdict::Fail;
    c.summary = std::to_string(ok) + "/" + std::to_string(ps.size()) + " sequences satisfy the identity";
    c.details.push_back(std::to_string(nonsplit) + " with nonzero defect");
  }

  void check_membership(CheckResult& c) {
    const auto& ps = probes();
    const auto& pres = presentation();
    std::size_t ok = 0;
    for (const auto& p : ps) {
      auto ia = index(t_, p.ses.a), ib = index(t_, p.ses.b), ic = index(t_, p.ses.c);
      IntegerVector err(t_.size());
      for (std::size_t i = 0; i < err.size(); ++i) err[i] = ia[i] - ib[i] + ic[i];
      if (pres.contains(err)) {
        ++ok;
      } else {
        c.witnesses.push_back({p.origin + ": error vector " + vector_string(err) + " is not in the relation lattice (" +
                                   std::string(to_string(ErrorCode::WellDefinednessFailure)) + ")",
                               ses_to_json(p.ses)});
      }
    }
    c.verdict = ok == ps.size() ? Verdict::Pass : Verdict::Fail;
    c.summary = std::to_string(ok) + "/" + std::to_string(ps.size()) + " error vectors lie in the relation lattice";
  }

  void check_k0(CheckResult& c) {
    bool good = true;
    for (const auto& [i, s] : ar_sequences()) {
      auto chk = check_d_ar_sequence(t_, i, s);
      if (chk.all()) continue;
      good = false;
      std::string bad;
      if (!chk.exact) bad += " exact";
      if (!chk.length) bad += " length";
      if (!chk.end_is_tau) bad += " end_is_tau";
      if (!chk.composition_sum_zero) bad += " composition_sum";
      if (!chk.hom_complexes) bad += " hom_complexes";
      if (!chk.minimal) bad += " minimal";
      c.witnesses.push_back({"sequence ending at " + t_.labels[i] + " fails:" + bad, module_to_json(t_.summands[i])});
    }
    const auto& p = presentation();
    auto maps = k0_maps(t_, p);
    const std::size_t n = t_.algebra->vertex_count();
    c.details.push_back(std::to_string(ar_sequences().size()) + " d-AR sequences");
    c.details.push_back("invariant factors: " + vector_string(p.invariant_factors));
    c.details.push_back("quotient rank " + std::to_string(p.quotient_rank) + ", simples " + std::to_string(n));
    c.matrices["relations"] = p.relations;
    c.matrices["g"] = maps.g;
    c.matrices["f"] = maps.f;
    c.matrices["g_quotient"] = maps.g_quotient;
    if (!p.torsion_free()) {
      good = false;
      c.witnesses.push_back({"quotient has torsion", integer_matrix_to_json(p.relations)});
    }
    if (p.quotient_rank != n) {
      good = false;
      c.witnesses.push_back({"quotient rank differs from the number of simples", integer_matrix_to_json(p.relations)});
    }
    if (!maps.relations_in_kernel) {
      good = false;
      c.witnesses.push_back({"g does not vanish on the relations", integer_matrix_to_json(p.relations)});
    }
    if (!maps.mutually_inverse) {
      good = false;
      c.witnesses.push_back({"f and g are not mutually inverse", integer_matrix_to_json(maps.f)});
    }
    c.verdict = good ? Verdict::Pass : Verdict::Fail;
    c.summary = good ? "K0 of T modulo d-AR relations is free of rank " + std::to_string(n) + ", f and g inverse"
                     : "K0 presentation check failed";
  }

  void check_condition_h(CheckResult& c) {
    auto bad = condition_h_violations(t_);
    condition_h_ = bad.empty();
    c.verdict = bad.empty() ? Verdict::Pass : Verdict::Fail;
    c.summary = bad.empty() ? "no pair has both Hom(s,t) and Hom(t,tau_d s) nonzero"
                            : std::to_string(bad.size()) + " violating pairs";
    for (const auto& w : bad)
      c.witnesses.push_back({"s = " + label_of(t_, w.s) + ", t = " + label_of(t_, w.t),
                             module_to_json(t_.summands[w.s])});
  }

  void check_defect_symmetry(CheckResult& c) {
    std::size_t total = 0, ok = 0;
    for (const auto& [i, g] : ar_sequences())
      for (std::size_t j = 0; j < t_.size(); ++j) {
        auto sym = defect_symmetry(t_, g, t_.summands[j]);
        ++total;
        if (sym.holds()) {
          ++ok;
          continue;
        }
        c.witnesses.push_back({"sequence ending at " + t_.labels[i] + ", s = " + label_of(t_, j) +
                                   ": dim gamma^*(s) = " + std::to_string(sym.contravariant) +
                                   ", dim gamma_*(tau_d s) = " + std::to_string(sym.covariant),
                               module_to_json(t_.summands[j])});
      }
    c.verdict = ok == total ? Verdict::Pass : Verdict::Fail;
    c.summary = std::to_string(ok) + "/" + std::to_string(total) + " (sequence, summand) pairs agree";
  }

  void check_ar_formula(CheckResult& c) {
    std::size_t total = 0, ok = 0;
    for (std::size_t i = 0; i < t_.size(); ++i)
      for (std::size_t j = 0; j < t_.size(); ++j) {
        auto sides = ar_formula(t_.summands[i], t_.summands[j], t_.d);
        ++total;
        if (sides.lhs == sides.rhs) {
          ++ok;
          continue;
        }
        c.witnesses.push_back({"s = " + label_of(t_, i) + ", t = " + label_of(t_, j) + ": " +
                                   std::to_string(sides.lhs) + " vs " + std::to_string(sides.rhs),
                               module_to_json(t_.summands[i])});
      }
    c.verdict = ok == total ? Verdict::Pass : Verdict::Fail;
    c.summary = std::to_string(ok) + "/" + std::to_string(total) + " ordered pairs satisfy the formula";
  }

  void check_determination(CheckResult& c) {
    if (!condition_h_) condition_h_ = condition_h_violations(t_).empty();
    std::set<std::vector<long>> seen;
    bool distinct = true;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!seen.insert(composition_vector(t_.summands[i])).second) {
        distinct = false;
        c.witnesses.push_back({"composition vector of " + label_of(t_, i) + " repeats",
                               module_to_json(t_.summands[i])});
      }
    const bool odd = t_.d % 2 == 1;
    const std::string verdict_text = distinct ? "pairwise distinct" : "not pairwise distinct";
    c.details.push_back(std::string("d odd and Condition H: ") + (odd && *condition_h_ ? "met" : "not met"));
    c.details.push_back(std::string("Condition H alone: ") + (*condition_h_ ? "met" : "not met"));
    c.details.push_back("composition vectors of the summands: " + verdict_text);
    if (!(odd && *condition_h_)) {
      c.verdict = Verdict::HypothesesNotMet;
      c.summary = "hypotheses not met (informational: composition vectors " + verdict_text + ")";
      c.witnesses.clear();
      return;
    }
    c.verdict = distinct ? Verdict::Pass : Verdict::Fail;
    c.summary = "composition vectors " + verdict_text;
  }

  const SuiteConfig& cfg_;
  const TiltingData& t_;
  std::vector<Representation> indecs_;
  std::optional<IntegerMatrix> gram_;
  std::optional<std::vector<std::pair<std::size_t, DExactSequence>>> ar_;
  std::optional<K0Presentation> presentation_;
  std::optional<std::vector<Probe>> probes_;
  std::optional<bool> condition_h_;
};

}  // namespace

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (cfg.probes == 0) throw Error(ErrorCode::InvalidInput, "probe count must be positive");
  if (cfg.checks.empty()) throw Error(ErrorCode::InvalidInput, "no checks selected");
  return Runner(cfg).run();
}

std::string format_report(const SuiteReport& r) {
  std::ostringstream os;
  os << "d = " << r.d << ", summands:";
  for (const auto& s : r.summands) os << ' ' << s;
  os << "\nindecomposables: " << r.indecomposables << ", seed " << r.seed << ", probes " << r.probes << '\n';
  for (const auto& c : r.checks) {
    os << "[" << verdict_name(c.verdict) << "] " << check_name(c.kind) << ": " << c.summary;
    if (c.seconds) {
      std::ostringstream t;
      t.precision(3);
      t << std::fixed << *c.seconds;
      os << " (" << t.str() << " s)";
    }
    os << '\n';
    for (const auto& d : c.details) os << "    " << d << '\n';
    for (const auto& [name, m] : c.matrices) {
      const std::string lead = "    " + name + " = ";
      os << lead.substr(0, lead.size() - 1);
      for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? "\n" + std::string(lead.size(), ' ') : " ") << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
        os << ']';
      }
      if (m.rows() == 0) os << " (empty)";
      os << '\n';
    }
    for (const auto& w : c.witnesses) os << "    witness: " << w.description << '\n';
  }
  os << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace higherk

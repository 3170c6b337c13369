#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "higherk/errors.hpp"
#include "higherk/higher_ar.hpp"
#include "higherk/homology.hpp"
#include "higherk/io.hpp"
#include "higherk/suite.hpp"

namespace higherk::cli {

namespace {

struct Options {
  std::string file;
  std::uint64_t seed = 1;
  std::size_t probes = 100;
  std::size_t max_indecs = 200;
  std::string json_out;
  std::string checks;
  std::string indecs_file;
  bool timing = false;
  std::size_t d = 0;
  std::vector<std::string> modules;
  std::size_t steps = 1;
  std::string out_file;
  bool search = false;
  std::size_t tower = 0;
};

bool input_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidInput:
    case ErrorCode::MalformedRelation:
    case ErrorCode::MalformedQuiver:
    case ErrorCode::InvalidRepresentation:
    case ErrorCode::NotAdmissible:
    case ErrorCode::AlgebraMismatch:
    case ErrorCode::ProjectiveInput:
      return true;
    default:
      return false;
  }
}

std::string dims(const Representation& m) {
  std::string s = "(";
  for (std::size_t v = 0; v < m.dims().size(); ++v) s += (v ? "," : "") + std::to_string(m.dim(v));
  return s + ")";
}

std::string vec(std::span<const Integer> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].get_str();
  return s + "]";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  f << text;
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Index, K0 and higher Auslander-Reiten computations over bound quiver algebras", "higherk"};
    app.require_subcommand(1);
    app.set_version_flag("--version", HIGHERK_CLI_VERSION);

    auto common = [&](CLI::App* c) {
      c->add_option("file", o_.file, "algebra description (JSON)")->required();
      c->add_option("--seed", o_.seed, "probe seed")->capture_default_str();
      c->add_option("--probes", o_.probes, "number of random short exact sequences")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
      c->add_option("--max-indecs", o_.max_indecs, "budget for indecomposable enumeration")->capture_default_str();
      c->add_option("--json-out", o_.json_out, "also write a JSON document to this path");
      c->add_option("--indecs", o_.indecs_file,
                    "file whose modules are used as the full list of indecomposables, instead of enumerating");
      c->add_flag("--timing", o_.timing, "report wall-clock time per check");
    };

    auto* algebra = app.add_subcommand("algebra", "bound quiver algebras")->require_subcommand(1);
    auto* a_check = algebra->add_subcommand("check", "parse and validate an algebra file");
    common(a_check);

    auto* indecs = app.add_subcommand("indecs", "indecomposable modules")->require_subcommand(1);
    auto* i_enum = indecs->add_subcommand("enumerate", "enumerate indecomposables (representation-directed algebras)");
    common(i_enum);

    auto* tilt = app.add_subcommand("tilt", "d-cluster tilting subcategories")->require_subcommand(1);
    auto* t_verify = tilt->add_subcommand("verify", "verify the file's tilting block");
    common(t_verify);
    auto* t_search = tilt->add_subcommand("search", "exhaustive search over subsets of the indecomposables");
    common(t_search);
    t_search->add_option("--d", o_.d, "d of the subcategory")->required()->check(CLI::PositiveNumber);

    auto* index = app.add_subcommand("index", "index with respect to T")->require_subcommand(1);
    auto* x_compute = index->add_subcommand("compute", "left T-resolution and index of named modules");
    common(x_compute);
    x_compute->add_option("--module", o_.modules, "module name (default: all modules in the file)");

    auto* k0 = app.add_subcommand("k0", "Grothendieck groups")->require_subcommand(1);
    auto* k_report = k0->add_subcommand("report", "relation lattice, Smith form, f and g, probe membership");
    common(k_report);
    k_report->add_option("--checks", o_.checks, "comma-separated subset of checks");

    auto* tower = app.add_subcommand("tower", "higher Auslander algebras")->require_subcommand(1);
    auto* w_step = tower->add_subcommand("step", "replace (A, T) by (End T, projectives and tau-orbits of injectives)");
    common(w_step);
    w_step->add_option("--steps", o_.steps, "number of steps")->check(CLI::PositiveNumber)->capture_default_str();
    w_step->add_option("--out", o_.out_file, "write the final algebra file here");

    auto* verify = app.add_subcommand("verify", "run the verification suite")->require_subcommand(1);
    auto* v_all = verify->add_subcommand("all", "run the verification suite");
    common(v_all);
    v_all->add_option("--checks", o_.checks, "comma-separated subset of checks");
    auto* v_search = v_all->add_flag("--search", o_.search, "use the first searched subcategory containing all "
                                                            "projectives and injectives instead of the file's");
    v_all->add_option("--d", o_.d, "d for --search")->check(CLI::PositiveNumber);
    v_all->add_option("--tower", o_.tower, "apply this many tower steps before verifying")->excludes(v_search);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      int code = app.exit(e, out_, err_);
      return code == 0 ? kPass : kInputError;
    }

    try {
      if (a_check->parsed()) return algebra_check();
      if (i_enum->parsed()) return enumerate();
      if (t_verify->parsed()) return tilt_verify();
      if (t_search->parsed()) return tilt_search();
      if (x_compute->parsed()) return index_compute();
      if (k_report->parsed()) return k0_report();
      if (w_step->parsed()) return tower_steps();
      if (v_all->parsed()) return verify_all();
    } catch (const Error& e) {
      err_ << "error: " << e.what() << '\n';
      return input_error(e.code()) ? kInputError : kCheckFailure;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << '\n';
      return kCheckFailure;
    }
    return kInputError;
  }

 private:
  AlgebraFile load() { return load_algebra_file(o_.file); }

  std::vector<Representation> indecomposables(const AlgebraFile& f) {
    if (o_.indecs_file.empty()) return enumerate_indecomposables(f.algebra, o_.max_indecs);
    AlgebraFile g = load_algebra_file(o_.indecs_file);
    if (!same_algebra(g.algebra, f.algebra) && !g.algebra->same_as(*f.algebra))
      throw Error(ErrorCode::InvalidInput, "--indecs file describes a different algebra");
    std::vector<Representation> out;
    // re-read against our algebra so the modules share it
    for (const auto& [name, m] : g.modules) out.push_back(module_from_json(f.algebra, module_to_json(m)));
    return out;
  }

  std::vector<CheckKind> checks(std::vector<CheckKind> fallback) {
    if (o_.checks.empty()) return fallback;
    std::vector<CheckKind> out;
    std::stringstream ss(o_.checks);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      auto k = parse_check(name);
      if (!k) throw Error(ErrorCode::InvalidInput, "unknown check '" + name + "'");
      out.push_back(*k);
    }
    if (out.empty()) throw Error(ErrorCode::InvalidInput, "--checks selects nothing");
    return out;
  }

  int suite(const TiltingData& t, std::vector<Representation> indecs, std::vector<CheckKind> which) {
    SuiteConfig cfg{t, std::move(indecs)};
    cfg.seed = o_.seed;
    cfg.probes = o_.probes;
    cfg.checks = std::move(which);
    cfg.max_indecs = o_.max_indecs;
    cfg.timing = o_.timing;
    SuiteReport r = run_suite(cfg);
    out_ << format_report(r);
    if (!o_.json_out.empty()) write_file(o_.json_out, report_to_json(r));
    return r.passed() ? kPass : kCheckFailure;
  }

  int algebra_check() {
    AlgebraFile f = load();
    const auto& a = *f.algebra;
    const auto& q = a.quiver();
    out_ << q.vertex_count() << " vertices, " << q.arrow_count() << " arrows, " << a.relations().size()
         << " relations, nilpotency bound " << a.nilpotency_bound() << '\n';
    out_ << "dimension " << a.dimension() << "\nCartan matrix (paths from row to column):\n";
    for (std::size_t s = 0; s < q.vertex_count(); ++s) {
      out_ << "  " << q.vertices()[s] << ':';
      for (std::size_t t = 0; t < q.vertex_count(); ++t) out_ << ' ' << a.dimension_between(s, t);
      out_ << '\n';
    }
    for (const auto& [name, m] : f.modules) {
      out_ << "module " << name << ' ' << dims(m);
      if (is_certified_indecomposable(m)) out_ << " indecomposable";
      if (is_projective(m)) out_ << " projective";
      out_ << '\n';
    }
    if (f.tilting) {
      auto t = tilting_from_file(f);
      out_ << "tilting block: d = " << t.d << ", " << t.size() << " summands\n";
    }
    if (!o_.json_out.empty()) write_file(o_.json_out, write_algebra_file(f.algebra, f.modules, f.tilting));
    return kPass;
  }

  int enumerate() {
    AlgebraFile f = load();
    auto ind = indecomposables(f);
    std::vector<NamedModule> named;
    for (std::size_t i = 0; i < ind.size(); ++i) {
      std::string flags;
      if (is_projective(ind[i])) flags += " projective";
      if (is_projective(dual(ind[i]))) flags += " injective";
      out_ << 'M' << i << ' ' << dims(ind[i]) << flags << '\n';
      named.emplace_back("M" + std::to_string(i), ind[i]);
    }
    out_ << ind.size() << " indecomposables\n";
    if (!o_.json_out.empty()) write_file(o_.json_out, write_algebra_file(f.algebra, named));
    return kPass;
  }

  int tilt_verify() {
    AlgebraFile f = load();
    return suite(tilting_from_file(f), indecomposables(f), {CheckKind::Cluster});
  }

  // Hits containing every indecomposable projective and injective.
  static bool covers_projectives_injectives(const std::vector<Representation>& ind, const std::vector<std::size_t>& hit) {
    for (std::size_t i = 0; i < ind.size(); ++i) {
      bool pi = is_projective(ind[i]) || is_projective(dual(ind[i]));
      if (pi && std::find(hit.begin(), hit.end(), i) == hit.end()) return false;
    }
    return true;
  }

  int tilt_search() {
    AlgebraFile f = load();
    auto ind = indecomposables(f);
    auto hits = search_d_cluster_tilting(ind, o_.d);
    out_ << ind.size() << " indecomposables, " << (std::size_t{1} << std::min<std::size_t>(ind.size(), 63))
         << " subsets, " << hits.size() << " satisfy the definition for d = " << o_.d << '\n';
    std::optional<std::size_t> chosen;
    for (std::size_t h = 0; h < hits.size(); ++h) {
      out_ << "  {";
      for (std::size_t k = 0; k < hits[h].size(); ++k) out_ << (k ? " " : "") << 'M' << hits[h][k];
      out_ << '}';
      if (covers_projectives_injectives(ind, hits[h])) {
        out_ << " contains all projectives and injectives";
        if (!chosen) chosen = h;
      }
      out_ << '\n';
    }
    if (!o_.json_out.empty()) {
      std::vector<NamedModule> named;
      for (std::size_t i = 0; i < ind.size(); ++i) named.emplace_back("M" + std::to_string(i), ind[i]);
      std::optional<TiltingSpec> spec;
      if (chosen) {
        spec = TiltingSpec{o_.d, {}};
        for (auto i : hits[*chosen]) spec->summands.push_back("M" + std::to_string(i));
      }
      write_file(o_.json_out, write_algebra_file(f.algebra, named, spec));
    }
    return hits.empty() ? kCheckFailure : kPass;
  }

  int index_compute() {
    AlgebraFile f = load();
    TiltingData t = tilting_from_file(f);
    std::vector<std::string> names = o_.modules;
    if (names.empty())
      for (const auto& [n, m] : f.modules) names.push_back(n);
    out_ << "T:";
    for (std::size_t i = 0; i < t.size(); ++i) out_ << ' ' << t.labels[i];
    out_ << '\n';
    for (const auto& n : names) {
      const auto& m = f.module(n);
      auto r = left_t_resolution(t, m);
      out_ << n << ' ' << dims(m) << ": index " << vec(index(r, t.size())) << ", resolution";
      for (std::size_t k = 0; k < r.terms.size(); ++k) {
        out_ << (k ? " <- " : " ");
        bool any = false;
        for (std::size_t i = 0; i < t.size(); ++i) {
          auto mult = r.terms[k].multiplicities[i];
          if (!mult) continue;
          out_ << (any ? "+" : "") << (mult > 1 ? std::to_string(mult) : "") << t.labels[i];
          any = true;
        }
        if (!any) out_ << '0';
      }
      out_ << '\n';
    }
    return kPass;
  }

  int k0_report() {
    AlgebraFile f = load();
    return suite(tilting_from_file(f), indecomposables(f),
                 checks({CheckKind::Gram, CheckKind::ErrorTerm, CheckKind::RelationMembership, CheckKind::K0Iso}));
  }

  // Runs the suite after every step; the last algebra goes to --out.
  int tower_steps() {
    AlgebraFile f = load();
    TiltingData t = tilting_from_file(f);
    int status = kPass;
    const std::string json_out = o_.json_out;
    for (std::size_t k = 1; k <= o_.steps; ++k) {
      TowerStep s = tower_step(t, o_.max_indecs);
      t = s.next;
      const auto& a = *t.algebra;
      out_ << "step " << k << ": " << a.vertex_count() << " vertices, " << a.quiver().arrow_count() << " arrows, "
           << a.relations().size() << " relations, dimension " << a.dimension() << ", d = " << t.d << '\n';
      out_ << "  presentation " << (s.presentation.verified ? "verified" : "NOT verified") << "; "
           << s.indecomposables.size() << " indecomposables; T from " << s.method << ":";
      for (std::size_t i = 0; i < t.size(); ++i) out_ << ' ' << t.labels[i] << dims(t.summands[i]);
      out_ << '\n';
      o_.json_out = json_out.empty() || k < o_.steps ? "" : json_out;
      if (suite(t, s.indecomposables, all_checks()) != kPass) status = kCheckFailure;
    }
    std::string text = write_tilting_file(t);
    if (o_.out_file.empty())
      out_ << text;
    else
      write_file(o_.out_file, text);
    return status;
  }

  int verify_all() {
    AlgebraFile f = load();
    auto which = checks(all_checks());
    if (o_.tower > 0) {
      TiltingData t = tilting_from_file(f);
      std::vector<Representation> ind;
      for (std::size_t k = 0; k < o_.tower; ++k) {
        TowerStep s = tower_step(t, o_.max_indecs);
        t = s.next;
        ind = s.indecomposables;
      }
      return suite(t, ind, which);
    }
    auto ind = indecomposables(f);
    if (o_.search) {
      std::size_t d = o_.d ? o_.d : (f.tilting ? f.tilting->d : 0);
      if (d == 0) throw Error(ErrorCode::InvalidInput, "--search needs --d");
      for (const auto& h : search_d_cluster_tilting(ind, d)) {
        if (!covers_projectives_injectives(ind, h)) continue;
        std::vector<Representation> mods;
        std::vector<std::string> labels;
        for (auto i : h) {
          mods.push_back(ind[i]);
          labels.push_back("M" + std::to_string(i));
        }
        return suite(make_tilting_data(f.algebra, d, mods, labels), ind, which);
      }
      err_ << "no " << d << "-cluster tilting subcategory contains all projectives and injectives\n";
      return kCheckFailure;
    }
    return suite(tilting_from_file(f), ind, which);
  }

  std::ostream& out_;
  std::ostream& err_;
  Options o_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Cli(out, err).run(args);
}

}  // namespace higherk::cli

#include "higherk/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "higherk/errors.hpp"
#include "higherk/linalg.hpp"

namespace higherk {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::MalformedRelation: return "MalformedRelation";
    case ErrorCode::MalformedQuiver: return "MalformedQuiver";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::NotAbsolutelyIndecomposable: return "NotAbsolutelyIndecomposable";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::EnumerationBudgetExceeded: return "EnumerationBudgetExceeded";
    case ErrorCode::IncompleteList: return "IncompleteList";
    case ErrorCode::ResolutionOverrun: return "ResolutionOverrun";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::WellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorCode::ProjectiveInput: return "ProjectiveInput";
    case ErrorCode::NotBasic: return "NotBasic";
    case ErrorCode::NotExact: return "NotExact";
    case ErrorCode::DegenerateDraw: return "DegenerateDraw";
    case ErrorCode::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Quiver::Quiver(std::vector<std::string> vertices,
               const std::vector<std::tuple<std::string, std::string, std::string>>& arrows)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (!vertex_lookup_.emplace(vertices_[i], i).second)
      throw Error(ErrorCode::MalformedQuiver, "duplicate vertex label '" + vertices_[i] + "'");
  for (const auto& [name, from, to] : arrows) {
    auto s = vertex_lookup_.find(from);
    auto t = vertex_lookup_.find(to);
    if (s == vertex_lookup_.end() || t == vertex_lookup_.end())
      throw Error(ErrorCode::MalformedQuiver, "arrow '" + name + "' has an undeclared endpoint");
    if (!arrow_lookup_.emplace(name, arrows_.size()).second)
      throw Error(ErrorCode::MalformedQuiver, "duplicate arrow name '" + name + "'");
    arrows_.push_back(Arrow{name, s->second, t->second});
  }
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = vertex_lookup_.find(label);
  if (it == vertex_lookup_.end())
    throw Error(ErrorCode::MalformedQuiver, "unknown vertex '" + label + "'");
  return it->second;
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_lookup_.find(name);
  if (it == arrow_lookup_.end())
    throw Error(ErrorCode::MalformedQuiver, "unknown arrow '" + name + "'");
  return it->second;
}

Quiver Quiver::opposite() const {
  std::vector<std::tuple<std::string, std::string, std::string>> rev;
  for (const auto& a : arrows_) rev.emplace_back(a.name, vertices_[a.target], vertices_[a.source]);
  return Quiver(vertices_, rev);
}

Path trivial_path(std::size_t vertex) { return Path{vertex, vertex, {}}; }

Path concatenate(const Path& p, const Path& q) {
  if (p.target != q.source) throw std::invalid_argument("paths do not compose");
  Path r{p.source, q.target, p.arrows};
  r.arrows.insert(r.arrows.end(), q.arrows.begin(), q.arrows.end());
  return r;
}

Path reversed(const Path& p) {
  Path r{p.target, p.source, p.arrows};
  std::reverse(r.arrows.begin(), r.arrows.end());
  return r;
}

std::string path_to_string(const Quiver& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices()[p.source];
  std::ostringstream os;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) os << (i ? "." : "") << q.arrow(p.arrows[i]).name;
  return os.str();
}

Path make_path(const Quiver& q, const std::vector<std::string>& arrow_names) {
  if (arrow_names.empty()) throw Error(ErrorCode::MalformedRelation, "empty path");
  Path p;
  for (std::size_t i = 0; i < arrow_names.size(); ++i) {
    std::size_t a = q.arrow_index(arrow_names[i]);
    if (i == 0) {
      p.source = q.arrow(a).source;
    } else if (q.arrow(p.arrows.back()).target != q.arrow(a).source) {
      throw Error(ErrorCode::MalformedRelation,
                  "arrows '" + arrow_names[i - 1] + "' and '" + arrow_names[i] + "' do not compose");
    }
    p.arrows.push_back(a);
    p.target = q.arrow(a).target;
  }
  return p;
}

std::size_t default_nilpotency_bound(const Quiver& q) { return q.arrow_count() + 2; }

namespace {

constexpr std::size_t kPathBudget = 200000;

// Merges repeated paths and drops zero coefficients.
PathExpression normalize(const PathExpression& e) {
  std::map<Path, Rational> acc;
  for (const auto& t : e.terms) acc[t.path] += t.coefficient;
  PathExpression out;
  for (auto& [p, c] : acc)
    if (c != 0) out.terms.push_back(PathTerm{c, p});
  return out;
}

void validate_relation(const Quiver& q, const PathExpression& r) {
  if (r.terms.empty()) return;
  const Path& first = r.terms.front().path;
  for (const auto& t : r.terms) {
    if (t.path.length() < 2)
      throw Error(ErrorCode::MalformedRelation, "relation term '" + path_to_string(q, t.path) +
                                                    "' has length < 2");
    for (std::size_t i = 1; i < t.path.arrows.size(); ++i)
      if (q.arrow(t.path.arrows[i - 1]).target != q.arrow(t.path.arrows[i]).source)
        throw Error(ErrorCode::MalformedRelation, "relation path does not compose");
    if (t.path.source != first.source || t.path.target != first.target)
      throw Error(ErrorCode::MalformedRelation, "relation paths are not parallel");
  }
}

}  // namespace

AlgebraPtr build_algebra(const Quiver& q, std::vector<PathExpression> relations,
                         std::size_t nilpotency_bound) {
  if (nilpotency_bound == 0)
    throw Error(ErrorCode::NotAdmissible, "nilpotency bound must be positive");
  std::vector<PathExpression> rels;
  for (const auto& r : relations) {
    validate_relation(q, r);
    auto n = normalize(r);
    if (!n.terms.empty()) rels.push_back(std::move(n));
  }

  const std::size_t nv = q.vertex_count();
  const std::size_t bound = nilpotency_bound;

  // All paths of length <= bound, grouped by endpoints.
  std::vector<std::vector<std::vector<Path>>> all(nv, std::vector<std::vector<Path>>(nv));
  std::vector<Path> frontier;
  for (std::size_t v = 0; v < nv; ++v) {
    frontier.push_back(trivial_path(v));
    all[v][v].push_back(trivial_path(v));
  }
  std::size_t total = nv;
  for (std::size_t len = 1; len <= bound; ++len) {
    std::vector<Path> next;
    for (const auto& p : frontier)
      for (std::size_t a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).source != p.target) continue;
        Path np = p;
        np.arrows.push_back(a);
        np.target = q.arrow(a).target;
        all[np.source][np.target].push_back(np);
        next.push_back(std::move(np));
        if (++total > kPathBudget)
          throw Error(ErrorCode::NotAdmissible, "path enumeration budget exceeded below the bound");
      }
    frontier = std::move(next);
  }

  // Ideal generators p * r * q, truncated above the bound.
  std::vector<std::vector<std::vector<RationalVector>>> gens(
      nv, std::vector<std::vector<RationalVector>>(nv));
  std::vector<std::vector<std::map<Path, std::size_t>>> index(
      nv, std::vector<std::map<Path, std::size_t>>(nv));
  for (std::size_t s = 0; s < nv; ++s)
    for (std::size_t t = 0; t < nv; ++t)
      for (std::size_t i = 0; i < all[s][t].size(); ++i) index[s][t].emplace(all[s][t][i], i);

  for (const auto& r : rels) {
    std::size_t min_len = r.terms.front().path.length();
    for (const auto& t : r.terms) min_len = std::min(min_len, t.path.length());
    const std::size_t rs = r.terms.front().path.source, rt = r.terms.front().path.target;
    for (std::size_t u = 0; u < nv; ++u)
      for (const auto& pre : all[u][rs]) {
        if (pre.length() + min_len > bound) continue;
        for (std::size_t w = 0; w < nv; ++w)
          for (const auto& post : all[rt][w]) {
            if (pre.length() + min_len + post.length() > bound) continue;
            RationalVector row(all[u][w].size(), Rational(0));
            bool nonzero = false;
            for (const auto& term : r.terms) {
              Path full = concatenate(concatenate(pre, term.path), post);
              if (full.length() > bound) continue;
              row[index[u][w].at(full)] += term.coefficient;
              nonzero = true;
            }
            if (nonzero) gens[u][w].push_back(std::move(row));
          }
      }
  }

  std::shared_ptr<BoundQuiverAlgebra> alg(new BoundQuiverAlgebra());
  alg->quiver_ = q;
  alg->relations_ = rels;
  alg->nilpotency_bound_ = bound;
  alg->blocks_.assign(nv, std::vector<std::vector<Path>>(nv));

  for (std::size_t s = 0; s < nv; ++s)
    for (std::size_t t = 0; t < nv; ++t) {
      const auto& paths = all[s][t];
      const std::size_t np = paths.size();
      // Column order: longest paths first so they become pivots and are
      // rewritten through shorter ones.
      std::vector<std::size_t> order(np);
      for (std::size_t i = 0; i < np; ++i) order[i] = np - 1 - i;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return paths[a].length() > paths[b].length();
      });
      RationalMatrix g(gens[s][t].size(), np);
      for (std::size_t r = 0; r < gens[s][t].size(); ++r)
        for (std::size_t c = 0; c < np; ++c) g(r, c) = gens[s][t][r][order[c]];
      auto ech = g.rows() ? row_echelon(g) : RowEchelon{g, {}};
      std::vector<long> pivot_row(np, -1);
      for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = static_cast<long>(r);

      // Free columns become the basis, listed shortest-first.
      std::vector<std::size_t> free_cols;
      for (std::size_t c = 0; c < np; ++c)
        if (pivot_row[c] < 0) free_cols.push_back(c);
      std::sort(free_cols.begin(), free_cols.end(),
                [&](std::size_t a, std::size_t b) { return order[a] < order[b]; });
      std::vector<std::size_t> position(np, 0);
      auto& block = alg->blocks_[s][t];
      for (std::size_t k = 0; k < free_cols.size(); ++k) {
        position[free_cols[k]] = k;
        block.push_back(paths[order[free_cols[k]]]);
      }
      for (std::size_t c = 0; c < np; ++c) {
        RationalVector nf(free_cols.size(), Rational(0));
        if (pivot_row[c] < 0) {
          nf[position[c]] = 1;
        } else {
          auto r = static_cast<std::size_t>(pivot_row[c]);
          for (auto f : free_cols)
            if (ech.reduced(r, f) != 0) nf[position[f]] = -ech.reduced(r, f);
        }
        const Path& p = paths[order[c]];
        if (p.length() == bound)
          for (const auto& x : nf)
            if (x != 0)
              throw Error(ErrorCode::NotAdmissible,
                          "path " + path_to_string(q, p) + " of length " + std::to_string(bound) +
                              " survives reduction");
        alg->normal_forms_.emplace(p, std::move(nf));
      }
    }

  for (std::size_t s = 0; s < nv; ++s)
    for (std::size_t t = 0; t < nv; ++t)
      for (const auto& p : alg->blocks_[s][t]) alg->basis_.push_back(p);
  return alg;
}

const std::vector<Path>& BoundQuiverAlgebra::basis_between(std::size_t source, std::size_t target) const {
  return blocks_.at(source).at(target);
}

RationalVector BoundQuiverAlgebra::reduce(const Path& p) const {
  if (p.length() > nilpotency_bound_) return RationalVector(dimension_between(p.source, p.target), Rational(0));
  return normal_forms_.at(p);
}

RationalVector BoundQuiverAlgebra::multiply(std::size_t s, std::size_t m, std::size_t t,
                                            std::span<const Rational> x,
                                            std::span<const Rational> y) const {
  const auto& bx = basis_between(s, m);
  const auto& by = basis_between(m, t);
  RationalVector out(dimension_between(s, t), Rational(0));
  for (std::size_t i = 0; i < bx.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < by.size(); ++j) {
      if (y[j] == 0) continue;
      auto nf = reduce(concatenate(bx[i], by[j]));
      Rational c = x[i] * y[j];
      for (std::size_t k = 0; k < nf.size(); ++k)
        if (nf[k] != 0) out[k] += c * nf[k];
    }
  }
  return out;
}

AlgebraPtr BoundQuiverAlgebra::opposite() const {
  std::lock_guard<std::mutex> lock(opposite_mutex_);
  if (auto origin = origin_.lock()) return origin;
  if (opposite_) return opposite_;
  std::vector<PathExpression> rels;
  for (const auto& r : relations_) {
    PathExpression e;
    for (const auto& t : r.terms) e.terms.push_back(PathTerm{t.coefficient, reversed(t.path)});
    rels.push_back(std::move(e));
  }
  auto op = build_algebra(quiver_.opposite(), std::move(rels), nilpotency_bound_);
  op->origin_ = weak_from_this();
  opposite_ = op;
  return op;
}

bool BoundQuiverAlgebra::same_as(const BoundQuiverAlgebra& o) const {
  return this == &o || (quiver_ == o.quiver_ && relations_ == o.relations_ &&
                        nilpotency_bound_ == o.nilpotency_bound_);
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a && b && a->same_as(*b));
}

}  // namespace higherk

#include "higherk/tilting.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "higherk/errors.hpp"
#include "higherk/linalg.hpp"

namespace higherk {

std::optional<std::size_t> TiltingData::find(const Representation& m) const {
  for (std::size_t i = 0; i < summands.size(); ++i)
    if (summands[i].dims() == m.dims() && is_isomorphic(summands[i], m)) return i;
  return std::nullopt;
}

TiltingData make_tilting_data(const AlgebraPtr& a, std::size_t d, std::vector<Representation> summands,
                              std::vector<std::string> labels) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "d must be positive");
  if (labels.empty())
    for (std::size_t i = 0; i < summands.size(); ++i) labels.push_back("t" + std::to_string(i));
  if (labels.size() != summands.size()) throw Error(ErrorCode::InvalidInput, "one label per summand is required");
  TiltingData t{a, d, std::move(summands), std::move(labels), {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const auto& m = t.summands[i];
    if (!same_algebra(m.algebra(), a)) throw Error(ErrorCode::AlgebraMismatch, "summand over another algebra");
    if (!is_certified_indecomposable(m))
      throw Error(ErrorCode::InvalidInput, "summand '" + t.labels[i] + "' is not certified indecomposable");
    for (std::size_t j = 0; j < i; ++j)
      if (is_isomorphic(t.summands[j], m))
        throw Error(ErrorCode::InvalidInput,
                    "summands '" + t.labels[j] + "' and '" + t.labels[i] + "' are isomorphic");
    t.projective.push_back(is_projective(m));
  }
  return t;
}

std::vector<Representation> enumerate_indecomposables(const AlgebraPtr& a, std::size_t max_count) {
  std::vector<Representation> found;
  std::deque<Representation> queue;
  auto add = [&](const Representation& m) {
    if (m.is_zero()) return;
    for (const auto& s : decompose(m).summands) {
      bool known = std::any_of(found.begin(), found.end(), [&](const Representation& f) {
        return f.dims() == s.module.dims() && is_isomorphic(f, s.module);
      });
      if (known) continue;
      if (found.size() >= max_count)
        throw Error(ErrorCode::EnumerationBudgetExceeded,
                    "more than " + std::to_string(max_count) + " indecomposables; supply the list explicitly");
      found.push_back(s.module);
      queue.push_back(s.module);
    }
  };
  AlgebraPtr op = a->opposite();
  for (std::size_t v = 0; v < a->vertex_count(); ++v) {
    auto p = indecomposable_projective(a, v);
    add(p);
    add(indecomposable_injective(a, v));
    add(radical(p).object);
    add(dual(radical(indecomposable_projective(op, v)).object));
  }
  while (!queue.empty()) {
    Representation x = queue.front();
    queue.pop_front();
    add(tau_inverse(x));
    add(tau_d(x, 1));
  }
  std::stable_sort(found.begin(), found.end(), [](const Representation& x, const Representation& y) {
    if (x.total_dimension() != y.total_dimension()) return x.total_dimension() < y.total_dimension();
    return x.dims() > y.dims();
  });
  return found;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// ext[a][b] = smallest k in 1..d-1 with Ext^k(a, b) != 0, or 0.
std::vector<std::vector<std::size_t>> ext_grid(const std::vector<Representation>& from,
                                               const std::vector<Representation>& to, std::size_t d) {
  std::vector<std::vector<std::size_t>> grid(from.size(), std::vector<std::size_t>(to.size(), 0));
  if (d < 2) return grid;
  for (std::size_t i = 0; i < from.size(); ++i) {
    auto res = minimal_projective_resolution(from[i], d);
    for (std::size_t j = 0; j < to.size(); ++j)
      for (std::size_t k = 1; k < d; ++k)
        if (ext_dim(k, res, to[j]) != 0) {
          grid[i][j] = k;
          break;
        }
  }
  return grid;
}

}  // namespace

ClusterReport verify_d_cluster_tilting(const TiltingData& t, const std::vector<Representation>& indecs) {
  ClusterReport report;
  report.membership.assign(indecs.size(), kNone);
  std::vector<bool> seen(t.size(), false);
  for (std::size_t x = 0; x < indecs.size(); ++x)
    if (auto i = t.find(indecs[x])) {
      report.membership[x] = *i;
      seen[*i] = true;
    }
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!seen[i])
      throw Error(ErrorCode::IncompleteList, "summand '" + t.labels[i] + "' is missing from the indecomposables");

  auto left = ext_grid(t.summands, indecs, t.d);   // Ext(t, x)
  auto right = ext_grid(indecs, t.summands, t.d);  // Ext(x, t)
  for (std::size_t x = 0; x < indecs.size(); ++x) {
    const bool in_t = report.membership[x] != kNone;
    std::optional<std::size_t> l, r;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (!l && left[i][x]) l = i;
      if (!r && right[x][i]) r = i;
    }
    if (in_t) {
      if (l) report.violations.push_back({x, true, l, left[*l][x], true});
      if (r) report.violations.push_back({x, true, r, right[x][*r], false});
    } else {
      if (!l) report.violations.push_back({x, false, std::nullopt, 0, true});
      if (!r) report.violations.push_back({x, false, std::nullopt, 0, false});
    }
  }
  report.passed = report.violations.empty();
  return report;
}

std::vector<std::vector<std::size_t>> search_d_cluster_tilting(const std::vector<Representation>& indecs,
                                                               std::size_t d) {
  const std::size_t n = indecs.size();
  if (n > 20) throw Error(ErrorCode::InvalidInput, "exhaustive search is limited to 20 indecomposables");
  auto ext = ext_grid(indecs, indecs, d);
  std::vector<std::vector<std::size_t>> hits;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      bool member = mask >> x & 1;
      bool left_orth = true, right_orth = true;
      for (std::size_t s = 0; s < n; ++s) {
        if (!(mask >> s & 1)) continue;
        if (ext[s][x]) left_orth = false;
        if (ext[x][s]) right_orth = false;
      }
      ok = member == left_orth && member == right_orth;
    }
    if (!ok) continue;
    std::vector<std::size_t> subset;
    for (std::size_t x = 0; x < n; ++x)
      if (mask >> x & 1) subset.push_back(x);
    hits.push_back(std::move(subset));
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

Approximation right_t_approximation(const TiltingData& t, const Representation& c, PruneOrder order) {
  if (c.is_zero()) throw Error(ErrorCode::ZeroModule, "approximation of the zero module");
  const std::size_t r = t.size();
  std::vector<std::vector<ModuleMorphism>> h(r);
  for (std::size_t i = 0; i < r; ++i) h[i] = hom_basis(t.summands[i], c);

  struct Candidate {
    std::size_t summand, index;
  };
  std::vector<Candidate> all;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < h[i].size(); ++k) all.push_back({i, k});

  // images[j][n]: flattened h o g for g in Hom(t_j, t_i), candidate n = (i, k)
  std::vector<std::size_t> target_dim(r);
  std::vector<std::vector<std::vector<RationalVector>>> images(r, std::vector<std::vector<RationalVector>>(all.size()));
  for (std::size_t j = 0; j < r; ++j) {
    target_dim[j] = h[j].size();
    for (std::size_t i = 0; i < r; ++i) {
      auto g = hom_basis(t.summands[j], t.summands[i]);
      for (std::size_t n = 0; n < all.size(); ++n) {
        if (all[n].summand != i) continue;
        for (const auto& gg : g) images[j][n].push_back(compose(h[i][all[n].index], gg).flatten());
      }
    }
  }

  std::vector<bool> kept(all.size(), true);
  auto still_approximates = [&]() {
    for (std::size_t j = 0; j < r; ++j) {
      if (target_dim[j] == 0) continue;
      std::vector<const RationalVector*> cols;
      for (std::size_t n = 0; n < all.size(); ++n)
        if (kept[n])
          for (const auto& v : images[j][n]) cols.push_back(&v);
      if (cols.size() < target_dim[j]) return false;
      RationalMatrix m(cols.front()->size(), cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) m.set_column(k, *cols[k]);
      if (rank(m) != target_dim[j]) return false;
    }
    return true;
  };

  std::vector<std::size_t> prune(all.size());
  std::iota(prune.begin(), prune.end(), 0);
  std::stable_sort(prune.begin(), prune.end(), [&](std::size_t x, std::size_t y) {
    return t.summands[all[x].summand].total_dimension() > t.summands[all[y].summand].total_dimension();
  });
  if (order == PruneOrder::Reversed) std::reverse(prune.begin(), prune.end());
  for (auto n : prune) {
    kept[n] = false;
    if (!still_approximates()) kept[n] = true;
  }

  TObject obj{Representation::zero(t.algebra), std::vector<std::size_t>(r, 0), {}};
  std::vector<Representation> parts;
  std::vector<ModuleMorphism> maps;
  for (std::size_t n = 0; n < all.size(); ++n) {
    if (!kept[n]) continue;
    parts.push_back(t.summands[all[n].summand]);
    maps.push_back(h[all[n].summand][all[n].index]);
    obj.summands.push_back(all[n].summand);
    ++obj.multiplicities[all[n].summand];
  }
  DirectSum sum = direct_sum_with_maps(parts, t.algebra);
  obj.module = sum.object;
  ModuleMorphism map = row_morphism(sum, maps, c);
  return Approximation{std::move(obj), std::move(map)};
}

AugmentedTResolution left_t_resolution(const TiltingData& t, const Representation& c, PruneOrder order) {
  AugmentedTResolution res{c, {}, {}};
  if (c.is_zero()) return res;
  Representation x = c;
  std::optional<ModuleMorphism> into_previous;
  for (std::size_t k = 0;; ++k) {
    if (k == t.d)
      throw Error(ErrorCode::ResolutionOverrun,
                  "left resolution needs more than " + std::to_string(t.d) + " terms");
    auto approx = right_t_approximation(t, x, order);
    res.terms.push_back(approx.source);
    res.maps.push_back(into_previous ? compose(*into_previous, approx.map) : approx.map);
    auto k_next = kernel(approx.map);
    if (k_next.object.is_zero()) break;
    x = k_next.object;
    into_previous = k_next.inclusion;
  }
  return res;
}

bool is_hom_exact(const TiltingData& t, const AugmentedTResolution& r) {
  for (const auto& s : t.summands) {
    const std::size_t target_dim = hom_dimension(s, r.target);
    std::vector<std::size_t> dims, ranks;
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      auto hk = hom_basis(s, r.terms[k].module);
      dims.push_back(hk.size());
      ranks.push_back(image_rank_after(r.maps[k], hk));
    }
    if (r.terms.empty()) continue;
    if (ranks[0] != target_dim) return false;
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      std::size_t incoming = k + 1 < r.terms.size() ? ranks[k + 1] : 0;
      if (dims[k] != ranks[k] + incoming) return false;
    }
  }
  return true;
}

bool is_right_minimal(const ModuleMorphism& f) {
  const auto& src = f.source();
  if (src.is_zero()) return true;
  auto end = hom_basis(src, src);
  RationalMatrix images(f.flatten().size(), end.size());
  for (std::size_t k = 0; k < end.size(); ++k) images.set_column(k, compose(f, end[k]).flatten());
  RationalMatrix ker = kernel_basis(images);
  if (ker.cols() == 0) return true;
  auto rad = endomorphism_radical(src, end);
  std::vector<ModuleMorphism> both = rad;
  for (std::size_t c = 0; c < ker.cols(); ++c) both.push_back(linear_combination(end, ker.column(c)));
  return span_dimension(both) == span_dimension(rad);
}

bool is_minimal_t_resolution(const AugmentedTResolution& r) {
  return std::all_of(r.maps.begin(), r.maps.end(), [](const ModuleMorphism& f) { return is_right_minimal(f); });
}

}  // namespace higherk

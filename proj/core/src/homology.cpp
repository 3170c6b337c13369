#include "higherk/homology.hpp"

#include <sstream>

#include "higherk/errors.hpp"
#include "higherk/linalg.hpp"

namespace higherk {

namespace {

// Incoming arrow images at v, side by side.
RationalMatrix incoming_images(const Representation& m, std::size_t v) {
  const Quiver& q = m.algebra()->quiver();
  RationalMatrix r(m.dim(v), 0);
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai)
    if (q.arrow(ai).target == v) r = hstack(r, m.arrow_map(ai));
  return r;
}

Representation zero_over(const AlgebraPtr& a) { return Representation::zero(a); }

}  // namespace

std::vector<std::size_t> ProjectiveTerm::multiplicities() const {
  std::vector<std::size_t> mult(module.dims().size(), 0);
  for (auto g : generators) ++mult[g];
  return mult;
}

ProjectiveTerm projective_term(const AlgebraPtr& a, std::vector<std::size_t> generators) {
  std::vector<Representation> parts;
  parts.reserve(generators.size());
  for (auto v : generators) parts.push_back(indecomposable_projective(a, v));
  return ProjectiveTerm{direct_sum(parts, a), std::move(generators)};
}

std::size_t summand_offset(const ProjectiveTerm& term, std::size_t i, std::size_t w) {
  const auto& alg = *term.module.algebra();
  std::size_t off = 0;
  for (std::size_t k = 0; k < i; ++k) off += alg.dimension_between(term.generators[k], w);
  return off;
}

ModuleMorphism projective_morphism(const ProjectiveTerm& source, const ProjectiveTerm& target,
                                   const std::vector<std::vector<RationalVector>>& images) {
  const auto& alg = *source.module.algebra();
  const std::size_t nv = alg.vertex_count();
  std::vector<RationalMatrix> maps;
  for (std::size_t w = 0; w < nv; ++w) {
    RationalMatrix m(target.module.dim(w), source.module.dim(w));
    std::size_t col = 0;
    for (std::size_t i = 0; i < source.generators.size(); ++i) {
      const std::size_t vi = source.generators[i];
      for (const auto& q : alg.basis_between(vi, w)) {
        std::size_t row = 0;
        for (std::size_t j = 0; j < target.generators.size(); ++j) {
          const std::size_t uj = target.generators[j];
          const auto& y = images[i][j];
          const auto& from = alg.basis_between(uj, vi);
          for (std::size_t p = 0; p < from.size(); ++p) {
            if (y[p] == 0) continue;
            auto prod = alg.reduce(concatenate(from[p], q));
            for (std::size_t k = 0; k < prod.size(); ++k)
              if (prod[k] != 0) m(row + k, col) += y[p] * prod[k];
          }
          row += alg.dimension_between(uj, w);
        }
        ++col;
      }
    }
    maps.push_back(std::move(m));
  }
  return trusted_morphism(source.module, target.module, std::move(maps));
}

std::vector<std::vector<RationalVector>> generator_images(const ProjectiveTerm& source,
                                                          const ProjectiveTerm& target,
                                                          const ModuleMorphism& f) {
  const auto& alg = *source.module.algebra();
  std::vector<std::vector<RationalVector>> images(source.generators.size());
  for (std::size_t i = 0; i < source.generators.size(); ++i) {
    const std::size_t vi = source.generators[i];
    const std::size_t col = summand_offset(source, i, vi);
    const auto& fv = f.vertex_map(vi);
    std::size_t row = 0;
    for (auto uj : target.generators) {
      const std::size_t len = alg.dimension_between(uj, vi);
      RationalVector y(len);
      for (std::size_t k = 0; k < len; ++k) y[k] = fv(row + k, col);
      images[i].push_back(std::move(y));
      row += len;
    }
  }
  return images;
}

Subobject radical(const Representation& m) {
  std::vector<RationalMatrix> bases;
  for (std::size_t v = 0; v < m.dims().size(); ++v) bases.push_back(column_space_basis(incoming_images(m, v)));
  return submodule(m, bases);
}

std::vector<std::size_t> top_dimensions(const Representation& m) {
  std::vector<std::size_t> top;
  for (std::size_t v = 0; v < m.dims().size(); ++v) top.push_back(m.dim(v) - rank(incoming_images(m, v)));
  return top;
}

bool lands_in_radical(const ModuleMorphism& f) {
  const auto& n = f.target();
  for (std::size_t v = 0; v < n.dims().size(); ++v) {
    RationalMatrix r = incoming_images(n, v);
    if (rank(hstack(r, f.vertex_map(v))) != rank(r)) return false;
  }
  return true;
}

bool is_projective(const Representation& m) {
  const auto& alg = *m.algebra();
  auto top = top_dimensions(m);
  std::size_t cover = 0;
  for (std::size_t v = 0; v < top.size(); ++v)
    for (std::size_t w = 0; w < top.size(); ++w) cover += top[v] * alg.dimension_between(v, w);
  return cover == m.total_dimension();
}

ProjectiveCover projective_cover(const Representation& m) {
  if (m.is_zero()) throw Error(ErrorCode::ZeroModule, "projective cover of the zero module");
  const auto& a = m.algebra();
  const std::size_t nv = a->vertex_count();
  std::vector<std::size_t> gens;
  std::vector<RationalVector> gen_vectors;
  for (std::size_t v = 0; v < nv; ++v) {
    RationalMatrix r = incoming_images(m, v);
    const std::size_t base = r.cols();
    for (auto c : independent_columns(hstack(r, RationalMatrix::identity(m.dim(v))))) {
      if (c < base) continue;
      RationalVector g(m.dim(v), Rational(0));
      g[c - base] = 1;
      gens.push_back(v);
      gen_vectors.push_back(std::move(g));
    }
  }
  ProjectiveTerm term = projective_term(a, gens);
  std::vector<RationalMatrix> maps;
  for (std::size_t w = 0; w < nv; ++w) {
    RationalMatrix f(m.dim(w), term.module.dim(w));
    std::size_t col = 0;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (const auto& p : a->basis_between(gens[i], w)) f.set_column(col++, m.path_map(p) * std::span<const Rational>(gen_vectors[i]));
    maps.push_back(std::move(f));
  }
  ModuleMorphism map(term.module, m, std::move(maps));
  return ProjectiveCover{std::move(term), std::move(map)};
}

Representation ProjectiveResolution::term(std::size_t k) const {
  if (k < terms.size()) return terms[k].module;
  return zero_over(target.algebra());
}

ProjectiveResolution minimal_projective_resolution(const Representation& m, std::size_t length) {
  ProjectiveResolution res{m, {}, {}, std::nullopt, false};
  if (m.is_zero()) {
    res.complete = true;
    return res;
  }
  auto cover = projective_cover(m);
  res.terms.push_back(cover.term);
  res.augmentation = cover.map;
  Subobject syzygy = kernel(cover.map);
  for (std::size_t k = 1; k <= length && !syzygy.object.is_zero(); ++k) {
    auto next = projective_cover(syzygy.object);
    ModuleMorphism d = compose(syzygy.inclusion, next.map);
    res.terms.push_back(next.term);
    res.differentials.push_back(d);
    syzygy = kernel(d);
  }
  res.complete = syzygy.object.is_zero();
  return res;
}

bool is_exact_resolution(const ProjectiveResolution& r) {
  if (r.terms.empty()) return r.target.is_zero();
  if (!r.augmentation || !r.augmentation->is_surjective()) return false;
  const std::size_t nv = r.target.dims().size();
  for (std::size_t v = 0; v < nv; ++v) {
    // dim ker(P_k -> P_{k-1}) = rank(P_{k+1} -> P_k)
    std::size_t prev_rank = rank(r.augmentation->vertex_map(v));
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      std::size_t kernel_dim = r.terms[k].module.dim(v) - prev_rank;
      std::size_t next_rank = k < r.differentials.size() ? rank(r.differentials[k].vertex_map(v)) : 0;
      bool last = k + 1 == r.terms.size();
      if (!last && kernel_dim != next_rank) return false;
      if (last && r.complete && kernel_dim != 0) return false;
      prev_rank = next_rank;
    }
  }
  return true;
}

bool is_minimal_resolution(const ProjectiveResolution& r) {
  if (r.terms.empty()) return true;
  if (r.terms[0].multiplicities() != top_dimensions(r.target)) return false;
  for (const auto& d : r.differentials)
    if (!lands_in_radical(d)) return false;
  return true;
}

std::string module_key(const Representation& m) {
  std::ostringstream os;
  os << static_cast<const void*>(m.algebra().get()) << '|';
  for (auto d : m.dims()) os << d << ',';
  for (const auto& x : m.arrow_maps()) {
    os << '|';
    for (const auto& e : x.data()) os << e.get_str() << ',';
  }
  return os.str();
}

ProjectiveResolution ResolutionCache::get(const Representation& m, std::size_t length) {
  const std::string key = module_key(m);
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it != entries_.end() && (it->second.complete || it->second.terms.size() > length)) return it->second;
  }
  auto res = minimal_projective_resolution(m, length);
  std::lock_guard lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return entries_.emplace(key, std::move(res)).first->second;
  if (!(it->second.complete || it->second.terms.size() > length)) it->second = std::move(res);
  return it->second;
}

std::size_t ext_dim(std::size_t i, const Representation& m, const Representation& n) {
  return ext_dim(i, minimal_projective_resolution(m, i + 1), n);
}

namespace {

// Hom(P_k, n) -> Hom(P_{k+1}, n) under generator evaluation.
RationalMatrix induced_hom_map(const ProjectiveResolution& res, std::size_t k, const Representation& n) {
  const auto& alg = *res.target.algebra();
  const auto& src = res.terms[k + 1];
  const auto& tgt = res.terms[k];
  auto images = generator_images(src, tgt, res.differentials[k]);
  std::size_t rows = 0, cols = 0;
  for (auto u : src.generators) rows += n.dim(u);
  for (auto v : tgt.generators) cols += n.dim(v);
  RationalMatrix d(rows, cols);
  std::size_t r0 = 0;
  for (std::size_t j = 0; j < src.generators.size(); ++j) {
    const std::size_t uj = src.generators[j];
    std::size_t c0 = 0;
    for (std::size_t i = 0; i < tgt.generators.size(); ++i) {
      const std::size_t vi = tgt.generators[i];
      const auto& paths = alg.basis_between(vi, uj);
      RationalMatrix block(n.dim(uj), n.dim(vi));
      for (std::size_t p = 0; p < paths.size(); ++p)
        if (images[j][i][p] != 0) block += images[j][i][p] * n.path_map(paths[p]);
      d.set_block(r0, c0, block);
      c0 += n.dim(vi);
    }
    r0 += n.dim(uj);
  }
  return d;
}

std::size_t hom_from_term(const ProjectiveResolution& res, std::size_t k, const Representation& n) {
  std::size_t total = 0;
  for (auto v : res.terms[k].generators) total += n.dim(v);
  return total;
}

}  // namespace

std::size_t ext_dim(std::size_t i, const ProjectiveResolution& res, const Representation& n) {
  if (!same_algebra(res.target.algebra(), n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "Ext between modules over different algebras");
  if (!res.complete && res.terms.size() < i + 2)
    throw std::invalid_argument("ext_dim: resolution too short");
  if (i >= res.terms.size()) return 0;
  const std::size_t here = hom_from_term(res, i, n);
  std::size_t kernel_dim = here;
  if (i + 1 < res.terms.size()) kernel_dim -= rank(induced_hom_map(res, i, n));
  std::size_t incoming = i == 0 ? 0 : rank(induced_hom_map(res, i - 1, n));
  return kernel_dim - incoming;
}

Representation transpose_d(const Representation& m, std::size_t d) {
  return transpose_d(minimal_projective_resolution(m, d), d);
}

Representation transpose_d(const ProjectiveResolution& res, std::size_t d) {
  if (d == 0) throw std::invalid_argument("transpose_d needs d >= 1");
  const AlgebraPtr& a = res.target.algebra();
  AlgebraPtr op = a->opposite();
  if (res.terms.size() <= d) {
    if (!res.complete) throw std::invalid_argument("transpose_d: resolution too short");
    return zero_over(op);
  }
  const auto& upper = res.terms[d];
  const auto& lower = res.terms[d - 1];
  auto images = generator_images(upper, lower, res.differentials[d - 1]);

  ProjectiveTerm lower_star = projective_term(op, lower.generators);
  ProjectiveTerm upper_star = projective_term(op, upper.generators);
  // generator i of P_{d-1}* goes to sum_j reversed(x_ij), where x_ij is the
  // component of d(generator j) at summand i.
  std::vector<std::vector<RationalVector>> star(lower.generators.size());
  for (std::size_t i = 0; i < lower.generators.size(); ++i) {
    const std::size_t vi = lower.generators[i];
    for (std::size_t j = 0; j < upper.generators.size(); ++j) {
      const std::size_t uj = upper.generators[j];
      const auto& paths = a->basis_between(vi, uj);
      RationalVector y(op->dimension_between(uj, vi), Rational(0));
      for (std::size_t p = 0; p < paths.size(); ++p) {
        const Rational& c = images[j][i][p];
        if (c == 0) continue;
        auto r = op->reduce(reversed(paths[p]));
        for (std::size_t k = 0; k < r.size(); ++k) y[k] += c * r[k];
      }
      star[i].push_back(std::move(y));
    }
  }
  return cokernel(projective_morphism(lower_star, upper_star, star)).object;
}

Representation tau_d(const Representation& m, std::size_t d) {
  return tau_d(minimal_projective_resolution(m, d), d);
}

Representation tau_d(const ProjectiveResolution& res, std::size_t d) { return dual(transpose_d(res, d)); }

Representation tau_inverse(const Representation& m) { return transpose_d(dual(m), 1); }

}  // namespace higherk

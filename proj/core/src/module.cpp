#include "higherk/module.hpp"

#include <algorithm>
#include <numeric>

#include "higherk/errors.hpp"
#include "higherk/linalg.hpp"
#include "higherk/polynomial.hpp"
#include "higherk/random.hpp"

namespace higherk {

// ---------------------------------------------------------------------------
// Representation

Representation::Representation(Unchecked, AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<RationalMatrix> arrow_maps)
    : data_(std::make_shared<const Data>(Data{std::move(algebra), std::move(dims), std::move(arrow_maps)})) {}

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                               std::vector<RationalMatrix> arrow_maps)
    : Representation(Unchecked{}, std::move(algebra), std::move(dims), std::move(arrow_maps)) {
  const auto& alg = data_->algebra;
  if (!alg) throw Error(ErrorCode::InvalidRepresentation, "null algebra");
  const Quiver& q = alg->quiver();
  if (data_->dims.size() != q.vertex_count())
    throw Error(ErrorCode::InvalidRepresentation, "dimension vector has the wrong length");
  if (data_->maps.size() != q.arrow_count())
    throw Error(ErrorCode::InvalidRepresentation, "wrong number of arrow maps");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& m = data_->maps[a];
    if (m.rows() != data_->dims[q.arrow(a).target] || m.cols() != data_->dims[q.arrow(a).source])
      throw Error(ErrorCode::InvalidRepresentation, "map for arrow '" + q.arrow(a).name + "' has the wrong shape");
  }
  for (const auto& rel : alg->relations()) {
    if (rel.terms.empty()) continue;
    const Path& p0 = rel.terms.front().path;
    RationalMatrix acc(data_->dims[p0.target], data_->dims[p0.source]);
    for (const auto& t : rel.terms) acc += t.coefficient * path_map(t.path);
    if (!acc.is_zero())
      throw Error(ErrorCode::InvalidRepresentation, "a relation does not act as zero");
  }
}

Representation trusted_representation(AlgebraPtr algebra, std::vector<std::size_t> dims,
                                      std::vector<RationalMatrix> arrow_maps) {
  return Representation(Representation::Unchecked{}, std::move(algebra), std::move(dims),
                        std::move(arrow_maps));
}

Representation Representation::zero(AlgebraPtr algebra) {
  const Quiver& q = algebra->quiver();
  return Representation(Unchecked{}, algebra, std::vector<std::size_t>(q.vertex_count(), 0),
                        std::vector<RationalMatrix>(q.arrow_count()));
}

std::size_t Representation::total_dimension() const {
  return std::accumulate(data_->dims.begin(), data_->dims.end(), std::size_t{0});
}

RationalMatrix Representation::path_map(const Path& p) const {
  RationalMatrix r = RationalMatrix::identity(dim(p.source));
  for (auto a : p.arrows) r = arrow_map(a) * r;
  return r;
}

bool operator==(const Representation& a, const Representation& b) {
  if (a.data_ == b.data_) return true;
  return same_algebra(a.algebra(), b.algebra()) && a.dims() == b.dims() && a.arrow_maps() == b.arrow_maps();
}

// ---------------------------------------------------------------------------
// ModuleMorphism

ModuleMorphism::ModuleMorphism(Trusted, Representation source, Representation target,
                               std::vector<RationalMatrix> maps)
    : source_(std::move(source)), target_(std::move(target)), maps_(std::move(maps)) {}

ModuleMorphism::ModuleMorphism(Representation source, Representation target,
                               std::vector<RationalMatrix> vertex_maps)
    : ModuleMorphism(Trusted{}, std::move(source), std::move(target), std::move(vertex_maps)) {
  if (!same_algebra(source_.algebra(), target_.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "morphism between modules over different algebras");
  const Quiver& q = source_.algebra()->quiver();
  if (maps_.size() != q.vertex_count())
    throw Error(ErrorCode::InvalidRepresentation, "wrong number of vertex maps");
  for (std::size_t v = 0; v < q.vertex_count(); ++v)
    if (maps_[v].rows() != target_.dim(v) || maps_[v].cols() != source_.dim(v))
      throw Error(ErrorCode::InvalidRepresentation, "vertex map has the wrong shape");
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const auto& arr = q.arrow(a);
    if (!(maps_[arr.target] * source_.arrow_map(a) == target_.arrow_map(a) * maps_[arr.source]))
      throw Error(ErrorCode::InvalidRepresentation,
                  "vertex maps do not intertwine arrow '" + arr.name + "'");
  }
}

ModuleMorphism trusted_morphism(Representation source, Representation target,
                                std::vector<RationalMatrix> vertex_maps) {
  return ModuleMorphism(ModuleMorphism::Trusted{}, std::move(source), std::move(target),
                        std::move(vertex_maps));
}

ModuleMorphism ModuleMorphism::zero(const Representation& source, const Representation& target) {
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < source.dims().size(); ++v) maps.emplace_back(target.dim(v), source.dim(v));
  return trusted_morphism(source, target, std::move(maps));
}

ModuleMorphism ModuleMorphism::identity(const Representation& m) {
  std::vector<RationalMatrix> maps;
  for (auto d : m.dims()) maps.push_back(RationalMatrix::identity(d));
  return trusted_morphism(m, m, std::move(maps));
}

bool ModuleMorphism::is_zero() const {
  return std::all_of(maps_.begin(), maps_.end(), [](const RationalMatrix& m) { return m.is_zero(); });
}

bool ModuleMorphism::is_injective() const {
  for (const auto& m : maps_)
    if (rank(m) != m.cols()) return false;
  return true;
}

bool ModuleMorphism::is_surjective() const {
  for (const auto& m : maps_)
    if (rank(m) != m.rows()) return false;
  return true;
}

RationalVector ModuleMorphism::flatten() const {
  RationalVector v;
  for (const auto& m : maps_) v.insert(v.end(), m.data().begin(), m.data().end());
  return v;
}

ModuleMorphism operator+(const ModuleMorphism& f, const ModuleMorphism& g) {
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(f.maps_[v] + g.maps_[v]);
  return trusted_morphism(f.source_, f.target_, std::move(maps));
}

ModuleMorphism operator*(const Rational& c, const ModuleMorphism& f) {
  std::vector<RationalMatrix> maps;
  for (const auto& m : f.maps_) maps.push_back(c * m);
  return trusted_morphism(f.source_, f.target_, std::move(maps));
}

ModuleMorphism compose(const ModuleMorphism& g, const ModuleMorphism& f) {
  if (f.target().dims() != g.source().dims())
    throw Error(ErrorCode::InvalidRepresentation, "composition of non-composable morphisms");
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < f.maps_.size(); ++v) maps.push_back(g.maps_[v] * f.maps_[v]);
  return ModuleMorphism(ModuleMorphism::Trusted{}, f.source_, g.target_, std::move(maps));
}

ModuleMorphism linear_combination(std::span<const ModuleMorphism> fs, std::span<const Rational> coeffs) {
  if (fs.empty()) throw std::invalid_argument("linear_combination of no morphisms");
  std::vector<RationalMatrix> maps;
  for (const auto& m : fs.front().vertex_maps()) maps.emplace_back(m.rows(), m.cols());
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < maps.size(); ++v) maps[v] += coeffs[i] * fs[i].vertex_map(v);
  }
  return trusted_morphism(fs.front().source(), fs.front().target(), std::move(maps));
}

// ---------------------------------------------------------------------------
// Hom

std::vector<ModuleMorphism> hom_basis(const Representation& m, const Representation& n) {
  if (!same_algebra(m.algebra(), n.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "Hom between modules over different algebras");
  const Quiver& q = m.algebra()->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];
  if (unknowns == 0) return {};

  std::size_t eqs = 0;
  for (const auto& a : q.arrows()) eqs += n.dim(a.target) * m.dim(a.source);
  RationalMatrix sys(eqs, unknowns);
  std::size_t row = 0;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    const auto& ma = m.arrow_map(ai);  // m_t x m_s
    const auto& na = n.arrow_map(ai);  // n_t x n_s
    const std::size_t ms = m.dim(a.source), mt = m.dim(a.target);
    const std::size_t ns = n.dim(a.source), nt = n.dim(a.target);
    // (f_t * ma - na * f_s)(i, j) = 0 for i < nt, j < ms
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < ms; ++j, ++row) {
        for (std::size_t k = 0; k < mt; ++k)
          if (ma(k, j) != 0) sys(row, offset[a.target] + i * mt + k) += ma(k, j);
        for (std::size_t k = 0; k < ns; ++k)
          if (na(i, k) != 0) sys(row, offset[a.source] + k * ms + j) -= na(i, k);
      }
  }
  RationalMatrix ker = kernel_basis(sys);
  std::vector<ModuleMorphism> basis;
  basis.reserve(ker.cols());
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<RationalMatrix> maps;
    for (std::size_t v = 0; v < nv; ++v) {
      RationalMatrix f(n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < n.dim(v); ++i)
        for (std::size_t j = 0; j < m.dim(v); ++j) f(i, j) = ker(offset[v] + i * m.dim(v) + j, c);
      maps.push_back(std::move(f));
    }
    basis.push_back(trusted_morphism(m, n, std::move(maps)));
  }
  return basis;
}

std::size_t hom_dimension(const Representation& m, const Representation& n) {
  return hom_basis(m, n).size();
}

std::size_t span_dimension(std::span<const ModuleMorphism> fs) {
  if (fs.empty()) return 0;
  auto first = fs.front().flatten();
  RationalMatrix mat(first.size(), fs.size());
  for (std::size_t c = 0; c < fs.size(); ++c) mat.set_column(c, fs[c].flatten());
  return rank(mat);
}

std::size_t image_rank_after(const ModuleMorphism& post, std::span<const ModuleMorphism> fs) {
  std::vector<ModuleMorphism> composed;
  composed.reserve(fs.size());
  for (const auto& f : fs) composed.push_back(compose(post, f));
  return span_dimension(composed);
}

std::size_t image_rank_before(std::span<const ModuleMorphism> fs, const ModuleMorphism& pre) {
  std::vector<ModuleMorphism> composed;
  composed.reserve(fs.size());
  for (const auto& f : fs) composed.push_back(compose(f, pre));
  return span_dimension(composed);
}

// ---------------------------------------------------------------------------
// Kernels, cokernels, images

Subobject submodule(const Representation& m, const std::vector<RationalMatrix>& bases) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : bases) dims.push_back(b.cols());
  std::vector<RationalMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    auto x = solve(bases[a.target], m.arrow_map(ai) * bases[a.source]);
    if (!x) throw Error(ErrorCode::InvalidRepresentation, "subspaces are not closed under arrow '" + a.name + "'");
    maps.push_back(std::move(*x));
  }
  Representation sub = trusted_representation(m.algebra(), std::move(dims), std::move(maps));
  return Subobject{sub, trusted_morphism(sub, m, bases)};
}

Subobject kernel(const ModuleMorphism& f) {
  std::vector<RationalMatrix> bases;
  for (const auto& fv : f.vertex_maps()) bases.push_back(kernel_basis(fv));
  return submodule(f.source(), bases);
}

Quotient cokernel(const ModuleMorphism& f) {
  const Representation& n = f.target();
  const Quiver& q = n.algebra()->quiver();
  std::vector<RationalMatrix> proj;
  std::vector<std::size_t> dims;
  for (const auto& fv : f.vertex_maps()) {
    proj.push_back(left_kernel_basis(fv));
    dims.push_back(proj.back().rows());
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    // c_a * proj_s = proj_t * n_a; proj_s has full row rank.
    RationalMatrix rhs = proj[a.target] * n.arrow_map(ai);
    auto x = solve(proj[a.source].transpose(), rhs.transpose());
    if (!x) throw Error(ErrorCode::InvalidRepresentation, "cokernel construction failed");
    maps.push_back(x->transpose());
  }
  Representation c = trusted_representation(n.algebra(), std::move(dims), std::move(maps));
  return Quotient{c, trusted_morphism(n, c, std::move(proj))};
}

Image image(const ModuleMorphism& f) {
  std::vector<RationalMatrix> bases;
  for (const auto& fv : f.vertex_maps()) bases.push_back(column_space_basis(fv));
  Subobject sub = submodule(f.target(), bases);
  std::vector<RationalMatrix> corestriction;
  for (std::size_t v = 0; v < bases.size(); ++v) {
    auto z = solve(bases[v], f.vertex_map(v));
    corestriction.push_back(std::move(*z));
  }
  return Image{sub.object, sub.inclusion, trusted_morphism(f.source(), sub.object, std::move(corestriction))};
}

ModuleMorphism factor_through_mono(const ModuleMorphism& f, const ModuleMorphism& mono) {
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < f.vertex_maps().size(); ++v) {
    auto x = solve(mono.vertex_map(v), f.vertex_map(v));
    if (!x) throw Error(ErrorCode::InvalidRepresentation, "morphism does not factor through the monomorphism");
    maps.push_back(std::move(*x));
  }
  return trusted_morphism(f.source(), mono.source(), std::move(maps));
}

// ---------------------------------------------------------------------------
// Direct sums

DirectSum direct_sum_with_maps(std::span<const Representation> parts, const AlgebraPtr& algebra) {
  const Quiver& q = algebra->quiver();
  const std::size_t nv = q.vertex_count();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    if (!same_algebra(p.algebra(), algebra))
      throw Error(ErrorCode::AlgebraMismatch, "direct sum of modules over different algebras");
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    std::vector<RationalMatrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow_map(ai));
    maps.push_back(block_diagonal<Rational>(blocks));
  }
  Representation sum = trusted_representation(algebra, dims, std::move(maps));
  DirectSum out{sum, {}, {}};
  std::vector<std::size_t> offset(nv, 0);
  for (const auto& p : parts) {
    std::vector<RationalMatrix> inj, pr;
    for (std::size_t v = 0; v < nv; ++v) {
      RationalMatrix i(dims[v], p.dim(v)), r(p.dim(v), dims[v]);
      for (std::size_t k = 0; k < p.dim(v); ++k) {
        i(offset[v] + k, k) = 1;
        r(k, offset[v] + k) = 1;
      }
      inj.push_back(std::move(i));
      pr.push_back(std::move(r));
      offset[v] += p.dim(v);
    }
    out.injections.push_back(trusted_morphism(p, sum, std::move(inj)));
    out.projections.push_back(trusted_morphism(sum, p, std::move(pr)));
  }
  return out;
}

Representation direct_sum(std::span<const Representation> parts, const AlgebraPtr& algebra) {
  return direct_sum_with_maps(parts, algebra).object;
}

Representation direct_sum(std::span<const Representation> parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no parts needs an explicit algebra");
  return direct_sum(parts, parts.front().algebra());
}

ModuleMorphism row_morphism(const DirectSum& source, std::span<const ModuleMorphism> fs,
                            const Representation& target) {
  const std::size_t nv = target.dims().size();
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < nv; ++v) {
    RationalMatrix m(target.dim(v), source.object.dim(v));
    std::size_t col = 0;
    for (const auto& f : fs) {
      m.set_block(0, col, f.vertex_map(v));
      col += f.vertex_map(v).cols();
    }
    maps.push_back(std::move(m));
  }
  return trusted_morphism(source.object, target, std::move(maps));
}

ModuleMorphism column_morphism(const Representation& source, std::span<const ModuleMorphism> fs,
                               const DirectSum& target) {
  const std::size_t nv = source.dims().size();
  std::vector<RationalMatrix> maps;
  for (std::size_t v = 0; v < nv; ++v) {
    RationalMatrix m(target.object.dim(v), source.dim(v));
    std::size_t row = 0;
    for (const auto& f : fs) {
      m.set_block(row, 0, f.vertex_map(v));
      row += f.vertex_map(v).rows();
    }
    maps.push_back(std::move(m));
  }
  return trusted_morphism(source, target.object, std::move(maps));
}

// ---------------------------------------------------------------------------
// Invariants and isomorphism

std::vector<long> composition_vector(const Representation& m) {
  std::vector<long> v;
  for (auto d : m.dims()) v.push_back(static_cast<long>(d));
  return v;
}

std::pair<Representation, ModuleMorphism> change_basis(const Representation& m,
                                                       const std::vector<RationalMatrix>& g) {
  const Quiver& q = m.algebra()->quiver();
  std::vector<RationalMatrix> inv;
  for (const auto& gv : g) {
    auto i = inverse(gv);
    if (!i) throw std::invalid_argument("change_basis: singular base change");
    inv.push_back(std::move(*i));
  }
  std::vector<RationalMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrow(ai);
    maps.push_back(g[a.target] * m.arrow_map(ai) * inv[a.source]);
  }
  Representation n = trusted_representation(m.algebra(), m.dims(), std::move(maps));
  return {n, trusted_morphism(m, n, g)};
}

std::optional<ModuleMorphism> find_isomorphism(const Representation& m, const Representation& n,
                                               std::uint64_t seed) {
  if (!same_algebra(m.algebra(), n.algebra())) return std::nullopt;
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return ModuleMorphism::zero(m, n);
  auto h = hom_basis(m, n);
  if (h.empty()) return std::nullopt;
  if (h.size() != hom_dimension(m, m)) return std::nullopt;
  Rng rng(seed);
  constexpr int kAttempts = 12;
  std::vector<Rational> coeffs(h.size());
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (auto& c : coeffs) c = attempt == 0 ? Rational(1) : Rational(rng.uniform(-60, 60));
    auto f = linear_combination(h, coeffs);
    bool invertible = true;
    for (const auto& fv : f.vertex_maps())
      if (fv.rows() != 0 && determinant(fv) == 0) {
        invertible = false;
        break;
      }
    if (invertible) return f;
  }
  return std::nullopt;
}

bool is_isomorphic(const Representation& m, const Representation& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).has_value();
}

namespace {

Rational trace_of_composite(const ModuleMorphism& f, const ModuleMorphism& g) {
  Rational t = 0;
  for (std::size_t v = 0; v < f.vertex_maps().size(); ++v) {
    const auto& a = f.vertex_map(v);
    const auto& b = g.vertex_map(v);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k)
        if (a(i, k) != 0) t += a(i, k) * b(k, i);
  }
  return t;
}

RationalMatrix trace_form(std::span<const ModuleMorphism> basis) {
  RationalMatrix t(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      t(i, j) = trace_of_composite(basis[i], basis[j]);
      t(j, i) = t(i, j);
    }
  return t;
}

}  // namespace

std::vector<ModuleMorphism> endomorphism_radical(const Representation& m,
                                                 std::span<const ModuleMorphism> end_basis) {
  (void)m;
  std::vector<ModuleMorphism> rad;
  if (end_basis.empty()) return rad;
  RationalMatrix ker = kernel_basis(trace_form(end_basis));
  for (std::size_t c = 0; c < ker.cols(); ++c) rad.push_back(linear_combination(end_basis, ker.column(c)));
  return rad;
}

std::size_t endomorphism_top_dimension(const Representation& m) {
  auto e = hom_basis(m, m);
  if (e.empty()) return 0;
  return rank(trace_form(e));
}

bool is_certified_indecomposable(const Representation& m) {
  return !m.is_zero() && endomorphism_top_dimension(m) == 1;
}

// ---------------------------------------------------------------------------
// Decomposition

namespace {

struct Piece {
  Representation module;
  ModuleMorphism inclusion;  // into the module being decomposed
};

// Pairwise coprime factors of the characteristic polynomial of x with their
// exponents, from the squarefree decomposition refined by small integer roots.
std::vector<std::pair<Polynomial, std::size_t>> coprime_factors(const Polynomial& chi) {
  std::vector<std::pair<Polynomial, std::size_t>> out;
  auto parts = squarefree_decomposition(chi);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Polynomial g = parts[i];
    if (g.degree() <= 0) continue;
    for (long lam = 0; lam <= 16 && g.degree() > 1; ++lam) {
      for (long sgn : {1L, -1L}) {
        if (lam == 0 && sgn < 0) continue;
        Rational root(sgn * lam);
        if (g.degree() > 1 && g.evaluate(root) == 0) {
          out.emplace_back(Polynomial::linear(root), i + 1);
          g = divmod(g, Polynomial::linear(root)).first;
        }
      }
    }
    out.emplace_back(g, i + 1);
  }
  return out;
}

// Splits m along the primary decomposition of x, if x has at least two
// coprime factors.
std::optional<std::pair<Subobject, Subobject>> fitting_split(const Representation& m, const ModuleMorphism& x) {
  Polynomial chi({Rational(1)});
  for (const auto& xv : x.vertex_maps())
    if (xv.rows()) chi = chi * characteristic_polynomial(xv);
  auto factors = coprime_factors(chi);
  if (factors.size() < 2) return std::nullopt;
  Polynomial p = power(factors.front().first, factors.front().second);
  Polynomial rest = divmod(chi, p).first;
  std::vector<RationalMatrix> kp, kr;
  for (const auto& xv : x.vertex_maps()) {
    kp.push_back(kernel_basis(p.evaluate(xv)));
    kr.push_back(kernel_basis(rest.evaluate(xv)));
  }
  return std::make_pair(submodule(m, kp), submodule(m, kr));
}

void split_recursive(const Piece& piece, Rng& rng, std::vector<Piece>& out) {
  const Representation& m = piece.module;
  if (m.is_zero()) return;
  auto end = hom_basis(m, m);
  std::size_t top = rank(trace_form(end));
  if (top == 1) {
    out.push_back(piece);
    return;
  }
  constexpr std::size_t kRandomCandidates = 300;
  std::vector<Rational> coeffs(end.size());
  for (std::size_t attempt = 0; attempt < end.size() + kRandomCandidates; ++attempt) {
    ModuleMorphism x = end.front();
    if (attempt < end.size()) {
      x = end[attempt];
    } else {
      long range = attempt < end.size() + 100 ? 1 : 3;
      for (auto& c : coeffs) c = Rational(rng.uniform(-range, range));
      x = linear_combination(end, coeffs);
    }
    auto split = fitting_split(m, x);
    if (!split) continue;
    split_recursive(Piece{split->first.object, compose(piece.inclusion, split->first.inclusion)}, rng, out);
    split_recursive(Piece{split->second.object, compose(piece.inclusion, split->second.inclusion)}, rng, out);
    return;
  }
  throw Error(ErrorCode::NotAbsolutelyIndecomposable,
              "End/rad has dimension " + std::to_string(top) + " and no splitting endomorphism was found");
}

}  // namespace

Decomposition decompose(const Representation& m, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Piece> pieces;
  split_recursive(Piece{m, ModuleMorphism::identity(m)}, rng, pieces);

  std::vector<Summand> summands;
  std::vector<std::vector<ModuleMorphism>> inclusions;
  for (const auto& p : pieces) {
    bool placed = false;
    for (std::size_t k = 0; k < summands.size() && !placed; ++k) {
      if (summands[k].module.dims() != p.module.dims()) continue;
      if (auto iso = find_isomorphism(summands[k].module, p.module, rng.next())) {
        ++summands[k].multiplicity;
        inclusions[k].push_back(compose(p.inclusion, *iso));
        placed = true;
      }
    }
    if (!placed) {
      summands.push_back(Summand{p.module, 1});
      inclusions.push_back({p.inclusion});
    }
  }

  std::vector<Representation> parts;
  std::vector<ModuleMorphism> flat;
  for (std::size_t k = 0; k < summands.size(); ++k)
    for (const auto& inc : inclusions[k]) {
      parts.push_back(summands[k].module);
      flat.push_back(inc);
    }
  DirectSum sum = direct_sum_with_maps(parts, m.algebra());
  ModuleMorphism witness = row_morphism(sum, flat, m);
  if (!witness.is_isomorphism())
    throw Error(ErrorCode::InvalidRepresentation, "decomposition witness is not invertible");
  return Decomposition{std::move(summands), std::move(witness), seed};
}

// ---------------------------------------------------------------------------
// Standard modules

Representation simple_module(const AlgebraPtr& a, std::size_t vertex) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims.at(vertex) = 1;
  std::vector<RationalMatrix> maps;
  for (const auto& arr : q.arrows()) maps.emplace_back(dims[arr.target], dims[arr.source]);
  return trusted_representation(a, std::move(dims), std::move(maps));
}

Representation indecomposable_projective(const AlgebraPtr& a, std::size_t vertex) {
  const Quiver& q = a->quiver();
  std::vector<std::size_t> dims;
  for (std::size_t w = 0; w < q.vertex_count(); ++w) dims.push_back(a->dimension_between(vertex, w));
  std::vector<RationalMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& arr = q.arrow(ai);
    const auto& from = a->basis_between(vertex, arr.source);
    RationalMatrix m(dims[arr.target], dims[arr.source]);
    Path step{arr.source, arr.target, {ai}};
    for (std::size_t j = 0; j < from.size(); ++j) m.set_column(j, a->reduce(concatenate(from[j], step)));
    maps.push_back(std::move(m));
  }
  return trusted_representation(a, std::move(dims), std::move(maps));
}

Representation dual(const Representation& m) {
  AlgebraPtr op = m.algebra()->opposite();
  std::vector<RationalMatrix> maps;
  for (const auto& x : m.arrow_maps()) maps.push_back(x.transpose());
  return trusted_representation(op, m.dims(), std::move(maps));
}

ModuleMorphism dual(const ModuleMorphism& f) {
  std::vector<RationalMatrix> maps;
  for (const auto& x : f.vertex_maps()) maps.push_back(x.transpose());
  return trusted_morphism(dual(f.target()), dual(f.source()), std::move(maps));
}

Representation indecomposable_injective(const AlgebraPtr& a, std::size_t vertex) {
  return dual(indecomposable_projective(a->opposite(), vertex));
}

}  // namespace higherk

#include "higherk/higher_ar.hpp"

#include <map>
#include <numeric>

#include "higherk/errors.hpp"

namespace higherk {

namespace {

RationalMatrix columns_of(const std::vector<RationalVector>& cols, std::size_t rows) {
  RationalMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

// Indices k of `extra` completing span(base) to span(base + extra).
std::vector<std::size_t> complement(const std::vector<RationalVector>& base, const std::vector<RationalVector>& extra,
                                    std::size_t rows) {
  std::vector<RationalVector> all = base;
  all.insert(all.end(), extra.begin(), extra.end());
  std::vector<std::size_t> out;
  if (all.empty()) return out;
  for (auto c : independent_columns(columns_of(all, rows)))
    if (c >= base.size()) out.push_back(c - base.size());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// EndAlgebra

EndAlgebra::EndAlgebra(TiltingData t) : t_(std::move(t)) {
  const std::size_t r = t_.size();
  blocks_.assign(r, std::vector<std::vector<ModuleMorphism>>(r));
  flat_.assign(r, std::vector<RationalMatrix>(r));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w) {
      blocks_[u][w] = hom_basis(t_.summands[w], t_.summands[u]);
      std::vector<RationalVector> cols;
      for (const auto& f : blocks_[u][w]) cols.push_back(f.flatten());
      std::size_t rows = 0;
      for (std::size_t v = 0; v < t_.summands[u].dims().size(); ++v)
        rows += t_.summands[u].dim(v) * t_.summands[w].dim(v);
      flat_[u][w] = columns_of(cols, rows);
    }
  products_.assign(r, std::vector<std::vector<std::vector<RationalVector>>>(r, std::vector<std::vector<RationalVector>>(r)));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t x = 0; x < r; ++x)
        for (const auto& a : blocks_[u][w])
          for (const auto& b : blocks_[w][x]) products_[u][w][x].push_back(coordinates(u, x, compose(a, b)));
  radical_.assign(r, std::vector<RationalMatrix>(r));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w) {
      if (u != w) {
        radical_[u][w] = RationalMatrix::identity(blocks_[u][w].size());
        continue;
      }
      auto rad = endomorphism_radical(t_.summands[u], blocks_[u][u]);
      std::vector<RationalVector> cols;
      for (const auto& f : rad) cols.push_back(coordinates(u, u, f));
      radical_[u][u] = columns_of(cols, blocks_[u][u].size());
    }
}

std::size_t EndAlgebra::dimension() const {
  std::size_t n = 0;
  for (const auto& row : blocks_)
    for (const auto& b : row) n += b.size();
  return n;
}

RationalVector EndAlgebra::coordinates(std::size_t u, std::size_t w, const ModuleMorphism& f) const {
  if (blocks_[u][w].empty()) return {};
  auto x = solve(flat_[u][w], f.flatten());
  if (!x) throw std::invalid_argument("morphism is not in the expected Hom block");
  return *x;
}

ModuleMorphism EndAlgebra::element(std::size_t u, std::size_t w, std::span<const Rational> coords) const {
  if (blocks_[u][w].empty()) return ModuleMorphism::zero(t_.summands[w], t_.summands[u]);
  return linear_combination(blocks_[u][w], coords);
}

RationalVector EndAlgebra::multiply(std::size_t u, std::size_t w, std::size_t x, std::span<const Rational> a,
                                    std::span<const Rational> b) const {
  RationalVector out(blocks_[u][x].size(), Rational(0));
  const std::size_t bw = blocks_[w][x].size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < bw; ++j) {
      if (b[j] == 0) continue;
      const auto& p = products_[u][w][x][i * bw + j];
      for (std::size_t k = 0; k < out.size(); ++k) out[k] += a[i] * b[j] * p[k];
    }
  }
  return out;
}

RationalVector EndAlgebra::identity(std::size_t u) const {
  return coordinates(u, u, ModuleMorphism::identity(t_.summands[u]));
}

bool EndAlgebra::is_associative() const {
  const std::size_t r = size();
  auto unit = [](std::size_t n, std::size_t i) {
    RationalVector v(n, Rational(0));
    v[i] = 1;
    return v;
  };
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < r; ++y)
          for (std::size_t a = 0; a < block_dimension(u, w); ++a)
            for (std::size_t b = 0; b < block_dimension(w, x); ++b)
              for (std::size_t c = 0; c < block_dimension(x, y); ++c) {
                auto ea = unit(block_dimension(u, w), a);
                auto eb = unit(block_dimension(w, x), b);
                auto ec = unit(block_dimension(x, y), c);
                auto left = multiply(u, x, y, multiply(u, w, x, ea, eb), ec);
                auto right = multiply(u, w, y, ea, multiply(w, x, y, eb, ec));
                if (left != right) return false;
              }
  return true;
}

bool EndAlgebra::has_orthogonal_idempotents() const {
  const std::size_t r = size();
  for (std::size_t u = 0; u < r; ++u) {
    auto e = identity(u);
    if (multiply(u, u, u, e, e) != e) return false;
    for (std::size_t w = 0; w < r; ++w)
      for (std::size_t a = 0; a < block_dimension(u, w); ++a) {
        RationalVector x(block_dimension(u, w), Rational(0));
        x[a] = 1;
        if (multiply(u, u, w, e, x) != x || multiply(u, w, w, x, identity(w)) != x) return false;
      }
  }
  return true;
}

EndAlgebra build_end_algebra(const TiltingData& t) { return EndAlgebra(t); }

// ---------------------------------------------------------------------------
// d-Auslander-Reiten sequences

DExactSequence d_ar_sequence(const TiltingData& t, std::size_t index) {
  if (t.projective.at(index))
    throw Error(ErrorCode::ProjectiveInput, "summand '" + t.labels[index] + "' is projective");
  const std::size_t r = t.size();
  const Representation& target = t.summands[index];

  // Radical morphisms between summands: everything off the diagonal, the
  // radical of End on it.
  auto radical_maps = [&](std::size_t from, std::size_t to) {
    auto h = hom_basis(t.summands[from], t.summands[to]);
    return from == to ? endomorphism_radical(t.summands[from], h) : h;
  };

  std::vector<std::vector<ModuleMorphism>> into(r);
  for (std::size_t i = 0; i < r; ++i) into[i] = radical_maps(i, index);

  std::vector<Representation> parts;
  std::vector<ModuleMorphism> generators;
  std::vector<std::size_t> first_mult(r, 0), blocks;
  for (std::size_t i = 0; i < r; ++i) {
    if (into[i].empty()) continue;
    std::vector<RationalVector> through, own;
    for (std::size_t j = 0; j < r; ++j) {
      if (into[j].empty()) continue;
      for (const auto& rad : radical_maps(i, j))
        for (const auto& h : into[j]) through.push_back(compose(h, rad).flatten());
    }
    for (const auto& h : into[i]) own.push_back(h.flatten());
    for (auto k : complement(through, own, own.front().size())) {
      parts.push_back(t.summands[i]);
      generators.push_back(into[i][k]);
      ++first_mult[i];
      blocks.push_back(i);
    }
  }

  DExactSequence seq;
  std::vector<std::size_t> unit(r, 0);
  unit[index] = 1;
  seq.terms.push_back(target);
  seq.multiplicities.push_back(unit);
  DirectSum sum = direct_sum_with_maps(parts, t.algebra);
  ModuleMorphism sink = row_morphism(sum, generators, target);
  seq.terms.push_back(sum.object);
  seq.multiplicities.push_back(first_mult);
  seq.maps.push_back(sink);

  ModuleMorphism last = sink;
  for (std::size_t step = 0; step < t.d + 2; ++step) {
    auto k = kernel(last);
    if (k.object.is_zero()) break;
    auto approx = right_t_approximation(t, k.object);
    last = compose(k.inclusion, approx.map);
    seq.terms.push_back(approx.source.module);
    seq.multiplicities.push_back(approx.source.multiplicities);
    seq.maps.push_back(last);
  }
  return seq;
}

DArCheck check_d_ar_sequence(const TiltingData& t, std::size_t index, const DExactSequence& s) {
  DArCheck c;
  c.exact = is_exact_sequence(s);
  c.length = s.terms.size() == t.d + 2;
  c.end_is_tau = is_isomorphic(s.terms.back(), tau_d(t.summands[index], t.d));
  std::vector<long> sum(t.algebra->vertex_count(), 0);
  for (std::size_t k = 0; k < s.terms.size(); ++k) {
    auto v = composition_vector(s.terms[k]);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += k % 2 ? -v[i] : v[i];
  }
  c.composition_sum_zero = std::all_of(sum.begin(), sum.end(), [](long x) { return x == 0; });

  c.hom_complexes = true;
  for (std::size_t j = 0; j < t.size() && c.hom_complexes; ++j) {
    const auto& src = t.summands[j];
    std::vector<std::size_t> dims, ranks;
    for (const auto& term : s.terms) dims.push_back(hom_dimension(src, term));
    for (std::size_t k = 0; k < s.maps.size(); ++k) ranks.push_back(image_rank_after(s.maps[k], hom_basis(src, s.terms[k + 1])));
    const std::size_t n = s.maps.size();
    if (ranks[n - 1] != dims[n]) c.hom_complexes = false;
    for (std::size_t k = 1; k < n; ++k)
      if (dims[k] != ranks[k] + ranks[k - 1]) c.hom_complexes = false;
    if (dims[0] - ranks[0] != (j == index ? 1u : 0u)) c.hom_complexes = false;
  }
  c.minimal = std::all_of(s.maps.begin(), s.maps.end(), [](const ModuleMorphism& f) { return is_right_minimal(f); });
  return c;
}

DefectSymmetry defect_symmetry(const TiltingData& t, const DExactSequence& gamma, const Representation& s) {
  DefectSymmetry out;
  out.contravariant = contravariant_defect_dim(gamma, s);
  Representation x = tau_d(s, t.d);
  out.covariant = x.is_zero() ? 0 : covariant_defect_dim(gamma, x);
  return out;
}

// ---------------------------------------------------------------------------
// Presentation as a bound quiver algebra

namespace {

struct PathImage {
  Path path;
  RationalVector image;  // coordinates in block (source, target)
};

PathExpression to_expression(const std::vector<PathImage>& paths, const RationalVector& coeffs) {
  mpz_class den = 1, num = 0;
  for (const auto& c : coeffs)
    if (c != 0) den = lcm(den, c.get_den());
  for (const auto& c : coeffs)
    if (c != 0) num = gcd(num, mpz_class(c * den));
  Rational scale(den, num);
  for (const auto& c : coeffs)
    if (c != 0) {
      if (c < 0) scale = -scale;
      break;
    }
  PathExpression e;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) {
      Rational x = coeffs[i] * scale;
      x.canonicalize();
      e.terms.push_back({x, paths[i].path});
    }
  return e;
}

}  // namespace

BoundQuiverPresentation present_as_bound_quiver(const EndAlgebra& e) {
  const std::size_t r = e.size();
  for (std::size_t u = 0; u < r; ++u)
    if (e.radical_block(u, u).cols() + 1 != e.block_dimension(u, u))
      throw Error(ErrorCode::NotBasic, "End(" + e.tilting().labels[u] + ")/rad is not one-dimensional");

  // rad^2 in each block, then arrows as a complement of rad^2 in rad.
  std::vector<std::tuple<std::string, std::string, std::string>> arrow_specs;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::vector<RationalVector> arrow_images;
  std::vector<std::string> names;
  for (std::size_t u = 0; u < r; ++u) names.push_back(std::to_string(u + 1));
  for (std::size_t u = 0; u < r; ++u)
    for (std::size_t w = 0; w < r; ++w) {
      std::vector<RationalVector> rad2, rad;
      for (std::size_t m = 0; m < r; ++m) {
        const auto& ra = e.radical_block(u, m);
        const auto& rb = e.radical_block(m, w);
        for (std::size_t a = 0; a < ra.cols(); ++a)
          for (std::size_t b = 0; b < rb.cols(); ++b) rad2.push_back(e.multiply(u, m, w, ra.column(a), rb.column(b)));
      }
      const auto& rb = e.radical_block(u, w);
      for (std::size_t k = 0; k < rb.cols(); ++k) rad.push_back(rb.column(k));
      if (rad.empty()) continue;
      for (auto k : complement(rad2, rad, e.block_dimension(u, w))) {
        arrow_specs.emplace_back("a" + std::to_string(arrow_specs.size() + 1), names[u], names[w]);
        ends.emplace_back(u, w);
        arrow_images.push_back(rad[k]);
      }
    }
  Quiver q(names, arrow_specs);

  // Path images by length until every path of some length vanishes.
  constexpr std::size_t kMaxLength = 64;
  constexpr std::size_t kMaxPaths = 200000;
  std::vector<std::vector<PathImage>> levels(1);
  for (std::size_t u = 0; u < r; ++u) levels[0].push_back({trivial_path(u), e.identity(u)});
  std::size_t total = r;
  while (true) {
    std::vector<PathImage> next;
    for (const auto& p : levels.back())
      for (std::size_t a = 0; a < ends.size(); ++a) {
        if (ends[a].first != p.path.target) continue;
        Path np = concatenate(p.path, Path{ends[a].first, ends[a].second, {a}});
        auto img = e.multiply(p.path.source, ends[a].first, ends[a].second, p.image, arrow_images[a]);
        next.push_back({std::move(np), std::move(img)});
      }
    total += next.size();
    if (total > kMaxPaths) throw Error(ErrorCode::NotBasic, "path enumeration budget exceeded");
    bool vanishes = std::all_of(next.begin(), next.end(), [](const PathImage& p) {
      return std::all_of(p.image.begin(), p.image.end(), [](const Rational& x) { return x == 0; });
    });
    levels.push_back(std::move(next));
    if (vanishes) break;
    if (levels.size() > kMaxLength) throw Error(ErrorCode::NotBasic, "radical is not nilpotent within the cap");
  }
  const std::size_t bound = levels.size() - 1;

  // Paths of length >= 2 per block, in length order.
  std::vector<std::vector<std::vector<PathImage>>> block_paths(r, std::vector<std::vector<PathImage>>(r));
  std::vector<std::vector<std::vector<std::size_t>>> block_len(r, std::vector<std::vector<std::size_t>>(r));
  for (std::size_t len = 2; len <= bound; ++len)
    for (const auto& p : levels[len]) {
      block_paths[p.path.source][p.path.target].push_back(p);
      block_len[p.path.source][p.path.target].push_back(len);
    }
  std::map<Path, std::size_t> position;
  for (std::size_t s = 0; s < r; ++s)
    for (std::size_t t = 0; t < r; ++t)
      for (std::size_t k = 0; k < block_paths[s][t].size(); ++k) position[block_paths[s][t][k].path] = k;
  // all paths from s to t of every length up to `bound`, for ideal closure
  std::vector<std::vector<std::vector<Path>>> any_paths(r, std::vector<std::vector<Path>>(r));
  for (const auto& level : levels)
    for (const auto& p : level) any_paths[p.path.source][p.path.target].push_back(p.path);

  struct Kept {
    std::size_t s, t;
    RationalVector coeffs;
  };
  std::vector<Kept> kept;
  std::vector<PathExpression> relations;

  auto ideal_span = [&](std::size_t s, std::size_t t) {
    std::vector<RationalVector> span;
    const std::size_t n = block_paths[s][t].size();
    for (const auto& k : kept)
      for (const auto& p : any_paths[s][k.s])
        for (const auto& qq : any_paths[k.t][t]) {
          RationalVector v(n, Rational(0));
          bool any = false;
          for (std::size_t i = 0; i < k.coeffs.size(); ++i) {
            if (k.coeffs[i] == 0) continue;
            Path full = concatenate(concatenate(p, block_paths[k.s][k.t][i].path), qq);
            if (full.length() > bound) continue;
            v[position.at(full)] += k.coeffs[i];
            any = true;
          }
          if (any) span.push_back(std::move(v));
        }
    return span;
  };

  for (std::size_t len = 2; len <= bound; ++len)
    for (std::size_t s = 0; s < r; ++s)
      for (std::size_t t = 0; t < r; ++t) {
        const auto& paths = block_paths[s][t];
        std::size_t upto = 0;
        while (upto < paths.size() && block_len[s][t][upto] <= len) ++upto;
        if (upto == 0) continue;
        RationalMatrix images(e.block_dimension(s, t), upto);
        for (std::size_t k = 0; k < upto; ++k)
          if (e.block_dimension(s, t)) images.set_column(k, paths[k].image);
        RationalMatrix ker = kernel_basis(images);
        for (std::size_t c = 0; c < ker.cols(); ++c) {
          RationalVector v(paths.size(), Rational(0));
          for (std::size_t k = 0; k < upto; ++k) v[k] = ker(k, c);
          auto span = ideal_span(s, t);
          std::size_t before = span.empty() ? 0 : rank(columns_of(span, paths.size()));
          span.push_back(v);
          if (rank(columns_of(span, paths.size())) == before) continue;
          kept.push_back({s, t, v});
          relations.push_back(to_expression(paths, v));
        }
      }

  BoundQuiverPresentation out;
  out.algebra = build_algebra(q, relations, std::max<std::size_t>(bound, 1));
  out.arrow_images = arrow_images;

  std::map<Path, const RationalVector*> image_of;
  for (const auto& level : levels)
    for (const auto& p : level) image_of[p.path] = &p.image;
  bool ok = out.algebra->dimension() == e.dimension();
  for (std::size_t s = 0; s < r && ok; ++s)
    for (std::size_t t = 0; t < r && ok; ++t) {
      const auto& basis = out.algebra->basis_between(s, t);
      if (basis.size() != e.block_dimension(s, t)) {
        ok = false;
        break;
      }
      if (basis.empty()) continue;
      std::vector<RationalVector> cols;
      for (const auto& p : basis) cols.push_back(*image_of.at(p));
      ok = rank(columns_of(cols, e.block_dimension(s, t))) == basis.size();
    }
  out.verified = ok;
  return out;
}

// ---------------------------------------------------------------------------
// Tower

TowerStep tower_step(const TiltingData& t, std::size_t max_indecs) {
  TowerStep step;
  EndAlgebra e = build_end_algebra(t);
  step.presentation = present_as_bound_quiver(e);
  if (!step.presentation.verified)
    throw Error(ErrorCode::NotBasic, "presentation does not reproduce End(T)");
  const AlgebraPtr& next = step.presentation.algebra;
  const std::size_t d = t.d + 1;
  const auto& vertices = next->quiver().vertices();

  std::vector<Representation> chosen;
  std::vector<std::string> labels;
  auto add = [&](const Representation& m, const std::string& label) {
    for (const auto& c : chosen)
      if (c.dims() == m.dims() && is_isomorphic(c, m)) return;
    chosen.push_back(m);
    labels.push_back(label);
  };
  for (std::size_t v = 0; v < next->vertex_count(); ++v) add(indecomposable_projective(next, v), "P" + vertices[v]);
  for (std::size_t v = 0; v < next->vertex_count(); ++v) {
    Representation x = indecomposable_injective(next, v);
    for (std::size_t k = 0; k < 64 && !x.is_zero(); ++k) {
      for (const auto& s : decompose(x).summands)
        add(s.module, k == 0 ? "I" + vertices[v] : "tau" + std::to_string(k) + "I" + vertices[v]);
      x = tau_d(x, d);
    }
  }
  step.indecomposables = enumerate_indecomposables(next, max_indecs);
  step.next = make_tilting_data(next, d, chosen, labels);
  step.report = verify_d_cluster_tilting(step.next, step.indecomposables);
  step.method = "projectives and tau_" + std::to_string(d) + "-orbits of injectives";
  if (step.report.passed) return step;

  auto hits = search_d_cluster_tilting(step.indecomposables, d);
  for (const auto& h : hits) {
    std::vector<Representation> mods;
    for (auto i : h) mods.push_back(step.indecomposables[i]);
    bool covers = true;
    for (const auto& c : chosen) {
      if (!is_projective(c)) continue;
      bool found = false;
      for (const auto& m : mods) found = found || (m.dims() == c.dims() && is_isomorphic(m, c));
      covers = covers && found;
    }
    if (!covers) continue;
    step.next = make_tilting_data(next, d, mods);
    step.report = verify_d_cluster_tilting(step.next, step.indecomposables);
    step.method = "exhaustive search";
    return step;
  }
  throw Error(ErrorCode::InvalidInput, "no " + std::to_string(d) + "-cluster tilting subcategory found");
}

}  // namespace higherk

#include "higherk/ktheory.hpp"

#include "higherk/errors.hpp"
#include "higherk/higher_ar.hpp"

namespace higherk {

namespace {

bool vertexwise_exact(const ModuleMorphism& in, const ModuleMorphism& out) {
  for (std::size_t v = 0; v < in.vertex_maps().size(); ++v) {
    const auto& f = in.vertex_map(v);
    const auto& g = out.vertex_map(v);
    if (!(g * f).is_zero()) return false;
    if (rank(f) + rank(g) != f.rows()) return false;
  }
  return true;
}

IntegerMatrix integer_inverse(const IntegerMatrix& u) {
  auto inv = inverse(to_rational(u));
  if (!inv) throw Error(ErrorCode::NotUnimodular, "singular matrix");
  IntegerMatrix out(u.rows(), u.cols());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const Rational& x = (*inv)(i, j);
      if (x.get_den() != 1) throw Error(ErrorCode::NotUnimodular, "inverse is not integral");
      out(i, j) = x.get_num();
    }
  return out;
}

}  // namespace

IntegerVector to_integer_vector(const std::vector<std::size_t>& v) {
  IntegerVector out;
  for (auto x : v) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

IntegerVector to_integer_vector(const std::vector<long>& v) {
  IntegerVector out;
  for (auto x : v) out.emplace_back(x);
  return out;
}

ShortExactSequence make_ses(ModuleMorphism inject, ModuleMorphism surject) {
  if (!(inject.target() == surject.source()))
    throw Error(ErrorCode::NotExact, "the maps do not share a middle term");
  if (!inject.is_injective()) throw Error(ErrorCode::NotExact, "first map is not injective");
  if (!surject.is_surjective()) throw Error(ErrorCode::NotExact, "second map is not surjective");
  if (!vertexwise_exact(inject, surject)) throw Error(ErrorCode::NotExact, "image and kernel differ");
  Representation a = inject.source(), b = inject.target(), c = surject.target();
  return ShortExactSequence{a, b, c, std::move(inject), std::move(surject)};
}

bool is_exact_sequence(const DExactSequence& s) {
  if (s.terms.size() < 2 || s.maps.size() + 1 != s.terms.size()) return false;
  if (!s.maps.front().is_surjective() || !s.maps.back().is_injective()) return false;
  for (std::size_t k = 0; k + 1 < s.maps.size(); ++k)
    if (!vertexwise_exact(s.maps[k + 1], s.maps[k])) return false;
  return true;
}

std::vector<ShortExactSequence> short_exact_pieces(const DExactSequence& s) {
  std::vector<ShortExactSequence> out;
  // onto: A_{k+1} -> K_k, with K_k embedded in A_k
  Subobject k{s.terms[0], ModuleMorphism::identity(s.terms[0])};
  for (std::size_t i = 0; i < s.maps.size(); ++i) {
    const auto& f = s.maps[i];
    auto onto = factor_through_mono(f, k.inclusion);
    Subobject next = kernel(f);
    out.push_back(make_ses(next.inclusion, onto));
    k = next;
  }
  return out;
}

IntegerVector alternating_class(const DExactSequence& s) {
  IntegerVector v;
  for (std::size_t k = 0; k < s.multiplicities.size(); ++k) {
    if (v.empty()) v.assign(s.multiplicities[k].size(), Integer(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Integer m(static_cast<unsigned long>(s.multiplicities[k][i]));
      if (k % 2) v[i] -= m;
      else v[i] += m;
    }
  }
  return v;
}

IntegerMatrix gram_matrix(const TiltingData& t) {
  const std::size_t r = t.size();
  IntegerMatrix g(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      g(i, j) = static_cast<unsigned long>(hom_dimension(t.summands[i], t.summands[j]));
  return g;
}

IntegerVector kappa(const IntegerMatrix& g, std::span<const Integer> v) { return g * v; }

IntegerVector kappa_inverse(const IntegerMatrix& g, std::span<const Integer> v) {
  Integer det = determinant(g);
  if (abs(det) != 1) throw Error(ErrorCode::NotUnimodular, "det G = " + det.get_str());
  return integer_inverse(g) * v;
}

IntegerVector index(const AugmentedTResolution& r, std::size_t summand_count) {
  IntegerVector v(summand_count, Integer(0));
  for (std::size_t k = 0; k < r.terms.size(); ++k)
    for (std::size_t i = 0; i < summand_count; ++i) {
      Integer m(static_cast<unsigned long>(r.terms[k].multiplicities[i]));
      if (k % 2) v[i] -= m;
      else v[i] += m;
    }
  return v;
}

IntegerVector index(const TiltingData& t, const Representation& c) { return index(left_t_resolution(t, c), t.size()); }

IntegerVector contravariant_defect_vector(const TiltingData& t, const ShortExactSequence& s) {
  IntegerVector v;
  for (const auto& ti : t.summands) {
    auto hc = hom_dimension(ti, s.c);
    auto hb = hom_basis(ti, s.b);
    v.emplace_back(static_cast<unsigned long>(hc - image_rank_after(s.surject, hb)));
  }
  return v;
}

std::size_t contravariant_defect_dim(const DExactSequence& g, const Representation& s) {
  auto h1 = hom_basis(s, g.terms[1]);
  return hom_dimension(s, g.terms[0]) - image_rank_after(g.maps[0], h1);
}

std::size_t covariant_defect_dim(const DExactSequence& g, const Representation& x) {
  const std::size_t last = g.terms.size() - 1;
  auto hd = hom_basis(g.terms[last - 1], x);
  return hom_dimension(g.terms[last], x) - image_rank_before(hd, g.maps[last - 1]);
}

ErrorTermCheck verify_error_term(const TiltingData& t, const IntegerMatrix& g, const ShortExactSequence& s) {
  ErrorTermCheck out;
  auto ia = index(t, s.a), ib = index(t, s.b), ic = index(t, s.c);
  out.error.resize(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out.error[i] = ia[i] - ib[i] + ic[i];
  out.lhs = kappa(g, out.error);
  out.rhs = contravariant_defect_vector(t, s);
  out.holds = out.lhs == out.rhs;
  return out;
}

IntegerMatrix relation_matrix(std::size_t summand_count, const std::vector<DExactSequence>& sequences) {
  IntegerMatrix r(summand_count, sequences.size());
  for (std::size_t c = 0; c < sequences.size(); ++c) r.set_column(c, alternating_class(sequences[c]));
  return r;
}

IntegerMatrix relation_lattice(const TiltingData& t) {
  std::vector<DExactSequence> seqs;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!t.projective[i]) seqs.push_back(d_ar_sequence(t, i));
  return relation_matrix(t.size(), seqs);
}

bool K0Presentation::torsion_free() const {
  for (const auto& f : invariant_factors)
    if (f != 1) return false;
  return true;
}

K0Presentation k0_presentation(const IntegerMatrix& relations) {
  K0Presentation p;
  p.relations = relations;
  p.smith = smith_normal_form(relations);
  const std::size_t r = relations.rows();
  const std::size_t rho = p.smith.rank();
  p.quotient_rank = r - rho;
  p.invariant_factors = p.smith.invariant_factors();
  IntegerMatrix uinv = integer_inverse(p.smith.u);
  p.quotient = IntegerMatrix(r - rho, r);
  p.lift = IntegerMatrix(r, r - rho);
  for (std::size_t i = rho; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      p.quotient(i - rho, j) = p.smith.u(i, j);
      p.lift(j, i - rho) = uinv(j, i);
    }
  return p;
}

IntegerMatrix map_g(const TiltingData& t) {
  const std::size_t n = t.algebra->vertex_count();
  IntegerMatrix g(n, t.size());
  for (std::size_t j = 0; j < t.size(); ++j)
    g.set_column(j, to_integer_vector(composition_vector(t.summands[j])));
  return g;
}

K0Maps k0_maps(const TiltingData& t, const K0Presentation& p) {
  K0Maps m;
  m.g = map_g(t);
  const std::size_t n = t.algebra->vertex_count();
  m.relations_in_kernel = (m.g * p.relations).is_zero();
  IntegerMatrix ind(t.size(), n);
  for (std::size_t v = 0; v < n; ++v) ind.set_column(v, index(t, simple_module(t.algebra, v)));
  m.f = p.quotient * ind;
  m.g_quotient = m.g * p.lift;
  if (p.quotient_rank == n && p.torsion_free())
    m.mutually_inverse = m.f * m.g_quotient == IntegerMatrix::identity(n) &&
                         m.g_quotient * m.f == IntegerMatrix::identity(n);
  return m;
}

}  // namespace higherk

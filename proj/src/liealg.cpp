#include "nilform/liealg.hpp"

#include <algorithm>
#include <utility>

namespace nilform {

int Grading::degree_of(std::size_t basis_index) const {
  std::size_t acc = 0;
  for (std::size_t d = 0; d < dims.size(); ++d) {
    acc += dims[d];
    if (basis_index < acc) return static_cast<int>(d) + 1;
  }
  throw Error(ErrorCode::DimensionMismatch, "basis index beyond the grading");
}

LieAlgebraE extend_scalars(const LieAlgebra& a, const DatumPtr& field) {
  LieAlgebraE out(a.dim(), field);
  for (const auto& e : a.entries()) out.add_bracket(e.i, e.j, e.k, FieldElement(field, {e.coeff}));
  out.set_labels(a.labels());
  return out;
}

RationalMatrix extend_from_generators(const LieAlgebra& a, const std::vector<std::vector<Rational>>& generators,
                                     const std::vector<std::vector<Rational>>& images) {
  const std::size_t n = a.dim();
  if (generators.size() != images.size()) throw Error(ErrorCode::DimensionMismatch, "one image per generator expected");
  using Vec = std::vector<Rational>;
  auto zero = [](const Vec& v) { return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); }); };
  std::vector<std::pair<Vec, Vec>> pairs, gens, layer;
  for (std::size_t p = 0; p < generators.size(); ++p) {
    if (generators[p].size() != n || images[p].size() != n) throw Error(ErrorCode::DimensionMismatch, "vector length");
    gens.emplace_back(generators[p], images[p]);
  }
  // grow through iterated brackets with generators, keeping a spanning set
  std::vector<Vec> span;
  std::vector<std::size_t> chosen;
  auto add = [&](std::pair<Vec, Vec> pr) {
    if (zero(pr.first)) {
      if (!zero(pr.second)) throw Error(ErrorCode::ExtensionInconsistent, "a vanishing element has a nonzero image");
      return false;
    }
    pairs.push_back(pr);
    if (!span.empty() && in_span(span, pr.first)) return false;
    span.push_back(pr.first);
    span = row_space_basis(span);
    chosen.push_back(pairs.size() - 1);
    return true;
  };
  for (const auto& g : gens)
    if (add(g)) layer.push_back(g);
  while (!layer.empty() && span.size() < n) {
    std::vector<std::pair<Vec, Vec>> next;
    for (const auto& g : gens)
      for (const auto& l : layer) {
        auto pr = std::make_pair(a.bracket(g.first, l.first), a.bracket(g.second, l.second));
        if (add(pr)) next.push_back(std::move(pr));
      }
    layer = std::move(next);
  }
  if (span.size() < n) throw Error(ErrorCode::NotGenerating, "generators span a proper subalgebra");
  std::vector<Vec> vs, ws;
  for (auto c : chosen) {
    vs.push_back(pairs[c].first);
    ws.push_back(pairs[c].second);
  }
  const RationalMatrix f = RationalMatrix::from_columns(ws, n) * *inverse(RationalMatrix::from_columns(vs, n));
  for (const auto& [x, y] : pairs)
    if (f * x != y) throw Error(ErrorCode::ExtensionInconsistent, "a basis vector receives two different images");
  if (!is_automorphism(a, f)) throw Error(ErrorCode::ExtensionInconsistent, "extension is not an automorphism");
  return f;
}

LieAlgebra heisenberg() {
  LieAlgebra h(3);
  h.add_bracket(0, 1, 2, 1);
  return h;
}

LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim); }

}  // namespace nilform

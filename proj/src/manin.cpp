#include "opforge/manin.hpp"

#include <algorithm>
#include <stdexcept>

namespace opforge {

SignedMonomial symmetrize_monomial(const Monomial3& m, int prec, int succ, const OpSpace& target) {
  if (target.size() != 1) throw std::invalid_argument("symmetrize: target must have one operation");
  const auto oriented = [&](int op, int a, int b) -> std::pair<int, int> {
    if (op == prec) return {a, b};
    if (op == succ) return {b, a};
    throw std::invalid_argument("symmetrize: monomial uses an operation other than ≺/≻");
  };

  Monomial3 image;
  image.outer = image.inner = 0;
  const auto [l0, l1, l2] = m.leaves;
  if (m.shape == Shape::LeftComb) {
    const auto [p1, p2] = oriented(m.inner, l0, l1);
    if (m.outer == prec) {
      image.shape = Shape::LeftComb;
      image.leaves = {p1, p2, l2};
    } else {
      oriented(m.outer, 0, 0);
      image.shape = Shape::RightComb;
      image.leaves = {l2, p1, p2};
    }
  } else {
    const auto [q1, q2] = oriented(m.inner, l1, l2);
    if (m.outer == prec) {
      image.shape = Shape::RightComb;
      image.leaves = {l0, q1, q2};
    } else {
      oriented(m.outer, 0, 0);
      image.shape = Shape::LeftComb;
      image.leaves = {q1, q2, l0};
    }
  }
  return canonicalize(image, target);
}

namespace {

Index word_index(const Leaves& leaves) {
  const auto& words = s3_elements();
  const auto it = std::find(words.begin(), words.end(), leaves);
  return static_cast<Index>(it - words.begin());
}

void require_single_paired(const OperadPresentation& p) {
  if (p.ops.size() != 1 || p.ops[0].symmetry != Symmetry::Paired)
    throw std::invalid_argument("white_product_as: '" + p.name + "' must have exactly one paired operation");
}

void require_two_paired(const OperadPresentation& q) {
  if (!(q.ops == OpSpace::two_paired()))
    throw std::invalid_argument("symmetrize_quotient: '" + q.name + "' must be over the paired operations < and >");
}

}  // namespace

OperadPresentation white_product_as(const OperadPresentation& p) {
  require_single_paired(p);
  const OpSpace w_ops = OpSpace::two_paired();
  const Basis3 w_basis(w_ops);
  const Basis3 v_basis(p.ops);
  const Subspace<Rat> relations = relation_space(p);
  const Index nv = v_basis.size();

  // Column j: image of the j-th ≺/≻ monomial in As(3) ⊗ P(3), with P(3)
  // represented by canonical remainders modulo R.
  Matrix<Rat> image = Matrix<Rat>::Zero(6 * nv, w_basis.size());
  for (Index j = 0; j < w_basis.size(); ++j) {
    const Monomial3& m = w_basis.monomials()[static_cast<std::size_t>(j)];
    const SignedMonomial target = symmetrize_monomial(m, 0, 1, p.ops);
    Vector<Rat> unit = Vector<Rat>::Zero(nv);
    unit(v_basis.index_of(target.monomial)) = target.sign;
    image.block(word_index(m.leaves) * nv, j, nv, 1) = relations.reduce(unit);
  }

  OperadPresentation out{"As∘" + p.name, w_ops, {}};
  out.relations = w_basis.elements(span(nullspace(image)));
  return out;
}

OperadPresentation symmetrize_quotient(const OperadPresentation& q) {
  require_two_paired(q);
  OperadPresentation out{q.name + "/(g1=h2,g2=h1)", OpSpace::single_paired(), {}};
  for (const auto& relation : q.relations) {
    Arity3Element image;
    for (const auto& [m, c] : relation.terms()) {
      const SignedMonomial s = symmetrize_monomial(m, 0, 1, out.ops);
      image.add(out.ops, s.monomial, s.sign == 1 ? c : Rat(-c));
    }
    if (!image.empty()) out.relations.push_back(std::move(image));
  }
  return out;
}

Subspace<Rat> two_outside_subspace(const OpSpace& ops) {
  const Basis3 basis(ops);
  std::vector<Vector<Rat>> rows;
  for (Index i = 0; i < basis.size(); ++i) {
    const int leaf = outside_leaf(basis.monomials()[static_cast<std::size_t>(i)]);
    if (leaf != 1 && leaf != 3) continue;
    Vector<Rat> e = Vector<Rat>::Zero(basis.size());
    e(i) = 1;
    rows.push_back(std::move(e));
  }
  return span(rows, basis.size());
}

namespace {

std::pair<Subspace<Rat>, Subspace<Rat>> outside_part_and_F(const OperadPresentation& p) {
  const Subspace<Rat> outside = intersect(relation_space(p), two_outside_subspace(p.ops));
  const Basis3 basis(p.ops);
  return {outside, s3_closure(basis.elements(outside), p.ops)};
}

}  // namespace

Subspace<Rat> compute_F(const OperadPresentation& p) { return outside_part_and_F(p).second; }

CriterionReport admits_nonsymmetric(const OperadPresentation& p) {
  const Subspace<Rat> relations = relation_space(p);
  const auto [outside, F] = outside_part_and_F(p);
  const Basis3 basis(p.ops);

  CriterionReport report;
  report.operad_name = p.name;
  report.dim_R = relations.dim();
  report.dim_F = F.dim();
  report.dim_P3 = basis.size() - relations.dim();
  report.admits = report.dim_R == report.dim_F;
  report.F_generators = basis.elements(outside);
  report.ops = p.ops;
  return report;
}

nlohmann::json to_json(const CriterionReport& report) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : report.F_generators) gens.push_back(format_relation(g, report.ops));
  return {
      {"name", report.operad_name},
      {"dim_R", report.dim_R},
      {"dim_F", report.dim_F},
      {"dim_P3", report.dim_P3},
      {"admits", report.admits},
      {"F_generators", gens},
  };
}

}  // namespace opforge

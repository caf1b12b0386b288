#pragma once

// White Manin product As∘P in arity 3 and the criterion for P to admit a
// nonsymmetric version.
//
// Generators of As∘P over P = P(V, R) with one paired operation ∘:
//   x1 ≺ x2 = x1x2 ⊗ (x1∘x2)      x1 ≻ x2 = x1x2 ⊗ (x2∘x1)
// so a planar ≺/≻ monomial maps to (its leaf word in As(3)) ⊗ (the P-monomial
// obtained by a≺b ↦ a∘b, a≻b ↦ b∘a). The relations of As∘P are the kernel of
// F_W(3) → As(3) ⊗ P(3).

#include "opforge/arity3.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace opforge {

/// Image of a ≺/≻ monomial under a≺b ↦ a∘b, a≻b ↦ b∘a. `target` must hold
/// exactly one operation; `prec`/`succ` index ≺ and ≻ in the source OpSpace.
SignedMonomial symmetrize_monomial(const Monomial3& m, int prec, int succ, const OpSpace& target);

/// As∘P for P with a single paired operation. The result is over
/// OpSpace::two_paired() and its relations are an RREF basis of the kernel.
OperadPresentation white_product_as(const OperadPresentation& p);

/// Identifies a≻b with b≺a: maps a two-operation presentation over `<`,`>`
/// onto one paired operation `*`.
OperadPresentation symmetrize_quotient(const OperadPresentation& q);

/// U0 ⊕ U1: span of the monomials whose outside leaf is x1 or x3.
Subspace<Rat> two_outside_subspace(const OpSpace& ops);

/// F = ⟨(k id + k(13))(V⊗V) ∩ R⟩_S3.
Subspace<Rat> compute_F(const OperadPresentation& p);

struct CriterionReport {
  std::string operad_name;
  Index dim_R = 0;
  Index dim_F = 0;
  Index dim_P3 = 0;
  bool admits = false;
  /// Basis of R ∩ (U0 ⊕ U1); its S3-closure is F.
  std::vector<Arity3Element> F_generators;
  OpSpace ops;
};

CriterionReport admits_nonsymmetric(const OperadPresentation& p);

/// {name, dim_R, dim_F, dim_P3, admits, F_generators} with generators in
/// relation text.
nlohmann::json to_json(const CriterionReport& report);

}  // namespace opforge

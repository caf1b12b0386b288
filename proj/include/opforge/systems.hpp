#pragma once

// The concrete nonsymmetric rewriting systems: noncommutative Zinbiel,
// bicommutative (an infinite family, instantiated up to an arity cap),
// flexible and anti-flexible, and the auxiliary L-operad on z, t.
// Each comes with its normal-form grammar and a closed dimension formula.

#include "opforge/arity3.hpp"
#include "opforge/tree.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace opforge {

/// Zin, Bicom, Flex, AntiFlex, L.
const std::vector<std::string>& system_names();
/// "xy" for the ≺/≻ systems, "zt" for L.
std::string_view system_labels(std::string_view name);

inline constexpr int kDefaultBicomCap = 8;

/// `arity_cap` only matters for Bicom: rules f_n, g_n (arity n+3) are
/// generated for n+3 ≤ arity_cap, ordered f_0, g_0, f_1, g_1, ...
RewriteSystem system(std::string_view name, int arity_cap = kDefaultBicomCap);

/// Orients the arity-4 consequence of a single rule y(*,y(*,*)) → ...
/// obtained from its self-overlap y(*,y(*,y(*,*))): both reducts are
/// normalized by `first` alone and the difference is solved for the
/// monomial y(*,x(*,x(*,*))).
RewriteRule derive_second_rule(const RewriteRule& first, std::string label);

/// Arity-n normal forms in grammar order.
std::vector<PlanarTree> normal_forms(std::string_view name, int n);
/// |normal_forms(name, n)| from the grammar recursion, without enumerating.
std::uint64_t grammar_count(std::string_view name, int n);
/// Zin: C_n; Bicom: binom(2n-2, n-1); Flex, AntiFlex, L: binom(3n-2, n-1)/n.
std::uint64_t dim_formula(std::string_view name, int n);
/// Σ_{i+j=n-1} T_i T_j with T_m = binom(3m, m)/(2m+1).
std::uint64_t ternary_pair_count(int n);

/// The arity-3 presentation over <, > matching a system ("Zin" or "NcZin");
/// also NcNov, which has no rewriting system here.
OperadPresentation nc_presentation(std::string_view name);

}  // namespace opforge

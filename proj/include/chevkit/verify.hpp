#pragma once

#include "chevkit/lie_algebra.hpp"
#include "chevkit/report.hpp"

namespace chevkit {

/// Verification suites are pure over immutable inputs; the parallel policy
/// partitions the work across OpenMP threads and merges the partial reports.
enum class ExecPolicy { serial, parallel };

/// Worker count for parallel suites: OpenMP's default capped by the
/// CHEVKIT_THREADS environment variable when set.
int verification_threads();

/// Jacobi identity on every unordered basis triple plus antisymmetry on every
/// basis pair, run through the table-driven kernel. Exhaustive.
VerificationReport check_jacobi(const LieAlgebra& L, ExecPolicy policy = ExecPolicy::parallel);

/// Same checks evaluated through Element arithmetic, serial. Slow; kept as
/// the reference the kernel is tested and benchmarked against.
VerificationReport check_jacobi_reference(const LieAlgebra& L);

/// Rebuilds every e_alpha and e_-alpha by iterated brackets of
/// e_i = c_i e_{alpha_i} and f_i = c_i e_{-alpha_i} along a simple-root chain
/// with all partial sums roots, checks the two accumulated divisors agree and
/// the rebuilt vectors equal the stored basis. The overload with explicit
/// signs serves tables that do not carry their own (negative controls).
VerificationReport oracle_iterated_brackets(const LieAlgebra& L);
VerificationReport oracle_iterated_brackets(const LieAlgebra& L, const SignAssignment& signs);

/// Checks the normal form behind the canonical-basis characterisation:
/// with E(alpha) = e_alpha on positives and -e_alpha on negatives,
///   (L1) [f_i, E(alpha_i)] = [e_i, E(-alpha_i)],
///   (L2) [e_i, E(alpha)] = (q+1) E(alpha+alpha_i),
///   (L3) [f_i, E(alpha)] = (p+1) E(alpha-alpha_i).
VerificationReport check_L123(const LieAlgebra& L);
VerificationReport check_L123(const LieAlgebra& L, const SignAssignment& signs);

/// Exhaustive sign identities for a special table: eps(a,b) = eps(-a,-b);
/// the height-parity rotation identities; the zero-sum triple identity
/// zeta_g3 eps(g1,g2) = zeta_g1 eps(g2,g3) = zeta_g2 eps(g3,g1);
/// zeta_a = -(-1)^ht(a); and that rebuilding with {-c_i} negates eps
/// pointwise.
VerificationReport check_sign_identities(const LieAlgebra& L);

/// The embedded published tables: the 68-row F4 ledger at c1=c3=-1 and the
/// six C4 sample rows, compared entry by entry.
VerificationReport check_golden_tables();

/// Three independent sign routes agree on every composable pair in all four
/// sign quadrants: the built table, the transported cover sign, and the
/// per-type closed form.
VerificationReport check_three_way(CartanType type, const SignAssignment& signs,
                                   ExecPolicy policy = ExecPolicy::parallel);

/// B_r only: rho lands in 2Z on all pairs of roots. Exhaustive over Phi x Phi.
VerificationReport check_rho_parity(const RootSystem& rs, const SignAssignment& signs);

}  // namespace chevkit

#pragma once

// Cancellation procedures for Laurent extensions:
//
//  * reconstruct_iso: an isomorphism F : A[y^{+-n}] -> B[z^{+-n}] with
//    F(A*) in B induces A ~ B (the exponent matrices of F(y_i) and
//    F^{-1}(z_i) are mutually inverse, and B ~ D/(F(y_i) - 1)).
//  * unit_normalize / localized_normalize: the gcd/Bezout loop producing a
//    single unit w with R[A*] = R[w, w^{-1}] (resp. A_r = R_r[w, w^{-1}]).
//  * characterize_laurent: is A a Laurent line k[w, w^{-1}]?
//  * bg_cancel: A[y^{+-n}] ~ R^{[+-(m+n)]} gives A ~ R^{[+-m]}.
//  * laurent_cancel: dispatch over the three sufficient conditions for
//    transcendence degree one.
//
// Every report carries a hypothesis ledger recording which hypotheses were
// machine-verified, which were only asserted, and which failed.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/algebra.hpp"
#include "laurent/algebra_models.hpp"
#include "laurent/automorphism.hpp"
#include "laurent/grading.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace laurent {

enum class HypothesisStatus { Verified, Asserted, Failed };

std::string_view to_string(HypothesisStatus s) noexcept;

struct HypothesisEntry {
    std::string name;
    HypothesisStatus status;
    std::string detail;
};

using HypothesisLedger = std::vector<HypothesisEntry>;

// F : A[y_1..y_n] -> B[z_1..z_n] given by the images of the ambient
// coordinates of A followed by y_1..y_n, as polynomials in the ambient
// coordinates of B followed by z_1..z_n. The optional inverse is given the
// same way in the other direction.
class LaurentHom {
public:
    LaurentHom(MonomialSubalgebra source, MonomialSubalgebra target, std::vector<std::string> source_vars,
               std::vector<std::string> target_vars, std::vector<LaurentPoly> images,
               std::optional<std::vector<LaurentPoly>> inverse_images = std::nullopt);

    const MonomialSubalgebra& source() const noexcept { return source_; }
    const MonomialSubalgebra& target() const noexcept { return target_; }
    std::size_t adjoined() const noexcept { return source_vars_.size(); }
    const std::vector<std::string>& source_vars() const noexcept { return source_vars_; }
    const std::vector<std::string>& target_vars() const noexcept { return target_vars_; }
    const std::vector<LaurentPoly>& images() const noexcept { return images_; }
    const std::optional<std::vector<LaurentPoly>>& inverse_images() const noexcept { return inverse_; }

    std::size_t source_rank() const noexcept { return source_.ambient_rank() + adjoined(); }
    std::size_t target_rank() const noexcept { return target_.ambient_rank() + adjoined(); }
    std::vector<std::string> source_names() const;
    std::vector<std::string> target_names() const;

    LaurentPoly apply(const LaurentPoly& c) const;
    LaurentPoly apply_inverse(const LaurentPoly& d) const;  // HypothesisFailed without an inverse
    LaurentPoly lift_source(const LaurentPoly& a) const;
    LaurentPoly lift_target(const LaurentPoly& b) const;
    LaurentPoly source_var(std::size_t i) const;
    LaurentPoly target_var(std::size_t i) const;

    // Both composites fix the generators of A and B and the adjoined
    // variables (false when no inverse is present).
    bool composites_are_identity() const;

private:
    MonomialSubalgebra source_;
    MonomialSubalgebra target_;
    std::vector<std::string> source_vars_;
    std::vector<std::string> target_vars_;
    std::vector<LaurentPoly> images_;
    std::optional<std::vector<LaurentPoly>> inverse_;
};

// An isomorphism A -> B given on generators, with the inverse on B's
// generators; `verified` records that both composites fix generators.
struct AlgebraIso {
    std::vector<LaurentPoly> forward;   // in B's ambient ring, one per generator of A
    std::vector<LaurentPoly> backward;  // in A's ambient ring, one per generator of B
    bool verified = false;
};

struct IsoReport {
    IntMatrix E;                                // F(y_i) = b_i prod_k z_k^{E[i][k]}
    IntMatrix D;                                // F^{-1}(z_i) = a_i prod_j y_j^{D[i][j]}
    std::vector<LaurentPoly> b;                 // in B's ambient ring
    std::vector<LaurentPoly> a;                 // in A's ambient ring
    std::vector<LaurentPoly> ideal_generators;  // Z_i - 1 = F(y_i) - 1
    AlgebraIso iso;
    HypothesisLedger ledger;
};

// Throws HypothesisFailed (F(A*) not in B, or F not an isomorphism),
// NotUnimodular, DecompositionFailed.
IsoReport reconstruct_iso(const LaurentHom& F);

struct NormalizationStep {
    LaurentPoly u;
    LaurentPoly v;
    Integer deg_u, deg_v, d, a, b, m, n;
    Coeff r;           // r u^b + v^a = 0
    LaurentPoly w;     // u^m v^n
    bool localized = false;
    Domain domain;     // coefficient ring after this step
};

struct NormalizationTrace {
    LaurentPoly seed;
    std::vector<NormalizationStep> steps;
    LaurentPoly w;
    IntVector w_word;               // w = prod_j gen_j^{w_word[j]} (scalar factor aside)
    std::vector<Integer> degrees;   // degree of the current unit at each stage
    std::vector<Coeff> localized_at;
    Domain domain;
};

// Throws HypothesisFailed (no unit of nonzero degree), NotRankOne.
NormalizationTrace unit_normalize(const MonomialSubalgebra& A, const Grading& g);

struct LocalizedNormalization {
    MonomialSubalgebra algebra;  // A_r over R_r, generators made invertible flagged as units
    NormalizationTrace trace;
};

// Continues the loop over non-unit generators, inverting relation
// coefficients that are not units of R.
LocalizedNormalization localized_normalize(const MonomialSubalgebra& A, const Grading& g);

enum class VerdictStatus { LaurentLine, NotLaurentLine, FalseUnderPresentationGradings, NotCertified };

std::string_view to_string(VerdictStatus s) noexcept;

struct MembershipWitness {
    std::string generator;
    IntVector vector;
    IntMatrix lattice;  // rows span the lattice the vector is missing from
};

struct Verdict {
    VerdictStatus status = VerdictStatus::NotCertified;
    std::optional<LaurentPoly> witness_w;
    std::vector<std::string> names;  // variable names for witness_w
    std::optional<Grading> grading;
    std::optional<NormalizationTrace> trace;
    std::optional<MembershipWitness> non_membership;
    HypothesisLedger ledger;

    bool is_laurent_line() const noexcept { return status == VerdictStatus::LaurentLine; }
};

// Needs asserted base_alg_closed and trdeg (MissingHypothesis otherwise).
Verdict characterize_laurent(const AlgebraPresentation& P);
// Decides the hypotheses by lattice rank in the monomial model.
Verdict characterize_laurent(const MonomialSubalgebra& A);

struct TorusIso {
    std::vector<UnitDecomposition> basis;  // w_1..w_m in A's ambient ring
    std::vector<LaurentPoly> forward;      // A's generators in R[s_1^{+-1}..s_m^{+-1}]
    std::vector<LaurentPoly> backward;     // s_i in A's ambient ring
    bool verified = false;
};

struct BgCancelReport {
    std::size_t m = 0;
    std::size_t n = 0;
    MonomialAutomorphism twist;  // z_i -> c_i z^{E_i}: alpha = twist o (iso (x) id)
    TorusIso iso;
    bool reproduces_alpha = false;
    HypothesisLedger ledger;
};

using ElementMap = std::function<LaurentPoly(const LaurentPoly&)>;

// alpha : A[y^{+-n}] -> R^{[+-(m+n)]}; the target of the hom must be a torus.
BgCancelReport bg_cancel(const LaurentHom& alpha);
// Core form: alpha given as a map on elements of A's ambient ring with n
// adjoined variables, landing in a Laurent ring of rank `target_rank`.
BgCancelReport bg_cancel(const MonomialSubalgebra& A, std::size_t n, std::size_t target_rank, const ElementMap& alpha);

enum class CancelBranch { UnitsAlgebraic, UnitsNeutral, FieldBase };

std::string_view to_string(CancelBranch b) noexcept;

struct CancelReport {
    CancelBranch branch = CancelBranch::UnitsAlgebraic;
    AlgebraIso iso;
    std::optional<IsoReport> reconstruction;
    std::optional<Verdict> characterization;
    std::optional<BgCancelReport> bg;
    HypothesisLedger ledger;
};

// Throws NoBranchApplies when none of the three conditions is certified.
CancelReport laurent_cancel(const LaurentHom& F, const std::optional<AlgebraPresentation>& source_presentation = {});

}  // namespace laurent

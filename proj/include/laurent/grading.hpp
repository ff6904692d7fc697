#pragma once

// Z-gradings given by integer weight vectors on the variables of a Laurent
// ring, and the presentation-induced gradings of a presented algebra.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "laurent/algebra_models.hpp"
#include "laurent/lattice.hpp"
#include "laurent/poly.hpp"

namespace laurent {

class Grading {
public:
    Grading() = default;
    explicit Grading(IntVector weights) : weights_(std::move(weights)) {}

    std::size_t rank() const noexcept { return weights_.size(); }
    const IntVector& weights() const noexcept { return weights_; }
    Integer degree(const ExponentVector& e) const;

    friend bool operator==(const Grading&, const Grading&) = default;

private:
    IntVector weights_;
};

std::set<Integer> support(const Grading& g, const LaurentPoly& p);
std::map<Integer, LaurentPoly> homogeneous_components(const Grading& g, const LaurentPoly& p);
bool is_homogeneous(const Grading& g, const LaurentPoly& p);

struct LeadingForm {
    Integer degree;
    LaurentPoly form;
};

// Highest-degree homogeneous component; throws ZeroPolynomial.
LeadingForm leading_form(const Grading& g, const LaurentPoly& p);

struct RelationTerm {
    LaurentPoly coefficient;  // h_i
    std::size_t power;        // i
};

struct TopFormRelation {
    Integer degree;                  // max deg(h_i a^i)
    std::vector<RelationTerm> terms;  // (leading form of h_i, i) for the argmax indices
};

// For sum h_i a^i = 0, the top-degree part sum_{i in I} lead(h_i) lead(a)^i,
// which again vanishes. Throws NotARelation when the input sum is nonzero.
TopFormRelation top_form_relation(const Grading& g, const std::vector<RelationTerm>& relation, const LaurentPoly& a);

Grading extend_to_laurent_vars(const Grading& g, std::size_t extra, const IntVector& extra_weights);

// Generator-degree vectors making every relation homogeneous (base
// generators and constants pinned to degree 0).
struct GradingLattice {
    std::vector<std::string> generators;
    LatticeBasis lattice;
    IntMatrix constraints;
};

GradingLattice grading_lattice(const AlgebraPresentation& P);

struct NeutralReport {
    std::vector<std::size_t> neutral_generators;
    bool algebra_neutral = false;
    GradingLattice lattice;
};

// Neutrality with respect to presentation-induced gradings only.
NeutralReport presentation_neutral(const AlgebraPresentation& P);

}  // namespace laurent

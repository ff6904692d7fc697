#include "laurent/grading.hpp"

#include "laurent/error.hpp"

namespace laurent {

Integer Grading::degree(const ExponentVector& e) const
{
    if (e.size() != weights_.size()) fail(ErrorKind::RankMismatch, "grading rank differs from exponent length");
    return dot(weights_, e);
}

namespace {

void check_rank(const Grading& g, const LaurentPoly& p)
{
    if (g.rank() != p.rank())
        fail(ErrorKind::RankMismatch,
             "grading of rank " + std::to_string(g.rank()) + " on polynomial of rank " + std::to_string(p.rank()));
}

}  // namespace

std::set<Integer> support(const Grading& g, const LaurentPoly& p)
{
    check_rank(g, p);
    std::set<Integer> out;
    for (const auto& [d, _] : homogeneous_components(g, p)) out.insert(d);
    return out;
}

std::map<Integer, LaurentPoly> homogeneous_components(const Grading& g, const LaurentPoly& p)
{
    check_rank(g, p);
    std::map<Integer, LaurentPoly> out;
    for (const auto& [e, c] : p.terms()) {
        Integer d = g.degree(e);
        auto it = out.try_emplace(d, p.domain(), p.rank()).first;
        it->second.add_term(e, c);
    }
    return out;
}

bool is_homogeneous(const Grading& g, const LaurentPoly& p) { return support(g, p).size() == 1; }

LeadingForm leading_form(const Grading& g, const LaurentPoly& p)
{
    check_rank(g, p);
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "leading form of zero");
    auto comps = homogeneous_components(g, p);
    auto top = std::prev(comps.end());
    return {top->first, top->second};
}

TopFormRelation top_form_relation(const Grading& g, const std::vector<RelationTerm>& relation, const LaurentPoly& a)
{
    check_rank(g, a);
    if (a.is_zero()) fail(ErrorKind::ZeroPolynomial, "relation for the zero element");
    LaurentPoly total(a.domain(), a.rank());
    bool any_nonzero = false;
    for (const auto& t : relation) {
        total += t.coefficient * pow(a, t.power);
        any_nonzero = any_nonzero || !t.coefficient.is_zero();
    }
    if (!any_nonzero) fail(ErrorKind::NotARelation, "all coefficients are zero");
    if (!total.is_zero()) fail(ErrorKind::NotARelation, "sum h_i a^i is " + to_string(total) + ", not 0");

    LeadingForm lead_a = leading_form(g, a);
    TopFormRelation out;
    bool first = true;
    for (const auto& t : relation) {
        if (t.coefficient.is_zero()) continue;
        Integer d = leading_form(g, t.coefficient).degree + Integer(static_cast<unsigned long>(t.power)) * lead_a.degree;
        if (first || d > out.degree) {
            out.degree = d;
            out.terms.clear();
            first = false;
        }
        if (d == out.degree) out.terms.push_back({leading_form(g, t.coefficient).form, t.power});
    }

    LaurentPoly top(a.domain(), a.rank());
    for (const auto& t : out.terms) top += t.coefficient * pow(lead_a.form, t.power);
    if (!top.is_zero()) fail(ErrorKind::NotARelation, "top-degree forms do not cancel");
    return out;
}

Grading extend_to_laurent_vars(const Grading& g, std::size_t extra, const IntVector& extra_weights)
{
    if (extra_weights.size() != extra) fail(ErrorKind::RankMismatch, "extra weight count differs from extra variables");
    IntVector w = g.weights();
    w.insert(w.end(), extra_weights.begin(), extra_weights.end());
    return Grading(std::move(w));
}

GradingLattice grading_lattice(const AlgebraPresentation& P)
{
    const std::size_t g = P.generator_count();
    std::vector<IntVector> rows;
    for (const auto& rel : P.relations()) {
        const auto& terms = rel.terms();
        if (terms.empty()) fail(ErrorKind::MalformedPresentation, "zero relation");
        const ExponentVector& first = terms.begin()->first;
        for (auto it = std::next(terms.begin()); it != terms.end(); ++it) rows.push_back(first - it->first);
        // a single term c*m = 0 would force c*m = 0 in a domain
        if (terms.size() == 1)
            fail(ErrorKind::MalformedPresentation, "single-term relation in an integral domain");
    }
    for (auto b : P.base_generators()) rows.push_back(unit_vector(g, b));
    IntMatrix constraints = IntMatrix::from_rows(rows, g);
    return {P.names(), integer_kernel(constraints), constraints};
}

NeutralReport presentation_neutral(const AlgebraPresentation& P)
{
    NeutralReport report{{}, false, grading_lattice(P)};
    const auto& L = report.lattice.lattice;
    for (std::size_t i = 0; i < P.generator_count(); ++i) {
        bool neutral = true;
        for (std::size_t r = 0; r < L.rank(); ++r)
            if (L.basis()(r, i) != 0) neutral = false;
        if (neutral) report.neutral_generators.push_back(i);
    }
    report.algebra_neutral = L.empty();
    return report;
}

}  // namespace laurent

#include "laurent/cancellation.hpp"

#include <algorithm>

#include "laurent/error.hpp"

namespace laurent {

std::string_view to_string(HypothesisStatus s) noexcept
{
    switch (s) {
    case HypothesisStatus::Verified: return "verified";
    case HypothesisStatus::Asserted: return "asserted";
    case HypothesisStatus::Failed: return "failed";
    }
    return "?";
}

std::string_view to_string(VerdictStatus s) noexcept
{
    switch (s) {
    case VerdictStatus::LaurentLine: return "laurent_line";
    case VerdictStatus::NotLaurentLine: return "not_laurent_line";
    case VerdictStatus::FalseUnderPresentationGradings: return "false_under_presentation_gradings";
    case VerdictStatus::NotCertified: return "not_certified";
    }
    return "?";
}

std::string_view to_string(CancelBranch b) noexcept
{
    switch (b) {
    case CancelBranch::UnitsAlgebraic: return "units_algebraic";
    case CancelBranch::UnitsNeutral: return "units_neutral";
    case CancelBranch::FieldBase: return "field_base";
    }
    return "?";
}

namespace {

std::vector<MonomialGenerator> all_generators(const MonomialSubalgebra& A)
{
    std::vector<MonomialGenerator> out = A.generators();
    for (const auto& b : A.base())
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    return out;
}

void check_images(const std::vector<LaurentPoly>& images, std::size_t count, std::size_t rank, const Domain& d,
                  const char* what)
{
    if (images.size() != count)
        fail(ErrorKind::RankMismatch, std::string(what) + " needs " + std::to_string(count) + " images, got " +
                                          std::to_string(images.size()));
    for (const auto& p : images) {
        if (p.rank() != rank) fail(ErrorKind::RankMismatch, std::string(what) + " image in the wrong ring");
        if (!(p.domain() == d)) fail(ErrorKind::DomainMismatch, std::string(what) + " image over another domain");
    }
}

Integer degree_of(const Grading& g, const LaurentPoly& monomial)
{
    return g.degree(monomial.terms().begin()->first);
}

const Coeff& coefficient_of(const LaurentPoly& monomial) { return monomial.terms().begin()->second; }
const ExponentVector& exponent_of(const LaurentPoly& monomial) { return monomial.terms().begin()->first; }

bool on_line(const IntVector& e, const IntVector& u)
{
    return LatticeBasis::from_generators({u}, u.size()).contains(e);
}

bool collinear(const IntVector& a, const IntVector& b)
{
    return rank(IntMatrix::from_rows({a, b}, a.size())) <= 1;
}

struct EngineResult {
    NormalizationTrace trace;
    std::vector<bool> made_unit;
};

EngineResult normalize_engine(const MonomialSubalgebra& A, const Grading& g, bool localize)
{
    if (g.rank() != A.ambient_rank()) fail(ErrorKind::RankMismatch, "grading rank differs from the ambient rank");
    const auto& gens = A.generators();
    const std::size_t k = gens.size();

    LatticeBasis L = unit_lattice(A);
    if (L.empty()) fail(ErrorKind::HypothesisFailed, "A has no units beyond the scalars");
    if (L.rank() >= 2) fail(ErrorKind::NotRankOne, "unit lattice has rank " + std::to_string(L.rank()));

    std::optional<std::size_t> seed;
    for (std::size_t j = 0; j < k; ++j) {
        if (!gens[j].unit) continue;
        Integer d = abs_value(g.degree(gens[j].exponent));
        if (d == 0) continue;
        if (!seed || d < abs_value(g.degree(gens[*seed].exponent))) seed = j;
    }
    if (!seed) fail(ErrorKind::HypothesisFailed, "every unit has degree 0");

    Domain R = A.domain();
    LaurentPoly u = A.element(gens[*seed]);
    IntVector word = unit_vector(k, *seed);
    if (degree_of(g, u) < 0) {
        u = invert_unit_poly(u);
        word = -word;
    }

    EngineResult res;
    res.made_unit.assign(k, false);
    NormalizationTrace& tr = res.trace;
    tr.seed = u;
    tr.degrees.push_back(degree_of(g, u));

    auto step = [&](std::size_t j, bool unit) {
        LaurentPoly v = A.element(gens[j]).with_domain(R);
        u = u.with_domain(R);
        IntVector wv = unit_vector(k, j);
        if (!collinear(exponent_of(u), exponent_of(v)))
            fail(ErrorKind::NotRankOne, "generator '" + gens[j].name + "' is off the line of the current unit");
        Integer du = degree_of(g, u), dv = degree_of(g, v);
        Integer d = gcd(du, dv);
        Integer a = du / d, b = dv / d;
        if (unit && b < 0) {
            v = invert_unit_poly(v);
            wv = -wv;
            b = -b;
            dv = -dv;
        }
        Coeff cu = coefficient_of(u), cv = coefficient_of(v);
        Coeff r = R.negate(R.multiply(R.power(cv, a), R.power(cu, -b)));
        NormalizationStep s;
        s.localized = false;
        if (!R.is_unit(r)) {
            if (!localize) fail(ErrorKind::HypothesisFailed, "relation coefficient " + to_string(r) + " is not a unit");
            R = R.localized_at(r);
            tr.localized_at.push_back(r);
            u = u.with_domain(R);
            v = v.with_domain(R);
            s.localized = true;
        }
        GcdResult bez = ext_gcd(a, b);
        if (bez.g != 1) fail(ErrorKind::HypothesisFailed, "degree quotients are not coprime");
        LaurentPoly w = pow(u, bez.m) * pow(v, bez.n);
        Coeff minus_r = R.negate(r);
        if (!(pow(w, a) == scale(u, R.power(minus_r, bez.n))) || !(pow(w, b) == scale(v, R.power(minus_r, -bez.m))))
            fail(ErrorKind::HypothesisFailed, "Bezout identity check failed");
        s.u = u;
        s.v = v;
        s.deg_u = du;
        s.deg_v = dv;
        s.d = d;
        s.a = a;
        s.b = b;
        s.m = bez.m;
        s.n = bez.n;
        s.r = r;
        s.w = w;
        s.domain = R;
        tr.steps.push_back(std::move(s));
        word = bez.m * word + bez.n * wv;
        if (!unit) res.made_unit[j] = true;
        u = w;
        tr.degrees.push_back(degree_of(g, u));
    };

    auto next_off_line = [&](bool units) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < k; ++j)
            if (gens[j].unit == units && !on_line(gens[j].exponent, exponent_of(u))) return j;
        return std::nullopt;
    };
    while (auto j = next_off_line(true)) step(*j, true);
    if (localize)
        while (auto j = next_off_line(false)) step(*j, false);

    if (!localize && !(LatticeBasis::from_generators({exponent_of(u)}, A.ambient_rank()) == L))
        fail(ErrorKind::HypothesisFailed, "normalized unit does not span the unit lattice");

    tr.w = u;
    tr.w_word = word;
    tr.domain = R;
    return res;
}

}  // namespace

// ---------------------------------------------------------------- LaurentHom

LaurentHom::LaurentHom(MonomialSubalgebra source, MonomialSubalgebra target, std::vector<std::string> source_vars,
                       std::vector<std::string> target_vars, std::vector<LaurentPoly> images,
                       std::optional<std::vector<LaurentPoly>> inverse_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      source_vars_(std::move(source_vars)),
      target_vars_(std::move(target_vars)),
      images_(std::move(images)),
      inverse_(std::move(inverse_images))
{
    if (!(source_.domain() == target_.domain()))
        fail(ErrorKind::DomainMismatch, "source and target have different coefficient rings");
    if (source_vars_.size() != target_vars_.size())
        fail(ErrorKind::RankMismatch, "different numbers of adjoined variables");
    check_images(images_, source_rank(), target_rank(), target_.domain(), "hom");
    if (inverse_) check_images(*inverse_, target_rank(), source_rank(), source_.domain(), "inverse");
}

std::vector<std::string> LaurentHom::source_names() const
{
    auto names = source_.ambient_names();
    names.insert(names.end(), source_vars_.begin(), source_vars_.end());
    return names;
}

std::vector<std::string> LaurentHom::target_names() const
{
    auto names = target_.ambient_names();
    names.insert(names.end(), target_vars_.begin(), target_vars_.end());
    return names;
}

LaurentPoly LaurentHom::apply(const LaurentPoly& c) const
{
    if (c.rank() != source_rank()) fail(ErrorKind::RankMismatch, "element is not in the source ring");
    return substitute(c, images_, target_rank(), target_.domain());
}

LaurentPoly LaurentHom::apply_inverse(const LaurentPoly& d) const
{
    if (!inverse_) fail(ErrorKind::HypothesisFailed, "no inverse was supplied");
    if (d.rank() != target_rank()) fail(ErrorKind::RankMismatch, "element is not in the target ring");
    return substitute(d, *inverse_, source_rank(), source_.domain());
}

LaurentPoly LaurentHom::lift_source(const LaurentPoly& a) const
{
    if (a.rank() != source_.ambient_rank()) fail(ErrorKind::RankMismatch, "element is not in A's ambient ring");
    return a.padded(source_rank());
}

LaurentPoly LaurentHom::lift_target(const LaurentPoly& b) const
{
    if (b.rank() != target_.ambient_rank()) fail(ErrorKind::RankMismatch, "element is not in B's ambient ring");
    return b.padded(target_rank());
}

LaurentPoly LaurentHom::source_var(std::size_t i) const
{
    return LaurentPoly::variable(source_.domain(), source_rank(), source_.ambient_rank() + i);
}

LaurentPoly LaurentHom::target_var(std::size_t i) const
{
    return LaurentPoly::variable(target_.domain(), target_rank(), target_.ambient_rank() + i);
}

bool LaurentHom::composites_are_identity() const
{
    if (!inverse_) return false;
    for (const auto& g : all_generators(source_)) {
        LaurentPoly x = lift_source(source_.element(g));
        if (!(apply_inverse(apply(x)) == x)) return false;
    }
    for (const auto& h : all_generators(target_)) {
        LaurentPoly x = lift_target(target_.element(h));
        if (!(apply(apply_inverse(x)) == x)) return false;
    }
    for (std::size_t i = 0; i < adjoined(); ++i) {
        if (!(apply_inverse(apply(source_var(i))) == source_var(i))) return false;
        if (!(apply(apply_inverse(target_var(i))) == target_var(i))) return false;
    }
    return true;
}

// ------------------------------------------------------------ reconstruct_iso

IsoReport reconstruct_iso(const LaurentHom& F)
{
    const MonomialSubalgebra& A = F.source();
    const MonomialSubalgebra& B = F.target();
    const Domain& R = A.domain();
    const std::size_t p = A.ambient_rank(), q = B.ambient_rank(), n = F.adjoined();
    IsoReport rep;

    if (!F.inverse_images()) fail(ErrorKind::HypothesisFailed, "an inverse of F is required");
    if (!F.composites_are_identity()) fail(ErrorKind::HypothesisFailed, "F and the supplied inverse do not compose to the identity");
    rep.ledger.push_back({"F is an isomorphism", HypothesisStatus::Verified, "both composites fix all generators"});

    for (const auto& g : A.unit_generators()) {
        LaurentPoly img = F.apply(F.lift_source(A.element(g)));
        auto dec = is_unit_poly(img);
        if (!dec) fail(ErrorKind::DecompositionFailed, "F(" + g.name + ") is not a unit monomial");
        for (std::size_t k = q; k < q + n; ++k)
            if ((*dec).exponent[k] != 0)
                fail(ErrorKind::HypothesisFailed, "F(" + g.name + ") involves the adjoined variables, so F(A*) is not in B");
    }
    rep.ledger.push_back({"F(A*) in B", HypothesisStatus::Verified, "images of the unit generators of A have no z-part"});

    LatticeBasis unitsA = unit_lattice(A), unitsB = unit_lattice(B);
    rep.E = IntMatrix(n, n);
    rep.D = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto dec = is_unit_poly(F.apply(F.source_var(i)));
        if (!dec) fail(ErrorKind::DecompositionFailed, "F(" + F.source_vars()[i] + ") is not a unit monomial");
        IntVector head(dec->exponent.begin(), dec->exponent.begin() + static_cast<std::ptrdiff_t>(q));
        if (!unitsB.contains(head)) fail(ErrorKind::DecompositionFailed, "b_" + std::to_string(i + 1) + " is not a unit of B");
        for (std::size_t k = 0; k < n; ++k) rep.E(i, k) = dec->exponent[q + k];
        rep.b.push_back(LaurentPoly::monomial(R, dec->coefficient, head));
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto dec = is_unit_poly(F.apply_inverse(F.target_var(i)));
        if (!dec) fail(ErrorKind::DecompositionFailed, "F^-1(" + F.target_vars()[i] + ") is not a unit monomial");
        IntVector head(dec->exponent.begin(), dec->exponent.begin() + static_cast<std::ptrdiff_t>(p));
        if (!unitsA.contains(head)) fail(ErrorKind::DecompositionFailed, "a_" + std::to_string(i + 1) + " is not a unit of A");
        for (std::size_t k = 0; k < n; ++k) rep.D(i, k) = dec->exponent[p + k];
        rep.a.push_back(LaurentPoly::monomial(R, dec->coefficient, head));
    }
    if (!(rep.D * rep.E == IntMatrix::identity(n)))
        fail(ErrorKind::NotUnimodular, "exponent matrices of F and F^-1 are not mutually inverse");
    rep.ledger.push_back({"D E = I", HypothesisStatus::Verified, "exponent matrices are mutually inverse"});

    const LaurentPoly one = LaurentPoly::constant(R, q + n, R.one());
    for (std::size_t i = 0; i < n; ++i) {
        LaurentPoly prod = F.apply(F.lift_source(rep.a[i]));
        for (std::size_t k = 0; k < n; ++k) prod = prod * pow(F.lift_target(rep.b[k]), rep.D(i, k));
        if (!(prod == one)) fail(ErrorKind::HypothesisFailed, "scalar identity fails for a_" + std::to_string(i + 1));
    }
    rep.ledger.push_back({"F(a_i) prod b_k^d_ik = 1", HypothesisStatus::Verified, ""});

    for (std::size_t i = 0; i < n; ++i) rep.ideal_generators.push_back(F.apply(F.source_var(i)) - one);

    // sigma: z_j -> prod_i b_i^{-D[j][i]}; sigma^-1: y_j -> 1
    std::vector<LaurentPoly> zsub, ysub;
    for (std::size_t k = 0; k < q; ++k) zsub.push_back(LaurentPoly::variable(R, q, k));
    for (std::size_t j = 0; j < n; ++j) {
        LaurentPoly img = LaurentPoly::constant(R, q, R.one());
        for (std::size_t i = 0; i < n; ++i) img = img * pow(rep.b[i], -rep.D(j, i));
        zsub.push_back(img);
    }
    for (std::size_t k = 0; k < p; ++k) ysub.push_back(LaurentPoly::variable(R, p, k));
    for (std::size_t j = 0; j < n; ++j) ysub.push_back(LaurentPoly::constant(R, p, R.one()));

    std::vector<LaurentPoly> sigma, sigma_inv;
    for (std::size_t k = 0; k < p; ++k) sigma.push_back(substitute(F.images()[k], zsub, q, R));
    for (std::size_t k = 0; k < q; ++k) sigma_inv.push_back(substitute((*F.inverse_images())[k], ysub, p, R));

    bool ok = true;
    for (const auto& g : all_generators(A)) {
        LaurentPoly img = substitute(A.element(g), sigma, q, R);
        ok = ok && substitute(img, sigma_inv, p, R) == A.element(g);
        rep.iso.forward.push_back(std::move(img));
    }
    for (const auto& h : all_generators(B)) {
        LaurentPoly img = substitute(B.element(h), sigma_inv, p, R);
        ok = ok && substitute(img, sigma, q, R) == B.element(h);
        rep.iso.backward.push_back(std::move(img));
    }
    if (!ok) fail(ErrorKind::HypothesisFailed, "induced maps are not mutually inverse on generators");
    rep.iso.verified = true;
    return rep;
}

// ------------------------------------------------------------- normalization

NormalizationTrace unit_normalize(const MonomialSubalgebra& A, const Grading& g)
{
    return normalize_engine(A, g, false).trace;
}

LocalizedNormalization localized_normalize(const MonomialSubalgebra& A, const Grading& g)
{
    EngineResult res = normalize_engine(A, g, true);
    std::vector<MonomialGenerator> gens = A.generators();
    for (std::size_t j = 0; j < gens.size(); ++j)
        if (res.made_unit[j]) gens[j].unit = true;
    MonomialSubalgebra out(res.trace.domain, A.ambient_names(), std::move(gens), A.base());
    return {std::move(out), std::move(res.trace)};
}

// ------------------------------------------------------------- characterize

Verdict characterize_laurent(const AlgebraPresentation& P)
{
    const auto& flags = P.flags();
    std::string missing;
    if (!flags.base_algebraically_closed) missing += " base_alg_closed";
    if (!flags.transcendence_degree) missing += " trdeg";
    if (!missing.empty()) fail(ErrorKind::MissingHypothesis, "presentation lacks asserted flags:" + missing);
    if (!P.domain().is_field() || !P.base_generators().empty())
        fail(ErrorKind::HypothesisFailed, "the coefficient ring must be a field");

    Verdict v;
    v.names = P.coordinate_names();
    v.ledger.push_back({"k algebraically closed in A", HypothesisStatus::Asserted, "flag base_alg_closed"});
    if (*flags.transcendence_degree != 1) {
        v.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Failed,
                            "asserted trdeg=" + std::to_string(*flags.transcendence_degree)});
        v.status = VerdictStatus::NotLaurentLine;
        return v;
    }
    v.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Asserted, "flag trdeg=1"});

    GradingLattice GL = grading_lattice(P);
    const auto coords = P.coordinate_generators();
    std::optional<IntVector> weights;
    for (std::size_t r = 0; r < GL.lattice.rank() && !weights; ++r)
        for (std::size_t c : coords)
            if (P.is_declared_unit(c) && GL.lattice.basis()(r, c) != 0) {
                weights = GL.lattice.vector(r);
                break;
            }
    if (!weights) {
        v.ledger.push_back({"some unit has nonzero degree", HypothesisStatus::Failed,
                            "every declared unit is neutral under the presentation gradings"});
        v.status = VerdictStatus::FalseUnderPresentationGradings;
        return v;
    }

    const std::size_t k = coords.size();
    IntVector coord_weights;
    std::vector<MonomialGenerator> surrogate_gens;
    std::vector<std::size_t> surrogate_coord;
    for (std::size_t c = 0; c < k; ++c) {
        coord_weights.push_back((*weights)[coords[c]]);
        if (!P.is_declared_unit(coords[c])) continue;
        surrogate_gens.push_back({P.names()[coords[c]], Coeff(1), {(*weights)[coords[c]]}, true});
        surrogate_coord.push_back(c);
    }
    MonomialSubalgebra surrogate(P.domain(), {"deg"}, std::move(surrogate_gens));
    NormalizationTrace tr = unit_normalize(surrogate, Grading(IntVector{1}));

    IntVector e = zero_vector(k);
    for (std::size_t s = 0; s < surrogate_coord.size(); ++s) e[surrogate_coord[s]] += tr.w_word[s];
    v.witness_w = LaurentPoly::monomial(P.domain(), Coeff(1), e);
    v.grading = Grading(coord_weights);
    v.trace = std::move(tr);
    v.ledger.push_back({"some unit has nonzero degree", HypothesisStatus::Verified,
                        "grading " + to_string(coord_weights)});
    v.status = VerdictStatus::LaurentLine;
    return v;
}

Verdict characterize_laurent(const MonomialSubalgebra& A)
{
    const std::size_t n = A.ambient_rank();
    Verdict v;
    v.names = A.ambient_names();
    const bool field = A.domain().is_field() && A.base().empty();
    v.ledger.push_back({"coefficient ring is a field", field ? HypothesisStatus::Verified : HypothesisStatus::Failed,
                        field ? A.domain().tag() : "base generators present or non-field domain"});
    v.ledger.push_back({"base algebraically closed in A",
                        A.base().empty() ? HypothesisStatus::Verified : HypothesisStatus::Asserted,
                        A.base().empty() ? "base is the field of constants" : "not decided in the monomial model"});

    std::size_t td = transcendence_degree(A);
    if (td != 1) {
        v.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Failed, "rank computation gives " + std::to_string(td)});
        v.status = VerdictStatus::NotLaurentLine;
        return v;
    }
    v.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Verified, "rank computation"});

    std::vector<IntVector> base_rows;
    for (const auto& b : A.base()) base_rows.push_back(b.exponent);
    LatticeBasis K = integer_kernel(IntMatrix::from_rows(base_rows, n));
    std::optional<IntVector> weights;
    for (std::size_t r = 0; r < K.rank() && !weights; ++r)
        for (const auto& u : A.unit_generators())
            if (dot(K.vector(r), u.exponent) != 0) {
                weights = K.vector(r);
                break;
            }
    if (!weights) {
        v.ledger.push_back({"some unit has nonzero degree", HypothesisStatus::Failed,
                            "every unit exponent lies in the rational span of the base"});
        v.status = VerdictStatus::NotLaurentLine;
        return v;
    }
    v.ledger.push_back({"some unit has nonzero degree", HypothesisStatus::Verified, "grading " + to_string(*weights)});
    v.grading = Grading(*weights);
    NormalizationTrace tr = unit_normalize(A, *v.grading);
    v.witness_w = tr.w;

    std::vector<IntVector> rows{exponent_of(tr.w)};
    rows.insert(rows.end(), base_rows.begin(), base_rows.end());
    IntMatrix M = IntMatrix::from_rows(rows, n);
    v.trace = std::move(tr);
    for (const auto& g : all_generators(A)) {
        if (lattice_membership(g.exponent, M)) continue;
        v.non_membership = MembershipWitness{g.name, g.exponent, M};
        v.ledger.push_back({"A = R[w, w^-1]", HypothesisStatus::Failed,
                            "exponent of " + g.name + " is outside span{e_w, base}"});
        v.status = VerdictStatus::NotLaurentLine;
        return v;
    }
    v.ledger.push_back({"A = R[w, w^-1]", HypothesisStatus::Verified, "every generator exponent lies in span{e_w, base}"});
    v.status = A.base().empty() ? VerdictStatus::LaurentLine : VerdictStatus::NotCertified;
    return v;
}

// ----------------------------------------------------------------- bg_cancel

BgCancelReport bg_cancel(const MonomialSubalgebra& A, std::size_t n, std::size_t target_rank, const ElementMap& alpha)
{
    const Domain& R = A.domain();
    const std::size_t p = A.ambient_rank();
    BgCancelReport rep;
    rep.n = n;
    std::vector<UnitDecomposition> W = units_mod_scalars(A);
    rep.m = W.size();
    const std::size_t m = rep.m;
    if (m + n != target_rank)
        fail(ErrorKind::HypothesisFailed, "unit rank " + std::to_string(m) + " plus " + std::to_string(n) +
                                              " adjoined variables differs from the target rank " +
                                              std::to_string(target_rank));
    rep.ledger.push_back({"rank A* / R* + n = target rank", HypothesisStatus::Verified,
                          std::to_string(m) + " + " + std::to_string(n)});

    IntMatrix E(target_rank, target_rank);
    std::vector<Coeff> c;
    auto take_row = [&](std::size_t i, const LaurentPoly& src, const std::string& what) {
        LaurentPoly img = alpha(src);
        if (img.rank() != target_rank) fail(ErrorKind::RankMismatch, "alpha(" + what + ") is in the wrong ring");
        auto dec = is_unit_poly(img);
        if (!dec) fail(ErrorKind::DecompositionFailed, "alpha(" + what + ") is not a unit monomial");
        for (std::size_t k = 0; k < target_rank; ++k) E(i, k) = dec->exponent[k];
        c.push_back(dec->coefficient);
    };
    for (std::size_t i = 0; i < m; ++i) {
        IntVector e = W[i].exponent;
        e.resize(p + n, Integer(0));
        take_row(i, LaurentPoly::monomial(R, W[i].coefficient, e), "w_" + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < n; ++j) take_row(m + j, LaurentPoly::variable(R, p + n, p + j), "y_" + std::to_string(j + 1));
    invert_unimodular(E);
    rep.twist = MonomialAutomorphism(E, c, R);

    std::vector<IntVector> rows;
    for (const auto& w : W) rows.push_back(w.exponent);
    IntMatrix WM = IntMatrix::from_rows(rows, p);
    rep.iso.basis = W;
    bool ok = true;
    for (const auto& g : all_generators(A)) {
        auto coords = lattice_membership(g.exponent, WM);
        if (!coords) fail(ErrorKind::HypothesisFailed, "generator " + g.name + " is not a monomial in the units of A");
        LaurentPoly img = LaurentPoly::monomial(R, g.coefficient, *coords);
        ok = ok && expand_from_basis(img, W, p, 0, R) == A.element(g);
        rep.iso.forward.push_back(std::move(img));
    }
    for (std::size_t i = 0; i < m; ++i) {
        LaurentPoly w = LaurentPoly::monomial(R, W[i].coefficient, W[i].exponent);
        ok = ok && rewrite_in_basis(w, W, 0) == LaurentPoly::variable(R, m, i);
        rep.iso.backward.push_back(std::move(w));
    }
    if (!ok) fail(ErrorKind::HypothesisFailed, "torus isomorphism does not compose to the identity");
    rep.iso.verified = true;

    bool repro = true;
    const auto gens = all_generators(A);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        LaurentPoly lifted = rep.iso.forward[i].padded(m + n);
        LaurentPoly src = A.element(gens[i]).padded(p + n);
        repro = repro && apply(rep.twist, lifted) == alpha(src);
    }
    for (std::size_t j = 0; j < n; ++j)
        repro = repro && apply(rep.twist, LaurentPoly::variable(R, m + n, m + j)) ==
                             alpha(LaurentPoly::variable(R, p + n, p + j));
    rep.reproduces_alpha = repro;
    if (!repro) fail(ErrorKind::HypothesisFailed, "twist composed with the torus isomorphism does not reproduce alpha");
    rep.ledger.push_back({"alpha = twist o (iota (x) id)", HypothesisStatus::Verified, "checked on generators"});
    return rep;
}

BgCancelReport bg_cancel(const LaurentHom& alpha)
{
    const MonomialSubalgebra& B = alpha.target();
    const std::size_t q = B.ambient_rank();
    bool torus = B.base().empty();
    for (const auto& h : B.generators()) torus = torus && h.unit;
    torus = torus && unit_lattice(B) == LatticeBasis::from_generators(IntMatrix::identity(q));
    if (!torus) fail(ErrorKind::HypothesisFailed, "target of alpha is not a Laurent polynomial ring");
    bool iso = alpha.composites_are_identity();
    BgCancelReport rep =
        bg_cancel(alpha.source(), alpha.adjoined(), alpha.target_rank(), [&](const LaurentPoly& x) { return alpha.apply(x); });
    rep.ledger.insert(rep.ledger.begin(),
                      {"alpha is an isomorphism", iso ? HypothesisStatus::Verified : HypothesisStatus::Asserted,
                       iso ? "both composites fix all generators" : "no inverse supplied"});
    return rep;
}

// ------------------------------------------------------------ laurent_cancel

CancelReport laurent_cancel(const LaurentHom& F, const std::optional<AlgebraPresentation>& source_presentation)
{
    const MonomialSubalgebra& A = F.source();
    const MonomialSubalgebra& B = F.target();
    const Domain& R = A.domain();
    CancelReport rep;

    if (source_presentation) {
        const auto& flags = source_presentation->flags();
        if (!flags.transcendence_degree) fail(ErrorKind::MissingHypothesis, "presentation lacks an asserted trdeg");
        if (*flags.transcendence_degree != 1) fail(ErrorKind::HypothesisFailed, "asserted transcendence degree is not 1");
        if (source_presentation->coordinate_generators().size() != A.ambient_rank())
            fail(ErrorKind::RankMismatch, "presentation does not match the source of F");
        rep.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Asserted, "flag trdeg=1"});
    } else {
        std::size_t td = transcendence_degree(A);
        if (td != 1) fail(ErrorKind::HypothesisFailed, "transcendence degree of A is " + std::to_string(td));
        rep.ledger.push_back({"tr.deg A = 1", HypothesisStatus::Verified, "rank computation"});
    }

    auto finish_iso = [&](CancelBranch branch) {
        rep.branch = branch;
        rep.reconstruction = reconstruct_iso(F);
        rep.iso = rep.reconstruction->iso;
        for (const auto& e : rep.reconstruction->ledger) rep.ledger.push_back(e);
        return rep;
    };

    if (source_presentation) {
        rep.ledger.push_back({"A* = R*", HypothesisStatus::Asserted, "not decidable from a presentation"});
    } else if (unit_lattice(A).empty()) {
        rep.ledger.push_back({"A* = R*", HypothesisStatus::Verified, "no unit generators"});
        return finish_iso(CancelBranch::UnitsAlgebraic);
    } else {
        rep.ledger.push_back({"A* = R*", HypothesisStatus::Failed, "A has non-scalar units"});
    }

    bool neutral = false;
    std::string neutral_detail;
    if (source_presentation) {
        NeutralReport nr = presentation_neutral(*source_presentation);
        neutral = true;
        for (std::size_t c : source_presentation->coordinate_generators())
            if (source_presentation->is_declared_unit(c) &&
                std::find(nr.neutral_generators.begin(), nr.neutral_generators.end(), c) == nr.neutral_generators.end())
                neutral = false;
        neutral_detail = nr.algebra_neutral ? "grading lattice is {0}, every element is neutral"
                                            : "declared units are neutral under the presentation gradings";
    } else {
        std::vector<IntVector> base_rows;
        for (const auto& b : A.base()) base_rows.push_back(b.exponent);
        LatticeBasis sat = saturate(LatticeBasis::from_generators(base_rows, A.ambient_rank()));
        neutral = !sat.empty();
        for (const auto& u : A.unit_generators()) neutral = neutral && sat.contains(u.exponent);
        neutral_detail = "unit exponents against the rational span of the base";
    }
    if (neutral) {
        rep.ledger.push_back({"A* in N(A)", HypothesisStatus::Verified, neutral_detail});
        return finish_iso(CancelBranch::UnitsNeutral);
    }
    rep.ledger.push_back({"A* in N(A)", HypothesisStatus::Failed, neutral_detail});

    if (!R.is_field() || !A.base().empty()) {
        rep.ledger.push_back({"R is a field", HypothesisStatus::Failed, R.tag()});
        fail(ErrorKind::NoBranchApplies, "units are neither scalar nor neutral and R is not a field");
    }
    rep.ledger.push_back({"R is a field", HypothesisStatus::Verified, R.tag()});
    Verdict verdict = source_presentation ? characterize_laurent(*source_presentation) : characterize_laurent(A);
    for (const auto& e : verdict.ledger) rep.ledger.push_back(e);
    if (!verdict.is_laurent_line())
        fail(ErrorKind::NoBranchApplies, std::string("A is not certified as a Laurent line: ") +
                                             std::string(to_string(verdict.status)));

    if (!F.inverse_images()) fail(ErrorKind::HypothesisFailed, "an inverse of F is required");
    if (!F.composites_are_identity()) fail(ErrorKind::HypothesisFailed, "F and the supplied inverse do not compose to the identity");
    rep.ledger.push_back({"F is an isomorphism", HypothesisStatus::Verified, "both composites fix all generators"});

    const std::size_t p = A.ambient_rank(), q = B.ambient_rank(), n = F.adjoined();
    auto wdec = is_unit_poly(verdict.witness_w->with_domain(R));
    if (!wdec) fail(ErrorKind::DecompositionFailed, "Laurent line witness is not a unit monomial");
    std::vector<UnitDecomposition> basis_A{*wdec};
    ElementMap G = [&](const LaurentPoly& x) { return rewrite_in_basis(F.apply_inverse(x), basis_A, n); };
    BgCancelReport bg = bg_cancel(B, n, 1 + n, G);
    const auto& basis_B = bg.iso.basis;

    bool ok = true;
    for (const auto& g : all_generators(A)) {
        LaurentPoly img = expand_from_basis(rewrite_in_basis(A.element(g), basis_A, 0), basis_B, q, 0, R);
        ok = ok && expand_from_basis(rewrite_in_basis(img, basis_B, 0), basis_A, p, 0, R) == A.element(g);
        rep.iso.forward.push_back(std::move(img));
    }
    for (const auto& h : all_generators(B)) {
        LaurentPoly img = expand_from_basis(rewrite_in_basis(B.element(h), basis_B, 0), basis_A, p, 0, R);
        ok = ok && expand_from_basis(rewrite_in_basis(img, basis_A, 0), basis_B, q, 0, R) == B.element(h);
        rep.iso.backward.push_back(std::move(img));
    }
    if (!ok) fail(ErrorKind::HypothesisFailed, "composed isomorphism does not fix generators");
    rep.iso.verified = true;
    for (const auto& e : bg.ledger) rep.ledger.push_back(e);
    rep.branch = CancelBranch::FieldBase;
    rep.characterization = std::move(verdict);
    rep.bg = std::move(bg);
    return rep;
}

}  // namespace laurent

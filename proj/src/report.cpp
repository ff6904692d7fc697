#include "laurent/report.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "laurent/algebra.hpp"
#include "laurent/error.hpp"
#include "laurent/grading.hpp"

namespace laurent {

using json = nlohmann::ordered_json;

const std::vector<std::string>& subcommands()
{
    static const std::vector<std::string> verbs{"units",     "grade",        "gradings",  "neutral", "auto",
                                                "reconstruct", "normalize", "characterize", "bg-cancel", "cancel"};
    return verbs;
}

int exit_code_for(ErrorKind kind) noexcept
{
    return kind == ErrorKind::ParseError || kind == ErrorKind::MalformedPresentation ? 3 : 2;
}

namespace {

json jint(const Integer& a)
{
    if (a.fits_slong_p()) return a.get_si();
    return a.get_str();
}

json jvec(const IntVector& v)
{
    json out = json::array();
    for (const auto& x : v) out.push_back(jint(x));
    return out;
}

json jmat(const IntMatrix& m)
{
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(jvec(m.row(i)));
    return out;
}

json jledger(const HypothesisLedger& ledger)
{
    json out = json::array();
    for (const auto& e : ledger)
        out.push_back({{"name", e.name}, {"status", std::string(to_string(e.status))}, {"detail", e.detail}});
    return out;
}

std::vector<std::string> with_vars(std::vector<std::string> names, std::size_t rank, std::string_view stem)
{
    if (names.size() >= rank) return names;
    auto extra = default_names(rank - names.size(), stem);
    names.insert(names.end(), extra.begin(), extra.end());
    return names;
}

std::string poly_text(const LaurentPoly& p, const std::vector<std::string>& names)
{
    return to_string(p, with_vars(names, p.rank(), "s"));
}

std::vector<MonomialGenerator> all_gens(const MonomialSubalgebra& A)
{
    std::vector<MonomialGenerator> out = A.generators();
    for (const auto& b : A.base())
        if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
    return out;
}

json jiso(const AlgebraIso& iso, const MonomialSubalgebra& A, const MonomialSubalgebra& B)
{
    json fwd = json::array(), bwd = json::array();
    auto ga = all_gens(A), gb = all_gens(B);
    for (std::size_t i = 0; i < iso.forward.size(); ++i)
        fwd.push_back({{"generator", ga[i].name}, {"image", poly_text(iso.forward[i], B.ambient_names())}});
    for (std::size_t i = 0; i < iso.backward.size(); ++i)
        bwd.push_back({{"generator", gb[i].name}, {"image", poly_text(iso.backward[i], A.ambient_names())}});
    return {{"forward", fwd}, {"backward", bwd}, {"verified", iso.verified}};
}

json jtrace(const NormalizationTrace& tr, const std::vector<std::string>& names)
{
    json steps = json::array();
    for (const auto& s : tr.steps)
        steps.push_back({{"u", poly_text(s.u, names)},
                         {"v", poly_text(s.v, names)},
                         {"deg_u", jint(s.deg_u)},
                         {"deg_v", jint(s.deg_v)},
                         {"d", jint(s.d)},
                         {"a", jint(s.a)},
                         {"b", jint(s.b)},
                         {"m", jint(s.m)},
                         {"n", jint(s.n)},
                         {"r", to_string(s.r)},
                         {"w", poly_text(s.w, names)},
                         {"localized", s.localized},
                         {"domain", s.domain.tag()}});
    json degrees = json::array(), loc = json::array();
    for (const auto& d : tr.degrees) degrees.push_back(jint(d));
    for (const auto& r : tr.localized_at) loc.push_back(to_string(r));
    const auto& e = tr.w.terms().begin()->first;
    return {{"seed", poly_text(tr.seed, names)},
            {"steps", steps},
            {"w", poly_text(tr.w, names)},
            {"w_exponent", jvec(e)},
            {"w_word", jvec(tr.w_word)},
            {"degrees", degrees},
            {"localized_at", loc},
            {"domain", tr.domain.tag()}};
}

// ---------------------------------------------------------------- helpers

struct Context {
    const Session& s;
    std::vector<std::string> targets;
    const RunOptions& opts;
    json result = json::object();
    HypothesisLedger ledger;
    std::optional<json> self_check;
};

[[noreturn]] void missing(const std::string& what)
{
    fail(ErrorKind::MalformedPresentation, "session has no " + what);
}

template <class T>
const T* first(const std::vector<T>& v)
{
    return v.empty() ? nullptr : &v.front();
}

// The first target naming an object of the wanted kind.
template <class F>
auto target_of(const Context& c, F&& lookup) -> decltype(lookup(std::string_view{}))
{
    for (const auto& t : c.targets)
        if (auto p = lookup(t)) return p;
    return nullptr;
}

std::string algebra_target(const Context& c, bool prefer_ring)
{
    for (const auto& t : c.targets)
        if (c.s.ring(t) || c.s.subalgebra(t)) return t;
    if (prefer_ring && !c.s.rings.empty()) return c.s.rings.front().name;
    if (!c.s.subalgebras.empty()) return c.s.subalgebras.front().name;
    if (!c.s.rings.empty()) return c.s.rings.front().name;
    missing("ring or subalgebra");
}

const RingDecl& ring_target(const Context& c)
{
    if (auto r = target_of(c, [&](std::string_view n) { return c.s.ring(n); })) return *r;
    if (c.s.rings.empty()) missing("ring");
    return c.s.rings.front();
}

const HomDecl& hom_target(const Context& c)
{
    if (auto h = target_of(c, [&](std::string_view n) { return c.s.hom(n); })) return *h;
    if (c.s.homs.empty()) missing("hom");
    return c.s.homs.front();
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(std::uint64_t seed) : gen(seed) {}
    long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    long nonzero(long lo, long hi)
    {
        long x = 0;
        while (x == 0) x = range(lo, hi);
        return x;
    }
    LaurentPoly poly(const Domain& d, std::size_t rank, std::size_t terms)
    {
        LaurentPoly p(d, rank);
        while (p.term_count() < terms) {
            ExponentVector e(rank);
            for (auto& x : e) x = range(-3, 3);
            Coeff c = d.from_rational(Rational(nonzero(-5, 5)));
            if (c != 0 && p.coefficient(e) == 0) p.add_term(e, c);
        }
        return p;
    }
};

constexpr std::size_t kSamples = 20;

void record_check(Context& c, std::size_t samples, bool passed, const std::string& detail)
{
    c.self_check = json{{"seed", *c.opts.seed}, {"samples", samples}, {"passed", passed}, {"detail", detail}};
    if (!passed) fail(ErrorKind::HypothesisFailed, "randomized self-check failed: " + detail);
}

// --------------------------------------------------------------- commands

void cmd_units(Context& c)
{
    std::vector<const ElementDecl*> els;
    for (const auto& t : c.targets)
        if (auto e = c.s.element(t)) els.push_back(e);
    if (els.empty())
        for (const auto& e : c.s.elements) els.push_back(&e);
    if (els.empty()) missing("element");
    json out = json::array();
    for (const ElementDecl* e : els) {
        const auto names = *c.s.names_of(e->ring);
        json item{{"element", e->name}, {"ring", e->ring}, {"value", poly_text(e->value, names)}};
        if (auto r = c.s.ring(e->ring)) {
            const AlgebraPresentation& P = r->algebra;
            LaurentPoly q = P.to_coordinates(e->value);
            auto dec = is_unit_poly(q);
            item["model"] = "presentation";
            item["is_unit"] = dec.has_value();
            if (dec) {
                item["coefficient"] = to_string(dec->coefficient);
                item["exponent"] = jvec(dec->exponent);
                item["names"] = P.coordinate_names();
            }
        } else {
            auto dec = is_unit_poly(e->value);
            item["model"] = c.s.torus(e->ring) ? "torus" : "subalgebra";
            bool unit = dec.has_value();
            if (auto sa = c.s.subalgebra(e->ring); sa && dec) unit = unit_lattice(sa->algebra).contains(dec->exponent);
            item["is_unit"] = unit;
            if (dec) {
                item["coefficient"] = to_string(dec->coefficient);
                item["exponent"] = jvec(dec->exponent);
            }
        }
        out.push_back(item);
    }
    c.result["elements"] = out;

    if (c.opts.seed) {
        Rng rng(*c.opts.seed);
        const ElementDecl* e = els.front();
        const std::size_t rank = e->value.rank();
        const Domain d = e->value.domain();
        bool ok = true;
        for (std::size_t i = 0; i < kSamples; ++i) {
            ExponentVector ex(rank);
            for (auto& x : ex) x = rng.range(-5, 5);
            Coeff coef = d.is_field() ? d.from_rational(Rational(rng.nonzero(-5, 5))) : Coeff(rng.range(0, 1) ? 1 : -1);
            if (coef == 0) coef = 1;
            auto dec = is_unit_poly(LaurentPoly::monomial(d, coef, ex));
            ok = ok && dec && dec->coefficient == coef && dec->exponent == ex;
            ok = ok && !is_unit_poly(rng.poly(d, rank, static_cast<std::size_t>(rng.range(2, 5))));
        }
        record_check(c, kSamples, ok, "unit monomials recovered exactly; multi-term elements rejected");
    }
}

void cmd_grade(Context& c)
{
    const GradingDecl* g = target_of(c, [&](std::string_view n) { return c.s.grading(n); });
    if (!g) g = first(c.s.gradings);
    if (!g) missing("grading");
    const ElementDecl* e = target_of(c, [&](std::string_view n) { return c.s.element(n); });
    if (!e)
        for (const auto& x : c.s.elements)
            if (x.value.rank() == g->weights.size()) {
                e = &x;
                break;
            }
    if (!e) missing("element of rank " + std::to_string(g->weights.size()));
    if (e->value.rank() != g->weights.size()) fail(ErrorKind::RankMismatch, "grading and element ranks differ");
    Grading gr(g->weights);
    const auto names = *c.s.names_of(e->ring);
    json supp = json::array(), comps = json::array();
    for (const auto& d : support(gr, e->value)) supp.push_back(jint(d));
    for (const auto& [d, f] : homogeneous_components(gr, e->value))
        comps.push_back({{"degree", jint(d)}, {"form", poly_text(f, names)}});
    c.result["grading"] = g->name;
    c.result["weights"] = jvec(g->weights);
    c.result["element"] = e->name;
    c.result["value"] = poly_text(e->value, names);
    c.result["support"] = supp;
    c.result["components"] = comps;
    c.result["homogeneous"] = is_homogeneous(gr, e->value);
    LeadingForm lf = leading_form(gr, e->value);
    c.result["leading_degree"] = jint(lf.degree);
    c.result["leading_form"] = poly_text(lf.form, names);

    if (c.opts.seed) {
        Rng rng(*c.opts.seed);
        bool ok = true;
        for (std::size_t i = 0; i < kSamples; ++i) {
            LaurentPoly p = rng.poly(e->value.domain(), gr.rank(), static_cast<std::size_t>(rng.range(1, 5)));
            auto parts = homogeneous_components(gr, p);
            LaurentPoly sum(p.domain(), p.rank());
            for (const auto& [d, f] : parts) {
                sum += f;
                ok = ok && support(gr, f) == std::set<Integer>{d};
            }
            ok = ok && sum == p && leading_form(gr, p).degree == parts.rbegin()->first;
        }
        record_check(c, kSamples, ok, "components sum back and are homogeneous of their degree");
    }
}

void lattice_check(Context& c, const AlgebraPresentation& P, const LatticeBasis& L)
{
    Rng rng(*c.opts.seed);
    bool ok = true;
    for (std::size_t i = 0; i < kSamples; ++i) {
        IntVector w = zero_vector(P.generator_count());
        for (std::size_t r = 0; r < L.rank(); ++r) w = w + Integer(rng.range(-4, 4)) * L.vector(r);
        Grading g(w);
        for (const auto& rel : P.relations()) ok = ok && is_homogeneous(g, rel);
    }
    record_check(c, kSamples, ok, "random lattice gradings make every relation homogeneous");
}

void cmd_gradings(Context& c, bool neutral_only)
{
    const RingDecl& r = ring_target(c);
    const AlgebraPresentation& P = r.algebra;
    c.result["ring"] = r.name;
    c.result["generators"] = P.names();
    if (neutral_only) {
        NeutralReport nr = presentation_neutral(P);
        std::vector<std::string> names;
        for (auto i : nr.neutral_generators) names.push_back(P.names()[i]);
        c.result["algebra_neutral"] = nr.algebra_neutral;
        c.result["neutral_generators"] = names;
        c.result["lattice"] = jmat(nr.lattice.lattice.basis());
        c.result["lattice_rank"] = nr.lattice.lattice.rank();
        if (c.opts.seed) lattice_check(c, P, nr.lattice.lattice);
    } else {
        GradingLattice gl = grading_lattice(P);
        c.result["lattice"] = jmat(gl.lattice.basis());
        c.result["lattice_rank"] = gl.lattice.rank();
        c.result["constraints"] = jmat(gl.constraints);
        if (c.opts.seed) lattice_check(c, P, gl.lattice);
    }
}

json jauto(const MonomialAutomorphism& m)
{
    json sc = json::array();
    for (const auto& s : m.scalars()) sc.push_back(to_string(s));
    return {{"matrix", jmat(m.matrix())}, {"scalars", sc}, {"determinant", jint(determinant(m.matrix()))}};
}

void cmd_auto(Context& c)
{
    std::vector<const AutoDecl*> autos;
    std::vector<const ElementDecl*> els;
    for (const auto& t : c.targets) {
        if (auto a = c.s.automorphism(t)) autos.push_back(a);
        if (auto e = c.s.element(t)) els.push_back(e);
    }
    if (autos.empty())
        for (const auto& a : c.s.autos) autos.push_back(&a);
    if (autos.empty()) missing("automorphism");
    if (c.targets.empty() || els.empty())
        for (const auto& e : c.s.elements) els.push_back(&e);

    json list = json::array(), apps = json::array();
    for (const AutoDecl* a : autos) {
        json item = jauto(a->map);
        item["name"] = a->name;
        item["inverse"] = jauto(inverse(a->map));
        list.push_back(item);
        for (const ElementDecl* e : els) {
            if (e->value.rank() != a->map.rank() || !(e->value.domain() == a->map.domain())) continue;
            const auto names = *c.s.names_of(e->ring);
            apps.push_back({{"auto", a->name}, {"element", e->name}, {"image", poly_text(apply(a->map, e->value), names)}});
        }
    }
    c.result["automorphisms"] = list;
    if (autos.size() >= 2) {
        json comp = jauto(compose(autos[0]->map, autos[1]->map));
        comp["first"] = autos[0]->name;
        comp["then"] = autos[1]->name;
        c.result["composition"] = comp;
    }
    c.result["applications"] = apps;

    if (c.opts.seed) {
        Rng rng(*c.opts.seed);
        const auto& alpha = autos[0]->map;
        const auto& beta = autos.size() >= 2 ? autos[1]->map : autos[0]->map;
        bool ok = true;
        for (std::size_t i = 0; i < kSamples; ++i) {
            LaurentPoly p = rng.poly(alpha.domain(), alpha.rank(), static_cast<std::size_t>(rng.range(1, 4)));
            ok = ok && apply(compose(alpha, beta), p) == apply(beta, apply(alpha, p));
            ok = ok && apply(inverse(alpha), apply(alpha, p)) == p;
        }
        record_check(c, kSamples, ok, "composition and inverse laws on random polynomials");
    }
}

void hom_check(Context& c, const LaurentHom& F)
{
    Rng rng(*c.opts.seed);
    if (!F.inverse_images()) return record_check(c, 0, true, "no inverse supplied; round trip skipped");
    const MonomialSubalgebra& A = F.source();
    auto gens = all_gens(A);
    bool ok = true;
    for (std::size_t i = 0; i < kSamples; ++i) {
        LaurentPoly x = LaurentPoly::constant(A.domain(), F.source_rank(), Coeff(rng.nonzero(-3, 3)));
        for (const auto& g : gens) {
            long k = g.unit ? rng.range(-2, 2) : rng.range(0, 2);
            x = x * pow(F.lift_source(A.element(g)), k);
        }
        for (std::size_t j = 0; j < F.adjoined(); ++j) x = x * pow(F.source_var(j), rng.range(-2, 2));
        x += LaurentPoly::constant(A.domain(), F.source_rank(), Coeff(rng.range(-3, 3)));
        ok = ok && F.apply_inverse(F.apply(x)) == x;
    }
    record_check(c, kSamples, ok, "F^-1(F(x)) = x on random elements of the source");
}

void cmd_reconstruct(Context& c)
{
    const HomDecl& h = hom_target(c);
    LaurentHom F = c.s.build_hom(h);
    IsoReport rep = reconstruct_iso(F);
    const auto bnames = F.target().ambient_names(), anames = F.source().ambient_names();
    json b = json::array(), a = json::array(), ideal = json::array();
    for (const auto& x : rep.b) b.push_back(poly_text(x, bnames));
    for (const auto& x : rep.a) a.push_back(poly_text(x, anames));
    for (const auto& x : rep.ideal_generators) ideal.push_back(poly_text(x, F.target_names()));
    c.result["hom"] = h.name;
    c.result["E"] = jmat(rep.E);
    c.result["D"] = jmat(rep.D);
    c.result["b"] = b;
    c.result["a"] = a;
    c.result["ideal_generators"] = ideal;
    c.result["iso"] = jiso(rep.iso, F.source(), F.target());
    c.ledger = rep.ledger;
    if (c.opts.seed) hom_check(c, F);
}

Grading default_grading(const Context& c, const std::string& obj, const MonomialSubalgebra& A)
{
    const std::size_t n = A.ambient_rank();
    const RingDecl* r = c.s.ring(obj);
    const std::size_t want = r ? r->algebra.generator_count() : n;
    const GradingDecl* g = target_of(c, [&](std::string_view nm) { return c.s.grading(nm); });
    if (!g)
        for (const auto& x : c.s.gradings)
            if (x.weights.size() == want) {
                g = &x;
                break;
            }
    if (g) {
        if (g->weights.size() != want) fail(ErrorKind::RankMismatch, "grading '" + g->name + "' has the wrong rank");
        if (!r) return Grading(g->weights);
        IntVector w;
        for (auto i : r->algebra.coordinate_generators()) w.push_back(g->weights[i]);
        return Grading(w);
    }
    if (n == 1) return Grading(IntVector{1});
    std::vector<IntVector> rows;
    for (const auto& b : A.base()) rows.push_back(b.exponent);
    LatticeBasis K = integer_kernel(IntMatrix::from_rows(rows, n));
    for (std::size_t i = 0; i < K.rank(); ++i)
        for (const auto& u : A.unit_generators())
            if (dot(K.vector(i), u.exponent) != 0) return Grading(K.vector(i));
    fail(ErrorKind::HypothesisFailed, "no grading gives a unit nonzero degree");
}

void cmd_normalize(Context& c)
{
    std::string obj = algebra_target(c, false);
    MonomialSubalgebra A = c.s.monomial_model(obj);
    Grading g = default_grading(c, obj, A);
    const bool localized = !A.domain().is_field();
    NormalizationTrace tr;
    c.result["algebra"] = obj;
    c.result["weights"] = jvec(g.weights());
    c.result["mode"] = localized ? "localized" : "units";
    if (localized) {
        LocalizedNormalization ln = localized_normalize(A, g);
        tr = ln.trace;
        std::vector<std::string> units;
        for (const auto& x : ln.algebra.generators())
            if (x.unit) units.push_back(x.name);
        c.result["localized_units"] = units;
    } else {
        tr = unit_normalize(A, g);
    }
    json t = jtrace(tr, A.ambient_names());
    for (auto it = t.begin(); it != t.end(); ++it) c.result[it.key()] = it.value();

    if (c.opts.seed) {
        Rng rng(*c.opts.seed);
        LatticeBasis want = LatticeBasis::from_generators({tr.w.terms().begin()->first}, A.ambient_rank());
        bool ok = true;
        for (std::size_t i = 0; i < kSamples; ++i) {
            auto gens = A.generators();
            std::shuffle(gens.begin(), gens.end(), rng.gen);
            MonomialSubalgebra B(A.domain(), A.ambient_names(), gens, A.base());
            NormalizationTrace t2 = localized ? localized_normalize(B, g).trace : unit_normalize(B, g);
            ok = ok && LatticeBasis::from_generators({t2.w.terms().begin()->first}, A.ambient_rank()) == want;
            for (std::size_t k = 1; k < t2.degrees.size(); ++k) ok = ok && t2.degrees[k] < t2.degrees[k - 1];
        }
        record_check(c, kSamples, ok, "generator order does not change the lattice of w; degrees decrease");
    }
}

json jverdict(const Verdict& v)
{
    json out{{"status", std::string(to_string(v.status))}, {"is_laurent_line", v.is_laurent_line()}};
    out["witness_w"] = v.witness_w ? json(poly_text(*v.witness_w, v.names)) : json(nullptr);
    out["grading"] = v.grading ? jvec(v.grading->weights()) : json(nullptr);
    if (v.non_membership)
        out["non_membership"] = {{"generator", v.non_membership->generator},
                                 {"vector", jvec(v.non_membership->vector)},
                                 {"lattice", jmat(v.non_membership->lattice)}};
    else
        out["non_membership"] = nullptr;
    return out;
}

void cmd_characterize(Context& c)
{
    std::string obj = algebra_target(c, true);
    const RingDecl* r = c.s.ring(obj);
    Verdict v = r ? characterize_laurent(r->algebra) : characterize_laurent(c.s.subalgebra(obj)->algebra);
    c.result["algebra"] = obj;
    c.result["model"] = r ? "presentation" : "monomial";
    json j = jverdict(v);
    for (auto it = j.begin(); it != j.end(); ++it) c.result[it.key()] = it.value();
    if (v.trace) c.result["trace"] = jtrace(*v.trace, r ? std::vector<std::string>{"deg"} : v.names);
    c.ledger = v.ledger;

    if (c.opts.seed) {
        Rng rng(*c.opts.seed);
        bool ok = true;
        if (!r) {
            const MonomialSubalgebra& A = c.s.subalgebra(obj)->algebra;
            for (std::size_t i = 0; i < kSamples; ++i) {
                auto gens = A.generators();
                std::shuffle(gens.begin(), gens.end(), rng.gen);
                Verdict v2 = characterize_laurent(MonomialSubalgebra(A.domain(), A.ambient_names(), gens, A.base()));
                ok = ok && v2.status == v.status;
            }
        }
        record_check(c, r ? 0 : kSamples, ok, "verdict is independent of generator order");
    }
}

json jbg(const BgCancelReport& bg, const MonomialSubalgebra& A)
{
    json basis = json::array(), fwd = json::array(), bwd = json::array();
    auto names = A.ambient_names();
    auto snames = default_names(bg.m, "s");
    for (const auto& w : bg.iso.basis)
        basis.push_back(poly_text(LaurentPoly::monomial(A.domain(), w.coefficient, w.exponent), names));
    auto gens = all_gens(A);
    for (std::size_t i = 0; i < bg.iso.forward.size(); ++i)
        fwd.push_back({{"generator", gens[i].name}, {"image", poly_text(bg.iso.forward[i], snames)}});
    for (std::size_t i = 0; i < bg.iso.backward.size(); ++i)
        bwd.push_back({{"generator", snames[i]}, {"image", poly_text(bg.iso.backward[i], names)}});
    json twist = jauto(bg.twist);
    return {{"m", bg.m},
            {"n", bg.n},
            {"twist", twist},
            {"iso", {{"basis", basis}, {"forward", fwd}, {"backward", bwd}, {"verified", bg.iso.verified}}},
            {"reproduces_alpha", bg.reproduces_alpha}};
}

void cmd_bg_cancel(Context& c)
{
    const HomDecl& h = hom_target(c);
    LaurentHom F = c.s.build_hom(h);
    BgCancelReport bg = bg_cancel(F);
    c.result["hom"] = h.name;
    json j = jbg(bg, F.source());
    for (auto it = j.begin(); it != j.end(); ++it) c.result[it.key()] = it.value();
    c.ledger = bg.ledger;
    if (c.opts.seed) hom_check(c, F);
}

void cmd_cancel(Context& c)
{
    const HomDecl& h = hom_target(c);
    LaurentHom F = c.s.build_hom(h);
    std::optional<AlgebraPresentation> P;
    if (auto r = c.s.ring(h.from)) P = r->algebra;
    {
        CancelReport rep = laurent_cancel(F, P);
        c.result["hom"] = h.name;
        c.result["branch"] = std::string(to_string(rep.branch));
        c.result["iso"] = jiso(rep.iso, F.source(), F.target());
        if (rep.reconstruction) {
            c.result["E"] = jmat(rep.reconstruction->E);
            c.result["D"] = jmat(rep.reconstruction->D);
        }
        if (rep.characterization) c.result["characterization"] = jverdict(*rep.characterization);
        if (rep.bg) c.result["bg_cancel"] = jbg(*rep.bg, F.target());
        c.ledger = rep.ledger;
    }
    if (c.opts.seed) hom_check(c, F);
}

std::vector<std::string> resolve_targets(const Session& s, std::string_view verb, const RunOptions& opts)
{
    if (!opts.targets.empty()) return opts.targets;
    for (const auto& cmd : s.commands)
        if (cmd.verb == verb) return cmd.args;
    return {};
}

json base_report(std::string_view verb)
{
    return {{"schema_version", std::string(kReportSchemaVersion)}, {"command", std::string(verb)}};
}

RunResult error_result(json report, const Error& e)
{
    int code = exit_code_for(e.kind());
    std::string what = e.what();
    std::string prefix = std::string(e.name()) + ": ";
    std::string msg = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
    report["status"] = "error";
    report["exit_code"] = code;
    report["error"] = {{"kind", std::string(e.name())}, {"message", msg}};
    return {code, report, ""};
}

}  // namespace

RunResult run_command(const Session& session, std::string_view verb, const RunOptions& options)
{
    json report = base_report(verb);
    const auto& verbs = subcommands();
    if (std::find(verbs.begin(), verbs.end(), verb) == verbs.end()) {
        RunResult r = error_result(report, Error(ErrorKind::ParseError, "unknown subcommand '" + std::string(verb) + "'"));
        r.text = render_text(r.report, options.trace);
        return r;
    }
    Context c{session, resolve_targets(session, verb, options), options, json::object(), {}, std::nullopt};
    RunResult out;
    try {
        if (verb == "units") cmd_units(c);
        else if (verb == "grade") cmd_grade(c);
        else if (verb == "gradings") cmd_gradings(c, false);
        else if (verb == "neutral") cmd_gradings(c, true);
        else if (verb == "auto") cmd_auto(c);
        else if (verb == "reconstruct") cmd_reconstruct(c);
        else if (verb == "normalize") cmd_normalize(c);
        else if (verb == "characterize") cmd_characterize(c);
        else if (verb == "bg-cancel") cmd_bg_cancel(c);
        else cmd_cancel(c);
        report["status"] = "ok";
        report["exit_code"] = 0;
        report["result"] = c.result;
        report["ledger"] = jledger(c.ledger);
        if (c.self_check) report["self_check"] = *c.self_check;
        out = {0, report, ""};
    } catch (const Error& e) {
        if (!c.ledger.empty()) report["ledger"] = jledger(c.ledger);
        if (c.self_check) report["self_check"] = *c.self_check;
        out = error_result(report, e);
    }
    out.text = render_text(out.report, options.trace);
    return out;
}

RunResult run_text(std::string_view text, std::string_view verb, const RunOptions& options)
{
    Session s;
    try {
        s = parse_session(text);
        if (s.empty()) fail(ErrorKind::ParseError, "empty session file");
    } catch (const Error& e) {
        RunResult r = error_result(base_report(verb), e);
        r.text = render_text(r.report, options.trace);
        return r;
    }
    return run_command(s, verb, options);
}

namespace {

std::string scalar_text(const json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_value(std::ostringstream& out, const std::string& key, const json& v, int indent, bool trace)
{
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (key == "steps" && !trace) {
        out << pad << "steps: " << v.size() << "\n";
        return;
    }
    if (v.is_object()) {
        out << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) render_value(out, it.key(), it.value(), indent + 1, trace);
        return;
    }
    if (v.is_array() && !v.empty() && v.front().is_object()) {
        out << pad << key << ":\n";
        for (const auto& item : v) {
            out << pad << "  -";
            bool first = true;
            for (auto it = item.begin(); it != item.end(); ++it) {
                if (it.value().is_object() || (it.value().is_array() && !it.value().empty() && it.value().front().is_array())) {
                    out << (first ? " " : ", ") << it.key() << "=" << it.value().dump();
                } else {
                    out << (first ? " " : ", ") << it.key() << "=" << scalar_text(it.value());
                }
                first = false;
            }
            out << "\n";
        }
        return;
    }
    out << pad << key << ": " << scalar_text(v) << "\n";
}

}  // namespace

std::string render_text(const json& report, bool trace)
{
    std::ostringstream out;
    out << "command: " << report.value("command", "") << "\n";
    if (report.value("status", "") == "error") {
        out << "error: " << report["error"]["kind"].get<std::string>() << ": "
            << report["error"]["message"].get<std::string>() << "\n";
    } else if (report.contains("result")) {
        for (auto it = report["result"].begin(); it != report["result"].end(); ++it)
            render_value(out, it.key(), it.value(), 0, trace);
    }
    if (report.contains("ledger"))
        for (const auto& e : report["ledger"]) {
            out << "[" << e["status"].get<std::string>() << "] " << e["name"].get<std::string>();
            if (!e["detail"].get<std::string>().empty()) out << ": " << e["detail"].get<std::string>();
            out << "\n";
        }
    if (report.contains("self_check")) {
        const auto& sc = report["self_check"];
        out << "self_check: " << (sc["passed"].get<bool>() ? "passed" : "FAILED") << " (" << sc["samples"].dump()
            << " samples, seed " << sc["seed"].dump() << ")\n";
    }
    return out.str();
}

}  // namespace laurent

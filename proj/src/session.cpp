#include "laurent/session.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>
#include <sstream>

#include "laurent/error.hpp"

namespace laurent {

namespace {

std::string error_body(const Error& e)
{
    std::string what = e.what();
    std::string prefix = std::string(e.name()) + ": ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

// Cursor over one source line; columns are 1-based.
class Cursor {
public:
    Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

    [[noreturn]] void error(const std::string& msg, std::size_t at) const
    {
        fail(ErrorKind::ParseError, "line " + std::to_string(line_) + ", column " + std::to_string(at + 1) + ": " + msg);
    }
    [[noreturn]] void error(const std::string& msg) const { error(msg, pos_); }

    std::size_t line() const noexcept { return line_; }
    std::size_t pos() const noexcept { return pos_; }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end()
    {
        skip_space();
        return pos_ >= text_.size();
    }

    bool peek(char c)
    {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c)
    {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }

    bool accept_arrow()
    {
        skip_space();
        if (text_.substr(pos_, 2) == "->") {
            pos_ += 2;
            return true;
        }
        return false;
    }

    std::string identifier()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
            ++pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_) error("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept_word(std::string_view w)
    {
        skip_space();
        std::size_t save = pos_;
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::string id = identifier();
            if (id == w) return true;
        }
        pos_ = save;
        return false;
    }

    void expect_word(std::string_view w)
    {
        if (!accept_word(w)) error("expected '" + std::string(w) + "'");
    }

    // A whitespace-delimited token such as a domain tag.
    std::string token()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) error("unexpected end of line");
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer integer()
    {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) error("expected an integer", start);
        std::string s(text_.substr(start, pos_ - start));
        if (s[0] == '+') s.erase(0, 1);
        return Integer(s);
    }

    Rational rational()
    {
        skip_space();
        std::size_t start = pos_;
        Integer num = integer();
        Integer den = 1;
        if (accept('/')) den = integer();
        if (den == 0) error("zero denominator", start);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    IntVector int_list()
    {
        expect('[');
        IntVector out;
        if (accept(']')) return out;
        do out.push_back(integer());
        while (accept(','));
        expect(']');
        return out;
    }

    std::vector<Rational> rational_list()
    {
        expect('[');
        std::vector<Rational> out;
        if (accept(']')) return out;
        do out.push_back(rational());
        while (accept(','));
        expect(']');
        return out;
    }

    std::vector<std::string> name_list()
    {
        std::vector<std::string> out{identifier()};
        while (accept(',')) out.push_back(identifier());
        return out;
    }

    // Rest of the line, with its starting offset.
    std::pair<std::string, std::size_t> rest()
    {
        skip_space();
        std::size_t start = pos_;
        pos_ = text_.size();
        return {std::string(text_.substr(start)), start};
    }

    void expect_end()
    {
        if (!at_end()) error("unexpected trailing text");
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

// Parse a polynomial located at `offset` in a line, mapping column errors.
LaurentPoly parse_at(const Cursor& cur, const std::string& text, std::size_t offset,
                     const std::vector<std::string>& names, const Domain& domain)
{
    try {
        return parse_poly(text, names, domain);
    } catch (const Error& e) {
        static const std::regex col(R"(column (\d+): (.*))");
        std::string body = error_body(e);
        std::smatch m;
        if (e.kind() == ErrorKind::ParseError && std::regex_match(body, m, col))
            cur.error(m[2].str(), offset + std::stoul(m[1].str()) - 1);
        cur.error(std::string(e.name()) + ": " + body, offset);
    }
}

// Split a comma-separated list at depth 0 with offsets.
std::vector<std::pair<std::string, std::size_t>> split_top(const std::string& s, std::size_t offset)
{
    std::vector<std::pair<std::string, std::size_t>> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || (s[i] == ',' && depth == 0)) {
            std::size_t a = start, b = i;
            while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
            while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
            out.emplace_back(s.substr(a, b - a), offset + a);
            start = i + 1;
        } else if (s[i] == '(' || s[i] == '[') {
            ++depth;
        } else if (s[i] == ')' || s[i] == ']') {
            --depth;
        }
    }
    return out;
}

struct PendingRing {
    std::string name;
    Domain domain;
    std::size_t line = 0;
    std::vector<std::string> vars;
    std::vector<std::pair<std::string, std::string>> units;
    std::vector<std::string> base;
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> relations;  // text, line, column offset
    AssertedFlags flags;
};

struct PendingHom {
    HomDecl decl;
    std::size_t line = 0;
    std::vector<std::string> source_names, target_names;
    std::vector<std::optional<LaurentPoly>> images, inverse;
    bool any_inverse = false;
};

class SessionParser {
public:
    Session run(std::string_view text)
    {
        std::size_t lineno = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string line(text.substr(start, end - start));
            ++lineno;
            if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            if (!line.empty() && line.back() == '\r') line.pop_back();
            Cursor cur(line, lineno);
            if (!cur.at_end()) statement(cur);
            if (end == text.size()) break;
            start = end + 1;
        }
        close_ring();
        for (auto& h : homs_) finish_hom(h);
        return std::move(s_);
    }

private:
    void statement(Cursor& cur)
    {
        std::size_t kw_at = (cur.skip_space(), cur.pos());
        std::string kw = cur.identifier();
        if (ring_ && (kw == "vars" || kw == "units" || kw == "relations" || kw == "asserts")) return ring_line(kw, cur);
        if (kw == "base") {
            Cursor probe = cur;
            std::string target = probe.identifier();
            if (probe.accept_word("gens")) return base_line(target, probe);
            if (ring_) return ring_line(kw, cur);
            cur.error("'base' outside a ring block needs 'base <subalgebra> gens ...'", kw_at);
        }
        close_ring();
        if (kw == "ring") return ring_open(cur);
        if (kw == "torus") return torus_line(cur);
        if (kw == "subalgebra") return subalgebra_line(cur);
        if (kw == "grading") return grading_line(cur);
        if (kw == "element") return element_line(cur);
        if (kw == "auto") return auto_line(cur);
        if (kw == "hom") return hom_line(cur);
        if (kw == "image" || kw == "inverse") return image_line(kw == "inverse", cur);
        if (kw == "command") return command_line(cur);
        cur.error("unknown statement '" + kw + "'", kw_at);
    }

    void check_fresh(const Cursor& cur, const std::string& name, std::size_t at)
    {
        if (s_.names_of(name) || s_.grading(name) || s_.element(name) || s_.automorphism(name) || s_.hom(name) ||
            (ring_ && ring_->name == name))
            cur.error("'" + name + "' is already defined", at);
    }

    Domain domain(Cursor& cur)
    {
        cur.skip_space();
        std::size_t at = cur.pos();
        std::string tag = cur.token();
        try {
            return Domain::parse(tag);
        } catch (const Error& e) {
            cur.error(error_body(e), at);
        }
    }

    template <class F>
    auto guarded(const Cursor& cur, std::size_t at, F&& f) -> decltype(f())
    {
        try {
            return f();
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError) throw;
            cur.error(std::string(e.name()) + ": " + error_body(e), at);
        }
    }

    // ring blocks

    void ring_open(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        cur.expect_word("over");
        PendingRing r;
        r.name = name;
        r.domain = domain(cur);
        r.line = cur.line();
        cur.expect_end();
        ring_ = std::move(r);
    }

    void ring_line(const std::string& kw, Cursor& cur)
    {
        if (kw == "vars") {
            for (auto& v : cur.name_list()) ring_->vars.push_back(v);
        } else if (kw == "units") {
            do {
                std::string a = cur.identifier();
                cur.expect(':');
                std::string b = cur.identifier();
                ring_->units.emplace_back(a, b);
            } while (cur.accept(','));
        } else if (kw == "base") {
            for (auto& v : cur.name_list()) ring_->base.push_back(v);
        } else if (kw == "relations") {
            auto [text, off] = cur.rest();
            for (auto& [piece, at] : split_top(text, off)) {
                if (piece.empty()) cur.error("empty relation", at);
                ring_->relations.emplace_back(piece, cur.line(), at);
            }
            return;
        } else if (kw == "asserts") {
            do {
                std::size_t at = (cur.skip_space(), cur.pos());
                std::string flag = cur.identifier();
                if (flag == "base_alg_closed") {
                    ring_->flags.base_algebraically_closed = true;
                } else if (flag == "trdeg") {
                    cur.expect('=');
                    Integer t = cur.integer();
                    if (t < 0) cur.error("negative transcendence degree", at);
                    ring_->flags.transcendence_degree = static_cast<unsigned>(to_ulong_checked(t));
                } else {
                    cur.error("unknown assertion '" + flag + "'", at);
                }
            } while (cur.accept(','));
        }
        cur.expect_end();
    }

    void close_ring()
    {
        if (!ring_) return;
        PendingRing r = std::move(*ring_);
        ring_.reset();
        Cursor cur("", r.line);
        if (r.vars.empty()) cur.error("ring '" + r.name + "' declares no vars", 0);
        auto index = [&](const std::string& n) {
            auto it = std::find(r.vars.begin(), r.vars.end(), n);
            if (it == r.vars.end()) cur.error("unknown generator '" + n + "' in ring '" + r.name + "'", 0);
            return static_cast<std::size_t>(it - r.vars.begin());
        };
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (auto& [a, b] : r.units) pairs.emplace_back(index(a), index(b));
        std::vector<std::size_t> base;
        for (auto& b : r.base) base.push_back(index(b));
        std::vector<LaurentPoly> rels;
        for (auto& [text, line, off] : r.relations) {
            rels.push_back(parse_at(Cursor("", line), text, off, r.vars, r.domain));
        }
        AlgebraPresentation P = guarded(cur, 0, [&] {
            return AlgebraPresentation(r.domain, r.vars, pairs, rels, base, r.flags);
        });
        s_.rings.push_back({r.name, std::move(P)});
    }

    // monomial model

    void torus_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        cur.expect_word("rank");
        std::size_t rat = (cur.skip_space(), cur.pos());
        Integer n = cur.integer();
        if (n < 0) cur.error("negative rank", rat);
        cur.expect_word("over");
        Domain d = domain(cur);
        std::vector<std::string> vars;
        if (cur.accept_word("vars")) {
            std::size_t vat = (cur.skip_space(), cur.pos());
            vars = cur.name_list();
            if (vars.size() != to_ulong_checked(n)) cur.error("expected " + n.get_str() + " variable names", vat);
        } else {
            vars = default_names(to_ulong_checked(n), "t");
        }
        cur.expect_end();
        s_.tori.push_back({name, d, vars});
    }

    std::vector<MonomialGenerator> monomial_gens(Cursor& cur, std::size_t rank)
    {
        std::vector<MonomialGenerator> out;
        do {
            MonomialGenerator g;
            g.name = cur.identifier();
            cur.expect('=');
            std::size_t at = (cur.skip_space(), cur.pos());
            g.exponent = cur.int_list();
            if (g.exponent.size() != rank)
                cur.error("exponent has " + std::to_string(g.exponent.size()) + " entries, torus rank is " +
                              std::to_string(rank),
                          at);
            g.coefficient = 1;
            if (cur.accept('*')) g.coefficient = cur.rational();
            g.unit = cur.accept_word("unit");
            out.push_back(std::move(g));
        } while (cur.accept(','));
        return out;
    }

    void subalgebra_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        std::string torus;
        if (cur.accept_word("of")) {
            std::size_t tat = (cur.skip_space(), cur.pos());
            torus = cur.identifier();
            if (!s_.torus(torus)) cur.error("unknown torus '" + torus + "'", tat);
        } else {
            if (s_.tori.empty()) cur.error("no torus declared before subalgebra '" + name + "'", at);
            torus = s_.tori.back().name;
        }
        const TorusDecl& T = *s_.torus(torus);
        cur.expect_word("gens");
        std::size_t gat = (cur.skip_space(), cur.pos());
        auto gens = monomial_gens(cur, T.vars.size());
        cur.expect_end();
        MonomialSubalgebra A = guarded(cur, gat, [&] { return MonomialSubalgebra(T.domain, T.vars, gens); });
        s_.subalgebras.push_back({name, torus, std::move(A)});
    }

    void base_line(const std::string& target, Cursor& cur)
    {
        auto it = std::find_if(s_.subalgebras.begin(), s_.subalgebras.end(),
                               [&](const SubalgebraDecl& d) { return d.name == target; });
        if (it == s_.subalgebras.end()) cur.error("unknown subalgebra '" + target + "'", 0);
        std::size_t gat = (cur.skip_space(), cur.pos());
        auto base = monomial_gens(cur, it->algebra.ambient_rank());
        cur.expect_end();
        std::vector<MonomialGenerator> all = it->algebra.base();
        all.insert(all.end(), base.begin(), base.end());
        const MonomialSubalgebra& A = it->algebra;
        it->algebra = guarded(cur, gat, [&] {
            return MonomialSubalgebra(A.domain(), A.ambient_names(), A.generators(), all);
        });
    }

    void grading_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        cur.expect('=');
        IntVector w = cur.int_list();
        cur.expect_end();
        s_.gradings.push_back({name, w});
    }

    void element_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        cur.expect_word("in");
        std::size_t rat = (cur.skip_space(), cur.pos());
        std::string ring = cur.identifier();
        auto names = s_.names_of(ring);
        if (!names) cur.error("unknown ring '" + ring + "'", rat);
        cur.expect('=');
        auto [text, off] = cur.rest();
        if (text.empty()) cur.error("missing expression", off);
        LaurentPoly p = parse_at(cur, text, off, *names, domain_of(ring));
        s_.elements.push_back({name, ring, std::move(p)});
    }

    Domain domain_of(const std::string& object) const
    {
        if (auto r = s_.ring(object)) return r->algebra.domain();
        if (auto t = s_.torus(object)) return t->domain;
        return s_.subalgebra(object)->algebra.domain();
    }

    void auto_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        check_fresh(cur, name, at);
        cur.expect_word("rank");
        Integer n = cur.integer();
        cur.expect_word("over");
        Domain d = domain(cur);
        cur.expect_word("matrix");
        std::size_t mat = (cur.skip_space(), cur.pos());
        std::vector<IntVector> rows;
        cur.expect('[');
        if (!cur.accept(']')) {
            do rows.push_back(cur.int_list());
            while (cur.accept(','));
            cur.expect(']');
        }
        const std::size_t r = to_ulong_checked(n);
        if (rows.size() != r) cur.error("matrix must have " + n.get_str() + " rows", mat);
        for (auto& row : rows)
            if (row.size() != r) cur.error("matrix must be " + n.get_str() + "x" + n.get_str(), mat);
        cur.expect_word("scalars");
        std::size_t sat = (cur.skip_space(), cur.pos());
        auto scalars = cur.rational_list();
        if (scalars.size() != r) cur.error("expected " + n.get_str() + " scalars", sat);
        cur.expect_end();
        MonomialAutomorphism m =
            guarded(cur, mat, [&] { return MonomialAutomorphism(IntMatrix::from_rows(rows, r), scalars, d); });
        s_.autos.push_back({name, std::move(m)});
    }

    void hom_line(Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        PendingHom h;
        h.line = cur.line();
        h.decl.name = cur.identifier();
        check_fresh(cur, h.decl.name, at);
        for (auto& p : homs_)
            if (p.decl.name == h.decl.name) cur.error("'" + h.decl.name + "' is already defined", at);
        cur.expect_word("from");
        std::size_t fat = (cur.skip_space(), cur.pos());
        h.decl.from = cur.identifier();
        cur.expect_word("to");
        std::size_t tat = (cur.skip_space(), cur.pos());
        h.decl.to = cur.identifier();
        for (auto [obj, oat] : {std::pair{h.decl.from, fat}, std::pair{h.decl.to, tat}})
            if (!s_.subalgebra(obj) && !s_.ring(obj)) cur.error("'" + obj + "' is not a ring or subalgebra", oat);
        if (cur.accept_word("adjoin")) {
            h.decl.source_vars = cur.name_list();
            if (!cur.accept_arrow()) cur.error("expected '->'");
            std::size_t vat = (cur.skip_space(), cur.pos());
            h.decl.target_vars = cur.name_list();
            if (h.decl.target_vars.size() != h.decl.source_vars.size())
                cur.error("both sides must adjoin the same number of variables", vat);
        }
        cur.expect_end();
        h.source_names = *s_.names_of(h.decl.from);
        h.target_names = *s_.names_of(h.decl.to);
        h.source_names.insert(h.source_names.end(), h.decl.source_vars.begin(), h.decl.source_vars.end());
        h.target_names.insert(h.target_names.end(), h.decl.target_vars.begin(), h.decl.target_vars.end());
        h.images.resize(h.source_names.size());
        h.inverse.resize(h.target_names.size());
        homs_.push_back(std::move(h));
    }

    void image_line(bool inverse, Cursor& cur)
    {
        std::size_t at = (cur.skip_space(), cur.pos());
        std::string name = cur.identifier();
        auto it = std::find_if(homs_.begin(), homs_.end(), [&](const PendingHom& h) { return h.decl.name == name; });
        if (it == homs_.end()) cur.error("unknown hom '" + name + "'", at);
        PendingHom& h = *it;
        const auto& from = inverse ? h.target_names : h.source_names;
        const auto& to = inverse ? h.source_names : h.target_names;
        const std::string& to_obj = inverse ? h.decl.from : h.decl.to;
        std::size_t vat = (cur.skip_space(), cur.pos());
        std::string var = cur.identifier();
        auto pos = std::find(from.begin(), from.end(), var);
        if (pos == from.end()) cur.error("'" + var + "' is not a variable of the " + (inverse ? "target" : "source"), vat);
        auto& slot = (inverse ? h.inverse : h.images)[static_cast<std::size_t>(pos - from.begin())];
        if (slot) cur.error("image of '" + var + "' given twice", vat);
        cur.expect('=');
        auto [text, off] = cur.rest();
        if (text.empty()) cur.error("missing expression", off);
        slot = parse_at(cur, text, off, to, domain_of(to_obj));
        if (inverse) h.any_inverse = true;
    }

    void finish_hom(PendingHom& h)
    {
        Cursor cur("", h.line);
        fill_partners(cur, h.decl.from, h.images);
        if (h.any_inverse) fill_partners(cur, h.decl.to, h.inverse);
        for (std::size_t i = 0; i < h.images.size(); ++i) {
            if (!h.images[i]) cur.error("hom '" + h.decl.name + "' has no image for '" + h.source_names[i] + "'", 0);
            h.decl.images.push_back(*h.images[i]);
        }
        if (h.any_inverse) {
            std::vector<LaurentPoly> inv;
            for (std::size_t i = 0; i < h.inverse.size(); ++i) {
                if (!h.inverse[i])
                    cur.error("hom '" + h.decl.name + "' has no inverse image for '" + h.target_names[i] + "'", 0);
                inv.push_back(*h.inverse[i]);
            }
            h.decl.inverse = std::move(inv);
        }
        guarded(cur, 0, [&] { return s_.build_hom(h.decl); });
        s_.homs.push_back(std::move(h.decl));
    }

    // The image of a declared inverse partner defaults to the inverse image.
    void fill_partners(const Cursor& cur, const std::string& obj, std::vector<std::optional<LaurentPoly>>& slots)
    {
        const RingDecl* r = s_.ring(obj);
        if (!r) return;
        for (auto [a, b] : r->algebra.inverse_pairs()) {
            if (slots[b] || !slots[a]) continue;
            slots[b] = guarded(cur, 0, [&] { return invert_unit_poly(*slots[a]); });
        }
    }

    void command_line(Cursor& cur)
    {
        CommandDecl c;
        c.verb = cur.token();
        while (!cur.at_end()) c.args.push_back(cur.token());
        s_.commands.push_back(std::move(c));
    }

    Session s_;
    std::optional<PendingRing> ring_;
    std::vector<PendingHom> homs_;
};

std::string join(const std::vector<std::string>& v, const char* sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
    return out;
}

std::string int_list(const IntVector& v)
{
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
    return out + "]";
}

std::string gens_text(const std::vector<MonomialGenerator>& gens)
{
    std::vector<std::string> parts;
    for (const auto& g : gens)
        parts.push_back(g.name + "=" + int_list(g.exponent) + "*" + to_string(g.coefficient) + (g.unit ? " unit" : ""));
    return join(parts);
}

}  // namespace

// ------------------------------------------------------------------ Session

template <class T>
static const T* find_named(const std::vector<T>& v, std::string_view name)
{
    for (const auto& x : v)
        if (x.name == name) return &x;
    return nullptr;
}

const RingDecl* Session::ring(std::string_view n) const { return find_named(rings, n); }
const TorusDecl* Session::torus(std::string_view n) const { return find_named(tori, n); }
const SubalgebraDecl* Session::subalgebra(std::string_view n) const { return find_named(subalgebras, n); }
const GradingDecl* Session::grading(std::string_view n) const { return find_named(gradings, n); }
const ElementDecl* Session::element(std::string_view n) const { return find_named(elements, n); }
const AutoDecl* Session::automorphism(std::string_view n) const { return find_named(autos, n); }
const HomDecl* Session::hom(std::string_view n) const { return find_named(homs, n); }

std::optional<std::vector<std::string>> Session::names_of(std::string_view object) const
{
    if (auto r = ring(object)) return r->algebra.names();
    if (auto t = torus(object)) return t->vars;
    if (auto s = subalgebra(object)) return s->algebra.ambient_names();
    return std::nullopt;
}

MonomialSubalgebra Session::monomial_model(std::string_view object) const
{
    if (auto s = subalgebra(object)) return s->algebra;
    if (auto r = ring(object)) return r->algebra.coordinate_view();
    if (auto t = torus(object)) return MonomialSubalgebra::torus(t->domain, t->vars);
    fail(ErrorKind::MalformedPresentation, "unknown algebra '" + std::string(object) + "'");
}

LaurentHom Session::build_hom(const HomDecl& h) const
{
    MonomialSubalgebra src = monomial_model(h.from), tgt = monomial_model(h.to);
    // Ring images are written in generator names; move them to coordinates.
    auto to_coords = [&](const std::string& obj, const LaurentPoly& p, std::size_t extra) {
        const RingDecl* r = ring(obj);
        if (!r) return p;
        const AlgebraPresentation& P = r->algebra;
        const std::size_t g = P.generator_count();
        auto coords = P.coordinate_generators();
        std::vector<LaurentPoly> sub;
        const std::size_t k = coords.size();
        for (std::size_t i = 0; i < g; ++i) {
            auto c = std::find(coords.begin(), coords.end(), i);
            if (c != coords.end()) {
                sub.push_back(LaurentPoly::variable(P.domain(), k + extra, static_cast<std::size_t>(c - coords.begin())));
            } else {
                std::size_t partner = *P.partner(i);
                auto pc = std::find(coords.begin(), coords.end(), partner);
                ExponentVector e = zero_vector(k + extra);
                e[static_cast<std::size_t>(pc - coords.begin())] = -1;
                sub.push_back(LaurentPoly::monomial(P.domain(), Coeff(1), e));
            }
        }
        for (std::size_t j = 0; j < extra; ++j) sub.push_back(LaurentPoly::variable(P.domain(), k + extra, k + j));
        return substitute(p, sub, k + extra, P.domain());
    };
    const std::size_t n = h.source_vars.size();
    auto source_gens = [&](const std::string& obj) -> std::vector<std::size_t> {
        const RingDecl* r = ring(obj);
        if (!r) {
            std::vector<std::size_t> all(monomial_model(obj).ambient_rank());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            return all;
        }
        return r->algebra.coordinate_generators();
    };
    std::vector<LaurentPoly> images;
    auto src_idx = source_gens(h.from);
    const std::size_t src_names = names_of(h.from)->size();
    for (std::size_t i : src_idx) images.push_back(to_coords(h.to, h.images[i], n));
    for (std::size_t j = 0; j < n; ++j) images.push_back(to_coords(h.to, h.images[src_names + j], n));
    std::optional<std::vector<LaurentPoly>> inverse;
    if (h.inverse) {
        inverse.emplace();
        auto tgt_idx = source_gens(h.to);
        const std::size_t tgt_names = names_of(h.to)->size();
        for (std::size_t i : tgt_idx) inverse->push_back(to_coords(h.from, (*h.inverse)[i], n));
        for (std::size_t j = 0; j < n; ++j) inverse->push_back(to_coords(h.from, (*h.inverse)[tgt_names + j], n));
    }
    return LaurentHom(std::move(src), std::move(tgt), h.source_vars, h.target_vars, std::move(images), std::move(inverse));
}

bool Session::empty() const
{
    return rings.empty() && tori.empty() && subalgebras.empty() && gradings.empty() && elements.empty() &&
           autos.empty() && homs.empty() && commands.empty();
}

Session parse_session(std::string_view text)
{
    return SessionParser().run(text);
}

std::string print_session(const Session& s)
{
    std::ostringstream out;
    for (const auto& r : s.rings) {
        const AlgebraPresentation& P = r.algebra;
        out << "ring " << r.name << " over " << P.domain().tag() << "\n";
        out << "vars " << join(P.names()) << "\n";
        if (!P.inverse_pairs().empty()) {
            std::vector<std::string> parts;
            for (auto [a, b] : P.inverse_pairs()) parts.push_back(P.names()[a] + ":" + P.names()[b]);
            out << "units " << join(parts) << "\n";
        }
        if (!P.base_generators().empty()) {
            std::vector<std::string> parts;
            for (auto b : P.base_generators()) parts.push_back(P.names()[b]);
            out << "base " << join(parts) << "\n";
        }
        if (!P.relations().empty()) {
            std::vector<std::string> parts;
            for (const auto& rel : P.relations()) parts.push_back(to_string(rel, P.names()));
            out << "relations " << join(parts) << "\n";
        }
        const auto& f = P.flags();
        std::vector<std::string> flags;
        if (f.base_algebraically_closed) flags.push_back("base_alg_closed");
        if (f.transcendence_degree) flags.push_back("trdeg=" + std::to_string(*f.transcendence_degree));
        if (!flags.empty()) out << "asserts " << join(flags) << "\n";
        out << "\n";
    }
    for (const auto& t : s.tori)
        out << "torus " << t.name << " rank " << t.vars.size() << " over " << t.domain.tag() << " vars "
            << join(t.vars) << "\n";
    for (const auto& a : s.subalgebras) {
        out << "subalgebra " << a.name << " of " << a.torus << " gens " << gens_text(a.algebra.generators()) << "\n";
        if (!a.algebra.base().empty()) out << "base " << a.name << " gens " << gens_text(a.algebra.base()) << "\n";
    }
    for (const auto& g : s.gradings) out << "grading " << g.name << " = " << int_list(g.weights) << "\n";
    for (const auto& a : s.autos) {
        const auto& m = a.map;
        out << "auto " << a.name << " rank " << m.rank() << " over " << m.domain().tag() << " matrix [";
        for (std::size_t i = 0; i < m.rank(); ++i) out << (i ? "," : "") << int_list(m.matrix().row(i));
        out << "] scalars [";
        for (std::size_t i = 0; i < m.rank(); ++i) out << (i ? "," : "") << to_string(m.scalars()[i]);
        out << "]\n";
    }
    for (const auto& e : s.elements)
        out << "element " << e.name << " in " << e.ring << " = " << to_string(e.value, *s.names_of(e.ring)) << "\n";
    for (const auto& h : s.homs) {
        out << "hom " << h.name << " from " << h.from << " to " << h.to;
        if (!h.source_vars.empty()) out << " adjoin " << join(h.source_vars) << " -> " << join(h.target_vars);
        out << "\n";
        auto src = *s.names_of(h.from), tgt = *s.names_of(h.to);
        src.insert(src.end(), h.source_vars.begin(), h.source_vars.end());
        tgt.insert(tgt.end(), h.target_vars.begin(), h.target_vars.end());
        for (std::size_t i = 0; i < src.size(); ++i)
            out << "image " << h.name << " " << src[i] << " = " << to_string(h.images[i], tgt) << "\n";
        if (h.inverse)
            for (std::size_t i = 0; i < tgt.size(); ++i)
                out << "inverse " << h.name << " " << tgt[i] << " = " << to_string((*h.inverse)[i], src) << "\n";
    }
    for (const auto& c : s.commands) {
        out << "command " << c.verb;
        for (const auto& a : c.args) out << " " << a;
        out << "\n";
    }
    return out.str();
}

}  // namespace laurent

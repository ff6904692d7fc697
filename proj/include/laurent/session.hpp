#pragma once

// Line-oriented session files: ring presentations, tori and monomial
// subalgebras, gradings, elements, automorphisms, Laurent homs and commands.
//
//   ring A over QQ
//   vars x, y, yinv
//   units y:yinv
//   relations x^2 - y^3 - 1
//   asserts base_alg_closed, trdeg=1
//
//   torus T rank 2 over QQ vars u, v
//   subalgebra A of T gens u=[1,0]*1 unit, v=[0,1]*1
//   base A gens r=[-1,2]*1
//   grading g = [2,1]
//   element p in T = u^2*v - 3
//   auto alpha rank 2 over QQ matrix [[1,1],[0,1]] scalars [1,1]
//   hom F from A to B adjoin y -> z
//   image F t = t
//   inverse F z = t^-1*y
//   command normalize A g
//
// '#' starts a comment. Parse failures throw ParseError with line and column.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "laurent/algebra_models.hpp"
#include "laurent/automorphism.hpp"
#include "laurent/cancellation.hpp"
#include "laurent/poly.hpp"

namespace laurent {

struct RingDecl {
    std::string name;
    AlgebraPresentation algebra;
    friend bool operator==(const RingDecl&, const RingDecl&) = default;
};

struct TorusDecl {
    std::string name;
    Domain domain;
    std::vector<std::string> vars;
    friend bool operator==(const TorusDecl&, const TorusDecl&) = default;
};

struct SubalgebraDecl {
    std::string name;
    std::string torus;
    MonomialSubalgebra algebra;
    friend bool operator==(const SubalgebraDecl&, const SubalgebraDecl&) = default;
};

struct GradingDecl {
    std::string name;
    IntVector weights;
    friend bool operator==(const GradingDecl&, const GradingDecl&) = default;
};

struct ElementDecl {
    std::string name;
    std::string ring;  // a ring, torus or subalgebra
    LaurentPoly value;
    friend bool operator==(const ElementDecl&, const ElementDecl&) = default;
};

struct AutoDecl {
    std::string name;
    MonomialAutomorphism map;
    friend bool operator==(const AutoDecl&, const AutoDecl&) = default;
};

struct HomDecl {
    std::string name;
    std::string from;  // a subalgebra or a ring (through its coordinate view)
    std::string to;
    std::vector<std::string> source_vars;
    std::vector<std::string> target_vars;
    std::vector<LaurentPoly> images;
    std::optional<std::vector<LaurentPoly>> inverse;
    friend bool operator==(const HomDecl&, const HomDecl&) = default;
};

struct CommandDecl {
    std::string verb;
    std::vector<std::string> args;
    friend bool operator==(const CommandDecl&, const CommandDecl&) = default;
};

struct Session {
    std::vector<RingDecl> rings;
    std::vector<TorusDecl> tori;
    std::vector<SubalgebraDecl> subalgebras;
    std::vector<GradingDecl> gradings;
    std::vector<ElementDecl> elements;
    std::vector<AutoDecl> autos;
    std::vector<HomDecl> homs;
    std::vector<CommandDecl> commands;

    const RingDecl* ring(std::string_view name) const;
    const TorusDecl* torus(std::string_view name) const;
    const SubalgebraDecl* subalgebra(std::string_view name) const;
    const GradingDecl* grading(std::string_view name) const;
    const ElementDecl* element(std::string_view name) const;
    const AutoDecl* automorphism(std::string_view name) const;
    const HomDecl* hom(std::string_view name) const;

    // Variable names of a ring, torus or subalgebra (nullopt if unknown).
    std::optional<std::vector<std::string>> names_of(std::string_view object) const;
    // A monomial model for a subalgebra, or the coordinate view of a ring.
    MonomialSubalgebra monomial_model(std::string_view object) const;
    LaurentHom build_hom(const HomDecl& h) const;

    bool empty() const;
    friend bool operator==(const Session&, const Session&) = default;
};

Session parse_session(std::string_view text);
std::string print_session(const Session& s);

}  // namespace laurent

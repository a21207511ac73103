#pragma once

#include "tetra/lhat.hpp"
#include "tetra/perms.hpp"
#include "tetra/report.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace tetra {

// Generator symbols of the presented algebras: the twelve edge generators
// X_{i,j} (i != j) and the three partition generators C_p.
struct XGen {
    int i, j;
    friend bool operator==(XGen a, XGen b) { return a.i == b.i && a.j == b.j; }
};

struct CGen {
    Partition22 p;
    friend bool operator==(CGen a, CGen b) { return a.p == b.p; }
};

using GenSym = std::variant<XGen, CGen>;

XGen xgen(int i, int j);  // validates i != j in {0..3}
std::vector<GenSym> all_generators();  // 12 X generators then 3 C generators
std::string gen_str(const GenSym& g);  // "X_{0,1}", "C_{01|23}"

// Formal expression over generator symbols: sums, integer multiples and
// nested brackets. Immutable tree.
class FExpr;
using FExprPtr = std::shared_ptr<const FExpr>;

class FExpr {
public:
    enum class Kind { Gen, Bracket, Sum, Scale };

    static FExprPtr gen(GenSym g);
    static FExprPtr bracket(FExprPtr a, FExprPtr b);
    static FExprPtr sum(std::vector<FExprPtr> parts);
    static FExprPtr scale(long k, FExprPtr e);
    static FExprPtr zero() { return sum({}); }

    Kind kind() const { return kind_; }
    const GenSym& generator() const { return gen_; }
    long factor() const { return factor_; }
    const std::vector<FExprPtr>& children() const { return children_; }

    // Expansion into integer combinations of bracket monomials; keys are
    // canonical monomial strings, so two expressions are formally equal
    // exactly when their maps coincide.
    std::map<std::string, long> normalized() const;

    std::string str() const;

private:
    FExpr() = default;
    Kind kind_ = Kind::Sum;
    GenSym gen_ = XGen{0, 1};
    long factor_ = 1;
    std::vector<FExprPtr> children_;
};

// One concrete instance of a defining relation, lhs = rhs.
struct RelationInstance {
    std::string id;
    FExprPtr lhs;
    FExprPtr rhs;

    // Canonical rendering of normalized(lhs - rhs), used for formal
    // relation-set comparisons.
    std::string normalized_key() const;
};

enum class PresentationId { Def11, Def34, Lemma36, Thm61 };

// The complete finite instance list of a presentation. Thm61 uses the
// composition convention fixed by thm61_relations below.
std::vector<RelationInstance> enumerate_relations(PresentationId p);

// Order in which a product of permutations is applied in the Thm61
// indexing: ApplyLeftFirst reads the product "ab" as a then b.
enum class Composition { ApplyLeftFirst, ApplyRightFirst };

std::vector<RelationInstance> thm61_relations(Composition convention);

// Generator correspondence of the A4-indexed presentation:
// X_alpha -> X_{alpha(0),alpha(1)} for alpha in A4, C_eta -> C_[eta] for
// eta in N'. Rejects odd alpha / eta outside N'.
GenSym a4_generator_map(const PermS4& alpha);
GenSym a4_central_map(const PermS4& eta);

// Images of the generators.
LElem sigma(const GenSym& g);        // Prop-2.1 style table into L; rejects CGen
LHatElem sigma_hat(const GenSym& g); // full table into L-hat

enum class BracketModel { Loop, Full };  // Loop: no cocycle term (inside L)

using Images = std::function<LHatElem(const GenSym&)>;

Images sigma_images();      // sigma with zero central part
Images sigma_hat_images();

LHatElem eval_formal(const FExpr& e, const Images& images, BracketModel model);

struct RelationCheck {
    bool pass;
    LHatElem lhs, rhs, difference;
};

RelationCheck verify_relation(const RelationInstance& inst, const Images& images,
                              BracketModel model);

// Runs a whole presentation suite under the appropriate images: Def11 under
// sigma inside L, the others under sigma-hat inside L-hat.
VerificationReport verify_presentation(PresentationId p);

// pi . sigma-hat = sigma . pi on all 15 generators.
VerificationReport verify_diagram();

struct CenterInjectivityResult {
    bool pass;
    int span_dimension;   // of {sigma_hat(C_p)} inside C
    bool sum_is_zero;
};

CenterInjectivityResult verify_center_injectivity();
VerificationReport center_injectivity_report();

struct A4PresentationResult {
    bool formal_match;           // translated set == Def34 instance set
    bool members_of_union;       // every translated instance is a Def34 or Lemma36 instance
    bool evaluations_pass;       // all translated instances hold under sigma-hat
    Composition convention;      // the convention under which the match succeeded
    bool retried_convention;     // true when the first convention failed formally
    VerificationReport report;
};

// Translates the Thm61 relations through the generator correspondence,
// matches them formally against the Def34 instance set (retrying under the
// opposite composition convention if needed) and verifies every translated
// instance under sigma-hat.
A4PresentationResult verify_a4_presentation();

}  // namespace tetra

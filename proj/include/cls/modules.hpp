#ifndef CLS_MODULES_HPP
#define CLS_MODULES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cls/algebra.hpp"
#include "cls/module_element.hpp"
#include "cls/poly.hpp"

namespace cls {

struct GradeWindow {
    int lo = 0;
    int hi = 0;
    bool contains(int i) const { return lo <= i && i <= hi; }
    int size() const { return hi - lo + 1; }
    friend bool operator==(const GradeWindow&, const GradeWindow&) = default;
};

/// Bit assignment a_i over a finite grade window. Queries outside the window
/// are errors, never defaults.
class Pattern {
public:
    Pattern(int lo, std::vector<int> bits);
    static Pattern parse(const std::string& bits, int lo);  // "0110"

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(bits_.size()) - 1; }
    GradeWindow window() const { return {lo(), hi()}; }
    int bit(int i) const;
    bool constant() const;
    std::string bits_str() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    int lo_;
    std::vector<int> bits_;
};

/// The eight module families:
///   M, Mprime       free rank-two (loop-scaled by c^i)
///   Mg, Mgprime     free Z-graded rank-two, uniform action polynomials
///   MA, MAprime     free Z-graded rank-two, pattern-dependent actions
///   V, VA           rank-one modules over the even (L-only) subalgebra
enum class Family { M, Mprime, Mg, Mgprime, MA, MAprime, V, VA };

std::string family_name(Family f);
Family family_from_name(const std::string& name);
bool family_graded(Family f);
bool family_patterned(Family f);
int family_rank(Family f);

struct FamilyTag {
    Family family;
    Poly a;  // rational constant or the symbol a
    Poly b;
    std::optional<Poly> c;  // ungraded families; nonzero rational or the symbol c
    std::optional<Pattern> pattern;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
    std::string str() const;
};

FamilyTag tag_ungraded(Family f, const Poly& a, const Poly& b, const Poly& c);
FamilyTag tag_graded(Family f, const Poly& a, const Poly& b);
FamilyTag tag_pattern(Family f, const Poly& b, const Pattern& p);

/// A module family instance: its action table plus the defining tag.
/// Immutable; all operations return new values.
class ModuleSpec {
public:
    /// Builds the action table for the tag. Throws MissingPattern or
    /// ZeroParameterC on malformed tags.
    static ModuleSpec make(const FamilyTag& tag);

    const FamilyTag& tag() const { return tag_; }
    int rank() const { return rank_; }
    bool graded() const { return graded_; }
    const std::optional<Pattern>& pattern() const { return tag_.pattern; }
    /// True when a, b or c is a formal parameter rather than a rational.
    bool symbolic_params() const;

    /// Action polynomial of generator kind k, grade i, on basis kind w at
    /// basis grade j (j ignored for ungraded families). Includes the c^i
    /// loop factor for ungraded families.
    Poly entry(GenKind k, int i, BasisKind w, int j = 0) const;
    BasisKind target_kind(GenKind k, BasisKind w) const;

    /// Sesquilinear action: coefficients f(d) of v become f(d+lam); the
    /// bracket variable of the table is instantiated at lam.
    LambdaModuleElement act(GenId g, const ModuleElement& v, const Poly& lam) const;
    LambdaModuleElement act(GenId g, const LambdaModuleElement& v, const Poly& lam) const;

    /// Replaces one case polynomial of one table rule (negative controls).
    ModuleSpec with_mutation(GenKind k, BasisKind w, int case_index, const Poly& replacement) const;
    /// Basis change y -> gamma * y.
    ModuleSpec rescale_odd(const Rational& gamma) const;

    struct Rule {
        bool patterned = false;
        std::array<Poly, 4> cases;  // index 2*bit(j) + bit(i+j); uniform rules use cases[0]
    };
    const Rule& rule(GenKind k, BasisKind w) const;

private:
    ModuleSpec() = default;
    Rule& rule_mut(GenKind k, BasisKind w);
    Poly case_poly(const Rule& r, int i, int j) const;
    friend ModuleSpec restrict_to_clv(const ModuleSpec& spec, Parity part);

    FamilyTag tag_;
    bool graded_ = false;
    int rank_ = 2;
    std::array<Rule, 4> rules_;
};

/// Extensional table equality on a window (generator grades chosen so that
/// all involved grades stay inside the window for graded specs).
bool tables_equal(const ModuleSpec& s1, const ModuleSpec& s2, GradeWindow window);

struct CheckItem {
    std::string id;
    bool ok;
    std::string witness;  // canonical print of the first nonzero residual
};

struct AxiomReport {
    std::vector<CheckItem> items;
    int checked = 0;
    int failed = 0;
    int skipped = 0;
    bool all_ok() const { return failed == 0; }
    const CheckItem* first_failure() const;
};

/// Residuals of [a_u b]_{u+v} w = a_u (b_v w) - (-1)^{|a||b|} b_v (a_u w)
/// over all generator pairs with grades in gen_window and all basis vectors.
/// For graded families, combinations whose intermediate grades leave the
/// basis window (the pattern window when present, else gen_window) are
/// counted as skipped.
AxiomReport check_module_axioms(const ModuleSpec& spec, GradeWindow gen_window);

/// The L-only action on the chosen parity part, as a rank-one module spec.
ModuleSpec restrict_to_clv(const ModuleSpec& spec, Parity part);

/// Reads the family tag back off a rank-two action table, normalizing away
/// one odd-basis rescaling. Throws NoMatch when the table is not one of the
/// classified families.
FamilyTag classify_rank2(const ModuleSpec& table);

/// Same for rank-one tables over the even subalgebra (V or VA).
FamilyTag classify_clv(const ModuleSpec& table, GradeWindow window);

}  // namespace cls

#endif

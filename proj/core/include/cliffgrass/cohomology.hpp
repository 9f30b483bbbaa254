#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cliffgrass/rational.hpp"

namespace cliffgrass::cohomology {

struct Generator {
    std::string name;
    unsigned degree = 0;
};

/// Exponent vector aligned with a presentation's generator list.
using Exponents = std::vector<unsigned>;

/// Sparse polynomial in the generators of a presentation.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    static GradedPolynomial monomial(Exponents e, Rational c = Rational(1));

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exponents e, const Rational& c);

    GradedPolynomial& operator+=(const GradedPolynomial& o);
    GradedPolynomial& operator-=(const GradedPolynomial& o);
    friend GradedPolynomial operator+(GradedPolynomial a, const GradedPolynomial& b) {
        return a += b;
    }
    friend GradedPolynomial operator-(GradedPolynomial a, const GradedPolynomial& b) {
        return a -= b;
    }
    friend GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b);
    friend bool operator==(const GradedPolynomial& a, const GradedPolynomial& b) = default;

private:
    std::map<Exponents, Rational> terms_;
};

/// Weighted-degree polynomial generators plus homogeneous relations.
struct GradedRingPresentation {
    std::vector<Generator> generators;
    std::vector<GradedPolynomial> relations;

    std::size_t generator_index(const std::string& name) const;
    unsigned monomial_degree(const Exponents& e) const;
    /// Degree of each relation; throws ValidationError on an inhomogeneous
    /// or empty relation.
    std::vector<unsigned> relation_degrees() const;
};

/// Integer coefficients by degree, finitely supported, zeros not stored.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    PoincarePolynomial(std::initializer_list<std::pair<const unsigned, long long>> init);

    long long coefficient(unsigned d) const;
    void set_coefficient(unsigned d, long long v);
    const std::map<unsigned, long long>& coefficients() const { return c_; }

    unsigned max_degree() const { return c_.empty() ? 0 : c_.rbegin()->first; }
    long long evaluate_at_one() const;
    /// Equality of all coefficients at degrees <= bound.
    bool matches_through(const PoincarePolynomial& o, unsigned bound) const;

    friend bool operator==(const PoincarePolynomial& a, const PoincarePolynomial& b) = default;

    /// Human readable "1 + t^2 + 2t^8 + ..." form.
    std::string str() const;

private:
    std::map<unsigned, long long> c_;
};

/// Monomials of the given weighted degree, in lexicographic exponent order.
std::vector<Exponents> monomials_of_degree(const GradedRingPresentation& p, unsigned degree);

/// The degree-d slice of the presentation: its monomial basis and a spanning
/// set of the ideal slice (relation times monomial products) as coefficient
/// rows over that basis.
struct DegreeSlice {
    std::vector<Exponents> monomials;
    std::vector<std::vector<Rational>> ideal_rows;
};

DegreeSlice degree_slice(const GradedRingPresentation& p, unsigned degree);

/// Coefficient row of a polynomial whose terms all have the slice's degree.
std::vector<Rational> polynomial_row(const DegreeSlice& slice, const GradedPolynomial& poly);

/// Graded dimensions of the quotient ring through max_degree, by exact
/// elimination on each degree slice.
PoincarePolynomial hilbert_series(const GradedRingPresentation& p, unsigned max_degree);

/// The q-binomial coefficient [n choose k]_q as a polynomial in t with
/// q = t^weight. weight must be even and 0 <= k <= n.
PoincarePolynomial gaussian_binomial(unsigned n, unsigned k, unsigned weight);

/// Degree-preserving substitution g -> sign * g' with involutive image map.
struct RingInvolution {
    std::map<std::string, std::pair<std::string, int>> images;

    static RingInvolution identity(const GradedRingPresentation& p);
};

/// Image of a polynomial under the substitution.
GradedPolynomial apply_involution(const GradedRingPresentation& p, const RingInvolution& inv,
                                  const GradedPolynomial& poly);

/// Per-degree dimension of the +1 (sign = +1) or -1 (sign = -1) eigenspace
/// of the induced involution on the quotient's graded pieces. Validates that
/// the involution preserves the relation ideal degree by degree.
PoincarePolynomial involution_eigenspace_series(const GradedRingPresentation& p,
                                                const RingInvolution& inv, unsigned max_degree,
                                                int sign);

PoincarePolynomial involution_invariant_series(const GradedRingPresentation& p,
                                               const RingInvolution& inv, unsigned max_degree);

/// Completes the series by Poincare duality around full_dimension and
/// evaluates at t = 1. Coefficients beyond half dimension that contradict
/// the mirrored ones raise DualityError.
long long euler_characteristic(const PoincarePolynomial& p, unsigned full_dimension);

enum class SpaceId {
    gr8r10,
    gr4c6,
    gr2h4,
    gr8r12,
    gr8r16,
    gr8r16_variant,
    gr8perp_r16,
};

const std::string& space_name(SpaceId id);
SpaceId space_from_name(const std::string& name);
std::vector<std::string> space_names();

/// Built-in description of one of the published spaces: either a
/// presentation (possibly a literal and a variant form) or the parameters of
/// the Gaussian binomial oracle, plus the published series used to decide
/// which presentation reproduces it.
struct BuiltinSpace {
    SpaceId id;
    unsigned full_dimension = 0;
    std::optional<std::array<unsigned, 3>> oracle;  // (n, k, weight)
    std::vector<std::pair<std::string, GradedRingPresentation>> presentations;
    std::optional<RingInvolution> involution;
    PoincarePolynomial reference_series;
    unsigned reference_degree = 0;
};

BuiltinSpace builtin_presentation(SpaceId id);

struct SpaceComputation {
    SpaceId id;
    PoincarePolynomial series;
    std::optional<long long> euler;  // set when max_degree reaches half dimension
    std::string presentation_used;   // "literal", "variant" or "oracle"
    bool matches_reference = false;
};

/// Computes the series for a built-in space. For gr8r16 both presentations
/// are tried and the one reproducing the published polynomial is reported;
/// gr8perp_r16 computes the invariant series on that same presentation.
SpaceComputation compute_space(SpaceId id, unsigned max_degree);

}  // namespace cliffgrass::cohomology

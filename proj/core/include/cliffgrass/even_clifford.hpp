#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cliffgrass/matrix.hpp"
#include "cliffgrass/rational.hpp"

namespace cliffgrass::clifford {

/// Which of the three tangent models an element acts on. rank8 and rank6
/// share the 16-dimensional block (pairs of octonions, the rank6 case seen
/// through its realified complex coordinates); rank5 blocks are pairs of
/// quaternions.
enum class StructureKind { rank8, rank6, rank5 };

std::size_t rank_of(StructureKind kind);         // 8, 6, 5
std::size_t block_dimension(StructureKind kind); // 16, 16, 8
const std::string& kind_name(StructureKind kind);
StructureKind kind_from_name(const std::string& name);

/// Generator subsets are bitmasks: bit s-1 set means generator e_s is
/// present (generators are numbered 1..rank).
using Subset = std::uint16_t;

/// All even-cardinality subsets of {1..rank} ordered by cardinality, then
/// lexicographically on the sorted index tuples. Count is 2^(rank-1).
std::vector<Subset> even_basis(std::size_t rank);

/// 1-based generator indices of a subset, ascending.
std::vector<std::size_t> subset_indices(Subset s);
Subset subset_from_indices(const std::vector<std::size_t>& indices, std::size_t rank);
std::string subset_label(Subset s);

/// Element of the even Clifford algebra Cl0_r: a rational combination of
/// even-cardinality generator subsets. Generators satisfy e_s e_t = -e_t e_s
/// for s != t and e_s^2 = -1.
class EvenCliffordElement {
public:
    explicit EvenCliffordElement(std::size_t rank) : rank_(rank) {}

    static EvenCliffordElement unit(std::size_t rank);
    /// e_s e_t for s < t (1-based).
    static EvenCliffordElement generator_pair(std::size_t rank, std::size_t s, std::size_t t);

    std::size_t rank() const { return rank_; }
    const std::map<Subset, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * e_subset; drops the term if the sum cancels.
    void add_term(Subset subset, const Rational& coeff);

    EvenCliffordElement& operator+=(const EvenCliffordElement& o);
    EvenCliffordElement& operator-=(const EvenCliffordElement& o);
    friend EvenCliffordElement operator+(EvenCliffordElement a, const EvenCliffordElement& b) {
        return a += b;
    }
    friend EvenCliffordElement operator-(EvenCliffordElement a, const EvenCliffordElement& b) {
        return a -= b;
    }
    friend EvenCliffordElement operator*(const EvenCliffordElement& a,
                                         const EvenCliffordElement& b);
    friend EvenCliffordElement operator*(const Rational& s, const EvenCliffordElement& a);
    friend bool operator==(const EvenCliffordElement& a, const EvenCliffordElement& b) = default;

private:
    std::size_t rank_;
    std::map<Subset, Rational> terms_;
};

/// Product of two basis subsets: result subset is the symmetric difference,
/// sign from reordering transpositions and e^2 = -1 contractions.
std::pair<Subset, int> blade_product(Subset a, Subset b);

/// n blocks of model fibre vectors (16 rationals each for rank8/rank6,
/// 8 for rank5).
struct TangentModel {
    StructureKind kind = StructureKind::rank8;
    std::vector<std::vector<Rational>> blocks;

    std::size_t n() const { return blocks.size(); }
    friend bool operator==(const TangentModel& a, const TangentModel& b) = default;
};

/// Validates block count and per-block dimension.
void validate_model(const TangentModel& t);

/// The fixed matrix a generator pair e_s e_t (1-based, s < t) acts by on one
/// block: m_{u,v} for rank8/rank6, minus sigma_s sigma_t for rank5 (the sign
/// matches e^2 = -1 against the involutive sigma's).
Matrix generator_pair_matrix(StructureKind kind, std::size_t s, std::size_t t);

/// Block action of an element: product of pair matrices over consecutive
/// pairs of each subset, combined linearly.
Matrix phi_block_matrix(StructureKind kind, const EvenCliffordElement& elem);

/// The same action on the full n-block model (block diagonal extension).
Matrix phi_model_matrix(StructureKind kind, const EvenCliffordElement& elem, std::size_t n);

/// Applies the element blockwise to a tangent model.
TangentModel phi_apply(StructureKind kind, const EvenCliffordElement& elem,
                       const TangentModel& t);

/// Per generator pair: is the induced model endomorphism skew and a square
/// root of -Id? Violations are listed by pair label.
struct Lambda2Report {
    bool all_passed = true;
    std::vector<std::string> violations;
};

Lambda2Report lambda2_image_check(StructureKind kind, std::size_t n);

/// Exact check that phi is an algebra morphism: phi(e_S) phi(e_T) equals
/// phi(e_S e_T) for all even basis pairs, as matrices on the n-block model.
/// For rank8 with n = 1 also checks that the image spans 128 dimensions.
bool morphism_check(StructureKind kind, std::size_t n);

}  // namespace cliffgrass::clifford

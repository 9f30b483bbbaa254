#include "cliffgrass/even_clifford.hpp"

#include <algorithm>
#include <bit>

#include "cliffgrass/error.hpp"
#include "cliffgrass/linalg.hpp"
#include "cliffgrass/octonion.hpp"
#include "cliffgrass/spin.hpp"

namespace cliffgrass::clifford {

std::size_t rank_of(StructureKind kind) {
    switch (kind) {
        case StructureKind::rank8: return 8;
        case StructureKind::rank6: return 6;
        case StructureKind::rank5: return 5;
    }
    throw ValidationError("rank_of: unknown kind");
}

std::size_t block_dimension(StructureKind kind) {
    return kind == StructureKind::rank5 ? 8 : 16;
}

const std::string& kind_name(StructureKind kind) {
    static const std::string names[] = {"rank8", "rank6", "rank5"};
    switch (kind) {
        case StructureKind::rank8: return names[0];
        case StructureKind::rank6: return names[1];
        case StructureKind::rank5: return names[2];
    }
    throw ValidationError("kind_name: unknown kind");
}

StructureKind kind_from_name(const std::string& name) {
    if (name == "rank8") return StructureKind::rank8;
    if (name == "rank6") return StructureKind::rank6;
    if (name == "rank5") return StructureKind::rank5;
    throw ValidationError("unknown structure kind '" + name + "'");
}

std::vector<Subset> even_basis(std::size_t rank) {
    if (rank != 8 && rank != 6 && rank != 5) {
        throw ValidationError("even_basis: rank must be 8, 6 or 5");
    }
    std::vector<Subset> out;
    out.reserve(std::size_t(1) << (rank - 1));
    for (Subset s = 0; s < (Subset(1) << rank); ++s) {
        if (std::popcount(s) % 2 == 0) out.push_back(s);
    }
    std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) {
        const int pa = std::popcount(a);
        const int pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;  // ascending mask = lexicographic on sorted index tuples
    });
    return out;
}

std::vector<std::size_t> subset_indices(Subset s) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < 16; ++t) {
        if (s & (Subset(1) << t)) out.push_back(t + 1);
    }
    return out;
}

Subset subset_from_indices(const std::vector<std::size_t>& indices, std::size_t rank) {
    Subset s = 0;
    for (std::size_t idx : indices) {
        if (idx < 1 || idx > rank) throw ValidationError("subset: generator index out of range");
        const Subset bit = Subset(1) << (idx - 1);
        if (s & bit) throw ValidationError("subset: repeated generator index");
        s |= bit;
    }
    return s;
}

std::string subset_label(Subset s) {
    if (s == 0) return "1";
    std::string out;
    for (std::size_t idx : subset_indices(s)) {
        out += "e" + std::to_string(idx);
    }
    return out;
}

std::pair<Subset, int> blade_product(Subset a, Subset b) {
    // Transpositions that interleave the two ascending runs, then one minus
    // sign per contracted generator (e_s^2 = -1).
    int swaps = 0;
    Subset x = a >> 1;
    while (x) {
        swaps += std::popcount(Subset(x & b));
        x >>= 1;
    }
    int sign = (swaps % 2 == 0) ? 1 : -1;
    if (std::popcount(Subset(a & b)) % 2 == 1) sign = -sign;
    return {Subset(a ^ b), sign};
}

EvenCliffordElement EvenCliffordElement::unit(std::size_t rank) {
    EvenCliffordElement e(rank);
    e.add_term(0, 1);
    return e;
}

EvenCliffordElement EvenCliffordElement::generator_pair(std::size_t rank, std::size_t s,
                                                        std::size_t t) {
    if (s >= t || t > rank || s < 1) {
        throw ValidationError("generator_pair: need 1 <= s < t <= rank");
    }
    EvenCliffordElement e(rank);
    e.add_term(Subset((1u << (s - 1)) | (1u << (t - 1))), 1);
    return e;
}

void EvenCliffordElement::add_term(Subset subset, const Rational& coeff) {
    if (std::popcount(subset) % 2 != 0) {
        throw ValidationError("EvenCliffordElement: subsets must have even cardinality");
    }
    if (subset >= (Subset(1) << rank_)) {
        throw ValidationError("EvenCliffordElement: subset exceeds rank");
    }
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(subset, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

EvenCliffordElement& EvenCliffordElement::operator+=(const EvenCliffordElement& o) {
    if (rank_ != o.rank_) throw ValidationError("even algebra: rank mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

EvenCliffordElement& EvenCliffordElement::operator-=(const EvenCliffordElement& o) {
    if (rank_ != o.rank_) throw ValidationError("even algebra: rank mismatch");
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

EvenCliffordElement operator*(const EvenCliffordElement& a, const EvenCliffordElement& b) {
    if (a.rank_ != b.rank_) throw ValidationError("even algebra: rank mismatch");
    EvenCliffordElement out(a.rank_);
    for (const auto& [sa, ca] : a.terms_) {
        for (const auto& [sb, cb] : b.terms_) {
            const auto [s, sign] = blade_product(sa, sb);
            out.add_term(s, sign < 0 ? -(ca * cb) : ca * cb);
        }
    }
    return out;
}

EvenCliffordElement operator*(const Rational& s, const EvenCliffordElement& a) {
    EvenCliffordElement out(a.rank());
    for (const auto& [sub, c] : a.terms()) out.add_term(sub, s * c);
    return out;
}

void validate_model(const TangentModel& t) {
    const std::size_t dim = block_dimension(t.kind);
    if (t.blocks.empty()) throw ValidationError("tangent model: needs at least one block");
    for (const auto& b : t.blocks) {
        if (b.size() != dim) throw DimensionError("tangent model: block dimension mismatch");
    }
}

Matrix generator_pair_matrix(StructureKind kind, std::size_t s, std::size_t t) {
    const std::size_t rank = rank_of(kind);
    if (s < 1 || s >= t || t > rank) {
        throw ValidationError("generator_pair_matrix: need 1 <= s < t <= rank");
    }
    if (kind == StructureKind::rank5) {
        static const spin::CliffordSystem sigmas = spin::clifford_system(spin::SystemKind::spin5);
        return -(sigmas.involutions[s - 1] * sigmas.involutions[t - 1]);
    }
    return spin::build_m_uv(Octonion::basis(s - 1), Octonion::basis(t - 1));
}

namespace {

// phi on one basis subset: chunk the ascending generators into consecutive
// pairs and multiply their images. This is exactly the Clifford extension of
// the pair map because e_S = (e_{s1} e_{s2})(e_{s3} e_{s4}) ...
Matrix phi_subset_matrix(StructureKind kind, Subset s) {
    const std::size_t dim = block_dimension(kind);
    Matrix out = Matrix::identity(dim);
    const auto indices = subset_indices(s);
    for (std::size_t p = 0; p + 1 < indices.size(); p += 2) {
        out = out * generator_pair_matrix(kind, indices[p], indices[p + 1]);
    }
    return out;
}

}  // namespace

Matrix phi_block_matrix(StructureKind kind, const EvenCliffordElement& elem) {
    if (elem.rank() != rank_of(kind)) {
        throw ValidationError("phi: element rank does not match the structure kind");
    }
    const std::size_t dim = block_dimension(kind);
    Matrix out(dim, dim);
    for (const auto& [s, c] : elem.terms()) {
        out += phi_subset_matrix(kind, s).scaled(c);
    }
    return out;
}

Matrix phi_model_matrix(StructureKind kind, const EvenCliffordElement& elem, std::size_t n) {
    if (n < 1) throw ValidationError("phi: n must be at least 1");
    return Matrix::block_diagonal(phi_block_matrix(kind, elem), n);
}

TangentModel phi_apply(StructureKind kind, const EvenCliffordElement& elem,
                       const TangentModel& t) {
    if (t.kind != kind) throw ValidationError("phi_apply: structure kind mismatch");
    validate_model(t);
    const Matrix action = phi_block_matrix(kind, elem);
    TangentModel out;
    out.kind = kind;
    out.blocks.reserve(t.blocks.size());
    for (const auto& b : t.blocks) out.blocks.push_back(action.apply(b));
    return out;
}

Lambda2Report lambda2_image_check(StructureKind kind, std::size_t n) {
    if (n < 1) throw ValidationError("lambda2_image_check: n must be at least 1");
    const std::size_t rank = rank_of(kind);
    Lambda2Report report;
    for (std::size_t s = 1; s <= rank; ++s) {
        for (std::size_t t = s + 1; t <= rank; ++t) {
            const Matrix model = Matrix::block_diagonal(generator_pair_matrix(kind, s, t), n);
            const OperatorFlags flags = classify_operator(model);
            const bool squares_to_minus_id = (model * model == -Matrix::identity(model.rows()));
            if (!flags.skew || !squares_to_minus_id) {
                report.all_passed = false;
                report.violations.push_back("e" + std::to_string(s) + "e" + std::to_string(t));
            }
        }
    }
    return report;
}

bool morphism_check(StructureKind kind, std::size_t n) {
    if (n < 1) throw ValidationError("morphism_check: n must be at least 1");
    const std::size_t rank = rank_of(kind);
    const auto basis = even_basis(rank);

    std::vector<Matrix> images;
    images.reserve(basis.size());
    for (Subset s : basis) {
        EvenCliffordElement elem(rank);
        elem.add_term(s, 1);
        images.push_back(phi_model_matrix(kind, elem, n));
    }

    std::map<Subset, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

    // phi(e_S) phi(e_T) = phi(e_S e_T) for every even basis pair, as exact
    // matrices on the 16n or 8n dimensional model. Blades multiply to a
    // signed blade, so the right side is a signed basis image.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto [s, sign] = blade_product(basis[i], basis[j]);
            const Matrix& image = images[index.at(s)];
            const Matrix rhs = sign < 0 ? -image : image;
            if (images[i] * images[j] != rhs) return false;
        }
    }

    if (kind == StructureKind::rank8 && n == 1) {
        if (span_dimension(images) != 128) return false;
    }
    return true;
}

}  // namespace cliffgrass::clifford

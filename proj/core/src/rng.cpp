#include "cliffgrass/rng.hpp"

namespace cliffgrass {

long long RationalSampler::integer(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(eng_() % span);
}

Rational RationalSampler::rational() {
    return Rational(integer(-9, 9), integer(1, 9));
}

Rational RationalSampler::nonzero_rational() {
    for (;;) {
        Rational r = rational();
        if (!r.is_zero()) return r;
    }
}

Quaternion RationalSampler::quaternion() {
    return Quaternion(rational(), rational(), rational(), rational());
}

Octonion RationalSampler::octonion() {
    std::array<Rational, 8> c;
    for (auto& x : c) x = rational();
    return Octonion(std::move(c));
}

Octonion RationalSampler::nonzero_octonion() {
    for (;;) {
        Octonion o = octonion();
        if (!o.is_zero()) return o;
    }
}

Octonion RationalSampler::unit_octonion() {
    std::array<Rational, 8> c;
    c[static_cast<std::size_t>(integer(0, 7))] = 1;
    for (int step = 0; step < 12; ++step) {
        const std::size_t a = static_cast<std::size_t>(integer(0, 7));
        const std::size_t b = static_cast<std::size_t>(integer(0, 7));
        if (a == b) continue;
        const Rational t(integer(-5, 5), integer(1, 5));
        const Rational denom = Rational(1) + t * t;
        const Rational cos = (Rational(1) - t * t) / denom;
        const Rational sin = (t + t) / denom;
        const Rational xa = c[a];
        const Rational xb = c[b];
        c[a] = cos * xa - sin * xb;
        c[b] = sin * xa + cos * xb;
    }
    return Octonion(std::move(c));
}

Octonion RationalSampler::orthogonal_to(const Octonion& u) {
    const Rational uu = u.norm_sq();
    for (;;) {
        const Octonion w = octonion();
        const Octonion v = w - (inner(w, u) / uu) * u;
        if (!v.is_zero()) return v;
    }
}

clifford::EvenCliffordElement RationalSampler::even_element(std::size_t rank,
                                                            std::size_t term_count) {
    const auto basis = clifford::even_basis(rank);
    clifford::EvenCliffordElement out(rank);
    for (std::size_t k = 0; k < term_count; ++k) {
        const auto subset = basis[static_cast<std::size_t>(
            integer(0, static_cast<long long>(basis.size()) - 1))];
        out.add_term(subset, nonzero_rational());
    }
    return out;
}

}  // namespace cliffgrass

#include "cliffgrass/verify.hpp"

#include <algorithm>
#include <bit>
#include <iterator>

#include "cliffgrass/cohomology.hpp"
#include "cliffgrass/error.hpp"
#include "cliffgrass/even_clifford.hpp"
#include "cliffgrass/golden.hpp"
#include "cliffgrass/json_io.hpp"
#include "cliffgrass/linalg.hpp"
#include "cliffgrass/octonion.hpp"
#include "cliffgrass/rng.hpp"
#include "cliffgrass/spin.hpp"

namespace cliffgrass::verify {

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

std::size_t VerificationReport::failed_count() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

namespace {

using clifford::EvenCliffordElement;
using clifford::StructureKind;
using clifford::TangentModel;

class Recorder {
public:
    void record(const std::string& id, bool ok, const std::string& witness = "") {
        std::string w;
        if (!ok) {
            w = witness.empty() ? "check '" + id + "' failed; no counterexample captured" : witness;
        }
        checks_.push_back({id, ok, std::move(w), ""});
    }

    void record_with_note(const std::string& id, bool ok, const std::string& note) {
        checks_.push_back({id, ok, ok ? std::string() : note, ok ? note : std::string()});
    }

    void equals(const std::string& id, const Matrix& got, const Matrix& expected) {
        if (got == expected) {
            record(id, true);
        } else {
            io::Json w{{"expected", io::matrix_to_json(expected)},
                       {"got", io::matrix_to_json(got)}};
            record(id, false, w.dump());
        }
    }

    void equals(const std::string& id, const ComplexMatrix& got, const ComplexMatrix& expected) {
        if (got == expected) {
            record(id, true);
        } else {
            io::Json w{{"expected", io::complex_matrix_to_json(expected)},
                       {"got", io::complex_matrix_to_json(got)}};
            record(id, false, w.dump());
        }
    }

    template <class E, class F>
    void throws(const std::string& id, F&& fn) {
        try {
            fn();
            record(id, false, "expected an exception, none was thrown");
        } catch (const E&) {
            record(id, true);
        } catch (const std::exception& ex) {
            record(id, false, std::string("wrong exception type: ") + ex.what());
        }
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

std::string oct_witness(const Octonion& a) { return a.str(); }

// ---------------------------------------------------------------- octonion

void suite_octonion(Recorder& rec, RationalSampler& rng) {
    // exact_core invariants live here with the foundation checks.
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 200 && ok; ++t) {
            const Rational r = rng.nonzero_rational();
            ok = (r * r.reciprocal()).is_one() && (r + (-r)).is_zero();
            if (!ok) w = r.str();
        }
        rec.record("core.rational_field", ok, w);
    }
    {
        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 6));
            const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 6));
            Matrix m(rows, cols);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rng.rational();
            }
            const std::size_t rk = rank_exact(m);
            RowEchelon ech(cols);
            for (std::size_t r = 0; r < rows; ++r) {
                std::vector<Rational> row(cols);
                for (std::size_t c = 0; c < cols; ++c) row[c] = m.at(r, c);
                ech.insert(std::move(row));
            }
            ok = rk == rank_exact(m.transposed()) && rk == ech.dimension();
        }
        rec.record("core.rank_transpose_and_cross_route", ok);
    }
    {
        // span invariance under an invertible recombination
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            std::vector<Matrix> ms;
            for (int k = 0; k < 4; ++k) {
                Matrix m(3, 4);
                for (std::size_t r = 0; r < 3; ++r) {
                    for (std::size_t c = 0; c < 4; ++c) m.at(r, c) = rng.rational();
                }
                ms.push_back(std::move(m));
            }
            // unit upper triangular coefficients give an invertible mix
            std::vector<Matrix> mixed;
            for (std::size_t i = 0; i < ms.size(); ++i) {
                Matrix acc = ms[i];
                for (std::size_t j = i + 1; j < ms.size(); ++j) {
                    acc += ms[j].scaled(rng.rational());
                }
                mixed.push_back(std::move(acc));
            }
            ok = span_dimension(ms) == span_dimension(mixed);
        }
        rec.record("core.span_recombination_invariance", ok);
    }
    {
        // a complex structure is even-sized and invertible
        const Matrix m = spin::std_complex_structure(16);
        const auto flags = classify_operator(m);
        rec.record("core.complex_structure_full_rank",
                   flags.complex_structure && m.rows() % 2 == 0 && rank_exact(m) == m.rows());
    }

    for (std::size_t t = 1; t <= 3; ++t) {
        rec.equals("fixture.quat_right." + Octonion::basis_name(t),
                   Quaternion::right_mult_matrix(Quaternion::basis(t)), golden::quat_right(t));
        rec.equals("fixture.quat_left." + Octonion::basis_name(t),
                   Quaternion::left_mult_matrix(Quaternion::basis(t)), golden::quat_left(t));
    }
    rec.equals("fixture.oct_right.1", right_mult_matrix(Octonion::basis(0)),
               Matrix::identity(8));
    for (std::size_t u = 1; u < 8; ++u) {
        rec.equals("fixture.oct_right." + Octonion::basis_name(u),
                   right_mult_matrix(Octonion::basis(u)), golden::oct_right(u));
    }
    for (std::size_t lam = 1; lam <= 3; ++lam) {
        for (std::size_t mu = 1; mu <= 3; ++mu) {
            const std::string tag =
                Octonion::basis_name(lam) + Octonion::basis_name(mu);
            const Matrix computed = Quaternion::right_mult_matrix(Quaternion::basis(lam)) *
                                    Quaternion::left_mult_matrix(Quaternion::basis(mu));
            const Matrix printed = golden::rl_product(lam, mu);
            if (computed == printed) {
                rec.record("fixture.rl_product." + tag, true);
                continue;
            }
            // The displayed product disagrees with the product of its own
            // displayed factors. Confirm the discrepancy is the documented
            // sign flip and report both matrices verbatim.
            const bool exact_sign_flip =
                computed == -printed && computed == golden::rl_composition(lam, mu);
            const io::Json report{{"displayed", io::matrix_to_json(printed)},
                                  {"computed", io::matrix_to_json(computed)},
                                  {"relation", "displayed = -computed"}};
            rec.record_with_note("fixture.rl_product." + tag + ".sign_misprint_detected",
                                 exact_sign_flip, report.dump());
        }
    }

    rec.record("table.i_times_j",
               Octonion::basis(1) * Octonion::basis(2) == Octonion::basis(3));
    rec.record("table.e_times_f",
               Octonion::basis(4) * Octonion::basis(5) == Octonion::basis(1));
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 100 && ok; ++t) {
            const Octonion x = rng.octonion();
            ok = Octonion::basis(0) * x == x && x * Octonion::basis(0) == x;
            if (!ok) w = oct_witness(x);
        }
        rec.record("table.unit_law", ok, w);
    }
    rec.record("conj_norm.sum_of_units", [] {
        std::array<Rational, 8> c;
        c.fill(Rational(1));
        return Octonion(c).norm_sq() == Rational(8);
    }());
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 200 && ok; ++t) {
            const Octonion a = rng.octonion();
            ok = a * a.conj() == a.norm_sq() * Octonion::basis(0);
            if (!ok) w = oct_witness(a);
        }
        rec.record("conj_norm.a_abar", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 500 && ok; ++t) {
            const Octonion a = rng.octonion();
            const Octonion b = rng.octonion();
            ok = (a * b).norm_sq() == a.norm_sq() * b.norm_sq();
            if (!ok) w = oct_witness(a) + " " + oct_witness(b);
        }
        rec.record("property.composition_norm", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 200 && ok; ++t) {
            const Octonion x = rng.octonion();
            const Octonion y = rng.octonion();
            const Octonion z = rng.octonion();
            ok = (z * (x * y)) * z == (z * x) * (y * z);
            if (!ok) w = oct_witness(x) + " " + oct_witness(y) + " " + oct_witness(z);
        }
        rec.record("property.moufang", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int t = 0; t < 200 && ok; ++t) {
            const Octonion x = rng.octonion();
            const Octonion y = rng.octonion();
            ok = x * (x * y) == (x * x) * y && (y * x) * x == y * (x * x);
            if (!ok) w = oct_witness(x) + " " + oct_witness(y);
        }
        rec.record("property.alternative", ok, w);
    }
    {
        bool ok = true;
        for (std::size_t u = 0; u < 8 && ok; ++u) {
            const Octonion b = Octonion::basis(u);
            ok = right_mult_matrix(b) * right_mult_matrix(b.conj()) == Matrix::identity(8);
        }
        std::string w;
        for (int t = 0; t < 100 && ok; ++t) {
            const Octonion u = rng.octonion();
            ok = right_mult_matrix(u) * right_mult_matrix(u.conj()) ==
                 u.norm_sq() * Matrix::identity(8);
            if (!ok) w = oct_witness(u);
        }
        rec.record("matrix.r_u_r_ubar", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t u = 0; u < 8 && ok; ++u) {
            for (std::size_t v = 0; v < 8 && ok; ++v) {
                if (u == v) continue;
                const Octonion a = Octonion::basis(u);
                const Octonion b = Octonion::basis(v);
                ok = right_mult_matrix(a) * right_mult_matrix(b.conj()) ==
                     -(right_mult_matrix(b) * right_mult_matrix(a.conj()));
            }
        }
        for (int t = 0; t < 200 && ok; ++t) {
            const Octonion u = rng.nonzero_octonion();
            const Octonion v = rng.orthogonal_to(u);
            ok = right_mult_matrix(u) * right_mult_matrix(v.conj()) ==
                 -(right_mult_matrix(v) * right_mult_matrix(u.conj()));
            if (!ok) w = oct_witness(u) + " " + oct_witness(v);
        }
        rec.record("matrix.right_mult_anticommute", ok, w);
    }
    {
        rec.record("identity.orthogonal_basis_case",
                   orthogonal_identity_check(Octonion::basis(2), Octonion::basis(0),
                                             Octonion::basis(1)));
        bool ok = true;
        std::string w;
        for (int t = 0; t < 500 && ok; ++t) {
            const Octonion z = rng.octonion();
            const Octonion u = rng.nonzero_octonion();
            const Octonion v = rng.orthogonal_to(u);
            ok = orthogonal_identity_check(z, u, v);
            if (!ok) w = oct_witness(z) + " " + oct_witness(u) + " " + oct_witness(v);
        }
        rec.record("identity.orthogonal_triples", ok, w);
    }
    rec.throws<PreconditionError>("identity.precondition_error", [] {
        orthogonal_identity_check(Octonion::basis(2), Octonion::basis(1), Octonion::basis(1));
    });
    {
        bool ok = true;
        for (int t = 0; t < 50 && ok; ++t) {
            const Octonion u = rng.octonion();
            const Octonion v = rng.octonion();
            const Rational a = rng.rational();
            const Rational b = rng.rational();
            ok = right_mult_matrix(a * u + b * v) ==
                 right_mult_matrix(u).scaled(a) + right_mult_matrix(v).scaled(b);
        }
        rec.record("matrix.right_mult_linearity", ok);
    }
}

// ------------------------------------------------------------------- spin8

void suite_spin8(Recorder& rec, RationalSampler& rng) {
    for (std::size_t u = 0; u < 8; ++u) {
        rec.equals("fixture.m_u.m_" + Octonion::basis_name(u),
                   spin::build_m_u(Octonion::basis(u)), golden::m_single(u));
    }
    for (std::size_t u = 0; u < 8; ++u) {
        for (std::size_t v = u + 1; v < 8; ++v) {
            rec.equals("fixture.m_uv.m_{" + Octonion::basis_name(u) + "," +
                           Octonion::basis_name(v) + "}",
                       spin::build_m_uv(Octonion::basis(u), Octonion::basis(v)),
                       golden::m_pair(u, v));
        }
    }
    const spin::CliffordSystem system = spin::clifford_system(spin::SystemKind::spin8);
    for (std::size_t u = 0; u < 8; ++u) {
        rec.equals("fixture.involution.I_" + Octonion::basis_name(u), system.involutions[u],
                   golden::involution(u));
    }

    const auto basis = spin::spin8_basis();
    {
        const auto composed = spin::compose_system(system);
        bool ok = composed.size() == basis.size();
        std::string w;
        for (std::size_t k = 0; ok && k < basis.size(); ++k) {
            ok = composed[k].matrix == basis[k].matrix && composed[k].label == basis[k].label;
            if (!ok) w = basis[k].label;
        }
        rec.record("compose.matches_spin8_basis", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t u = 0; u < 8 && ok; ++u) {
            const OperatorFlags f = classify_operator(spin::build_m_u(Octonion::basis(u)));
            ok = f.orthogonal && f.skew && f.complex_structure && !f.symmetric && !f.involution;
            if (!ok) w = "m_" + Octonion::basis_name(u);
        }
        for (const auto& g : basis) {
            if (!ok) break;
            const OperatorFlags f = classify_operator(g.matrix);
            ok = f.orthogonal && f.skew && f.complex_structure;
            if (!ok) w = g.label;
        }
        rec.record("classify.complex_structures", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t u = 0; u < 8 && ok; ++u) {
            const OperatorFlags f = classify_operator(system.involutions[u]);
            ok = f.orthogonal && f.symmetric && f.involution && !f.skew && !f.complex_structure;
            if (!ok) w = system.labels[u];
        }
        rec.record("classify.involutions", ok, w);
    }
    {
        bool ok = true;
        for (std::size_t s = 0; s < 8 && ok; ++s) {
            for (std::size_t t = s + 1; t < 8 && ok; ++t) {
                ok = system.involutions[s] * system.involutions[t] ==
                     -(system.involutions[t] * system.involutions[s]);
            }
        }
        rec.record("system.involutions_anticommute", ok);
    }
    {
        bool ok = true;
        std::string w;
        const Matrix id16 = Matrix::identity(16);
        for (std::size_t u = 0; u < 8 && ok; ++u) {
            for (std::size_t v = 0; v < 8 && ok; ++v) {
                const Matrix mu = spin::build_m_u(Octonion::basis(u));
                const Matrix mv = spin::build_m_u(Octonion::basis(v));
                const Matrix expected = u == v ? id16.scaled(-2) : Matrix(16, 16);
                ok = mu * mv + mv * mu == expected;
                if (!ok) w = Octonion::basis_name(u) + "," + Octonion::basis_name(v);
            }
        }
        rec.record("clifford.basis_pairs", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        const Matrix id16 = Matrix::identity(16);
        for (int t = 0; t < 500 && ok; ++t) {
            const Octonion u = rng.octonion();
            const Octonion v = rng.octonion();
            const Matrix mu = spin::build_m_u(u);
            const Matrix mv = spin::build_m_u(v);
            const Rational minus_two_inner = Rational(-2) * inner(u, v);
            ok = mu * mv + mv * mu == id16.scaled(minus_two_inner);
            if (!ok) w = oct_witness(u) + " " + oct_witness(v);
        }
        rec.record("clifford.random_pairs", ok, w);
    }
    {
        // pythagorean unit first, then random exact unit vectors
        bool ok = true;
        std::string w;
        std::array<Rational, 8> c;
        c[0] = Rational(3, 5);
        c[1] = Rational(4, 5);
        const Matrix id16 = Matrix::identity(16);
        Octonion u(c);
        ok = u.norm_sq().is_one() && spin::build_m_u(u) * spin::build_m_u(u) == -id16;
        for (int t = 0; t < 50 && ok; ++t) {
            u = rng.unit_octonion();
            ok = u.norm_sq().is_one() && spin::build_m_u(u) * spin::build_m_u(u) == -id16;
            if (!ok) w = oct_witness(u);
        }
        rec.record("complex_structure.rational_unit", ok, w);
    }
    {
        std::vector<Matrix> ms;
        for (const auto& g : basis) ms.push_back(g.matrix);
        rec.record("span.dimension_28", span_dimension(ms) == 28);
        const auto report = spin::lie_closure_report(ms);
        rec.record("closure.spin8", report.dimension == 28 && report.closed);
    }
    {
        // All 256 ordered products of distinct m_u over subsets of the basis
        // octonions; their span must be the full matrix algebra.
        std::vector<Matrix> products;
        products.reserve(256);
        std::vector<Matrix> singles;
        for (std::size_t u = 0; u < 8; ++u) singles.push_back(spin::build_m_u(Octonion::basis(u)));
        for (unsigned mask = 0; mask < 256; ++mask) {
            Matrix p = Matrix::identity(16);
            for (std::size_t u = 0; u < 8; ++u) {
                if (mask & (1u << u)) p = p * singles[u];
            }
            products.push_back(std::move(p));
        }
        rec.record("generation.full_algebra", span_dimension(products) == 256,
                   "span of Clifford monomials fell short of 256");
    }
    {
        const Matrix lhs = commutator(golden::m_pair(0, 1), golden::m_pair(0, 2));
        const Matrix rhs = golden::m_pair(1, 2).scaled(2);
        bool ok = lhs == rhs;
        std::vector<Matrix> ms;
        for (const auto& g : basis) ms.push_back(g.matrix);
        RowEchelon ech(16 * 16);
        for (const auto& m : ms) ech.insert(m.entries());
        ok = ok && ech.contains(lhs.entries());
        rec.record("commutator.m1i_m1j_is_2m_ij", ok);
    }
}

// ----------------------------------------------------------------- triality

Octonion octonion_from_column(const Matrix& m, std::size_t col) {
    std::array<Rational, 8> c;
    for (std::size_t r = 0; r < 8; ++r) c[r] = m.at(r, col);
    return Octonion(std::move(c));
}

bool companion_relation_holds(const spin::TrialityTriple& triple) {
    for (std::size_t b = 0; b < 8; ++b) {
        const Matrix ru = right_mult_matrix(Octonion::basis(b));
        const Matrix rv = right_mult_matrix(octonion_from_column(triple.m_zero, b));
        if (rv + ru * triple.m_minus != triple.m_plus * ru) return false;
    }
    return true;
}

void suite_triality(Recorder& rec, RationalSampler& rng) {
    const auto basis = spin::spin8_basis();
    {
        bool ok = true;
        std::string w;
        for (const auto& g : basis) {
            const auto triple = spin::triality_companion(g.matrix);
            const bool skew = triple.m_zero.transposed() == -triple.m_zero;
            if (!skew || !companion_relation_holds(triple)) {
                ok = false;
                w = g.label;
                break;
            }
        }
        rec.record("companions.basis28", ok, w);
    }
    {
        const auto triple = spin::triality_companion(basis.front().matrix);  // m_{1,i}
        const Matrix ri = right_mult_matrix(Octonion::basis(1));
        Matrix expected_zero(8, 8);
        expected_zero.at(1, 0) = 2;
        expected_zero.at(0, 1) = -2;
        rec.equals("companions.m1i_plus", triple.m_plus, ri);
        rec.equals("companions.m1i_minus", triple.m_minus, -ri);
        rec.equals("companions.m1i_zero", triple.m_zero, expected_zero);
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& g : basis) {
            const bool expected = g.first != 0;  // both indices imaginary
            if (spin::is_spin_delta7(g.matrix) != expected) {
                ok = false;
                w = g.label;
                break;
            }
        }
        rec.record("delta7.exactly_21", ok, w);
    }
    {
        const auto delta = spin::spin7_delta_basis();
        std::vector<Matrix> ms;
        for (const auto& g : delta) ms.push_back(g.matrix);
        const auto report = spin::lie_closure_report(ms);
        rec.record("delta7.closure_21", report.dimension == 21 && report.closed);

        bool ok = true;
        for (int t = 0; t < 20 && ok; ++t) {
            Matrix combo(16, 16);
            for (const auto& g : delta) combo += g.matrix.scaled(rng.rational());
            ok = spin::is_spin_delta7(combo);
        }
        rec.record("delta7.random_combinations", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 10 && ok; ++t) {
            Matrix m1(16, 16);
            Matrix m2(16, 16);
            for (const auto& g : basis) {
                m1 += g.matrix.scaled(rng.rational());
                m2 += g.matrix.scaled(rng.rational());
            }
            const Rational a = rng.rational();
            const Rational b = rng.rational();
            const auto t1 = spin::triality_companion(m1);
            const auto t2 = spin::triality_companion(m2);
            const auto tc = spin::triality_companion(m1.scaled(a) + m2.scaled(b));
            ok = tc.m_zero == t1.m_zero.scaled(a) + t2.m_zero.scaled(b) &&
                 companion_relation_holds(tc);
        }
        rec.record("companions.linearity", ok);
    }
    rec.throws<NotInSpin8Error>("error.symmetric_input", [] {
        Matrix sym(16, 16);
        for (std::size_t i = 0; i < 16; ++i) sym.at(i, i) = Rational(static_cast<long long>(i + 1));
        spin::triality_companion(sym);
    });
    rec.throws<NotInSpin8Error>("error.off_diagonal_input", [] {
        spin::triality_companion(spin::build_m_u(Octonion::basis(0)));
    });
}

// ------------------------------------------------------------------- spin6

void suite_spin6(Recorder& rec, RationalSampler&) {
    const auto system = spin::clifford_system(spin::SystemKind::spin6);
    rec.record("system.size_six", system.involutions.size() == 6);
    for (std::size_t u = 0; u < 6; ++u) {
        rec.equals("fixture.involution.I_" + Octonion::basis_name(u), system.involutions[u],
                   golden::involution(u));
    }
    const auto composed = spin::compose_system(system);
    {
        bool ok = composed.size() == 15;
        std::string w;
        for (const auto& g : composed) {
            if (!ok) break;
            ok = g.matrix == spin::build_m_uv(Octonion::basis(g.first), Octonion::basis(g.second));
            if (!ok) w = g.label;
        }
        rec.record("compose.matches_m_uv", ok, w);
    }
    {
        std::vector<Matrix> ms;
        for (const auto& g : composed) ms.push_back(g.matrix);
        rec.record("span.dimension_15", span_dimension(ms) == 15);
        const auto report = spin::lie_closure_report(ms);
        rec.record("closure.spin6", report.dimension == 15 && report.closed);
    }
    {
        const Matrix j16 = spin::std_complex_structure(16);
        bool ok = true;
        std::string w;
        for (std::size_t u = 0; u < 6 && ok; ++u) {
            const Matrix m = spin::build_m_u(Octonion::basis(u));
            ok = m * j16 == j16 * m;
            if (!ok) w = "m_" + Octonion::basis_name(u);
        }
        rec.record("jstd.six_commute", ok, w);

        ok = true;
        for (std::size_t u = 6; u < 8 && ok; ++u) {
            const Matrix m = spin::build_m_u(Octonion::basis(u));
            ok = m * j16 == -(j16 * m) && m * j16 != j16 * m;
            if (!ok) w = "m_" + Octonion::basis_name(u);
        }
        rec.record("jstd.gh_anticommute", ok, w);
    }
    rec.equals("fixture.complexify.R_1", spin::complexify(right_mult_matrix(Octonion::basis(0))),
               ComplexMatrix::identity(4));
    for (std::size_t u = 1; u <= 5; ++u) {
        rec.equals("fixture.complexify.R_" + Octonion::basis_name(u),
                   spin::complexify(right_mult_matrix(Octonion::basis(u))),
                   golden::su4_generator(u));
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& g : composed) {
            const ComplexMatrix lhs = spin::complexify(g.matrix);
            const ComplexMatrix rhs =
                spin::complexify(spin::build_m_u(Octonion::basis(g.first))) *
                spin::complexify(spin::build_m_u(Octonion::basis(g.second)));
            if (!(lhs == rhs)) {
                ok = false;
                w = g.label;
                break;
            }
        }
        rec.record("complexify.multiplicative_on_pairs", ok, w);
    }
    {
        bool ok = true;
        for (std::size_t u = 1; u <= 5 && ok; ++u) {
            const ComplexMatrix c = spin::complexify(right_mult_matrix(Octonion::basis(u)));
            ok = c * c.conjugate_transposed() == ComplexMatrix::identity(4);
        }
        rec.record("complexify.unitary", ok);
    }
    rec.throws<NotComplexLinearError>("error.R_g_not_complex_linear", [] {
        spin::complexify(right_mult_matrix(Octonion::basis(6)));
    });
    rec.throws<NotComplexLinearError>("error.R_h_not_complex_linear", [] {
        spin::complexify(right_mult_matrix(Octonion::basis(7)));
    });
    rec.throws<NotComplexLinearError>("error.m_g_not_complex_linear", [] {
        spin::complexify(spin::build_m_u(Octonion::basis(6)));
    });
}

// ------------------------------------------------------------------- spin5

void suite_spin5(Recorder& rec, RationalSampler&) {
    const auto system = spin::clifford_system(spin::SystemKind::spin5);
    for (std::size_t a = 1; a <= 5; ++a) {
        rec.equals("fixture.sigma_" + std::to_string(a), system.involutions[a - 1],
                   golden::sigma(a));
    }
    const auto composed = spin::compose_system(system);
    for (const auto& g : composed) {
        rec.equals("fixture." + g.label, g.matrix, golden::sigma_pair(g.first + 1, g.second + 1));
    }
    {
        bool ok = true;
        std::string w;
        for (std::size_t a = 0; a < 5 && ok; ++a) {
            const OperatorFlags f = classify_operator(system.involutions[a]);
            ok = f.orthogonal && f.symmetric && f.involution;
            if (!ok) w = system.labels[a];
        }
        for (std::size_t s = 0; s < 5 && ok; ++s) {
            for (std::size_t t = s + 1; t < 5 && ok; ++t) {
                ok = system.involutions[s] * system.involutions[t] ==
                     -(system.involutions[t] * system.involutions[s]);
            }
        }
        rec.record("classify.sigma_system", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (const auto& g : composed) {
            const OperatorFlags f = classify_operator(g.matrix);
            if (!(f.orthogonal && f.skew && f.complex_structure)) {
                ok = false;
                w = g.label;
                break;
            }
        }
        rec.record("classify.sigma_pairs", ok, w);
    }
    {
        std::vector<Matrix> ms;
        for (const auto& g : composed) ms.push_back(g.matrix);
        const auto report = spin::lie_closure_report(ms);
        rec.record("closure.spin5", report.dimension == 10 && report.closed);
    }
    {
        // sp(2) membership: commuting with the blockwise left multiplications
        bool ok = true;
        std::string w;
        for (std::size_t t = 1; t <= 3 && ok; ++t) {
            const Matrix l =
                Matrix::block_diagonal(Quaternion::left_mult_matrix(Quaternion::basis(t)), 2);
            for (const auto& g : composed) {
                if (!commutator(g.matrix, l).is_zero()) {
                    ok = false;
                    w = g.label + " vs L_" + Octonion::basis_name(t);
                    break;
                }
            }
        }
        rec.record("quaternion_linear.sigma_pairs", ok, w);
    }
    rec.record("commutator.sigma12_sigma34",
               commutator(golden::sigma_pair(1, 2), golden::sigma_pair(3, 4)).is_zero());
}

// ----------------------------------------------------------------- clifford

TangentModel random_model(RationalSampler& rng, StructureKind kind, std::size_t n) {
    TangentModel t;
    t.kind = kind;
    const std::size_t dim = clifford::block_dimension(kind);
    for (std::size_t b = 0; b < n; ++b) {
        std::vector<Rational> block(dim);
        for (auto& x : block) x = rng.rational();
        t.blocks.push_back(std::move(block));
    }
    return t;
}

TangentModel combine_models(const Rational& a, const TangentModel& t1, const Rational& b,
                            const TangentModel& t2) {
    TangentModel out;
    out.kind = t1.kind;
    for (std::size_t k = 0; k < t1.blocks.size(); ++k) {
        std::vector<Rational> block(t1.blocks[k].size());
        for (std::size_t i = 0; i < block.size(); ++i) {
            block[i] = a * t1.blocks[k][i] + b * t2.blocks[k][i];
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

void suite_clifford(Recorder& rec, RationalSampler& rng) {
    rec.record("even_basis.counts", clifford::even_basis(8).size() == 128 &&
                                        clifford::even_basis(6).size() == 32 &&
                                        clifford::even_basis(5).size() == 16);
    {
        const auto b6 = clifford::even_basis(6);
        const clifford::Subset s1234 = clifford::subset_from_indices({1, 2, 3, 4}, 6);
        const bool has = std::find(b6.begin(), b6.end(), s1234) != b6.end();
        bool no_odd = true;
        for (const auto s : b6) no_odd = no_odd && (std::popcount(s) % 2 == 0);
        rec.record("even_basis.parity", has && no_odd);
    }
    {
        using clifford::EvenCliffordElement;
        const auto e12 = EvenCliffordElement::generator_pair(8, 1, 2);
        const auto e23 = EvenCliffordElement::generator_pair(8, 2, 3);
        const auto e13 = EvenCliffordElement::generator_pair(8, 1, 3);
        const auto unit = EvenCliffordElement::unit(8);
        bool ok = (e12 * e23 == Rational(-1) * e13);
        ok = ok && (e12 * e12 == Rational(-1) * unit);
        const auto x = rng.even_element(8, 3);
        ok = ok && (unit * x == x) && (x * unit == x);
        rec.record("even_mul.examples", ok);

        bool assoc = true;
        for (int t = 0; t < 30 && assoc; ++t) {
            const auto a = rng.even_element(8, 3);
            const auto b = rng.even_element(8, 3);
            const auto c = rng.even_element(8, 3);
            assoc = ((a * b) * c == a * (b * c));
        }
        rec.record("even_mul.associative", assoc);
    }

    const StructureKind kinds[] = {StructureKind::rank8, StructureKind::rank6,
                                   StructureKind::rank5};
    for (const auto kind : kinds) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const std::string tag = clifford::kind_name(kind) + ".n" + std::to_string(n);
            rec.record("morphism." + tag, clifford::morphism_check(kind, n));
            const auto lam = clifford::lambda2_image_check(kind, n);
            rec.record("lambda2." + tag, lam.all_passed,
                       lam.violations.empty() ? "" : lam.violations.front());
        }
    }
    {
        // the pair images must agree with the golden fixtures, not merely
        // with the builders
        bool ok = true;
        std::string w;
        for (std::size_t s = 1; s <= 8 && ok; ++s) {
            for (std::size_t t = s + 1; t <= 8 && ok; ++t) {
                ok = clifford::generator_pair_matrix(StructureKind::rank8, s, t) ==
                     golden::m_pair(s - 1, t - 1);
                if (!ok) w = "rank8 e" + std::to_string(s) + "e" + std::to_string(t);
            }
        }
        for (std::size_t s = 1; s <= 5 && ok; ++s) {
            for (std::size_t t = s + 1; t <= 5 && ok; ++t) {
                ok = clifford::generator_pair_matrix(StructureKind::rank5, s, t) ==
                     -golden::sigma_pair(s, t);
                if (!ok) w = "rank5 e" + std::to_string(s) + "e" + std::to_string(t);
            }
        }
        rec.record("compat.pair_images_match_fixtures", ok, w);
    }
    {
        TangentModel t;
        t.kind = StructureKind::rank8;
        std::vector<Rational> block(16);
        block[0] = 1;  // the octonion 1 in the first slot
        t.blocks.push_back(block);
        const auto out = clifford::phi_apply(
            StructureKind::rank8, EvenCliffordElement::generator_pair(8, 1, 2), t);
        std::vector<Rational> expected(16);
        expected[1] = 1;  // the octonion i in the first slot
        rec.record("phi.e1e2_sends_1_to_i", out.blocks.front() == expected);

        const auto unchanged =
            clifford::phi_apply(StructureKind::rank8, EvenCliffordElement::unit(8),
                                random_model(rng, StructureKind::rank8, 2));
        rec.record("phi.unit_is_identity",
                   clifford::phi_apply(StructureKind::rank8, EvenCliffordElement::unit(8),
                                       unchanged) == unchanged);
    }
    {
        bool ok = true;
        for (const auto kind : kinds) {
            const std::size_t rank = clifford::rank_of(kind);
            const auto elem = rng.even_element(rank, 4);
            TangentModel t = random_model(rng, kind, 3);
            const auto image = clifford::phi_apply(kind, elem, t);
            // permuting blocks commutes with the diagonal action
            TangentModel permuted = t;
            std::rotate(permuted.blocks.begin(), permuted.blocks.begin() + 1,
                        permuted.blocks.end());
            TangentModel image_permuted = image;
            std::rotate(image_permuted.blocks.begin(), image_permuted.blocks.begin() + 1,
                        image_permuted.blocks.end());
            ok = ok && clifford::phi_apply(kind, elem, permuted) == image_permuted;
        }
        rec.record("phi.diagonality_under_permutation", ok);
    }
    {
        bool ok = true;
        for (const auto kind : kinds) {
            const std::size_t rank = clifford::rank_of(kind);
            const auto elem1 = rng.even_element(rank, 3);
            const auto elem2 = rng.even_element(rank, 3);
            const TangentModel t1 = random_model(rng, kind, 2);
            const TangentModel t2 = random_model(rng, kind, 2);
            const Rational a = rng.rational();
            const Rational b = rng.rational();
            // linear in the model argument
            ok = ok && clifford::phi_apply(kind, elem1, combine_models(a, t1, b, t2)) ==
                           combine_models(a, clifford::phi_apply(kind, elem1, t1), b,
                                          clifford::phi_apply(kind, elem1, t2));
            // linear in the element argument
            const auto combo = a * elem1 + b * elem2;
            ok = ok && clifford::phi_apply(kind, combo, t1) ==
                           combine_models(Rational(1), clifford::phi_apply(kind, a * elem1, t1),
                                          Rational(1), clifford::phi_apply(kind, b * elem2, t1));
        }
        rec.record("phi.bilinearity", ok);
    }
    {
        bool ok = true;
        for (const auto kind : kinds) {
            const std::size_t rank = clifford::rank_of(kind);
            for (int t = 0; t < 20 && ok; ++t) {
                const auto a = rng.even_element(rank, 3);
                const auto b = rng.even_element(rank, 3);
                ok = clifford::phi_block_matrix(kind, a * b) ==
                     clifford::phi_block_matrix(kind, a) * clifford::phi_block_matrix(kind, b);
            }
        }
        rec.record("morphism.random_elements", ok);
    }
    {
        // the block image of Cl0_8 spans both 64-dimensional diagonal blocks
        std::vector<Matrix> images;
        for (const auto s : clifford::even_basis(8)) {
            EvenCliffordElement elem(8);
            elem.add_term(s, 1);
            images.push_back(clifford::phi_block_matrix(StructureKind::rank8, elem));
        }
        rec.record("image_span.rank8_is_128", span_dimension(images) == 128);
    }
}

// --------------------------------------------------------------- cohomology

void suite_cohomology(Recorder& rec, RationalSampler&) {
    using namespace cliffgrass::cohomology;
    {
        // free ring on one degree-2 generator against the geometric series
        GradedRingPresentation p;
        p.generators = {{"x", 2}};
        const PoincarePolynomial series = hilbert_series(p, 6);
        rec.record("free_ring.single_generator",
                   series == PoincarePolynomial({{0, 1}, {2, 1}, {4, 1}, {6, 1}}));

        // two generators, cross-checked by direct monomial counting
        GradedRingPresentation q;
        q.generators = {{"a", 2}, {"b", 4}};
        const PoincarePolynomial got = hilbert_series(q, 12);
        bool ok = true;
        for (unsigned d = 0; d <= 12; ++d) {
            long long count = 0;
            for (unsigned i = 0; 2 * i <= d; ++i) {
                if ((d - 2 * i) % 4 == 0) ++count;
            }
            ok = ok && got.coefficient(d) == count;
        }
        rec.record("free_ring.two_generators_counted", ok);
    }
    {
        const auto space = builtin_presentation(SpaceId::gr8r10);
        const auto result = compute_space(SpaceId::gr8r10, 16);
        rec.record("gr8r10.series", result.matches_reference,
                   "computed " + result.series.str());
        rec.record("gr8r10.euler_10", result.euler && *result.euler == 10);
        rec.record("gr8r10.identity_involution",
                   involution_invariant_series(space.presentations.front().second,
                                               RingInvolution::identity(
                                                   space.presentations.front().second),
                                               16) == result.series);
    }
    {
        const auto c6 = compute_space(SpaceId::gr4c6, 16);
        rec.record("gr4c6.oracle_series", c6.matches_reference && c6.presentation_used == "oracle",
                   "computed " + c6.series.str());
        rec.record("gr4c6.euler_15", c6.euler && *c6.euler == 15);
        const auto h4 = compute_space(SpaceId::gr2h4, 16);
        rec.record("gr2h4.oracle_series", h4.matches_reference && h4.presentation_used == "oracle",
                   "computed " + h4.series.str());
        rec.record("gr2h4.euler_6", h4.euler && *h4.euler == 6);

        bool sym = true;
        for (unsigned n = 2; n <= 6 && sym; ++n) {
            for (unsigned k = 0; k <= n && sym; ++k) {
                sym = gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2);
            }
        }
        rec.record("gauss.symmetry", sym);

        bool palin = true;
        const auto g = gaussian_binomial(6, 2, 2);
        const unsigned top = g.max_degree();
        for (unsigned d = 0; d <= top && palin; d += 2) {
            palin = g.coefficient(d) == g.coefficient(top - d);
        }
        rec.record("gauss.palindromic", palin);
    }
    {
        const auto result = compute_space(SpaceId::gr8r12, 32);
        rec.record("gr8r12.series", result.matches_reference,
                   "computed " + result.series.str());
        rec.record("gr8r12.euler_30", result.euler && *result.euler == 30);
        // already-complete polynomial is unchanged by duality completion
        const auto reference = builtin_presentation(SpaceId::gr8r12).reference_series;
        rec.record("euler.palindromic_completion",
                   euler_characteristic(reference, 32) == reference.evaluate_at_one() &&
                       reference.evaluate_at_one() == 30);
    }
    {
        const auto result = compute_space(SpaceId::gr8r16, 32);
        rec.record("gr8r16.series_through_32", result.matches_reference,
                   "computed " + result.series.str());
        rec.record("gr8r16.presentation_named",
                   result.presentation_used == "literal" || result.presentation_used == "variant");
        rec.record("gr8r16.euler_140", result.euler && *result.euler == 140);

        const auto perp = compute_space(SpaceId::gr8perp_r16, 32);
        const auto perp_reference = builtin_presentation(SpaceId::gr8perp_r16).reference_series;
        rec.record("gr8perp.invariant_series_published", perp.matches_reference,
                   "published " + perp_reference.str() + " | computed " + perp.series.str());
        rec.record("gr8perp.euler_published", perp.euler && *perp.euler == 16,
                   perp.euler ? "computed chi " + std::to_string(*perp.euler) : "no chi");

        // invariant + anti-invariant must rebuild the full series
        const auto space = builtin_presentation(SpaceId::gr8perp_r16);
        const GradedRingPresentation* chosen = nullptr;
        for (const auto& [name, pres] : space.presentations) {
            if (name == result.presentation_used) chosen = &pres;
        }
        bool ok = chosen != nullptr;
        if (ok) {
            const auto plus = involution_eigenspace_series(*chosen, *space.involution, 32, +1);
            const auto minus = involution_eigenspace_series(*chosen, *space.involution, 32, -1);
            const auto full = hilbert_series(*chosen, 32);
            for (unsigned d = 0; d <= 32 && ok; ++d) {
                ok = plus.coefficient(d) + minus.coefficient(d) == full.coefficient(d);
            }
            // The complement swap acts freely on oriented 8-planes, so the
            // Lefschetz number of the involution vanishes and each
            // eigenspace must carry exactly half of chi = 140.
            const bool halves = euler_characteristic(plus, 64) == 70 &&
                                euler_characteristic(minus, 64) == 70;
            rec.record_with_note(
                "gr8perp.free_quotient_halves_chi", ok && halves,
                "each eigenspace completes to chi/2 = 70; a +1 eigenspace summing to 16 "
                "cannot exist for a free involution with chi = 140, so the published "
                "quotient series omits invariant classes (first at degree 12)");
        }
        rec.record("gr8perp.eigenspaces_sum_to_full", ok);

        // the surviving degree-8 classes are spanned by p1^2 and e
        ok = chosen != nullptr && perp.series.coefficient(8) == 2;
        if (ok) {
            const DegreeSlice slice = degree_slice(*chosen, 8);
            RowEchelon ech(slice.monomials.size());
            for (const auto& row : slice.ideal_rows) ech.insert(row);
            const std::size_t ideal_rank = ech.dimension();
            Exponents p1sq(chosen->generators.size(), 0);
            p1sq[chosen->generator_index("p1")] = 2;
            Exponents euler(chosen->generators.size(), 0);
            euler[chosen->generator_index("e")] = 1;
            for (const Exponents& mono : {p1sq, euler}) {
                GradedPolynomial poly = GradedPolynomial::monomial(mono);
                poly += apply_involution(*chosen, *space.involution, poly);
                ech.insert(polynomial_row(slice, poly));
            }
            ok = ech.dimension() == ideal_rank + 2;
        }
        rec.record("gr8perp.surviving_degree8_classes", ok);
    }
}

using SuiteFn = void (*)(Recorder&, RationalSampler&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

constexpr SuiteEntry kSuites[] = {
    {"octonion", suite_octonion}, {"spin8", suite_spin8},   {"triality", suite_triality},
    {"spin6", suite_spin6},       {"spin5", suite_spin5},   {"clifford", suite_clifford},
    {"cohomology", suite_cohomology},
};

std::uint64_t suite_seed(std::uint64_t seed, std::size_t index) {
    // distinct deterministic stream per suite, stable across single-suite
    // and "all" runs
    return seed ^ (0x9E3779B97F4A7C15ull * (index + 1));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& s : kSuites) out.emplace_back(s.name);
        return out;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& s : kSuites) {
        if (name == s.name) return true;
    }
    return false;
}

VerificationReport run_suite(const std::string& name, std::uint64_t seed) {
    for (std::size_t i = 0; i < std::size(kSuites); ++i) {
        if (name != kSuites[i].name) continue;
        const auto start = std::chrono::steady_clock::now();
        Recorder rec;
        RationalSampler rng(suite_seed(seed, i));
        kSuites[i].fn(rec, rng);
        VerificationReport report;
        report.suite = name;
        report.seed = seed;
        report.checks = rec.take();
        report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start);
        return report;
    }
    throw ValidationError("unknown verification suite '" + name + "'");
}

std::vector<VerificationReport> run(const std::string& name, std::uint64_t seed) {
    std::vector<VerificationReport> out;
    if (name == "all") {
        for (const auto& s : kSuites) out.push_back(run_suite(s.name, seed));
    } else {
        out.push_back(run_suite(name, seed));
    }
    return out;
}

}  // namespace cliffgrass::verify

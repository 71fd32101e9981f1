#include "etso/radial.hpp"
#include "etso/spinor.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace etso;

namespace {

HalfInt h(int twice) { return HalfInt::from_twice(twice); }
ExactComplex ex(const char* s) { return parse_exact(s); }

const SymbolicSpinor& find_row(const std::vector<SymbolicSpinor>& t, int n, int l, int j2, int m2) {
    for (const auto& r : t) {
        if (r.n == n && r.labels.l == l && r.labels.j.twice == j2 && r.labels.m.twice == m2) return r;
    }
    throw std::runtime_error("row not found");
}

}  // namespace

TEST(SpinorTable, RowCounts) {
    EXPECT_EQ(emit_table(h(1), 4).size(), 60u);
    EXPECT_EQ(emit_table(h(3), 4).size(), 110u);
    EXPECT_EQ(emit_table(h(5), 4).size(), 150u);
    EXPECT_EQ(emit_table(h(5), 2).size(), 2u * 6 + 6 + 8);  // l=0: j=5/2; l=1: j=5/2,7/2 (j >= s)
}

TEST(SpinorTable, Ordering) {
    const auto t = emit_table(h(1), 3);
    for (std::size_t k = 1; k < t.size(); ++k) {
        const auto& a = t[k - 1];
        const auto& b = t[k];
        const auto key_a = std::make_tuple(a.n, a.labels.l, a.labels.j.twice, -a.labels.m.twice);
        const auto key_b = std::make_tuple(b.n, b.labels.l, b.labels.j.twice, -b.labels.m.twice);
        EXPECT_LT(key_a, key_b);
    }
}

// Printed entries of the s = 1/2 and s = 3/2 tables.
TEST(SpinorTable, PrintedValues) {
    const auto t1 = emit_table(h(1), 4);
    {
        const auto& r = find_row(t1, 2, 1, 3, 1);
        EXPECT_EQ(r.rows[0].coeff, ex("sqrt(2/3)"));
        EXPECT_EQ(r.rows[1].coeff, ex("-sqrt(1/3)"));
        EXPECT_EQ(r.rows[1].orbital, (OrbitalLabel{2, 1, 1}));
        EXPECT_TRUE(r.rows[2].is_zero() && r.rows[3].is_zero());
    }
    {
        const auto& r = find_row(t1, 2, 0, 1, 1);
        EXPECT_EQ(r.rows[0].coeff, ex("sqrt(1/2)"));
        EXPECT_EQ(r.rows[2].coeff, ex("-i*sqrt(2/6)"));
        EXPECT_EQ(r.rows[2].orbital, (OrbitalLabel{2, 1, 1}));
        EXPECT_EQ(r.rows[3].coeff, ex("i*sqrt(1/6)"));
    }
    {
        const auto& r = find_row(t1, 3, 1, 1, -1);
        EXPECT_EQ(r.rows[0].coeff, ex("-sqrt(1/3)"));
        EXPECT_EQ(r.rows[1].coeff, ex("sqrt(1/6)"));
        EXPECT_EQ(r.rows[2].coeff, ex("-i*sqrt(1/2)"));
        EXPECT_EQ(r.rows[2].orbital, (OrbitalLabel{3, 0, 0}));
        EXPECT_TRUE(r.rows[3].is_zero());
    }
    const auto t2 = emit_table(h(3), 4);
    const auto& r = find_row(t2, 2, 1, 3, 1);
    EXPECT_EQ(r.rows[0].coeff, ex("sqrt(2/5)"));
    EXPECT_EQ(r.rows[0].orbital, (OrbitalLabel{2, 1, -1}));
    EXPECT_EQ(r.rows[1].coeff, ex("1/sqrt(15)"));
    EXPECT_EQ(r.rows[2].coeff, ex("2*sqrt(2/15)"));
    for (int c = 3; c < 8; ++c) EXPECT_TRUE(r.rows[c].is_zero());
}

// Property: every row of every table has unit norm, for s up to 7/2.
TEST(SpinorTable, RowNormProperty) {
    for (int s2 = 1; s2 <= 7; s2 += 2) {
        for (auto marker : {RadialMarker::psi, RadialMarker::sto}) {
            for (const auto& row : emit_table(h(s2), 4, marker)) {
                EXPECT_EQ(row.norm_squared(), SqrtLinear(1)) << "s=" << s2 << "/2 n=" << row.n;
                EXPECT_EQ(static_cast<int>(row.rows.size()), 2 * (s2 + 1));
            }
        }
    }
}

TEST(SpinorTable, LowerBlockVanishesWhenLTildeReachesN) {
    for (const auto& row : emit_table(h(3), 4)) {
        const bool present = row.labels.l_tilde() < row.n;
        bool any = false;
        for (int c = row.upper_size(); c < static_cast<int>(row.rows.size()); ++c) any = any || !row.rows[c].is_zero();
        if (!present) EXPECT_FALSE(any);
        for (const auto& term : row.rows) {
            if (!term.is_zero()) EXPECT_LT(term.orbital.l, row.n);
        }
    }
}

TEST(Spinor, AssemblyErrors) {
    EXPECT_THROW(assemble_psi({h(1), 2, h(5), h(1)}, 2), std::invalid_argument);  // l >= n
    EXPECT_THROW(assemble_psi({h(1), 1, h(7), h(1)}, 3), LabelError);
}

TEST(Spinor, ScalarReduction) {
    const SpinLabels L{h(0), 1, HalfInt::from_int(1), HalfInt::from_int(-1)};
    const auto k = reduce_scalar(L, 2);
    ASSERT_EQ(k.rows.size(), 2u);
    EXPECT_EQ(k.rows[0].coeff, ex("-sqrt(1/2)"));
    EXPECT_EQ(k.rows[1].coeff, ex("i*sqrt(1/2)"));
    EXPECT_EQ(k.rows[0].orbital, (OrbitalLabel{2, 1, -1}));
}

// eval_spinor equals N R(r) times the tensor harmonic values.
TEST(Spinor, EvaluationMatchesComposition) {
    const RadialFamily fam{RadialKind::psi_alpha, 0, 1.4};
    const double r = 1.3, th = 0.9, ph = 2.2;
    for (const auto& row : emit_table(h(3), 3)) {
        const auto v = eval_spinor(row, fam, r, th, ph);
        const auto& L = row.labels;
        const double N = normalization_N(row.n, L.l_tilde()).to_double();
        const auto up = eval_tensor_harmonic(tensor_harmonic_omega(L), th, ph);
        const auto lo = eval_tensor_harmonic(tensor_harmonic_lambda(L), th, ph);
        const double Ru = radial_value(fam, row.n, L.l, r), Rl = radial_value(fam, row.n, L.l_tilde(), r);
        for (int c = 0; c < row.upper_size(); ++c) {
            EXPECT_LT(std::abs(v[c] - N * Ru * up[c]), 1e-13);
            EXPECT_LT(std::abs(v[row.upper_size() + c] - N * Rl * lo[c]), 1e-13);
        }
    }
}

TEST(Spinor, ShellSamplerMatchesEvaluation) {
    const auto set = emit_table(h(1), 2, RadialMarker::sto);
    const RadialFamily fam{RadialKind::sto, 0, 0.8};
    const AngularGrid ang(6, 5);
    HarmonicTable table(max_orbital_l(set), ang);
    auto shells = spinor_shells(set, fam, table);
    ASSERT_EQ(shells.n_funcs, static_cast<int>(set.size()));
    SampleMatrix sm(shells.n_funcs, ang.size(), 4);
    shells.sample(1.7, sm);
    for (int f = 0; f < sm.n_funcs; ++f) {
        for (int p = 0; p < ang.size(); p += 7) {
            const auto v = eval_spinor(set[f], fam, 1.7, ang.theta(p), ang.phi(p));
            for (int c = 0; c < 4; ++c) EXPECT_LT(std::abs(sm.func(f)[p * 4 + c] - v[c]), 1e-13);
        }
    }
}

TEST(Spinor, MarkerMustMatchFamily) {
    EXPECT_TRUE(marker_matches(RadialMarker::sto, RadialFamily{RadialKind::sto, 0, 1.0}));
    EXPECT_FALSE(marker_matches(RadialMarker::psi, RadialFamily{RadialKind::sto, 0, 1.0}));
    const auto row = assemble_chi({h(1), 0, h(1), h(1)}, 1);
    EXPECT_THROW(eval_spinor(row, RadialFamily{RadialKind::psi_alpha, 1, 1.0}, 1.0, 0.1, 0.2), RadialError);
}

#include <gtest/gtest.h>

#include <random>

#include "t0enum/catalog/catalog.hpp"
#include "t0enum/oracle.hpp"

using namespace t0enum;
using namespace t0enum::transforms;
using exactmath::falling;
using exactmath::pow2;

namespace {

hypercore::ClassSpec spec_of(const std::string& id) { return *catalog::resolve_class(id).spec; }

}  // namespace

TEST(Transforms, F0RoundTripOnRandomTables) {
    std::mt19937_64 rng(99);
    std::map<std::pair<int, int>, Count> table;
    for (int m = 0; m <= 5; ++m)
        for (int n = 1; n <= 8; ++n) table[{m, n}] = Count(static_cast<long long>(rng() % 100000)) - 50000;
    TableFn t = [&](int m, int n) { return table.at({m, n}); };
    TableFn star = [&](int m, int n) { return f0(t, m, n); };
    for (int m = 0; m <= 5; ++m)
        for (int n = 1; n <= 8; ++n) {
            EXPECT_EQ(f0_inv(star, m, n), t(m, n));
            EXPECT_EQ(f0([&](int mm, int nn) { return f0_inv(t, mm, nn); }, m, n), t(m, n));
        }
}

TEST(Transforms, F0GivesT0Counts) {
    EXPECT_EQ(f0([](int m, int i) { return exactmath::power(pow2(i), m); }, 2, 2), 12);
    auto spec = spec_of("alpha_star_02");
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(f0([](int mm, int i) { return exactmath::power(pow2(i), mm); }, m, n), oracle::count(spec, m, n));
}

TEST(Transforms, HattedSumStartsAtZero) {
    // With a nonzero value at i = 0 only the i = 0 term differs from the plain sum.
    auto hat = [](int i) { return Count(i == 0 ? 5 : 3 * i); };
    for (int n = 1; n <= 6; ++n)
        EXPECT_EQ(f0_hat(hat, n), f0([&](int, int i) { return hat(i); }, 0, n) + exactmath::stirling1(n, 0) * 5);
    EXPECT_EQ(f0_hat(hat, 0), 5);
}

TEST(Transforms, SetPartitionSumMatchesTypeSum) {
    for (int n = 1; n <= 6; ++n) {
        int seen = 0;
        for_each_set_partition(n, [&](const SetPartition&) { ++seen; });
        Count bell = 0;
        for (int k = 0; k <= n; ++k) bell += exactmath::stirling2(n, k);
        EXPECT_EQ(Count(seen), bell);
        for (int m = 1; m <= 4; ++m) {
            const Count general = theorem1_sum(
                [&](const SetPartition& p) { return exactmath::power(pow2(p.blocks()), m); }, n);
            EXPECT_EQ(general, falling(pow2(m), n));
            const Count regular = theorem3_regular([&](int i) { return exactmath::power(pow2(i), m); }, n);
            EXPECT_EQ(regular, general);
        }
    }
}

TEST(Transforms, UniformPartitionSumAgainstOracle) {
    for (RowConvention c : all_conventions)
        for (int k = 1; k <= 3; ++k)
            for (int n = k; n <= 4; ++n)
                for (int m = 1; m <= (is_ordered(c) ? 4 : 5); ++m) {
                    auto spec = hypercore::ClassSpec{};
                    spec.row_convention = c;
                    spec.uniformity = hypercore::Uniformity::exact;
                    spec.require_t0 = true;
                    const Count got = theorem2_uniform(
                        [&](const exactmath::PartitionType& tau) {
                            return exactmath::lambda(c, exactmath::nu(tau, k), m);
                        },
                        n);
                    EXPECT_EQ(got, oracle::count(spec.with_k(k), m, n)) << index_of(c) << " " << m << "," << n << "," << k;
                }
}

TEST(Transforms, EdgeTransformsAgainstOracle) {
    for (int j = 0; j < 4; ++j) {
        const std::string jj = std::to_string(j);
        auto conv1 = [&](int m, int n) { return oracle::count(spec_of("alpha_star_" + jj + "1"), m, n); };
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 3; ++n) {
                EXPECT_EQ(g1(conv1, m, n), oracle::count(spec_of("alpha_star_" + jj + "2"), m, n));
                EXPECT_EQ(g2(conv1(m, n), m, Direction::to_unordered),
                          oracle::count(spec_of("alpha_star_" + jj + "3"), m, n));
                auto conv3 = [&](int i, int nn) { return g2(conv1(i, nn), i, Direction::to_unordered); };
                EXPECT_EQ(g3_prime(conv3, m, n), oracle::count(spec_of("alpha_star_" + jj + "4"), m, n));
            }
    }
    EXPECT_THROW(g2(Count(7), 3, Direction::to_unordered), NotDivisible);
    EXPECT_EQ(g2(Count(7), 3, Direction::to_ordered), 42);
}

TEST(Transforms, LiftFromDistinctAtZeroEdges) {
    auto conv1 = [](int m, int n) { return Count(10 * m + n); };
    for (RowConvention c : all_conventions) EXPECT_EQ(lift_from_distinct(conv1, c, 0, 3), 3);
}

TEST(Transforms, CoverShiftGivesT0Covers) {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            EXPECT_EQ(cover_shift([](int mm, int i) { return falling(pow2(i), mm); }, m, n),
                      oracle::count(spec_of("beta_star_01"), m, n));
}

TEST(Transforms, ConnectedRecurrenceExplicitRows) {
    ConnectedRecurrence omega([](int m, int n) { return exactmath::power(pow2(n) - 1, m); },
                              [](int m, int n) { return exactmath::power(pow2(n - 1) - 1, m); }, NuMode::ordered);
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(omega(1, n), 1);
        EXPECT_EQ(omega(2, n), exactmath::power(Count(3), n) - exactmath::power(Count(2), n));
        EXPECT_EQ(omega(n, 2), exactmath::power(Count(3), n) - exactmath::power(Count(2), n));
    }
    EXPECT_EQ(omega(0, 1), 1);
    EXPECT_EQ(omega(0, 2), 0);
    EXPECT_THROW(f1_connected(TableFn{}, TableFn{}, NuMode::ordered, 1, 1, Memo{}), std::invalid_argument);
    EXPECT_THROW(f1_connected([](int, int) { return Count(1); }, [](int, int) { return Count(0); }, NuMode::ordered, 2,
                              3, Memo{}),
                 InsufficientDepth);
}

// T0-filtration of the connected counts equals the connected recurrence run on T0 inputs.
TEST(Transforms, FiltrationCommutesWithConnectedParts) {
    for (RowConvention c : all_conventions) {
        const NuMode mode = is_ordered(c) ? NuMode::ordered : NuMode::unordered;
        ConnectedRecurrence t0_route([c](int m, int n) { return catalog::alpha_star(1, c, m, n); },
                                     [c](int m, int n) { return catalog::beta_star(1, c, m, n - 1); }, mode);
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; n <= 5; ++n)
                EXPECT_EQ(t0_route(m, n), f0([c](int mm, int i) { return catalog::omega1(c, mm, i); }, m, n))
                    << index_of(c) << " " << m << "," << n;
    }
}

TEST(Transforms, SeriesLogExpRoundTrip) {
    for (RowConvention c : all_conventions) {
        auto a = SeriesTable::for_convention(c, 5, 5);
        for (int n = 0; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) a.at(m, n) = catalog::alpha(1, c, m, n);
        auto l = a.log();
        EXPECT_EQ(l.exp(), a);
        for (int n = 1; n <= 5; ++n)
            for (int m = 0; m <= 5; ++m) EXPECT_EQ(l.at(m, n), catalog::omega1(c, m, n));
    }
    SeriesTable bad(2, 2, true);
    EXPECT_THROW(bad.log(), std::invalid_argument);
    EXPECT_THROW(SeriesTable(2, 2, true) * SeriesTable(2, 3, true), std::invalid_argument);
}

// A13 = A11 and A14 = A11(x, y/(1-y)) as power series, read coefficientwise.
TEST(Transforms, UnorderedSeriesAgreeWithSubstitutions) {
    for (int n = 0; n <= 5; ++n)
        for (int m = 0; m <= 6; ++m) {
            const Count a11 = catalog::alpha(1, RowConvention::ordered_distinct, m, n);
            EXPECT_EQ(a11 / exactmath::factorial(m), catalog::alpha(1, RowConvention::unordered_distinct, m, n));
            EXPECT_EQ(a11 % exactmath::factorial(m), 0);
            Count sub = m == 0 ? Count(1) : Count(0);
            for (int i = 1; i <= m; ++i)
                sub += exactmath::binom(m - 1, i - 1) * catalog::alpha(1, RowConvention::unordered_distinct, i, n);
            EXPECT_EQ(sub, catalog::alpha(1, RowConvention::unordered, m, n));
        }
}

TEST(Transforms, EgfMismatchLocatesCorruption) {
    const auto c = RowConvention::ordered;
    auto alpha = CountTable::tabulate("alpha_12", "formula", [&](int m, int n) { return catalog::alpha(1, c, m, n); },
                                      0, 4, 0, 4);
    auto omega = CountTable::tabulate("omega_12", "formula", [&](int m, int n) { return catalog::omega1(c, m, n); },
                                      0, 4, 1, 4);
    EXPECT_TRUE(egf_log_check(alpha, omega, c, 4, 4));
    omega.set(3, 2, omega.at(3, 2) + 1);
    auto bad = egf_log_mismatch(alpha, omega, c, 4, 4);
    ASSERT_TRUE(bad);
    EXPECT_EQ(bad->m, 3);
    EXPECT_EQ(bad->n, 2);
    EXPECT_EQ(bad->actual, bad->expected + 1);
    EXPECT_THROW(alpha.at(9, 9), InsufficientDepth);
}

#include <symcover/bounds.hpp>
#include <symcover/verify.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace symcover;
using namespace symcover::bounds;

namespace {

BoundQuery query(std::uint64_t n, std::uint64_t d, std::int64_t num, std::int64_t den,
                 std::optional<unsigned> m = std::nullopt) {
    return BoundQuery{n, d, Epsilon::ratio(num, den), m};
}

// Pascal's rule, independent of the library's product formula.
BigInt pascal(unsigned top, unsigned choose) {
    std::vector<BigInt> row(top + 1, 0);
    row[0] = 1;
    for (unsigned i = 1; i <= top; ++i) {
        for (unsigned j = i; j > 0; --j) row[j] += row[j - 1];
    }
    return row[choose];
}

double lgamma_log10_binomial(double top, double choose) {
    return (std::lgamma(top + 1) - std::lgamma(choose + 1) - std::lgamma(top - choose + 1)) / std::log(10.0);
}

} // namespace

TEST(Bounds, PublishedTableAllCells) {
    const std::vector<std::uint64_t> ns{250, 500, 750, 1000, 2000};
    const auto rows = bounds_table(ns, 3, Epsilon::ratio(1, 6), 10);
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& r : rows) {
        const auto& ref = verify::reference_table().at(r.n);
        EXPECT_EQ(r.quotient.scientific(), ref[0]) << "n=" << r.n;
        EXPECT_EQ(r.hilbert.scientific(), ref[1]) << "n=" << r.n;
        EXPECT_EQ(r.lexsort.scientific(), ref[2]) << "n=" << r.n;
        EXPECT_EQ(r.hypercube.scientific(), ref[3]) << "n=" << r.n;
    }
}

TEST(Bounds, QuotientExamples) {
    EXPECT_EQ(bound_quotient_upper(query(250, 3, 1, 6)).scientific(), "2.1e+36");
    EXPECT_EQ(bound_quotient_upper(query(2000, 3, 1, 6)).scientific(), "2.0e+59");
    const auto trivial = bound_quotient_upper(query(2, 1, 1, 2));
    ASSERT_TRUE(trivial.exact);
    EXPECT_EQ(*trivial.exact, 1);
    // k = ceil(1/(2*0.3)) = 2, so C(n + 8 - 1, n) for d = 3.
    EXPECT_EQ(*bound_quotient_upper(query(4, 3, 3, 10)).exact, pascal(11, 4));
}

TEST(Bounds, LexsortExamples) {
    EXPECT_EQ(bound_lexsort_lower(query(250, 3, 1, 6)).scientific(), "1.1e+239");
    EXPECT_EQ(bound_lexsort_lower(query(1000, 3, 1, 6)).scientific(), "5.2e+954");
    EXPECT_EQ(*bound_lexsort_lower(query(2, 2, 1, 2)).exact, 1);
    EXPECT_EQ(*bound_lexsort_lower(query(3, 2, 1, 4)).exact, 16); // 2^{(2-1)*3+1}
    EXPECT_THROW(bound_lexsort_lower(query(250, 3, 1, 5)), DomainError);
    EXPECT_THROW(bound_lexsort_lower(query(1, 3, 1, 6)), DomainError);
}

TEST(Bounds, HypercubeExamples) {
    EXPECT_EQ(bound_hypercube_exact(query(250, 3, 1, 6)).scientific(), "6.9e+357");
    EXPECT_EQ(bound_hypercube_exact(query(2000, 3, 1, 6)).scientific(), "5.3e+2862");
    EXPECT_EQ(*bound_hypercube_exact(query(1, 1, 1, 2)).exact, 1);
    EXPECT_THROW(bound_hypercube_exact(query(3, 3, 2, 7)), DomainError);
}

TEST(Bounds, HilbertAtOrderTen) {
    EXPECT_EQ(bound_hilbert_upper(query(500, 3, 1, 6, 10)).scientific(), "7.9e+278");
    EXPECT_EQ(bound_hilbert_upper(query(250, 3, 1, 6, 10)).scientific(), "5.3e+193");
    // 1/(2 delta) = 2 / (1/6 - 1/2048)^3 rounds up to 436.
    EXPECT_EQ(bounds::detail::ceil_rational(hilbert_half_inverse_delta(query(1, 3, 1, 6, 10))), 436);
}

TEST(Bounds, HilbertLimitValues) {
    // Limit: ceil(2 / (1/6)^3) = 432 cells for every n.
    EXPECT_EQ(bounds::detail::ceil_rational(hilbert_half_inverse_delta(query(1, 3, 1, 6))), 432);
    const std::map<std::uint64_t, std::string> frozen = {
        {250, "8.5e+192"}, {500, "3.7e+277"}, {750, "9.0e+334"}, {1000, "4.2e+378"}, {2000, "4.5e+491"}};
    for (const auto& [n, text] : frozen) {
        const auto v = bound_hilbert_upper(query(n, 3, 1, 6));
        EXPECT_EQ(v.scientific(), text) << "n=" << n;
        EXPECT_EQ(v.formula_id, "hilbert-upper-limit");
    }
}

TEST(Bounds, HilbertSingletonCountsCells) {
    // 2^{-m-1} = eps/2 with eps = 1/4 gives m = 2; delta = 1/32, so C(16, 1) = 16.
    EXPECT_EQ(*bound_hilbert_upper(query(1, 1, 1, 4, 2)).exact, 16);
}

TEST(Bounds, HilbertHypothesis) {
    EXPECT_THROW(bound_hilbert_upper(query(10, 3, 1, 6, 1)), HypothesisError);
    EXPECT_THROW(bound_hilbert_upper(query(10, 3, 1, 8, 2)), HypothesisError);
    EXPECT_NO_THROW(bound_hilbert_upper(query(10, 3, 1, 6, 2)));
}

TEST(Bounds, HilbertMonotoneInOrderAndConverges) {
    // eps = 0.3, d = 3: 2 / eps^3 = 74.07..., not an integer, so large m reaches the limit exactly.
    const auto limit = bound_hilbert_upper(query(500, 3, 3, 10));
    double prev = INFINITY;
    for (unsigned m = 2; m <= 40; ++m) {
        const auto v = bound_hilbert_upper(query(500, 3, 3, 10, m));
        EXPECT_LE(v.log10, prev + 1e-12) << "m=" << m;
        EXPECT_GE(v.log10, limit.log10 - 1e-12);
        prev = v.log10;
    }
    EXPECT_EQ(*bound_hilbert_upper(query(500, 3, 3, 10, 40)).exact, *limit.exact);
}

TEST(Bounds, HilbertLimitOnIntegerBoundary) {
    // 2 / (1/6)^3 = 432 exactly; every finite m has a slightly smaller gap and so rounds up to 433.
    for (unsigned m : {12u, 20u, 40u, 60u}) {
        EXPECT_EQ(bounds::detail::ceil_rational(hilbert_half_inverse_delta(query(1, 3, 1, 6, m))), 433) << m;
    }
}

TEST(Bounds, ExactAndLogAgree) {
    for (std::uint64_t n : {1u, 7u, 250u, 2000u}) {
        for (const auto& v : {bound_quotient_upper(query(n, 3, 1, 6)), bound_hilbert_upper(query(n, 3, 1, 6, 10)),
                              bound_hypercube_exact(query(n, 3, 1, 6))}) {
            ASSERT_TRUE(v.exact);
            EXPECT_EQ(v.exact->str().size(), v.digits()) << v.formula_id << " n=" << n;
        }
    }
    // Quotient log10 against a lgamma evaluation of C(n + 26, n).
    EXPECT_NEAR(bound_quotient_upper(query(250, 3, 1, 6)).log10, lgamma_log10_binomial(276, 250), 1e-9);
}

TEST(Bounds, OrderingAcrossFormulas) {
    for (std::int64_t k = 1; k <= 6; ++k) {
        for (std::uint64_t n : {2u, 10u, 100u}) {
            const auto q = query(n, 3, 1, 2 * k);
            EXPECT_LE(bound_quotient_upper(q).log10, bound_hypercube_exact(q).log10 + 1e-12);
        }
    }
}

TEST(Bounds, MultisetCount) {
    EXPECT_EQ(multiset_count(2, 2), 3);
    EXPECT_EQ(multiset_count(3, 4), 20);
    EXPECT_EQ(multiset_count(1, 17), 17);
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned m = 1; m <= 6; ++m) {
            EXPECT_EQ(multiset_count(n, m), verify::brute_multiset_classes(n, m)) << n << "," << m;
            EXPECT_EQ(multiset_count(n, m), pascal(n + m - 1, n));
        }
    }
    EXPECT_THROW(multiset_count(0, 3), DomainError);
}

TEST(Bounds, GroupCardinality) {
    LogValue one{0.0, BigInt(1), "x"};
    EXPECT_EQ(*bound_group_cardinality(one, 2).exact, 2);
    const auto q = bound_quotient_upper(query(5, 2, 1, 4));
    const auto g = bound_group_cardinality(q, factorial(5));
    EXPECT_EQ(*g.exact, *q.exact * 120);
    EXPECT_NEAR(g.log10, q.log10 + std::log10(120.0), 1e-9);
    EXPECT_THROW(bound_group_cardinality(one, 0), DomainError);
}

TEST(Bounds, EpsilonParsing) {
    EXPECT_EQ(Epsilon::parse("1/6").value(), Rational(1, 6));
    EXPECT_EQ(Epsilon::parse("0.25").value(), Rational(1, 4));
    EXPECT_EQ(*Epsilon::parse("0.125").half_inverse(), 4);
    EXPECT_FALSE(Epsilon::parse("0.3").half_inverse());
    EXPECT_THROW(Epsilon::parse("abc"), DomainError);
    EXPECT_THROW(Epsilon::parse("1/0"), DomainError);
    EXPECT_EQ(Epsilon::parse("01/06").value(), Rational(1, 6));
    EXPECT_EQ(Epsilon::parse(".5").value(), Rational(1, 2));
    EXPECT_EQ(Epsilon::parse("2").value(), Rational(2));
    EXPECT_THROW(Epsilon::parse("0x10"), DomainError);
    EXPECT_THROW(Epsilon::parse("0.1.2"), DomainError);
    EXPECT_THROW(Epsilon::parse(""), DomainError);
    EXPECT_THROW(bound_quotient_upper(query(5, 3, 3, 2)), DomainError);
}

TEST(Bounds, ScientificFormatting) {
    EXPECT_EQ((LogValue{std::log10(9.96e5), BigInt(996000), "x"}).scientific(), "1.0e+6");
    EXPECT_EQ((LogValue{std::log10(1234.0), BigInt(1234), "x"}).scientific(3), "1.23e+3");
    EXPECT_EQ((LogValue{0.0, BigInt(1), "x"}).scientific(), "1.0e+0");
}

TEST(Generalization, Examples) {
    GeneralizationInputs a;
    a.epsilon = 0.0;
    a.delta = 1.0;
    a.covering_number = 1.0;
    a.loss_bound = 1.0;
    a.samples = 2;
    EXPECT_NEAR(generalization_rhs(a), std::sqrt(std::log(2.0)), 1e-12);
    EXPECT_NEAR(generalization_rhs(a), 0.8326, 5e-5);

    GeneralizationInputs b;
    b.epsilon = 0.1;
    b.loss_bound = 1.0;
    b.covering_number = 100.0;
    b.delta = 0.05;
    b.samples = 10000;
    EXPECT_NEAR(generalization_rhs(b), 0.52025843033197, 1e-12);

    double prev = 0.0;
    for (double n_cover = 1.0; n_cover <= 1e6; n_cover *= 3.0) {
        b.covering_number = n_cover;
        const double v = generalization_rhs(b);
        EXPECT_GE(v, prev);
        prev = v;
    }
    b.delta = 0.0;
    EXPECT_THROW(generalization_rhs(b), DomainError);
    b.delta = 0.5;
    b.samples = 0;
    EXPECT_THROW(generalization_rhs(b), DomainError);
}

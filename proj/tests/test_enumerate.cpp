#include <doctest.h>

#include <cmath>

#include "dgs/enumerate.hpp"
#include "dgs/families.hpp"
#include "dgs/spectral.hpp"
#include "dgs/verify.hpp"

using namespace dgs;

TEST_CASE("mask encoding round trip") {
    for (int n = 2; n <= 4; ++n) {
        Digraph c = families::cycle(n);
        CHECK(digraph_from_mask(n, mask_from_digraph(c)) == c);
    }
    CHECK(offdiagonal_cells(5) == 20);
}

TEST_CASE("enumeration counts") {
    // n = 2: the digon is the only strongly connected digraph
    CHECK(enumerate_scd(2).size() == 1);

    // n = 3: count cross-checked against the DFS-based oracle, which is an
    // independent implementation of strong connectivity
    int dfs_count = 0;
    for (uint32_t mask = 0; mask < (1u << 6); ++mask)
        if (is_strongly_connected(digraph_from_mask(3, mask))) ++dfs_count;
    CHECK(static_cast<int>(enumerate_scd(3).size()) == dfs_count);
    CHECK(dfs_count == 18);

    int dfs4 = 0;
    for (uint32_t mask = 0; mask < (1u << 12); ++mask)
        if (is_strongly_connected(digraph_from_mask(4, mask))) ++dfs4;
    CHECK(static_cast<int>(sweep_scd(4).size()) == dfs4);
}

TEST_CASE("every enumerated digraph is simple and strongly connected") {
    for_each_scd(3, [](const Digraph& d) {
        CHECK(d.simple());
        CHECK(is_strongly_connected(d));
    });
    CHECK_THROWS_AS(enumerate_scd(6), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_scd(1), std::invalid_argument);
}

TEST_CASE("sweep records agree with the general-purpose implementations") {
    auto records = sweep_scd(4);
    size_t step = 37;  // spot-check a deterministic subset
    for (size_t i = 0; i < records.size(); i += step) {
        const auto& r = records[i];
        Digraph d = digraph_from_mask(4, r.mask);
        CHECK(r.q == doctest::Approx(q(d).radius).epsilon(1e-8));
        CHECK(r.rho == doctest::Approx(rho(d).radius).epsilon(1e-8));
        CHECK(static_cast<int>(r.girth) == girth(d));
        CHECK(static_cast<int>(r.clique) == clique_number(d));
        CHECK(static_cast<int>(r.kappa) == vertex_connectivity(d));
    }
}

TEST_CASE("sweep is deterministic across worker counts") {
    auto one = sweep_scd(4, 1);
    auto four = sweep_scd(4, 4);
    REQUIRE(one.size() == four.size());
    for (size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].mask == four[i].mask);
        CHECK(one[i].q == four[i].q);
        CHECK(one[i].rho == four[i].rho);
    }
}

TEST_CASE("random_scd is reproducible and valid") {
    std::mt19937 a(12345), b(12345);
    for (int i = 0; i < 5; ++i) {
        Digraph da = random_scd(7, a);
        Digraph db = random_scd(7, b);
        CHECK(da == db);
        CHECK(da.simple());
        CHECK(is_strongly_connected(da));
    }
}

TEST_CASE("extremal ranking at n = 4: minimum q sequence") {
    Ranking rk = extremal_ranking(4, Metric::q, false, 4);
    REQUIRE(rk.entries.size() == 4);
    CHECK(rk.entries[0].classes == std::vector<uint64_t>{canonical_form(families::cycle(4))});
    CHECK(rk.entries[1].classes == std::vector<uint64_t>{canonical_form(families::theta(0, 1, 1))});
    CHECK(rk.entries[2].classes == std::vector<uint64_t>{canonical_form(families::theta(1, 1, 0))});
    CHECK(rk.entries[3].classes == std::vector<uint64_t>{canonical_form(families::theta(0, 2, 0))});
    CHECK(rk.entries[0].value == doctest::Approx(2.0));
}

TEST_CASE("extremal ranking at n = 4: maximum q and rho") {
    Ranking rq = extremal_ranking(4, Metric::q, true, 2);
    REQUIRE(rq.entries.size() == 2);
    CHECK(rq.entries[0].value == doctest::Approx(6.0));
    CHECK(rq.entries[1].value == doctest::Approx(0.5 * (7 + std::sqrt(17.0))).epsilon(1e-9));
    CHECK(rq.entries[1].classes ==
          std::vector<uint64_t>{canonical_form(families::k3_family(4, 2, 1))});

    Ranking rr = extremal_ranking(4, Metric::rho, true, 2);
    REQUIRE(rr.entries.size() == 2);
    CHECK(rr.entries[0].value == doctest::Approx(3.0));
    CHECK(rr.entries[1].value == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("verify_theorem: verified verdicts on small ranges") {
    {
        TheoremReport rep = verify_theorem("C2.6", 4, 5);
        CHECK(rep.verdict == Verdict::verified);
    }
    for (const char* id : {"L3.5", "L4.3", "C4.4", "T5.3", "T7.2"}) {
        TheoremReport rep = verify_theorem(id, 4, 6);
        CHECK(rep.verdict == Verdict::verified);
        CHECK(rep.counterexample == std::nullopt);
    }
    TheoremReport t63 = verify_theorem("T6.3", 4, 7);
    CHECK(t63.verdict == Verdict::verified);
}

TEST_CASE("verify_theorem: the connectivity conjecture is refuted with a counterexample") {
    TheoremReport rep = verify_theorem("C6.7", 4, 4);
    CHECK(rep.verdict == Verdict::violated);
    CHECK(rep.evidence_only);
    REQUIRE(rep.counterexample.has_value());
    // the named counterexample is re-checkable: q(K(4,1,2)) = 3+sqrt(5) > 5
    Digraph ext = *rep.counterexample;
    CHECK(canonical_form(ext) == canonical_form(families::k3_family(4, 1, 2)));
    CHECK(q(ext).radius == doctest::Approx(3.0 + std::sqrt(5.0)).epsilon(1e-9));
    CHECK(vertex_connectivity(ext) == 1);
    CHECK(rep.detail.find("refuted") != std::string::npos);
}

TEST_CASE("verify_theorem: shared context reuses sweeps") {
    VerifyContext cx(2);
    TheoremReport a = verify_theorem("T5.4", 4, 4, &cx);
    TheoremReport b = verify_theorem("T7.3", 4, 4, &cx);
    CHECK(a.verdict == Verdict::verified);
    CHECK(b.verdict == Verdict::verified);
}

TEST_CASE("verify_theorem: validation") {
    CHECK_THROWS_AS(verify_theorem("T9.9"), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("T5.4", 4, 6), std::invalid_argument);  // budget
    CHECK_THROWS_AS(verify_theorem("T5.3", 4, 13), std::invalid_argument);
    CHECK(theorem_ids().size() == 19);
}

TEST_CASE("report text formatting") {
    TheoremReport rep = verify_theorem("T6.3", 4, 5);
    std::string text = theorem_report_text(rep);
    CHECK(text.find("T6.3") != std::string::npos);
    CHECK(text.find("verified") != std::string::npos);
}

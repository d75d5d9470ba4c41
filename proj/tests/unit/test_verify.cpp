#include <algorithm>

#include "doctest.h"
#include "partnorm/verify.hpp"

using namespace partnorm;

TEST_CASE("suite registry") {
    const auto names = verify_suite_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* expected :
         {"change-of-vars", "e-mi", "eq1", "extremal-all", "extremal-distinct", "extremal-odd",
          "extremal-rr", "fine", "golden", "lehmer-limit", "macmahon-pf", "min-size", "norm2",
          "pdot", "pennthm", "phi-dirichlet", "phi-sum", "stieltjes", "zeta-closed-forms"})
        CHECK(is_verify_suite(expected));
    CHECK_FALSE(is_verify_suite("nosuch"));
    CHECK_THROWS_AS(run_verify_suite("nosuch", {}), std::invalid_argument);
}

TEST_CASE("fine suite emits one exact pass per n") {
    VerifyOptions opt;
    opt.n_max = 20;
    const auto reports = run_verify_suite("fine", opt);
    REQUIRE(reports.size() == 21);
    for (const auto& rep : reports) CHECK(rep.status == VerifyStatus::ExactPass);
}

TEST_CASE("distinct suite flags the decomposition gaps") {
    VerifyOptions opt;
    opt.n_max = 20;
    const auto reports = run_verify_suite("extremal-distinct", opt);
    int flagged = 0;
    for (const auto& rep : reports) {
        if (rep.status == VerifyStatus::Discrepancy) {
            CHECK(rep.paper_flagged);
            CHECK_FALSE(rep.notes.empty());
            ++flagged;
        }
    }
    CHECK(flagged == 4);  // n = 4, 8, 13, 19
    CHECK(verify_passes(reports, true));
    CHECK_FALSE(verify_passes(reports, false));
}

TEST_CASE("rr suite flags only the case-v formula") {
    VerifyOptions opt;
    opt.n_max = 32;
    const auto reports = run_verify_suite("extremal-rr", opt);
    int flagged = 0;
    for (const auto& rep : reports) {
        if (rep.status == VerifyStatus::Discrepancy) {
            CHECK(rep.paper_flagged);
            CHECK(rep.identity.find("case=5") != std::string::npos);
            ++flagged;
        }
    }
    CHECK(flagged == 4);  // n = k(k+3): 4, 10, 18, 28 within range
    CHECK(verify_passes(reports, true));
}

TEST_CASE("stieltjes suite only reports") {
    VerifyOptions opt;
    opt.n_max = 500;
    const auto reports = run_verify_suite("stieltjes", opt);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == VerifyStatus::Skipped);
    CHECK(verify_passes(reports, false));
}

TEST_CASE("pennthm suite carries the formal k=0 note") {
    VerifyOptions opt;
    opt.n_max = 3;
    const auto reports = run_verify_suite("pennthm", opt);
    bool saw_k0 = false;
    for (const auto& rep : reports) {
        if (rep.identity == "pennthm/k=0-formal") {
            saw_k0 = true;
            CHECK(rep.status == VerifyStatus::Skipped);
        } else {
            CHECK(rep.status != VerifyStatus::Discrepancy);
        }
    }
    CHECK(saw_k0);
}

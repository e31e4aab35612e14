#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <levyspde/checks.hpp>
#include <levyspde/report.hpp>

#include <cstdio>

using namespace levyspde;

TEST_CASE("full acceptance suite") {
    AcceptanceOptions opt;  // default scale, determinism re-run included
    const Report rep = run_acceptance(opt);
    REQUIRE(rep.records.size() == 15);
    for (const auto& r : rep.records) {
        std::printf("%-28s %-12s estimate=%s reference=%s tol=%s %s\n",
                    r.id.c_str(), to_string(r.status),
                    format_double(r.estimate).c_str(),
                    format_double(r.reference).c_str(),
                    format_double(r.tolerance).c_str(), r.note.c_str());
        std::fflush(stdout);
        CAPTURE(r.id);
        CAPTURE(r.note);
        CHECK(r.status != CheckStatus::Fail);
    }
    CHECK_FALSE(rep.any_failed());
}

#include <string>

#include "doctest.h"

#include "lcw/sweeps.hpp"

using namespace lcw;

namespace {

SweepOptions with_threads(int t) {
    SweepOptions o;
    o.threads = t;
    o.seed = 7;
    return o;
}

// everything observable except wall time must be thread-count independent
void check_equivalent(const SweepResult& serial, const SweepResult& par) {
    CHECK(serial.name == par.name);
    CHECK(serial.checked == par.checked);
    CHECK(serial.violations == par.violations);
    CHECK(serial.notes == par.notes);
    CHECK(serial.details == par.details);
}

bool starts_with(const std::string& s, const std::string& prefix) {
    return s.rfind(prefix, 0) == 0;
}

}  // namespace

TEST_SUITE_BEGIN("sweeps");

TEST_CASE("oracle agreement sweep is clean") {
    SweepResult r = sweep_oracle_agreement(with_threads(1));
    CHECK(r.checked == 52);  // 1+2+4+11+34 classes
    CHECK(r.violations == 0);
    CHECK(r.notes == "n<=5 representatives; max_lcw=4");
    CHECK(r.details.empty());
}

TEST_CASE("degenerate facts sweep is clean through n=6") {
    SweepResult r = sweep_degenerate_facts(with_threads(1), 6);
    CHECK(r.checked == 208);
    CHECK(r.violations == 0);
    CHECK(r.notes == "n<=6; q2_free=29 p3_free=29");  // partition numbers 1+2+3+5+7+11
}

TEST_CASE("composition audits are clean at reduced scale") {
    SweepResult r = sweep_composition_audits(with_threads(1), 100);
    CHECK(r.checked == 400);
    CHECK(r.violations == 0);
    CHECK(r.notes == "trials_each=100 transforms=4");
}

TEST_CASE("contrapositive sweep is clean through n=6") {
    SweepResult r = sweep_contrapositive(with_threads(1), 6);
    CHECK(r.checked == 208);
    CHECK(r.violations == 0);
    CHECK(starts_with(r.notes, "n<=6; max_lcw="));
}

TEST_CASE("universal embedding sweep is clean through n=6") {
    SweepResult r = sweep_universal_embedding(with_threads(1), 6);
    CHECK(r.checked == 208);
    CHECK(r.violations == 0);
    CHECK(r.notes == "n<=6; qt_graphs=84");  // rooted forests 1+2+4+9+20+48
}

TEST_CASE("growth ladder of the universal hosts") {
    SweepResult r = sweep_qt_growth(with_threads(1), 4);
    CHECK(r.checked == 4);
    CHECK(r.violations == 0);
    CHECK(r.notes == "w=[1,2,3,3]");
}

TEST_CASE("decomposition sweep is clean at reduced scale") {
    SweepResult r = sweep_decomposition(with_threads(1), 200, 6);
    CHECK(r.checked == 207 + 200);  // n=1 has no decomposition
    CHECK(r.violations == 0);
    CHECK(starts_with(r.notes, "exhaustive n<=6 plus 200 random;"));
}

TEST_CASE("builder sweep is clean at reduced scale") {
    SweepResult r = sweep_builder(with_threads(1), 200, 6);
    CHECK(r.checked == 208 + 200);
    CHECK(r.violations == 0);
    CHECK(starts_with(r.notes, "exhaustive n<=6 plus 200 random; max_slack="));
}

TEST_CASE("results are identical under the serial and parallel paths") {
    check_equivalent(sweep_composition_audits(with_threads(1), 60),
                     sweep_composition_audits(with_threads(4), 60));
    check_equivalent(sweep_decomposition(with_threads(1), 150, 6),
                     sweep_decomposition(with_threads(4), 150, 6));
    check_equivalent(sweep_builder(with_threads(1), 80, 5),
                     sweep_builder(with_threads(4), 80, 5));
    check_equivalent(sweep_contrapositive(with_threads(1), 5),
                     sweep_contrapositive(with_threads(4), 5));
    check_equivalent(sweep_universal_embedding(with_threads(1), 6),
                     sweep_universal_embedding(with_threads(4), 6));
}

TEST_CASE("seed changes the random portion but not cleanliness") {
    SweepOptions a = with_threads(2);
    SweepOptions b = with_threads(2);
    b.seed = 99;
    SweepResult ra = sweep_decomposition(a, 120, 4);
    SweepResult rb = sweep_decomposition(b, 120, 4);
    CHECK(ra.violations == 0);
    CHECK(rb.violations == 0);
    CHECK(ra.checked == rb.checked);
}

TEST_SUITE_END();

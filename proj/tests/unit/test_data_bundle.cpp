#include "modecert/data_bundle.hpp"

#include "doctest.h"

#include <cstdlib>

using namespace modecert;

namespace {

std::string dataDir() {
    const char* env = std::getenv("MODECERT_DATA_DIR");
    return env ? env : "data";
}

}  // namespace

TEST_CASE("ingest parses every table and pins the anchors") {
    DataBundle b = ingest(dataDir());

    // approximants: exact series heads
    CHECK(b.g1.coefficient(0, 1) == GaussianRational(Rational(1)));
    CHECK(b.g1.coefficient(1, 0) == GaussianRational(Rational(-1, 2)));
    CHECK(b.g1.coefficient(1, 1) == GaussianRational(Rational(3, 4)));
    CHECK(b.g1.coefficient(1, 2) == GaussianRational(Rational(1, 4)));
    CHECK(b.h1.coefficient(0, 0) == GaussianRational(Rational(1)));
    CHECK(b.h1.coefficient(1, 0) == GaussianRational(Rational(-7, 5)));
    CHECK(b.g1.degreeT() == 6);
    CHECK(b.g2.degreeT() == 7);
    CHECK(b.h1.degreeT() == 5);
    CHECK(b.h2.degreeT() == 6);

    // growth tables
    CHECK(b.tableJ[0] == Rational(1));
    CHECK(b.tableJ[30] == Rational(20543752, 10000000));
    CHECK(b.tableM[1] == Rational(32466329, 10000000));
    CHECK(b.tableP.at(10) == Rational(2847, 2737));

    // quasi-log rows
    CHECK(b.quasiLog.lower[0][1][0] == GaussianRational(Rational(49, 12), Rational(43, 15)));
    CHECK(b.quasiLog.lower[1][50][5] == GaussianRational(Rational(-1, 341), Rational(1, 442)));
    CHECK(b.quasiLog.upper[0][1][0] == GaussianRational(Rational(83, 11), Rational(34, 11)));
    CHECK(b.quasiLog.upper[1][50][5] == GaussianRational(Rational(-1, 832), Rational(1, 655)));

    // anchor function
    CHECK(b.anchorF.poly[2] == GaussianRational(Rational(1, 920)));
    CHECK(b.anchorF.poles.size() == 19);
    CHECK(b.anchorQPoleCount == 2);
    CHECK(b.anchorF.poles[0].location == GaussianRational(Rational(-1735, 84)));

    // partitions and subsegments
    CHECK(b.partition("P1").size() == 9);
    CHECK(b.partition("P2").size() == 9);
    CHECK(b.partition("P3").size() == 7);
    CHECK(b.partition("P4").size() == 7);
    CHECK(b.partition("PF").size() == 6);
    CHECK(b.side(1).size() == 4);
    CHECK(b.side(3).size() == 4);
    CHECK(b.side(6).size() == 1);

    // reflection symmetry of the paired partitions through 1/4 + (9/4) i
    GaussianRational c(Rational(1, 2), Rational(9, 2));
    const auto& p1 = b.partition("P1");
    const auto& p2 = b.partition("P2");
    for (size_t i = 0; i < p1.size(); ++i) CHECK(p1[i] + p2[i] == c);
}

TEST_CASE("ingest fails loudly on a corrupted file") {
    CHECK_THROWS_AS(ingest("/nonexistent-dir"), DataError);
}

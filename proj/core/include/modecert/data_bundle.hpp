#pragma once

#include "modecert/bounds.hpp"
#include "modecert/poly.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace modecert {

/// Raised on unreadable, malformed or checksum-mismatching data files.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One boundary subsegment of the tall strip, tagged by side and index.
struct BoundarySubsegment {
    int side = 0;  // 1..6
    int index = 0; // 1-based within the side
    GaussianRational from;
    GaussianRational to;
};

/// The blended Chebyshev coefficient table of the quasi-solution logs:
/// variant 1 weighs the left edge of the strip, variant 2 the right edge.
struct QuasiLogTable {
    // [variant-1][n][i], n = 1..50, i = 0..5
    using Block = std::array<std::array<std::array<GaussianRational, 6>, 51>, 2>;
    Block lower;  // rows for the lower boundary piece (10 <= Im lambda <= 70)
    Block upper;  // rows for the upper boundary piece (70 < Im lambda <= 380)
};

/// All ingested coefficient data, exactly as parsed.
struct DataBundle {
    // piecewise approximants: powers of t (G side) / powers of s = 1-t (H side)
    BivarPoly g1, g2;  // [0,1/4], (1/4,1/2]
    BivarPoly h1, h2;  // s in [0,1/4], s in (1/4,1/2]

    std::vector<Rational> tableJ;  // index 0..30
    std::vector<Rational> tableM;  // index 0..30
    std::map<int, Rational> tableP;

    QuasiLogTable quasiLog;

    RationalFunctionForm anchorF;
    size_t anchorQPoleCount = 0;  // first poles in anchorF.poles came from the two-pole head

    std::map<std::string, std::vector<GaussianRational>> partitions;  // P1..P4, PF
    std::vector<BoundarySubsegment> subsegments;                      // L table

    /// Partition points for a named partition; throws DataError if missing.
    const std::vector<GaussianRational>& partition(const std::string& name) const;
    /// All subsegments belonging to one side.
    std::vector<BoundarySubsegment> side(int side) const;
};

/// Parses and checksum-verifies every data file in the directory.
/// Malformed entries are reported with file and line number.
DataBundle ingest(const std::string& dataDir);

}  // namespace modecert

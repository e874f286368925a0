#pragma once

#include "gwloc/rational.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gwloc {

/// Degree -> exact value. Degrees must form the contiguous range 1..D.
using DegreeTable = std::map<int, Rational>;

class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Instanton numbers n_g(d) for one genus.
struct BPSTable {
    int genus = 0;
    DegreeTable entries;
};

/// Throws InvalidInput unless the keys are exactly 1..D (an empty table is allowed).
void require_contiguous(const DegreeTable& table, std::string_view what);

/// Standard genus-one invariant of a Calabi-Yau threefold from its genus-zero
/// invariant and the reduced (main-component) term: N0/12 + reduced.
Rational genus1_from_reduced(const Rational& genus0, const Rational& reduced_term);

/// GW_1 - GW_1^0 for a geometric class on Y with dim_R Y in {4, 6}.
Rational gw_difference(int real_dim, int c1_dot_A, const Rational& genus0);

/// N0(d) = Σ_{k|d} n0(d/k)/k^3.
DegreeTable gw0_from_bps0(const BPSTable& bps0);
BPSTable bps0_from_gw0(const DegreeTable& genus0);

/// N1(d) = (1/12) Σ_{k|d} n0(d/k)/k + Σ_{k|d} n1(d/k)/k.
DegreeTable gw1_from_bps(const BPSTable& bps1, const BPSTable& bps0);
BPSTable bps1_from_gw1(const DegreeTable& genus1, const BPSTable& bps0);

/// Published low-degree quintic data: reduced genus-one term, N1(d) and n1(d).
struct Table1Data {
    DegreeTable reduced;
    DegreeTable genus1_gw;
    DegreeTable genus1_bps;
};

/// Parses the tab-separated Table-1 record; throws InvalidInput on malformed input.
Table1Data parse_table1(std::string_view text);
Table1Data load_table1_file(const std::string& path);
/// The record compiled in from data/table1.tsv.
const Table1Data& builtin_table1();

struct QuinticTableRow {
    int degree = 0;
    Rational reduced_term;   ///< published
    Rational genus1_gw;      ///< published N1(d)
    Rational genus1_bps;     ///< published n1(d)
    Rational genus0_gw;      ///< N0(d) from the engine
    Rational genus0_bps;     ///< n0(d) inverted from engine N0
    Rational regenerated_genus1_gw;   ///< N0/12 + reduced
    Rational regenerated_genus1_bps;  ///< n1(d) inverted from regenerated N1
    bool consistent = false;
    std::optional<Rational> corrected_genus1_gw;
    /// Both derivations of the corrected N1(d), present when inconsistent.
    std::optional<Rational> correction_via_reduced;
    std::optional<Rational> correction_via_bps;
    bool routes_agree = true;
};

using Genus0Source = std::function<Rational(int degree)>;

/// Rebuilds the quintic table from engine N0 values and the published rows, checking
/// both published identities per degree and correcting rows that violate them.
std::vector<QuinticTableRow> reproduce_table1(int max_degree, const DegreeTable& reduced_terms,
                                              const DegreeTable& genus1_gw, const DegreeTable& genus1_bps,
                                              const Genus0Source& genus0);

/// Rational plane curves through 3d-1 points, by the associativity recursion.
DegreeTable wdvv_p2(int max_degree);

/// Reads "d <ws> value" lines ('#' comments allowed) into a contiguous table.
DegreeTable parse_degree_table(std::string_view text);

} // namespace gwloc

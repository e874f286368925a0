#include "gwloc/relations.hpp"

#include "gwloc/model.hpp"

#include <sstream>

namespace gwloc {

namespace {

std::vector<int> divisors(int d) {
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0) out.push_back(k);
    return out;
}

const Rational& entry(const DegreeTable& table, int d, std::string_view what) {
    const auto it = table.find(d);
    if (it == table.end()) throw InvalidInput(std::string(what) + " has no entry for degree " + std::to_string(d));
    return it->second;
}

mpz_class binomial(int n, int k) {
    mpz_class out;
    if (k < 0 || k > n) return out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

} // namespace

void require_contiguous(const DegreeTable& table, std::string_view what) {
    int expected = 1;
    for (const auto& [d, value] : table) {
        if (d != expected)
            throw InvalidInput(std::string(what) + " degrees must be contiguous from 1; missing " +
                               std::to_string(expected));
        ++expected;
    }
}

Rational genus1_from_reduced(const Rational& genus0, const Rational& reduced_term) {
    return genus0 / Rational(12) + reduced_term;
}

Rational gw_difference(int real_dim, int c1_dot_A, const Rational& genus0) {
    if (real_dim == 4) return Rational(0);
    if (real_dim == 6) return Rational(2 - c1_dot_A, 24) * genus0;
    throw UnsupportedDimension("genus-one correction is known only for real dimension 4 or 6, got " +
                               std::to_string(real_dim));
}

DegreeTable gw0_from_bps0(const BPSTable& bps0) {
    require_contiguous(bps0.entries, "n0 table");
    DegreeTable out;
    for (const auto& [d, unused] : bps0.entries) {
        Rational sum;
        for (int k : divisors(d)) sum += entry(bps0.entries, d / k, "n0 table") / Rational(k).pow(3);
        out[d] = sum;
    }
    return out;
}

BPSTable bps0_from_gw0(const DegreeTable& genus0) {
    require_contiguous(genus0, "N0 table");
    BPSTable out{0, {}};
    for (const auto& [d, value] : genus0) {
        Rational n = value;
        for (int k : divisors(d))
            if (k > 1) n -= out.entries.at(d / k) / Rational(k).pow(3);
        out.entries[d] = n;
    }
    return out;
}

DegreeTable gw1_from_bps(const BPSTable& bps1, const BPSTable& bps0) {
    require_contiguous(bps1.entries, "n1 table");
    DegreeTable out;
    for (const auto& [d, unused] : bps1.entries) {
        Rational genus0_part;
        Rational genus1_part;
        for (int k : divisors(d)) {
            genus0_part += entry(bps0.entries, d / k, "n0 table") / Rational(k);
            genus1_part += entry(bps1.entries, d / k, "n1 table") / Rational(k);
        }
        out[d] = genus0_part / Rational(12) + genus1_part;
    }
    return out;
}

BPSTable bps1_from_gw1(const DegreeTable& genus1, const BPSTable& bps0) {
    require_contiguous(genus1, "N1 table");
    BPSTable out{1, {}};
    for (const auto& [d, value] : genus1) {
        Rational genus0_part;
        for (int k : divisors(d)) genus0_part += entry(bps0.entries, d / k, "n0 table") / Rational(k);
        Rational n = value - genus0_part / Rational(12);
        for (int k : divisors(d))
            if (k > 1) n -= out.entries.at(d / k) / Rational(k);
        out.entries[d] = n;
    }
    return out;
}

std::vector<QuinticTableRow> reproduce_table1(int max_degree, const DegreeTable& reduced_terms,
                                              const DegreeTable& genus1_gw, const DegreeTable& genus1_bps,
                                              const Genus0Source& genus0) {
    if (max_degree < 0) throw InvalidInput("max degree must be nonnegative");
    std::vector<QuinticTableRow> rows;
    if (max_degree == 0) return rows;

    DegreeTable n0_input;
    DegreeTable regenerated;
    DegreeTable published_n1;
    for (int d = 1; d <= max_degree; ++d) {
        n0_input[d] = genus0(d);
        regenerated[d] = genus1_from_reduced(n0_input[d], entry(reduced_terms, d, "reduced-term row"));
        published_n1[d] = entry(genus1_bps, d, "n1 row");
    }
    const BPSTable bps0 = bps0_from_gw0(n0_input);
    const BPSTable regenerated_bps1 = bps1_from_gw1(regenerated, bps0);
    // N1 predicted by the multiple-cover expansion from the published n1 values.
    const DegreeTable expanded = gw1_from_bps(BPSTable{1, published_n1}, bps0);

    for (int d = 1; d <= max_degree; ++d) {
        QuinticTableRow row;
        row.degree = d;
        row.reduced_term = entry(reduced_terms, d, "reduced-term row");
        row.genus1_gw = entry(genus1_gw, d, "N1 row");
        row.genus1_bps = published_n1.at(d);
        row.genus0_gw = n0_input.at(d);
        row.genus0_bps = bps0.entries.at(d);
        row.regenerated_genus1_gw = regenerated.at(d);
        row.regenerated_genus1_bps = regenerated_bps1.entries.at(d);
        row.consistent = row.regenerated_genus1_gw == row.genus1_gw && expanded.at(d) == row.genus1_gw;
        if (!row.consistent) {
            row.correction_via_reduced = regenerated.at(d);
            row.correction_via_bps = expanded.at(d);
            row.routes_agree = *row.correction_via_reduced == *row.correction_via_bps;
            row.corrected_genus1_gw = row.correction_via_reduced;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

DegreeTable wdvv_p2(int max_degree) {
    if (max_degree < 1) throw InvalidInput("max degree must be >= 1");
    std::vector<mpz_class> counts(static_cast<std::size_t>(max_degree) + 1);
    counts[1] = 1;
    for (int d = 2; d <= max_degree; ++d) {
        mpz_class sum;
        for (int d1 = 1; d1 < d; ++d1) {
            const int d2 = d - d1;
            const mpz_class bracket = d2 * binomial(3 * d - 4, 3 * d1 - 2) - d1 * binomial(3 * d - 4, 3 * d1 - 1);
            sum += counts[static_cast<std::size_t>(d1)] * counts[static_cast<std::size_t>(d2)] * d1 * d1 * d2 * bracket;
        }
        counts[static_cast<std::size_t>(d)] = sum;
    }
    DegreeTable out;
    for (int d = 1; d <= max_degree; ++d) out[d] = Rational(counts[static_cast<std::size_t>(d)]);
    return out;
}

DegreeTable parse_degree_table(std::string_view text) {
    DegreeTable out;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        int d = 0;
        std::string value;
        if (!(fields >> d >> value))
            throw InvalidInput("malformed degree table line " + std::to_string(line_no) + ": " + line);
        try {
            if (!out.emplace(d, Rational::parse(value)).second)
                throw InvalidInput("duplicate degree " + std::to_string(d));
        } catch (const std::invalid_argument& e) {
            throw InvalidInput("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    require_contiguous(out, "degree table");
    return out;
}

} // namespace gwloc

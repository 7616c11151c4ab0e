#pragma once

// The table of S(d, c) and S4(d, c) with their expansions for coprime
// 1 <= d < c <= max_c, and the published values for max_c = 10.

#include <optional>
#include <string>
#include <vector>

#include "hardy/cfe.hpp"
#include "hardy/core.hpp"

namespace hardy {

// The theta side is absent exactly when c + d is even, the gamma02 side
// exactly when d is even.
struct TableRow {
    Integer d;
    Integer c;
    std::optional<ContinuedFraction> theta;
    std::optional<Integer> s;
    std::optional<ContinuedFraction> gamma02;
    std::optional<Integer> s4;
};

// Needs max_c >= 2. Rows are ordered by (c, d).
std::vector<TableRow> build_table(long max_c);

// Aligned text in the column order (d, c) | theta | S | gamma02 | S4, with
// x for an absent entry and long runs compressed.
std::string format_table_text(const std::vector<TableRow> &rows);
// d,c,theta,S,gamma02,S4 with uncompressed expansions.
std::string format_table_csv(const std::vector<TableRow> &rows);

// One published row, as printed: "x" for absent entries, runs in the
// compressed form, and the (2, 7) theta entry with its explicit zero head.
struct ReferenceRow {
    long d;
    long c;
    const char *theta;
    const char *s;
    const char *gamma02;
    const char *s4;
};

const std::vector<ReferenceRow> &reference_table();

// Printed theta entry normalised for comparison: a leading "0," inside
// the brackets is read as a zero head and dropped.
std::string normalize_theta_text(std::string text);

struct RowCheck {
    bool pass = true;
    std::string problem; // first mismatch, empty on success
};

// S and S4 exactly, the theta string exactly (after normalisation), the
// gamma02 expansion by validity and value, and absence on both sides.
RowCheck check_row(const TableRow &computed, const ReferenceRow &ref);

} // namespace hardy

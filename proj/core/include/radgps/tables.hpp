#pragma once

#include <string>
#include <vector>

#include "radgps/mapping.hpp"

namespace radgps {

// One published reference cell: an eigenvalue or radial moment for a given
// potential, angular momentum and state, together with whatever independent
// comparison data accompanies it in the literature (closed-form values,
// variational bounds, or results from unrelated numerical methods).
struct RefEntry {
    int table;              // reference table id, 1..6
    const char* potential;  // descriptor accepted by parse_potential
    int l;                  // angular momentum
    int state;              // 0-based state index within (potential, l) = node count
    int moment_power;       // 0 = energy; otherwise the p of <r^p>
    const char* printed;    // published truncated string for this cell
    double reference;       // numeric acceptance target for this cell
    const char* paren;      // independent-method value printed in parentheses (nullptr: none)
    double exact;           // closed-form value (NaN: none)
    double bound_lo;        // independent eigenvalue bounds (NaN: none)
    double bound_hi;
};

// All embedded reference cells, grouped by table then column order.
const std::vector<RefEntry>& reference_entries();

// The cells of one table (1..6; throws std::out_of_range otherwise).
std::vector<RefEntry> table_entries(int table);

// Absolute tolerance on |computed - reference| for each table's cells.
double table_tolerance(int table);

// Verification outcome for one reference cell.
struct CellResult {
    RefEntry entry;
    double computed = 0.0;   // solver value (energy or moment)
    double error = 0.0;      // |computed - entry.reference|
    bool pass = false;
    std::string detail;      // failure explanation, empty when pass
};

struct TableReport {
    int table = 0;
    std::vector<CellResult> cells;
    bool pass = false;        // every cell passed
    double worst_error = 0.0; // max |computed - reference| over the table
};

// Solves every potential/l group of the table on the given grid and checks
// each cell: |computed - reference| <= table_tolerance(table); closed-form
// cells to 1e-9; bounded cells inside their brackets; table 3 parenthesized
// strings digit-for-digit against our truncation; table 6 parenthesized
// values to 1e-7. A state above the confinement ceiling fails its cell.
TableReport verify_table(int table, const GridSpec& grid = {});

} // namespace radgps

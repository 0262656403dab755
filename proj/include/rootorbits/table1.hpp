#pragma once

#include "rootorbits/orbits.hpp"

namespace rootorbits {

// One row of the reference table of standard affine systems: the system,
// the Coxeter word s_1...s_n, the ordered simples of the finite-orbit
// subsystem grouped by component, the component diagram, and kappa.
struct TableRow {
    std::string type;
    int n = 0;
    int k = 0;  // cycle labeling parameter, A(1) only
    std::vector<std::vector<IVec>> chains;
    std::string diagram;  // e.g. "A2xA1"
    Int kappa = 1;
};

std::vector<TableRow> golden_table1();

// Number of mutable integer entries across the golden rows (for the
// negative-control self test).
int table1_entry_count();

struct TableRowDiff {
    std::string label;
    bool match = false;
    std::string detail;
};

struct TableReport {
    std::vector<TableRowDiff> rows;
    bool all_match() const;
};

// Recompute every golden row from scratch and diff against the stored
// copy.  mutate_index >= 0 perturbs one golden integer first, so any
// single-entry corruption must be reported as a mismatch.
TableReport regenerate_table1(int mutate_index = -1);

std::string diagram_string(const UpsilonData& ud);

} // namespace rootorbits

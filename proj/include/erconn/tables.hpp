#pragma once

// The three reference result tables, regenerated from the bounds.

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace erconn {

struct NMinTable {
  std::vector<double> ps;  // rows
  std::vector<int> ns;     // columns
  std::vector<std::vector<std::int64_t>> cells;  // cells[row][col] = rounded-up N_min
};

struct ProbabilityRow {
  int n;
  double p;
  int union_size;
  double prob_lower;
};

// N_min for p in {1e-5, ..., 1e-1} and n in {10, ..., 1e5}.
NMinTable table_n_min();
// Probability bound for n = 50, N = 50, p in {0.05, 0.10, 0.15, 0.20, 0.25}.
std::vector<ProbabilityRow> table_probability_by_p();
// Probability bound for n = 50, p = 0.1, N in {25, 50, 75, 100, 125}.
std::vector<ProbabilityRow> table_probability_by_union_size();

// CSV renderings. Table 1 is a grid with header "p,10,100,1000,10000,100000";
// tables 2 and 3 are one row per column value with header
// "n,p,N,prob_lower". Integers carry no thousands separators.
void write_table_csv(std::ostream& out, int which, int precision = 3);

}  // namespace erconn

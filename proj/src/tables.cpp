#include "erconn/tables.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "erconn/bounds.hpp"
#include "erconn/error.hpp"

namespace erconn {
namespace {

std::vector<ProbabilityRow> probability_rows(int n, const std::vector<double>& ps,
                                             const std::vector<int>& sizes) {
  std::vector<ProbabilityRow> rows;
  for (double p : ps) {
    for (int size : sizes) {
      const ProbabilityBound b = connectivity_probability_bound(ModelParams(n, p), size);
      rows.push_back({n, p, size, b.value.value_or(0.0)});
    }
  }
  return rows;
}

}  // namespace

NMinTable table_n_min() {
  NMinTable t{{1e-5, 1e-4, 1e-3, 1e-2, 1e-1}, {10, 100, 1000, 10000, 100000}, {}};
  for (double p : t.ps) {
    auto& row = t.cells.emplace_back();
    for (int n : t.ns) row.push_back(n_min(ModelParams(n, p)).rounded_up);
  }
  return t;
}

std::vector<ProbabilityRow> table_probability_by_p() {
  return probability_rows(50, {0.05, 0.10, 0.15, 0.20, 0.25}, {50});
}

std::vector<ProbabilityRow> table_probability_by_union_size() {
  return probability_rows(50, {0.1}, {25, 50, 75, 100, 125});
}

void write_table_csv(std::ostream& out, int which, int precision) {
  switch (which) {
    case 1: {
      const NMinTable t = table_n_min();
      out << 'p';
      for (int n : t.ns) out << ',' << n;
      out << '\n';
      for (std::size_t r = 0; r < t.ps.size(); ++r) {
        out << t.ps[r];
        for (auto cell : t.cells[r]) out << ',' << cell;
        out << '\n';
      }
      return;
    }
    case 2:
    case 3: {
      const auto rows = which == 2 ? table_probability_by_p() : table_probability_by_union_size();
      out << "n,p,N,prob_lower\n";
      for (const auto& row : rows) {
        out << row.n << ',' << row.p << ',' << row.union_size << ',' << std::fixed
            << std::setprecision(precision) << row.prob_lower << std::defaultfloat
            << std::setprecision(6) << '\n';
      }
      return;
    }
    default:
      throw DomainError("table must be 1, 2 or 3, got " + std::to_string(which));
  }
}

}  // namespace erconn

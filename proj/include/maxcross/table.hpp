#pragma once

#include <cstdint>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "maxcross/errors.hpp"
#include "maxcross/formulas.hpp"
#include "maxcross/search.hpp"

namespace maxcross {

struct PublishedValue {
  std::int64_t value = 0;
  bool conjectured = false;  // printed in bold
};

/// The published table of maximum rectilinear crossing numbers, 4 <= n <= 10.
/// (4, 2) is printed as '-' and is absent here.
inline const std::map<std::pair<int, int>, PublishedValue>& published_table() {
  static const std::map<std::pair<int, int>, PublishedValue> table = {
      {{5, 2}, {5}},    {{6, 2}, {7}},    {{7, 2}, {14}},         {{8, 2}, {18}},   {{9, 2}, {27}},
      {{10, 2}, {32}},  {{4, 3}, {1}},    {{6, 3}, {15}},         {{8, 3}, {38}},   {{10, 3}, {70}},
      {{5, 4}, {5}},    {{6, 4}, {15}},   {{7, 4}, {35}},         {{8, 4}, {52, true}},
      {{9, 4}, {81}},   {{10, 4}, {105, true}},                   {{6, 5}, {15}},   {{8, 5}, {70}},
      {{10, 5}, {150}}, {{7, 6}, {35}},   {{8, 6}, {70}},         {{9, 6}, {126}},  {{10, 6}, {133, true}},
      {{8, 7}, {70}},   {{10, 7}, {210}}, {{9, 8}, {126}},        {{10, 8}, {210}}, {{10, 9}, {210}},
  };
  return table;
}

struct TableCell {
  int n = 0;
  int d = 0;
  std::int64_t value = 0;  // exact value, or the construction lower bound
  std::string status;      // proven | conjectured | discrepancy
  BoundReport bounds;
  std::optional<PublishedValue> published;
  std::optional<std::int64_t> convex_oracle;
};

struct TableOptions {
  int oracle_max_n = 8;  // run the convex search for cells with n up to this
  int workers = 1;
};

/// Every feasible (n, d) with 4 <= n <= max_n. A cell is a discrepancy when
/// the published value or the convex search disagrees with the computed value.
inline std::vector<TableCell> reproduce_table(int max_n, const TableOptions& options = {}) {
  detail::require(max_n >= 4 && max_n <= 10, "table needs 4 <= max_n <= 10");
  std::vector<TableCell> cells;
  for (int n = 4; n <= max_n; ++n) {
    for (int d = 2; d <= n - 1; ++d) {
      if (!feasible(n, d)) continue;
      TableCell cell;
      cell.n = n;
      cell.d = d;
      cell.bounds = best_known(n, d);
      cell.value = cell.bounds.lower;
      auto it = published_table().find({n, d});
      if (it != published_table().end()) cell.published = it->second;
      if (n <= options.oracle_max_n) {
        SearchOptions search;
        search.workers = options.workers;
        search.max_order = std::max(search.max_order, options.oracle_max_n);
        cell.convex_oracle = convex_max(n, d, search).max_crossings;
      }
      bool disagrees = (cell.published && cell.published->value != cell.value) ||
                       (cell.convex_oracle && *cell.convex_oracle != cell.value);
      cell.status = disagrees ? "discrepancy" : (cell.bounds.exact ? "proven" : "conjectured");
      cells.push_back(std::move(cell));
    }
  }
  return cells;
}

inline void write_table_csv(std::ostream& os, const std::vector<TableCell>& cells) {
  os << "n,d,value,status\n";
  for (const TableCell& c : cells) os << c.n << ',' << c.d << ',' << c.value << ',' << c.status << '\n';
}

inline void write_table_text(std::ostream& os, const std::vector<TableCell>& cells) {
  os << std::left << std::setw(4) << "n" << std::setw(4) << "d" << std::setw(8) << "value" << std::setw(13)
     << "status" << std::setw(11) << "published" << std::setw(8) << "convex"
     << "bounds\n";
  for (const TableCell& c : cells) {
    std::ostringstream published, oracle, bounds;
    if (c.published)
      published << c.published->value << (c.published->conjectured ? "*" : "");
    else
      published << '-';
    if (c.convex_oracle)
      oracle << *c.convex_oracle;
    else
      oracle << '-';
    bounds << '[' << c.bounds.lower << ", " << c.bounds.upper << ']';
    os << std::setw(4) << c.n << std::setw(4) << c.d << std::setw(8) << c.value << std::setw(13) << c.status
       << std::setw(11) << published.str() << std::setw(8) << oracle.str() << bounds.str() << '\n';
  }
  for (const TableCell& c : cells)
    if (c.status == "discrepancy")
      os << "note: (" << c.n << ',' << c.d << ") computed " << c.value << " vs published "
         << (c.published ? std::to_string(c.published->value) : std::string("-")) << '\n';
}

}  // namespace maxcross

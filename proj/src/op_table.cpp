#include "qcs/op_table.hpp"

#include <string>

namespace qcs {

  OpTable::OpTable(std::size_t n, std::vector<point_type> entries)
      : _n(n), _entries(std::move(entries)) {
    if (_entries.size() != n * n) {
      throw Error(ErrorKind::out_of_range,
                  "table of degree " + std::to_string(n) + " needs "
                      + std::to_string(n * n) + " entries, got "
                      + std::to_string(_entries.size()));
    }
    for (std::size_t i = 0; i < _entries.size(); ++i) {
      if (_entries[i] >= n) {
        throw Error(ErrorKind::out_of_range,
                    "entry (" + std::to_string(i / n) + ","
                        + std::to_string(i % n) + ") = "
                        + std::to_string(_entries[i]) + " is not below "
                        + std::to_string(n));
      }
    }
  }

  OpTable OpTable::from_rows(std::vector<std::vector<point_type>> const& rows) {
    std::size_t const       n = rows.size();
    std::vector<point_type> entries;
    entries.reserve(n * n);
    for (auto const& r : rows) {
      if (r.size() != n) {
        throw Error(ErrorKind::out_of_range, "operation table is not square");
      }
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return OpTable(n, std::move(entries));
  }

  OpTable OpTable::projection(std::size_t n) {
    return generate(n, [](point_type, point_type y) { return y; });
  }

  void OpTable::set(point_type x, point_type y, point_type value) {
    if (x >= _n || y >= _n || value >= _n) {
      throw Error(ErrorKind::out_of_range, "table assignment out of range");
    }
    _entries[x * _n + y] = value;
  }

  bool OpTable::all_rows_bijective() const {
    for (point_type x = 0; x < _n; ++x) {
      if (!row_is_bijective(x)) {
        return false;
      }
    }
    return true;
  }

  Perm OpTable::row_perm(point_type x) const {
    auto r = row(x);
    return Perm(std::vector<point_type>(r.begin(), r.end()));
  }

  std::vector<std::vector<point_type>> OpTable::to_rows() const {
    std::vector<std::vector<point_type>> rows(_n);
    for (point_type x = 0; x < _n; ++x) {
      auto r  = row(x);
      rows[x] = std::vector<point_type>(r.begin(), r.end());
    }
    return rows;
  }

}  // namespace qcs

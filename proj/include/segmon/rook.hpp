#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "segmon/element.hpp"
#include "segmon/errors.hpp"
#include "segmon/structure.hpp"

namespace segmon {

/// n x n 0/1 matrix with at most one 1 in every row and every column.
/// Immutable once built.  Rows and columns are 1-based.
class RookMatrix {
 public:
  /// The zero matrix.
  explicit RookMatrix(int size) : size_(size) {
    if (size < 1) {
      throw ValidationError("matrix size must be >= 1, got " +
                            std::to_string(size));
    }
    bits_.assign(static_cast<std::size_t>(size) * size, 0);
  }

  RookMatrix(int size, const std::vector<std::pair<int, int>>& ones)
      : RookMatrix(size) {
    for (const auto& [row, col] : ones) set_one(row, col);
  }

  /// Validates that every entry is 0 or 1 and the rook property holds.
  static RookMatrix from_rows(const std::vector<std::vector<int>>& rows) {
    const int size = static_cast<int>(rows.size());
    RookMatrix out(size);
    for (int r = 1; r <= size; ++r) {
      if (static_cast<int>(rows[r - 1].size()) != size) {
        throw ValidationError("matrix rows must all have length " +
                              std::to_string(size));
      }
      for (int c = 1; c <= size; ++c) {
        const int entry = rows[r - 1][c - 1];
        if (entry == 1) {
          out.set_one(r, c);
        } else if (entry != 0) {
          throw ValidationError("matrix entries must be 0 or 1, got " +
                                std::to_string(entry));
        }
      }
    }
    return out;
  }

  int size() const { return size_; }

  int at(int row, int col) const {
    return bits_[static_cast<std::size_t>(row - 1) * size_ + (col - 1)];
  }

  int ones_count() const {
    int count = 0;
    for (const auto bit : bits_) count += bit;
    return count;
  }

  bool is_zero() const { return ones_count() == 0; }

  RookMatrix transposed() const {
    RookMatrix out(size_);
    for (int r = 1; r <= size_; ++r) {
      for (int c = 1; c <= size_; ++c) {
        if (at(r, c)) out.set_one(c, r);
      }
    }
    return out;
  }

  std::vector<std::vector<int>> rows() const {
    std::vector<std::vector<int>> out(size_, std::vector<int>(size_, 0));
    for (int r = 1; r <= size_; ++r) {
      for (int c = 1; c <= size_; ++c) out[r - 1][c - 1] = at(r, c);
    }
    return out;
  }

  /// Standard matrix product; closed on rook matrices.
  friend RookMatrix operator*(const RookMatrix& a, const RookMatrix& b) {
    if (a.size_ != b.size_) {
      throw DomainError("matrix size mismatch: " + std::to_string(a.size_) +
                        " vs " + std::to_string(b.size_));
    }
    RookMatrix out(a.size_);
    for (int i = 1; i <= a.size_; ++i) {
      for (int j = 1; j <= a.size_; ++j) {
        int sum = 0;
        for (int l = 1; l <= a.size_; ++l) sum += a.at(i, l) * b.at(l, j);
        if (sum == 1) {
          out.set_one(i, j);
        } else if (sum != 0) {
          throw std::logic_error("rook matrix product produced entry " +
                                 std::to_string(sum));
        }
      }
    }
    return out;
  }

  friend bool operator==(const RookMatrix& a, const RookMatrix& b) {
    return a.size_ == b.size_ && a.bits_ == b.bits_;
  }

 private:
  void set_one(int row, int col) {
    if (row < 1 || row > size_ || col < 1 || col > size_) {
      throw ValidationError("matrix position (" + std::to_string(row) + "," +
                            std::to_string(col) + ") out of range");
    }
    for (int c = 1; c <= size_; ++c) {
      if (at(row, c)) {
        throw ValidationError("two 1s in row " + std::to_string(row));
      }
    }
    for (int r = 1; r <= size_; ++r) {
      if (at(r, col)) {
        throw ValidationError("two 1s in column " + std::to_string(col));
      }
    }
    bits_[static_cast<std::size_t>(row - 1) * size_ + (col - 1)] = 1;
  }

  int size_;
  std::vector<std::uint8_t> bits_;
};

/// All elements with integer coordinates, zero first, then sorted by
/// (shift, lo, hi).  Capped at n <= 6: the all-pairs checks built on top
/// are quadratic in the count.
inline std::vector<Element> enumerate_integer_monoid(int n) {
  if (n < 2 || n > 6) {
    throw ValidationError("enumeration supports 2 <= n <= 6, got " +
                          std::to_string(n));
  }
  std::vector<Element> out;
  out.push_back(Element::zero(n));
  for (int shift = -(n - 1); shift <= n - 1; ++shift) {
    const int lo_min = 1 - std::min(0, shift);
    const int hi_max = n - std::max(0, shift);
    for (int lo = lo_min; lo <= hi_max; ++lo) {
      for (int hi = lo; hi <= hi_max; ++hi) {
        out.push_back(Element::make(n, lo, shift, hi));
      }
    }
  }
  return out;
}

/// Matrix model of an integer element: a 1 at (t, t + shift) for each
/// integer t in [lo, hi]; the zero element is the zero matrix.
inline RookMatrix to_matrix(const Element& x) {
  if (x.is_zero()) return RookMatrix(x.ambient());
  if (!x.lo().is_integer() || !x.shift().is_integer() ||
      !x.hi().is_integer()) {
    throw DomainError("matrix model requires integer coordinates, got " +
                      x.str());
  }
  std::vector<std::pair<int, int>> ones;
  const long lo = x.lo().numerator().get_si();
  const long hi = x.hi().numerator().get_si();
  const long shift = x.shift().numerator().get_si();
  for (long t = lo; t <= hi; ++t) {
    ones.emplace_back(static_cast<int>(t), static_cast<int>(t + shift));
  }
  return RookMatrix(x.ambient(), std::move(ones));
}

/// Inverse of to_matrix on its image: the 1s must lie on one diagonal and
/// fill a contiguous block of rows.  std::nullopt for any other rook
/// matrix.
inline std::optional<Element> from_matrix(const RookMatrix& m) {
  std::vector<std::pair<int, int>> ones;
  for (int r = 1; r <= m.size(); ++r) {
    for (int c = 1; c <= m.size(); ++c) {
      if (m.at(r, c)) ones.emplace_back(r, c);
    }
  }
  if (ones.empty()) return Element::zero(m.size());
  const int lo = ones.front().first;
  const int hi = ones.back().first;
  const int shift = ones.front().second - ones.front().first;
  if (static_cast<int>(ones.size()) != hi - lo + 1) return std::nullopt;
  for (std::size_t t = 0; t < ones.size(); ++t) {
    const auto& [row, col] = ones[t];
    if (row != lo + static_cast<int>(t)) return std::nullopt;  // row gap
    if (col - row != shift) return std::nullopt;  // off the diagonal
  }
  return Element::make(m.size(), lo, shift, hi);
}

/// Rank of the partial map: the number of 1s in the matrix model, which is
/// height + 1.  Restricted to integer coordinates, where the matrix model
/// exists.
inline Integer rnk(const Element& x) {
  if (!x.is_zero() && (!x.lo().is_integer() || !x.shift().is_integer() ||
                       !x.hi().is_integer())) {
    throw DomainError("rnk requires integer coordinates, got " + x.str());
  }
  return Integer((x.height() + Rational(1)).numerator());
}

/// One Green relation computed from first principles over the enumerated
/// integer monoid, as equality of principal (one- or two-sided) ideals.
/// Ground truth for the closed forms in green_related().
struct GreenTable {
  std::vector<Element> elements;             // enumeration order, zero first
  std::vector<std::vector<bool>> related;    // reflexive and symmetric
};

namespace detail {

/// Cayley table of the enumerated monoid computed purely by rook-matrix
/// arithmetic; the closed-form product is never consulted.
inline std::vector<std::vector<int>> matrix_cayley_table(
    const std::vector<Element>& elements) {
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    index.emplace(elements[i].str(), static_cast<int>(i));
  }
  std::vector<RookMatrix> models;
  models.reserve(elements.size());
  for (const auto& x : elements) models.push_back(to_matrix(x));

  const int count = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(count, std::vector<int>(count, -1));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      const auto product = from_matrix(models[i] * models[j]);
      if (!product) {
        throw std::logic_error("matrix product left the enumerated monoid");
      }
      table[i][j] = index.at(product->str());
    }
  }
  return table;
}

}  // namespace detail

inline GreenTable definitional_green(GreenRelation rel, int n) {
  if (n < 2 || n > 4) {
    throw ValidationError("definitional Green tables support 2 <= n <= 4, "
                          "got " + std::to_string(n));
  }
  GreenTable out;
  out.elements = enumerate_integer_monoid(n);
  const int count = static_cast<int>(out.elements.size());
  const auto cayley = detail::matrix_cayley_table(out.elements);

  // Principal ideals as bitmasks over element indices.  The enumerated
  // monoid contains the identity, so {x} is already covered by x*S etc.
  std::vector<std::uint64_t> right(count, 0), left(count, 0), both(count, 0);
  for (int i = 0; i < count; ++i) {
    for (int s = 0; s < count; ++s) {
      right[i] |= std::uint64_t{1} << cayley[i][s];
      left[i] |= std::uint64_t{1} << cayley[s][i];
      for (int t = 0; t < count; ++t) {
        both[i] |= std::uint64_t{1} << cayley[cayley[s][i]][t];
      }
    }
  }

  out.related.assign(count, std::vector<bool>(count, false));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      bool related = false;
      switch (rel) {
        case GreenRelation::R: related = right[i] == right[j]; break;
        case GreenRelation::L: related = left[i] == left[j]; break;
        case GreenRelation::H:
          related = right[i] == right[j] && left[i] == left[j];
          break;
        case GreenRelation::D:
          for (int z = 0; z < count && !related; ++z) {
            related = right[i] == right[z] && left[z] == left[j];
          }
          break;
        case GreenRelation::J: related = both[i] == both[j]; break;
      }
      out.related[i][j] = related;
    }
  }
  return out;
}

/// Egg-box diagram of the enumerated integer monoid in DOT syntax: one
/// cluster per D-class (grouped by height, ascending), one rank=same row
/// per R-class, columns ordered by L-class.
inline std::string eggbox_dot(int n) {
  const auto elements = enumerate_integer_monoid(n);

  // height -> lo of segment -> elements of that R-class, ordered by shift
  std::map<Integer, std::map<Integer, std::vector<const Element*>>> classes;
  for (const auto& x : elements) {
    const Integer h = x.height().numerator();
    const Integer row = x.is_zero() ? Integer(0) : x.lo().numerator();
    classes[h][row].push_back(&x);
  }
  for (auto& [h, rows] : classes) {
    for (auto& [row, members] : rows) {
      std::sort(members.begin(), members.end(),
                [](const Element* a, const Element* b) {
                  if (a->is_zero() || b->is_zero()) return b->is_zero();
                  return a->shift() < b->shift();
                });
    }
  }

  std::string out = "digraph eggbox_M" + std::to_string(n) + " {\n";
  out += "  node [shape=box];\n";
  int cluster = 0;
  for (const auto& [h, rows] : classes) {
    out += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
    out += "    label=\"h = " + h.get_str() + "\";\n";
    for (const auto& [row, members] : rows) {
      out += "    { rank=same;";
      for (const Element* x : members) {
        out += " \"" + x->str() + "\";";
      }
      out += " }\n";
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace segmon

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "structctl/error.hpp"
#include "structctl/rational.hpp"

namespace structctl {

/// A (row, col) position of a free (nonzero) parameter, 0-based.
struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  friend auto operator<=>(const Entry&, const Entry&) = default;
};

/// Zero/nonzero pattern of a structured matrix.
///
/// Entries are stored sorted in row-major order without duplicates; the
/// constructor normalizes its input and remembers how many duplicates it
/// dropped so file readers can warn about them.
class StructuredMatrix {
 public:
  StructuredMatrix() = default;
  StructuredMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Entry> entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }
  std::size_t duplicates_dropped() const { return duplicates_dropped_; }

  bool contains(std::size_t row, std::size_t col) const;
  /// Rows with a nonzero in column `col`, ascending.
  std::span<const std::size_t> column(std::size_t col) const { return by_col_[col]; }
  /// Columns with a nonzero in row `row`, ascending.
  std::span<const std::size_t> row(std::size_t row) const { return by_row_[row]; }

  StructuredMatrix transposed() const;

  friend bool operator==(const StructuredMatrix& a, const StructuredMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::vector<std::size_t>> by_row_;
  std::vector<std::vector<std::size_t>> by_col_;
  std::size_t duplicates_dropped_ = 0;
};

/// Structured pair (A, B) with one non-negative cost per input column.
struct StructuredSystem {
  StructuredMatrix a_bar;  // n x n
  StructuredMatrix b_bar;  // n x m
  std::vector<Rational> input_costs;

  std::size_t state_count() const { return a_bar.rows(); }
  std::size_t input_count() const { return b_bar.cols(); }

  friend bool operator==(const StructuredSystem&, const StructuredSystem&) = default;
};

/// Throws Error(DimensionMismatch | NegativeCost) when the system is malformed.
void validate_system(const StructuredSystem& sys);

/// Builds and validates a system from 0-based entries. Costs default to 1.
StructuredSystem make_system(std::size_t n, std::size_t m, std::vector<Entry> a_entries,
                             std::vector<Entry> b_entries, std::vector<Rational> costs = {});

/// Sorted, duplicate-free set of input column indices.
class InputSet {
 public:
  InputSet() = default;
  explicit InputSet(std::vector<std::size_t> indices);

  std::span<const std::size_t> indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(std::size_t index) const;

  static InputSet full(std::size_t m);

  friend bool operator==(const InputSet&, const InputSet&) = default;
  friend auto operator<=>(const InputSet&, const InputSet&) = default;

 private:
  std::vector<std::size_t> indices_;
};

/// Sum of the costs of the inputs in `sel`.
Rational input_set_cost(const StructuredSystem& sys, const InputSet& sel);

struct RestrictedSystem {
  StructuredSystem system;
  /// original_input[k] is the column of the parent system that became column k.
  std::vector<std::size_t> original_input;
};

/// Keeps only the input columns in `sel` (reindexed densely, in ascending order).
RestrictedSystem restrict_inputs(const StructuredSystem& sys, const InputSet& sel);

}  // namespace structctl

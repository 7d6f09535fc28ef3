#include "structctl/core.hpp"

#include <algorithm>
#include <string>

namespace structctl {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NegativeCost: return "NegativeCost";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidMatching: return "InvalidMatching";
    case ErrorCode::InvalidCover: return "InvalidCover";
    case ErrorCode::UncoverableScc: return "UncoverableScc";
    case ErrorCode::NotControllable: return "NotControllable";
    case ErrorCode::NotObservable: return "NotObservable";
    case ErrorCode::FlowTooSmall: return "FlowTooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Unknown";
}

StructuredMatrix::StructuredMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), by_row_(rows), by_col_(cols) {
  for (const Entry& e : entries_) {
    if (e.row >= rows_ || e.col >= cols_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "entry (" + std::to_string(e.row) + ", " + std::to_string(e.col) +
                      ") outside " + std::to_string(rows_) + "x" + std::to_string(cols_) + " pattern");
    }
  }
  std::sort(entries_.begin(), entries_.end());
  auto last = std::unique(entries_.begin(), entries_.end());
  duplicates_dropped_ = static_cast<std::size_t>(entries_.end() - last);
  entries_.erase(last, entries_.end());
  for (const Entry& e : entries_) {
    by_row_[e.row].push_back(e.col);
    by_col_[e.col].push_back(e.row);
  }
}

bool StructuredMatrix::contains(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) return false;
  return std::binary_search(by_row_[row].begin(), by_row_[row].end(), col);
}

StructuredMatrix StructuredMatrix::transposed() const {
  std::vector<Entry> t;
  t.reserve(entries_.size());
  for (const Entry& e : entries_) t.push_back({e.col, e.row});
  return StructuredMatrix(cols_, rows_, std::move(t));
}

void validate_system(const StructuredSystem& sys) {
  const std::size_t n = sys.a_bar.rows();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "system must have at least one state");
  if (sys.a_bar.cols() != n) {
    throw Error(ErrorCode::DimensionMismatch, "state matrix is " + std::to_string(n) + "x" +
                                                  std::to_string(sys.a_bar.cols()) + ", expected square");
  }
  if (sys.b_bar.rows() != n) {
    throw Error(ErrorCode::DimensionMismatch, "input matrix has " + std::to_string(sys.b_bar.rows()) +
                                                  " rows, expected " + std::to_string(n));
  }
  if (sys.input_costs.size() != sys.b_bar.cols()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(sys.b_bar.cols()) + " inputs but " + std::to_string(sys.input_costs.size()) +
                    " costs");
  }
  for (std::size_t j = 0; j < sys.input_costs.size(); ++j) {
    if (sys.input_costs[j] < Rational(0)) {
      throw Error(ErrorCode::NegativeCost,
                  "input " + std::to_string(j + 1) + " has cost " + sys.input_costs[j].to_string());
    }
  }
}

StructuredSystem make_system(std::size_t n, std::size_t m, std::vector<Entry> a_entries,
                             std::vector<Entry> b_entries, std::vector<Rational> costs) {
  if (costs.empty() && m > 0) costs.assign(m, Rational(1));
  StructuredSystem sys{StructuredMatrix(n, n, std::move(a_entries)), StructuredMatrix(n, m, std::move(b_entries)),
                       std::move(costs)};
  validate_system(sys);
  return sys;
}

InputSet::InputSet(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
}

bool InputSet::contains(std::size_t index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

InputSet InputSet::full(std::size_t m) {
  std::vector<std::size_t> all(m);
  for (std::size_t j = 0; j < m; ++j) all[j] = j;
  return InputSet(std::move(all));
}

Rational input_set_cost(const StructuredSystem& sys, const InputSet& sel) {
  Rational total;
  for (std::size_t j : sel.indices()) total += sys.input_costs.at(j);
  return total;
}

RestrictedSystem restrict_inputs(const StructuredSystem& sys, const InputSet& sel) {
  const std::size_t m = sys.input_count();
  for (std::size_t j : sel.indices()) {
    if (j >= m) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "input index " + std::to_string(j) + " out of range for m=" + std::to_string(m));
    }
  }
  RestrictedSystem out;
  out.original_input.assign(sel.indices().begin(), sel.indices().end());
  std::vector<Entry> b;
  std::vector<Rational> costs;
  for (std::size_t k = 0; k < out.original_input.size(); ++k) {
    const std::size_t j = out.original_input[k];
    for (std::size_t r : sys.b_bar.column(j)) b.push_back({r, k});
    costs.push_back(sys.input_costs[j]);
  }
  out.system = StructuredSystem{sys.a_bar, StructuredMatrix(sys.state_count(), out.original_input.size(), std::move(b)),
                                std::move(costs)};
  return out;
}

}  // namespace structctl

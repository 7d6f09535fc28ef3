#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "structctl/core.hpp"

namespace structctl {

enum class InstanceKind {
  Inputs,   // (A, B) with input costs
  Outputs,  // (A, C) with output costs, for output selection
};

/// A parsed instance file. Indices are 0-based in memory, 1-based on disk.
struct Instance {
  InstanceKind kind = InstanceKind::Inputs;
  StructuredMatrix a_bar;
  /// B (n x m) for input instances, C (p x n) for output instances.
  StructuredMatrix io_matrix;
  std::vector<Rational> costs;
  /// Non-fatal notes from parsing, such as dropped duplicate entries.
  std::vector<std::string> warnings;

  /// The controllability system. For output instances this is the dual
  /// (A^T, C^T) with the output costs.
  StructuredSystem system() const;
};

Instance instance_from_system(const StructuredSystem& sys);

/// Plain-text format; see README. Throws Error(ParseError) with a line number.
Instance parse_instance_text(std::string_view text);
/// JSON equivalent of the text format.
Instance parse_instance_json(std::string_view text);
/// Dispatches on the first non-blank character ('{' means JSON).
Instance parse_instance(std::string_view text);
/// Throws Error(IoError) when the file cannot be read.
Instance read_instance_file(const std::filesystem::path& path);

/// Canonical text form: header, sorted entries, explicit costs line.
std::string serialize_instance_text(const Instance& inst);
std::string serialize_instance_json(const Instance& inst);

}  // namespace structctl

#include "structctl/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <json.hpp>

namespace structctl {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::size_t parse_count(std::string_view word, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    parse_fail(line, std::string("expected a non-negative integer for ") + what + ", got '" + std::string(word) + "'");
  }
  return value;
}

// Shared by both readers once the raw 1-based data is collected.
struct RawInstance {
  InstanceKind kind = InstanceKind::Inputs;
  std::size_t n = 0;
  std::size_t k = 0;  // m or p
  std::vector<Entry> a;
  std::vector<Entry> io;
  std::optional<std::vector<Rational>> costs;
};

Instance finish(RawInstance raw) {
  Instance inst;
  inst.kind = raw.kind;
  if (raw.n == 0) throw Error(ErrorCode::ParseError, "instance must have at least one state");
  inst.a_bar = StructuredMatrix(raw.n, raw.n, std::move(raw.a));
  if (raw.kind == InstanceKind::Inputs) {
    inst.io_matrix = StructuredMatrix(raw.n, raw.k, std::move(raw.io));
  } else {
    inst.io_matrix = StructuredMatrix(raw.k, raw.n, std::move(raw.io));
  }
  inst.costs = raw.costs ? std::move(*raw.costs) : std::vector<Rational>(raw.k, Rational(1));
  if (inst.costs.size() != raw.k) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(raw.k) + " costs, got " +
                                           std::to_string(inst.costs.size()));
  }
  for (const Rational& c : inst.costs) {
    if (c < Rational(0)) throw Error(ErrorCode::ParseError, "negative cost " + c.to_string());
  }
  const char* io_name = raw.kind == InstanceKind::Inputs ? "b" : "c";
  if (inst.a_bar.duplicates_dropped() > 0) {
    inst.warnings.push_back("dropped " + std::to_string(inst.a_bar.duplicates_dropped()) + " duplicate 'a' entries");
  }
  if (inst.io_matrix.duplicates_dropped() > 0) {
    inst.warnings.push_back("dropped " + std::to_string(inst.io_matrix.duplicates_dropped()) + " duplicate '" +
                            io_name + "' entries");
  }
  return inst;
}

}  // namespace

StructuredSystem Instance::system() const {
  StructuredSystem sys = kind == InstanceKind::Inputs
                             ? StructuredSystem{a_bar, io_matrix, costs}
                             : StructuredSystem{a_bar.transposed(), io_matrix.transposed(), costs};
  validate_system(sys);
  return sys;
}

Instance instance_from_system(const StructuredSystem& sys) {
  validate_system(sys);
  Instance inst;
  inst.a_bar = sys.a_bar;
  inst.io_matrix = sys.b_bar;
  inst.costs = sys.input_costs;
  return inst;
}

Instance parse_instance_text(std::string_view text) {
  RawInstance raw;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string_view key = words[0];
    if (key == "system" || key == "outputs") {
      if (have_header) parse_fail(line_no, "duplicate header");
      if (words.size() != 3) parse_fail(line_no, "header needs two counts: '" + std::string(key) + " n m'");
      raw.kind = key == "system" ? InstanceKind::Inputs : InstanceKind::Outputs;
      raw.n = parse_count(words[1], line_no, "n");
      raw.k = parse_count(words[2], line_no, key == "system" ? "m" : "p");
      if (raw.n == 0) parse_fail(line_no, "n must be positive");
      have_header = true;
      continue;
    }
    if (!have_header) parse_fail(line_no, "expected 'system n m' or 'outputs n p' header first");
    if (key == "a" || key == "b" || key == "c") {
      if (words.size() != 3) parse_fail(line_no, "entry lines look like '" + std::string(key) + " i j'");
      if ((key == "b" && raw.kind != InstanceKind::Inputs) || (key == "c" && raw.kind != InstanceKind::Outputs)) {
        parse_fail(line_no, "'" + std::string(key) + "' entries do not belong in this instance kind");
      }
      std::size_t i = parse_count(words[1], line_no, "row");
      std::size_t j = parse_count(words[2], line_no, "column");
      std::size_t rows = key == "c" ? raw.k : raw.n;
      std::size_t cols = key == "b" ? raw.k : raw.n;
      if (i < 1 || i > rows || j < 1 || j > cols) {
        parse_fail(line_no, "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") outside " +
                                std::to_string(rows) + "x" + std::to_string(cols));
      }
      (key == "a" ? raw.a : raw.io).push_back({i - 1, j - 1});
      continue;
    }
    if (key == "costs") {
      if (raw.costs) parse_fail(line_no, "duplicate costs line");
      std::vector<Rational> costs;
      for (std::size_t w = 1; w < words.size(); ++w) {
        try {
          costs.push_back(Rational::parse(words[w]));
        } catch (const std::exception& e) {
          parse_fail(line_no, e.what());
        }
        if (costs.back() < Rational(0)) parse_fail(line_no, "negative cost " + costs.back().to_string());
      }
      if (costs.size() != raw.k) {
        parse_fail(line_no, "expected " + std::to_string(raw.k) + " costs, got " + std::to_string(costs.size()));
      }
      raw.costs = std::move(costs);
      continue;
    }
    parse_fail(line_no, "unknown directive '" + std::string(key) + "'");
  }
  if (!have_header) throw Error(ErrorCode::ParseError, "line 1: empty instance, no header");
  return finish(std::move(raw));
}

Instance parse_instance_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    RawInstance raw;
    const std::string kind = doc.value("kind", std::string("system"));
    if (kind != "system" && kind != "outputs") throw Error(ErrorCode::ParseError, "unknown kind '" + kind + "'");
    raw.kind = kind == "system" ? InstanceKind::Inputs : InstanceKind::Outputs;
    raw.n = doc.at("n").get<std::size_t>();
    const char* count_key = raw.kind == InstanceKind::Inputs ? "m" : "p";
    const char* io_key = raw.kind == InstanceKind::Inputs ? "b" : "c";
    raw.k = doc.at(count_key).get<std::size_t>();
    if (raw.n == 0) throw Error(ErrorCode::ParseError, "n must be positive");
    auto read_entries = [&](const char* key, std::size_t rows, std::size_t cols, std::vector<Entry>& out) {
      if (!doc.contains(key)) return;
      for (const auto& pair : doc.at(key)) {
        auto i = pair.at(0).get<std::size_t>(), j = pair.at(1).get<std::size_t>();
        if (i < 1 || i > rows || j < 1 || j > cols) {
          throw Error(ErrorCode::ParseError, std::string("'") + key + "' entry (" + std::to_string(i) + ", " +
                                                 std::to_string(j) + ") out of range");
        }
        out.push_back({i - 1, j - 1});
      }
    };
    read_entries("a", raw.n, raw.n, raw.a);
    if (raw.kind == InstanceKind::Inputs) {
      read_entries(io_key, raw.n, raw.k, raw.io);
    } else {
      read_entries(io_key, raw.k, raw.n, raw.io);
    }
    if (doc.contains("costs")) {
      std::vector<Rational> costs;
      for (const auto& c : doc.at("costs")) {
        costs.push_back(c.is_string() ? Rational::parse(c.get<std::string>()) : Rational(c.get<std::int64_t>()));
      }
      raw.costs = std::move(costs);
    }
    return finish(std::move(raw));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed instance JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Instance parse_instance(std::string_view text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_instance_json(text);
  return parse_instance_text(text);
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
  return parse_instance(buf.str());
}

std::string serialize_instance_text(const Instance& inst) {
  std::ostringstream out;
  const bool inputs = inst.kind == InstanceKind::Inputs;
  const std::size_t n = inst.a_bar.rows();
  const std::size_t k = inputs ? inst.io_matrix.cols() : inst.io_matrix.rows();
  out << (inputs ? "system " : "outputs ") << n << ' ' << k << '\n';
  for (const Entry& e : inst.a_bar.entries()) out << "a " << e.row + 1 << ' ' << e.col + 1 << '\n';
  const char* tag = inputs ? "b " : "c ";
  for (const Entry& e : inst.io_matrix.entries()) out << tag << e.row + 1 << ' ' << e.col + 1 << '\n';
  out << "costs";
  for (const Rational& c : inst.costs) out << ' ' << c;
  out << '\n';
  return out.str();
}

std::string serialize_instance_json(const Instance& inst) {
  const bool inputs = inst.kind == InstanceKind::Inputs;
  json doc;
  doc["format"] = "structctl-instance";
  doc["version"] = 1;
  doc["kind"] = inputs ? "system" : "outputs";
  doc["n"] = inst.a_bar.rows();
  doc[inputs ? "m" : "p"] = inputs ? inst.io_matrix.cols() : inst.io_matrix.rows();
  auto entries = [](const StructuredMatrix& mat) {
    json arr = json::array();
    for (const Entry& e : mat.entries()) arr.push_back({e.row + 1, e.col + 1});
    return arr;
  };
  doc["a"] = entries(inst.a_bar);
  doc[inputs ? "b" : "c"] = entries(inst.io_matrix);
  json costs = json::array();
  for (const Rational& c : inst.costs) costs.push_back(c.to_string());
  doc["costs"] = costs;
  return doc.dump(2) + "\n";
}

}  // namespace structctl

#include "lipcert/io.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "lipcert/error.hpp"

namespace lipcert {
namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({number++, line});
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!is_space(c)) return false;
  }
  return true;
}

// Trims blanks, reporting how many characters were dropped on the left.
std::string_view trim(std::string_view s, std::size_t* left = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && is_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_space(s[e - 1])) --e;
  if (left != nullptr) *left = b;
  return s.substr(b, e - b);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
  if (!out.flush()) throw std::runtime_error("failed writing '" + path.string() + "'");
}

std::string at_line(std::size_t line, std::size_t column = 0) {
  std::string s = "line " + std::to_string(line);
  if (column > 0) s += ", column " + std::to_string(column);
  return s + ": ";
}

std::vector<Rational> parse_row(const Line& line) {
  std::vector<Rational> row;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.text.find(',', start);
    if (end == std::string_view::npos) end = line.text.size();
    std::size_t left = 0;
    const std::string_view field = trim(line.text.substr(start, end - start), &left);
    try {
      row.push_back(parse_decimal(field));
    } catch (const ParseError& e) {
      const std::size_t column = start + left + e.position() + 1;
      throw ModelFormatError(ModelErrorKind::BadLiteral, at_line(line.number, column) + e.what(), line.number,
                             column);
    }
    if (end == line.text.size()) break;
    start = end + 1;
  }
  return row;
}

std::size_t parse_index(std::string_view token, std::size_t line, const char* what) {
  if (token.empty()) throw BoundsFormatError(at_line(line) + "missing " + what, line);
  std::size_t value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') throw BoundsFormatError(at_line(line) + "malformed " + what + " '" + std::string(token) + "'", line);
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > (std::size_t{1} << 40)) throw BoundsFormatError(at_line(line) + std::string(what) + " too large", line);
  }
  return value;
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

}  // namespace

ModelFormatError::ModelFormatError(ModelErrorKind kind, const std::string& message, std::size_t line,
                                   std::size_t column)
    : std::runtime_error(message), kind_(kind), line_(line), column_(column) {}

BoundsFormatError::BoundsFormatError(const std::string& message, std::size_t line)
    : std::runtime_error(message), line_(line) {}

NeuralNet parse_model(std::string_view text) {
  std::vector<Matrix> layers;
  std::vector<std::size_t> layer_lines;
  std::vector<std::vector<Rational>> rows;
  std::size_t rows_line = 0;
  std::size_t blank_run = 0;
  std::size_t blank_line = 0;

  auto finish_layer = [&] {
    layers.emplace_back(rows);
    layer_lines.push_back(rows_line);
    rows.clear();
  };

  for (const Line& line : split_lines(text)) {
    if (is_blank(line.text)) {
      if (blank_run++ == 0) blank_line = line.number;
      if (!rows.empty()) finish_layer();
      continue;
    }
    if (blank_run > 1 || (blank_run == 1 && layers.empty())) {
      throw ModelFormatError(ModelErrorKind::EmptyLayer, at_line(blank_line) + "empty layer", blank_line);
    }
    blank_run = 0;
    if (trim(line.text).starts_with("bias")) {
      throw ModelFormatError(ModelErrorKind::Unsupported, at_line(line.number) + "bias terms are not supported",
                             line.number);
    }
    auto row = parse_row(line);
    if (rows.empty()) {
      rows_line = line.number;
    } else if (row.size() != rows.front().size()) {
      throw ModelFormatError(ModelErrorKind::RaggedRow,
                             at_line(line.number) + "row has " + std::to_string(row.size()) +
                                 " entries but the layer has " + std::to_string(rows.front().size()) + " columns",
                             line.number);
    }
    rows.push_back(std::move(row));
  }
  if (!rows.empty()) finish_layer();
  if (layers.empty()) throw ModelFormatError(ModelErrorKind::EmptyLayer, "model contains no layers");

  for (std::size_t i = 0; i + 1 < layers.size(); ++i) {
    if (layers[i].rows() != layers[i + 1].cols()) {
      throw ModelFormatError(ModelErrorKind::DimensionChain,
                             at_line(layer_lines[i + 1]) + "layer " + std::to_string(i) + " has " +
                                 std::to_string(layers[i].rows()) + " rows but layer " + std::to_string(i + 1) +
                                 " has " + std::to_string(layers[i + 1].cols()) + " columns",
                             layer_lines[i + 1]);
    }
  }
  return NeuralNet(std::move(layers));
}

NeuralNet load_model(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw ModelFormatError(ModelErrorKind::Io, e.what());
  }
  return parse_model(text);
}

std::string format_model(const NeuralNet& net) {
  std::string out;
  for (std::size_t l = 0; l < net.depth(); ++l) {
    if (l > 0) out += '\n';
    const Matrix& m = net.layer(l);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out += ',';
        auto literal = exact_decimal(m(r, c));
        if (!literal) throw DomainError("weight " + m(r, c).to_string() + " has no finite decimal expansion");
        out += *literal;
      }
      out += '\n';
    }
  }
  return out;
}

void save_model(const NeuralNet& net, const std::filesystem::path& path) { write_file(path, format_model(net)); }

std::string format_bounds(const LipschitzBounds& bounds) {
  std::ostringstream out;
  out << "version " << kBoundsFormatVersion << '\n'
      << "dim " << bounds.dim() << '\n'
      << "gram " << bounds.gram_iterations << '\n'
      << "sqrt-err " << bounds.sqrt_config.err_tolerance << '\n'
      << "sqrt-max-iters " << bounds.sqrt_config.max_iterations << '\n'
      << "model " << bounds.model_digest << '\n';
  for (std::size_t i = 0; i < bounds.dim(); ++i) {
    for (std::size_t k = i + 1; k < bounds.dim(); ++k) out << i << ' ' << k << ' ' << bounds.at(i, k) << '\n';
  }
  return out.str();
}

LipschitzBounds parse_bounds(std::string_view text) {
  const auto lines = split_lines(text);
  std::size_t cursor = 0;

  auto header = [&](std::string_view key, bool required) -> std::optional<std::pair<std::string_view, std::size_t>> {
    if (cursor < lines.size()) {
      const auto words = split_words(lines[cursor].text);
      if (!words.empty() && words[0] == key) {
        if (words.size() != 2) {
          throw BoundsFormatError(at_line(lines[cursor].number) + "expected '" + std::string(key) + " <value>'",
                                  lines[cursor].number);
        }
        const std::size_t number = lines[cursor].number;
        ++cursor;
        return std::make_pair(words[1], number);
      }
    }
    if (required) {
      const std::size_t number = cursor < lines.size() ? lines[cursor].number : lines.size() + 1;
      throw BoundsFormatError(at_line(number) + "missing '" + std::string(key) + "' header", number);
    }
    return std::nullopt;
  };

  const auto version = header("version", true);
  if (parse_index(version->first, version->second, "version") != static_cast<std::size_t>(kBoundsFormatVersion)) {
    throw BoundsFormatError(at_line(version->second) + "unsupported bounds format version '" +
                                std::string(version->first) + "'",
                            version->second);
  }
  const auto dim_field = header("dim", true);
  const std::size_t dim = parse_index(dim_field->first, dim_field->second, "dim");
  if (dim == 0) throw BoundsFormatError(at_line(dim_field->second) + "dim must be positive", dim_field->second);
  const auto gram_field = header("gram", true);

  LipschitzBounds bounds(dim);
  bounds.gram_iterations = parse_index(gram_field->first, gram_field->second, "gram");
  if (const auto err = header("sqrt-err", false)) {
    try {
      bounds.sqrt_config.err_tolerance = parse_exact(err->first);
    } catch (const ParseError& e) {
      throw BoundsFormatError(at_line(err->second) + e.what(), err->second);
    }
  }
  if (const auto iters = header("sqrt-max-iters", false)) {
    bounds.sqrt_config.max_iterations = parse_index(iters->first, iters->second, "sqrt-max-iters");
  }
  bounds.model_digest = std::string(header("model", true)->first);

  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (; cursor < lines.size(); ++cursor) {
    const Line& line = lines[cursor];
    if (is_blank(line.text)) continue;
    const auto words = split_words(line.text);
    if (words.size() != 3) throw BoundsFormatError(at_line(line.number) + "expected '<i> <k> <num>/<den>'", line.number);
    const std::size_t i = parse_index(words[0], line.number, "index");
    const std::size_t k = parse_index(words[1], line.number, "index");
    if (i >= dim || k >= dim) throw BoundsFormatError(at_line(line.number) + "index out of range for dim " + std::to_string(dim), line.number);
    if (i == k) throw BoundsFormatError(at_line(line.number) + "diagonal entry not allowed", line.number);
    if (!seen.insert(std::minmax(i, k)).second) throw BoundsFormatError(at_line(line.number) + "duplicate pair", line.number);
    Rational value;
    try {
      value = parse_exact(words[2]);
    } catch (const ParseError& e) {
      throw BoundsFormatError(at_line(line.number) + e.what(), line.number);
    }
    if (value.sign() < 0) throw BoundsFormatError(at_line(line.number) + "negative bound", line.number);
    bounds.set_pair(i, k, value);
  }
  if (seen.size() != dim * (dim - 1) / 2) {
    throw BoundsFormatError("bounds file lists " + std::to_string(seen.size()) + " pairs, dim " +
                            std::to_string(dim) + " requires " + std::to_string(dim * (dim - 1) / 2));
  }
  return bounds;
}

void save_bounds(const LipschitzBounds& bounds, const std::filesystem::path& path) {
  write_file(path, format_bounds(bounds));
}

LipschitzBounds load_bounds(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const std::runtime_error& e) {
    throw BoundsFormatError(e.what());
  }
  return parse_bounds(text);
}

bool check_model_digest(const LipschitzBounds& bounds, const NeuralNet& net, std::ostream& warn) {
  const std::string actual = model_digest(net);
  if (actual == bounds.model_digest) return true;
  warn << "warning: bounds were generated for model " << bounds.model_digest << " but the model digest is "
       << actual << "; bounds may not match the model\n";
  return false;
}

Vector parse_vector_line(std::string_view line) {
  std::vector<Rational> values;
  std::size_t start = 0;
  while (true) {
    std::size_t end = line.find(',', start);
    if (end == std::string_view::npos) end = line.size();
    std::size_t left = 0;
    const std::string_view field = trim(line.substr(start, end - start), &left);
    try {
      values.push_back(parse_decimal(field));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), e.token(), start + left + e.position());
    }
    if (end == line.size()) break;
    start = end + 1;
  }
  return Vector(std::move(values));
}

}  // namespace lipcert

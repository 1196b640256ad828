#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lipcert/lipschitz.hpp"
#include "lipcert/nn.hpp"

namespace lipcert {

enum class ModelErrorKind { Io, BadLiteral, EmptyLayer, RaggedRow, DimensionChain, Unsupported };

/// Model file problem. line/column are 1-based; 0 when not applicable.
class ModelFormatError : public std::runtime_error {
 public:
  ModelFormatError(ModelErrorKind kind, const std::string& message, std::size_t line = 0,
                   std::size_t column = 0);

  ModelErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  ModelErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

/// Bounds file problem; line is 1-based, 0 when not applicable.
class BoundsFormatError : public std::runtime_error {
 public:
  BoundsFormatError(const std::string& message, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Model text: one matrix row per line with comma-separated decimal
// literals; a single blank line separates consecutive layers.
NeuralNet parse_model(std::string_view text);
NeuralNet load_model(const std::filesystem::path& path);
/// Renders weights as exact decimal literals. Throws DomainError for a
/// weight with no terminating decimal expansion.
std::string format_model(const NeuralNet& net);
void save_model(const NeuralNet& net, const std::filesystem::path& path);

inline constexpr int kBoundsFormatVersion = 1;

std::string format_bounds(const LipschitzBounds& bounds);
LipschitzBounds parse_bounds(std::string_view text);
void save_bounds(const LipschitzBounds& bounds, const std::filesystem::path& path);
LipschitzBounds load_bounds(const std::filesystem::path& path);

/// Writes a warning to `warn` and returns false when the bounds were not
/// generated from this model.
bool check_model_digest(const LipschitzBounds& bounds, const NeuralNet& net, std::ostream& warn);

/// Parses one comma-separated line of decimal literals.
Vector parse_vector_line(std::string_view line);

}  // namespace lipcert

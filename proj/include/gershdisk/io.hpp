#pragma once

// Matrix files (JSON with {"re","im"} entries, or real CSV) and the builtin
// example ids the command line accepts in place of a path.

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gershdisk/core.hpp"

namespace gershdisk {

// Malformed or unresolvable input; the CLI maps it to exit code 2.
struct InputError : Error {
  using Error::Error;
};

// Output could not be written; exit code 5.
struct IoError : Error {
  using Error::Error;
};

struct NamedMatrix {
  std::string id;
  CMatrixd matrix;
  // Exact eigenvalues known from the construction (may be empty).
  std::vector<std::complex<double>> known_eigenvalues;
};

/// Builtin ids in listing order; the parameterised family is shown as its
/// pattern "blocks:k=K,b=B,seed=S".
std::vector<std::string> builtin_ids();

/// Resolves a builtin id, or nullopt when `id` is not one. Throws
/// InputError for a malformed "blocks:" id.
std::optional<NamedMatrix> builtin_matrix(const std::string& id);

/// Builtin id first, then a file path (.json / .csv, else sniffed).
NamedMatrix load_matrix(const std::string& id_or_path);

CMatrixd parse_matrix_json(std::string_view text);
CMatrixd parse_matrix_csv(std::string_view text);

nlohmann::json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const CMatrixd& m);

/// 1-based (line, column) of a 0-based byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

}  // namespace gershdisk

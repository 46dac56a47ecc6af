#include "gershdisk/io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gershdisk/generators.hpp"

namespace gershdisk {

namespace {

constexpr Index kMaxBuiltinOrder = 64;

Index parse_count(const std::string& key, const std::string& value, const std::string& id) {
  Index out = 0;
  const auto* first = value.data();
  const auto* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || out < 0)
    throw InputError("builtin id '" + id + "': " + key + " must be a non-negative integer, got '" + value + "'");
  return out;
}

NamedMatrix blocks_matrix(const std::string& id) {
  std::optional<Index> k, b, seed;
  std::stringstream ss(id.substr(std::string("blocks:").size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw InputError("builtin id '" + id + "': expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    if (key == "k")
      k = parse_count(key, value, id);
    else if (key == "b")
      b = parse_count(key, value, id);
    else if (key == "seed")
      seed = parse_count(key, value, id);
    else
      throw InputError("builtin id '" + id + "': unknown key '" + key + "'");
  }
  if (!k || !b || !seed) throw InputError("builtin id '" + id + "': expected blocks:k=K,b=B,seed=S");
  if (*k < 1 || *b < 1 || *k * *b > kMaxBuiltinOrder)
    throw InputError("builtin id '" + id + "': need k >= 1, b >= 1 and k*b <= 64");
  return {id, block_doubly_stochastic<double>(*k, *b, static_cast<std::uint64_t>(*seed)), {1.0}};
}

std::vector<std::complex<double>> as_vector(const CVectord& v) { return {v.data(), v.data() + v.size()}; }

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InputError("cannot read '" + p.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

std::vector<std::string> builtin_ids() {
  return {"a3", "b5", "c7", "hesse-a", "hesse-h", "blocks:k=K,b=B,seed=S"};
}

std::optional<NamedMatrix> builtin_matrix(const std::string& id) {
  if (id == "a3") return NamedMatrix{id, matrix_a3<double>(), {2.0, -1.0}};
  if (id == "b5") return NamedMatrix{id, matrix_b5<double>(), as_vector(circulant_spectrum(spec_b5<double>()))};
  if (id == "c7") return NamedMatrix{id, matrix_c7<double>(), as_vector(circulant_spectrum(spec_c7<double>()))};
  if (id == "hesse-a") return NamedMatrix{id, hesse_dependency<double>(), {}};
  if (id == "hesse-h") return NamedMatrix{id, hesse_gram<double>(), {0.0, 6.0}};
  if (id.rfind("blocks:", 0) == 0) return blocks_matrix(id);
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

nlohmann::json complex_to_json(std::complex<double> z) {
  // Normalise negative zero so output does not depend on rounding paths.
  const double re = z.real() == 0.0 ? 0.0 : z.real();
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return {{"re", re}, {"im", im}};
}

std::complex<double> complex_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im") || !j["re"].is_number() || !j["im"].is_number())
    throw InputError("expected a complex number object {\"re\": number, \"im\": number}");
  return {j["re"].get<double>(), j["im"].get<double>()};
}

nlohmann::json matrix_to_json(const CMatrixd& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CMatrixd parse_matrix_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON (" +
                     e.what() + ")");
  }
  auto need_int = [&](const char* key) -> Index {
    if (!j.is_object() || !j.contains(key) || !j[key].is_number_integer() || j[key].get<Index>() < 1)
      throw InputError(std::string("matrix JSON: \"") + key + "\" must be a positive integer");
    return j[key].get<Index>();
  };
  const Index rows = need_int("rows"), cols = need_int("cols");
  if (!j.contains("entries") || !j["entries"].is_array() || static_cast<Index>(j["entries"].size()) != rows)
    throw InputError("matrix JSON: \"entries\" must be an array of " + std::to_string(rows) + " rows");
  CMatrixd m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j["entries"][static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw InputError("matrix JSON: entries[" + std::to_string(r) + "] must hold " + std::to_string(cols) +
                       " entries");
    for (Index c = 0; c < cols; ++c) {
      try {
        m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
      } catch (const InputError& e) {
        throw InputError("matrix JSON: entries[" + std::to_string(r) + "][" + std::to_string(c) + "]: " + e.what());
      }
    }
  }
  if (!all_finite(m)) throw InputError("matrix JSON: non-finite entry");
  return m;
}

CMatrixd parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    std::vector<double> row;
    std::size_t field_start = 0;
    while (true) {
      const std::size_t comma = std::min(line.find(',', field_start), line.size());
      std::string_view field = line.substr(field_start, comma - field_start);
      std::size_t lead = field.find_first_not_of(" \t");
      const std::size_t column = field_start + (lead == std::string_view::npos ? 0 : lead) + 1;
      if (lead == std::string_view::npos) lead = field.size();
      field.remove_prefix(lead);
      while (!field.empty() && (field.back() == ' ' || field.back() == '\t')) field.remove_suffix(1);
      double value = 0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
      if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || !std::isfinite(value))
        throw InputError("line " + std::to_string(line_no) + ", column " + std::to_string(column) +
                         ": cannot parse '" + std::string(field) + "' as a real number (complex input requires JSON)");
      row.push_back(value);
      if (comma >= line.size()) break;
      field_start = comma + 1;
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw InputError("line " + std::to_string(line_no) + ", column 1: expected " +
                       std::to_string(rows.front().size()) + " fields, found " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InputError("line 1, column 1: empty CSV matrix");
  CMatrixd m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c) m(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

NamedMatrix load_matrix(const std::string& id_or_path) {
  if (auto b = builtin_matrix(id_or_path)) return *b;
  const std::filesystem::path p(id_or_path);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(p, ec))
    throw InputError("'" + id_or_path + "' is neither a readable file nor a builtin id (see --list-examples)");
  const std::string text = read_file(p);
  const std::string ext = p.extension().string();
  bool json = ext == ".json";
  if (ext != ".json" && ext != ".csv") {
    const auto first = text.find_first_not_of(" \t\r\n");
    json = first != std::string::npos && text[first] == '{';
  }
  return {id_or_path, json ? parse_matrix_json(text) : parse_matrix_csv(text), {}};
}

}  // namespace gershdisk

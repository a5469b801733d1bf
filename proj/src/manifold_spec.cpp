#include "pisol/manifold_spec.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace pisol {

SpecError::SpecError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line == 0 ? what
                                   : "line " + std::to_string(line) +
                                         (column == 0 ? "" : ", column " + std::to_string(column)) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> split_tokens(std::string_view s, std::size_t base_column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    out.push_back({std::string(s.substr(start, i - start)), base_column + start});
  }
  return out;
}

std::optional<std::size_t> frame_index(std::string_view s) {
  if (s.size() < 2 || s[0] != 'e') return std::nullopt;
  std::size_t v = 0;
  for (char c : s.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + static_cast<std::size_t>(c - '0');
    if (v > 100000) return std::nullopt;
  }
  if (s.size() > 2 && s[1] == '0') return std::nullopt;
  return v;
}

// ParseError messages carry a column relative to the expression; the
// spec reports its own line/column instead.
std::string bare_message(const ParseError& e) {
  std::string m = e.what();
  if (auto at = m.rfind(" at column "); at != std::string::npos) m.erase(at);
  return m;
}

std::string rational_token(const Token& t, std::size_t line) {
  try {
    return to_string(parse_rational(t.text));
  } catch (const ParseError& e) {
    throw SpecError(bare_message(e) + " in \"" + t.text + "\"", line, t.column + e.position());
  }
}

struct PendingBracket {
  std::size_t line;
  std::string header;  // text between "bracket" and ':'
  std::size_t header_column;
  std::string expr;
  std::size_t expr_column;
};

struct PendingMatrix {
  std::size_t line = 0;
  std::vector<std::pair<std::size_t, std::vector<Token>>> rows;
};

struct PendingVector {
  std::size_t line = 0;
  std::vector<Token> tokens;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

ManifoldSpec parse_spec(std::string_view text) {
  ManifoldSpec spec;
  std::set<std::string> seen;
  std::optional<std::size_t> dim_line;
  std::vector<PendingBracket> brackets;
  PendingMatrix metric, phi;
  PendingVector xi, eta;
  PendingMatrix* open_block = nullptr;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (trim(raw).empty()) {
      if (end == text.size()) break;
      continue;
    }

    const bool indented = std::isspace(static_cast<unsigned char>(raw.front()));
    if (indented) {
      if (!open_block) throw SpecError("unexpected indented line", line_no, 1);
      open_block->rows.emplace_back(line_no, split_tokens(raw, 1));
      if (end == text.size()) break;
      continue;
    }
    open_block = nullptr;

    const std::size_t colon = raw.find(':');
    if (colon == std::string_view::npos) throw SpecError("expected 'key: value'", line_no, 1);
    const std::string_view key_part = trim(raw.substr(0, colon));
    const std::string_view value = raw.substr(colon + 1);
    const std::size_t value_column = colon + 2;

    std::string key(key_part);
    std::string header;
    if (key.rfind("bracket", 0) == 0 && (key.size() == 7 || std::isspace(static_cast<unsigned char>(key[7])))) {
      header = key.substr(7);
      key = "bracket";
    }
    if (key != "bracket") {
      if (seen.count(key)) throw SpecError("duplicate key '" + key + "'", line_no, 1);
      seen.insert(key);
    }

    if (key == "name") {
      spec.name = std::string(trim(value));
    } else if (key == "dim") {
      auto toks = split_tokens(value, value_column);
      if (toks.size() != 1) throw SpecError("dim expects one integer", line_no, value_column);
      const auto& t = toks[0];
      if (t.text.empty() || t.text.size() > 4 ||
          !std::all_of(t.text.begin(), t.text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw SpecError("dim must be a positive integer", line_no, t.column);
      spec.dim = std::stoul(t.text);
      if (spec.dim == 0) throw SpecError("dim must be a positive integer", line_no, t.column);
      if (spec.dim % 2 == 0)
        throw SpecError("dim must be odd (2n+1), got " + t.text, line_no, t.column);
      dim_line = line_no;
    } else if (key == "params") {
      for (const auto& t : split_tokens(value, value_column)) {
        if (!is_identifier(t.text)) throw SpecError("invalid parameter name '" + t.text + "'", line_no, t.column);
        if (frame_index(t.text))
          throw SpecError("parameter name '" + t.text + "' clashes with a frame vector", line_no, t.column);
        if (std::find(spec.params.begin(), spec.params.end(), t.text) != spec.params.end())
          throw SpecError("duplicate parameter '" + t.text + "'", line_no, t.column);
        spec.params.push_back(t.text);
      }
    } else if (key == "bracket") {
      const std::size_t header_column = 1 + (key_part.data() - raw.data()) + 7;
      brackets.push_back({line_no, header, header_column, std::string(value), value_column});
    } else if (key == "metric" || key == "phi") {
      if (!trim(value).empty()) throw SpecError(key + " rows go on the following indented lines", line_no, value_column);
      open_block = key == "metric" ? &metric : &phi;
      open_block->line = line_no;
    } else if (key == "xi" || key == "eta") {
      PendingVector& v = key == "xi" ? xi : eta;
      v.line = line_no;
      v.tokens = split_tokens(value, value_column);
    } else {
      throw SpecError("unknown key '" + key + "'", line_no, 1);
    }
    if (end == text.size()) break;
  }

  if (!dim_line) throw SpecError("missing 'dim'");
  for (const char* k : {"metric", "phi", "xi", "eta"})
    if (!seen.count(k)) throw SpecError(std::string("missing '") + k + "'");
  if (spec.name.empty()) spec.name = "unnamed";
  const std::size_t d = spec.dim;

  auto read_matrix = [&](const PendingMatrix& m, const char* what) {
    if (m.rows.size() != d)
      throw SpecError(std::string(what) + " has " + std::to_string(m.rows.size()) + " rows, expected " +
                          std::to_string(d),
                      m.line);
    std::vector<std::vector<std::string>> out;
    for (const auto& [line, toks] : m.rows) {
      if (toks.size() != d)
        throw SpecError(std::string(what) + " row has " + std::to_string(toks.size()) + " entries, expected " +
                            std::to_string(d),
                        line, 1);
      std::vector<std::string> row;
      for (const auto& t : toks) row.push_back(rational_token(t, line));
      out.push_back(std::move(row));
    }
    return out;
  };
  auto read_vector = [&](const PendingVector& v, const char* what) {
    if (v.tokens.size() != d)
      throw SpecError(std::string(what) + " has " + std::to_string(v.tokens.size()) + " entries, expected " +
                          std::to_string(d),
                      v.line);
    std::vector<std::string> out;
    for (const auto& t : v.tokens) out.push_back(rational_token(t, v.line));
    return out;
  };
  spec.metric = read_matrix(metric, "metric");
  spec.phi = read_matrix(phi, "phi");
  spec.xi = read_vector(xi, "xi");
  spec.eta = read_vector(eta, "eta");

  // brackets: expressions over params plus e0..e{d-1}
  std::vector<std::string> names = spec.params;
  for (std::size_t k = 0; k < d; ++k) names.push_back("e" + std::to_string(k));
  const ParamSet base(spec.params);
  const ParamSet with_frame(names);
  const std::size_t np = spec.params.size();
  std::set<std::pair<std::size_t, std::size_t>> pairs;

  for (const auto& b : brackets) {
    auto toks = split_tokens(b.header, b.header_column);
    if (toks.size() != 2) throw SpecError("bracket expects two frame vectors, e.g. 'bracket e0 e1:'", b.line, b.header_column);
    std::size_t idx[2];
    for (int t = 0; t < 2; ++t) {
      auto fi = frame_index(toks[t].text);
      if (!fi || *fi >= d) throw SpecError("'" + toks[t].text + "' is not a frame vector e0..e" + std::to_string(d - 1), b.line, toks[t].column);
      idx[t] = *fi;
    }
    if (idx[0] >= idx[1]) throw SpecError("bracket entries need i < j", b.line, toks[0].column);
    if (!pairs.insert({idx[0], idx[1]}).second) throw SpecError("duplicate bracket entry", b.line, toks[0].column);

    Scalar expr;
    try {
      expr = parse(b.expr, with_frame);
    } catch (const ParseError& e) {
      throw SpecError(bare_message(e), b.line, b.expr_column + e.position());
    }
    for (const auto& [mono, coeff] : expr.terms()) {
      std::uint32_t frame_degree = 0;
      for (std::size_t k = 0; k < d; ++k) frame_degree += mono[np + k];
      if (frame_degree != 1)
        throw SpecError("bracket value must be linear in e0..e" + std::to_string(d - 1), b.line, b.expr_column);
    }
    BracketEntry entry{idx[0], idx[1], {}};
    for (std::size_t k = 0; k < d; ++k) {
      Scalar c = expr.coefficient_of(np + k, 1);
      if (c.is_zero()) continue;
      entry.coeffs.emplace_back(k, c.restrict_to(base).to_string());
    }
    spec.brackets.push_back(std::move(entry));
  }
  std::sort(spec.brackets.begin(), spec.brackets.end(),
            [](const BracketEntry& a, const BracketEntry& b) { return std::pair(a.i, a.j) < std::pair(b.i, b.j); });

  try {
    (void)build_structure(spec);
  } catch (const std::invalid_argument& e) {
    throw SpecError(e.what());
  }
  return spec;
}

ManifoldSpec load_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw SpecError("cannot read '" + path.string() + "'");
  return parse_spec(buf.str());
}

PiStructure build_structure(const ManifoldSpec& spec, const std::map<std::string, Rational>& substitutions) {
  const ParamSet full(spec.params);
  std::vector<std::string> kept;
  for (const auto& [name, value] : substitutions)
    if (!full.index_of(name)) throw SpecError("unknown parameter '" + name + "'");
  for (const auto& p : spec.params)
    if (!substitutions.count(p)) kept.push_back(p);
  const ParamSet reduced(kept);
  const std::size_t d = spec.dim;

  auto rational_matrix = [&](const std::vector<std::vector<std::string>>& rows, Signature sig) {
    std::vector<std::vector<Scalar>> m;
    for (const auto& r : rows) {
      std::vector<Scalar> row;
      for (const auto& x : r) row.emplace_back(parse_rational(x));
      m.push_back(std::move(row));
    }
    return FrameTensor::matrix(std::move(sig), m);
  };
  auto rational_vector = [&](const std::vector<std::string>& v, IndexKind kind) {
    std::vector<Scalar> out;
    for (const auto& x : v) out.emplace_back(parse_rational(x));
    return FrameTensor::vector(kind, out);
  };

  std::map<std::pair<std::size_t, std::size_t>, std::vector<Scalar>> brackets;
  for (const auto& b : spec.brackets) {
    std::vector<Scalar> coeffs(d);
    for (const auto& [k, text] : b.coeffs)
      coeffs[k] = parse(text, full).substitute(substitutions).restrict_to(reduced);
    brackets[{b.i, b.j}] = std::move(coeffs);
  }
  LieFrame frame = LieFrame::from_brackets(d, reduced, brackets,
                                           rational_matrix(spec.metric, {IndexKind::lower, IndexKind::lower}));
  return PiStructure(std::move(frame), rational_matrix(spec.phi, {IndexKind::upper, IndexKind::lower}),
                     rational_vector(spec.xi, IndexKind::upper), rational_vector(spec.eta, IndexKind::lower));
}

ManifoldSpec builtin_example() { return parse_spec(builtin_example_text()); }

}  // namespace pisol

#pragma once

#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/bck.hpp"
#include "pealab/core.hpp"
#include "pealab/hoop.hpp"

namespace pealab {

enum class ModelKind { pea, pbck, hoop };

inline const char* kind_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::pea: return "pea";
    case ModelKind::pbck: return "pbck";
    case ModelKind::hoop: return "hoop";
  }
  return "?";
}

// Required tables per kind, in emission order.
inline std::array<const char*, 3> table_names(ModelKind kind) {
  switch (kind) {
    case ModelKind::pea: return {"meet", "sim", "bsim"};
    case ModelKind::pbck: return {"meet", "imp", "simp"};
    case ModelKind::hoop: return {"prod", "imp", "simp"};
  }
  return {"?", "?", "?"};
}

// Parsed model file: kind, element names in declaration order, the
// distinguished element, and the kind's three tables (indices into the
// name list, row i column j = op(e_i, e_j)).
struct ModelDocument {
  ModelKind kind = ModelKind::pea;
  std::vector<std::string> names;
  int top = 0;
  std::array<Table, 3> tables;

  int size() const { return static_cast<int>(names.size()); }

  friend bool operator==(const ModelDocument&, const ModelDocument&) = default;
};

namespace detail {

struct SourceToken {
  std::string text;
  int line = 0;
  int column = 0;
};

struct SourceLine {
  int line = 0;
  std::vector<SourceToken> tokens;
};

// Comment-stripping, whitespace-splitting line reader.
inline std::vector<SourceLine> tokenize_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int line_no = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    SourceLine parsed;
    parsed.line = line_no;
    for (size_t i = 0; i < line.size();) {
      if (line[i] == '#') break;
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != '#')
        ++i;
      parsed.tokens.push_back(
          {std::string(line.substr(start, i - start)), line_no, static_cast<int>(start + 1)});
    }
    if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
    ++line_no;
  }
  return out;
}

[[noreturn]] inline void parse_fail(int line, int column, const std::string& message) {
  throw input_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": " + message);
}

}  // namespace detail

// Parses the line-oriented model format:
//   kind <pea|pbck|hoop>
//   elements <name>+
//   top <name>            (unit <name> for hoop)
//   table <name>          followed by exactly n rows of n element names
// '#' starts a comment; blank lines are ignored.  Errors carry the
// offending line and column.
inline ModelDocument parse_model(std::string_view text) {
  using detail::parse_fail;
  std::vector<detail::SourceLine> lines = detail::tokenize_lines(text);
  size_t at = 0;
  auto next_line = [&](const char* expected) -> const detail::SourceLine& {
    if (at >= lines.size())
      throw input_error(std::string("unexpected end of document: expected ") + expected);
    return lines[at++];
  };

  ModelDocument doc;

  {
    const auto& line = next_line("'kind' header");
    if (line.tokens[0].text != "kind")
      parse_fail(line.line, line.tokens[0].column, "expected 'kind', found '" +
                                                       line.tokens[0].text + "'");
    if (line.tokens.size() != 2)
      parse_fail(line.line, line.tokens[0].column, "'kind' takes exactly one value");
    const std::string& value = line.tokens[1].text;
    if (value == "pea")
      doc.kind = ModelKind::pea;
    else if (value == "pbck")
      doc.kind = ModelKind::pbck;
    else if (value == "hoop")
      doc.kind = ModelKind::hoop;
    else
      parse_fail(line.line, line.tokens[1].column,
                 "unknown kind '" + value + "' (expected pea, pbck or hoop)");
  }

  std::map<std::string, int> index_of;
  {
    const auto& line = next_line("'elements' line");
    if (line.tokens[0].text != "elements")
      parse_fail(line.line, line.tokens[0].column, "expected 'elements', found '" +
                                                       line.tokens[0].text + "'");
    if (line.tokens.size() < 2)
      parse_fail(line.line, line.tokens[0].column, "'elements' needs at least one name");
    for (size_t i = 1; i < line.tokens.size(); ++i) {
      const auto& tok = line.tokens[i];
      if (index_of.count(tok.text))
        parse_fail(tok.line, tok.column, "duplicate element name '" + tok.text + "'");
      index_of[tok.text] = static_cast<int>(doc.names.size());
      doc.names.push_back(tok.text);
    }
  }
  const int n = doc.size();

  {
    const char* keyword = doc.kind == ModelKind::hoop ? "unit" : "top";
    const auto& line = next_line(keyword);
    if (line.tokens[0].text != keyword)
      parse_fail(line.line, line.tokens[0].column, std::string("expected '") + keyword +
                                                       "', found '" + line.tokens[0].text + "'");
    if (line.tokens.size() != 2)
      parse_fail(line.line, line.tokens[0].column,
                 std::string("'") + keyword + "' takes exactly one element name");
    auto it = index_of.find(line.tokens[1].text);
    if (it == index_of.end())
      parse_fail(line.tokens[1].line, line.tokens[1].column,
                 "unknown element '" + line.tokens[1].text + "'");
    doc.top = it->second;
  }

  const std::array<const char*, 3> required = table_names(doc.kind);
  std::array<bool, 3> seen{false, false, false};
  while (at < lines.size()) {
    const auto& header = lines[at++];
    if (header.tokens[0].text != "table")
      parse_fail(header.line, header.tokens[0].column,
                 "expected 'table', found '" + header.tokens[0].text + "'");
    if (header.tokens.size() != 2)
      parse_fail(header.line, header.tokens[0].column, "'table' takes exactly one name");
    const std::string& name = header.tokens[1].text;
    int slot = -1;
    for (int i = 0; i < 3; ++i)
      if (name == required[i]) slot = i;
    if (slot < 0)
      parse_fail(header.tokens[1].line, header.tokens[1].column,
                 "kind " + std::string(kind_name(doc.kind)) + " has no table named '" + name +
                     "'");
    if (seen[slot])
      parse_fail(header.tokens[1].line, header.tokens[1].column,
                 "duplicate table '" + name + "'");
    seen[slot] = true;

    Table table(n);
    for (int row = 0; row < n; ++row) {
      if (at >= lines.size())
        throw input_error("unexpected end of document: table '" + name + "' needs " +
                          std::to_string(n) + " rows");
      const auto& line = lines[at++];
      if (static_cast<int>(line.tokens.size()) != n)
        parse_fail(line.line, line.tokens[0].column,
                   "table '" + name + "' row has " + std::to_string(line.tokens.size()) +
                       " entries, expected " + std::to_string(n));
      for (int col = 0; col < n; ++col) {
        const auto& tok = line.tokens[col];
        auto it = index_of.find(tok.text);
        if (it == index_of.end())
          parse_fail(tok.line, tok.column, "unknown element '" + tok.text + "'");
        table(row, col) = it->second;
      }
    }
    doc.tables[slot] = std::move(table);
  }
  for (int i = 0; i < 3; ++i)
    if (!seen[i])
      throw input_error(std::string("missing table '") + required[i] + "' for kind " +
                        kind_name(doc.kind));
  return doc;
}

// Deterministic inverse of parse_model: single spaces, fixed table order.
inline std::string emit_model(const ModelDocument& doc) {
  std::ostringstream out;
  out << "kind " << kind_name(doc.kind) << "\n";
  out << "elements";
  for (const std::string& name : doc.names) out << ' ' << name;
  out << "\n";
  out << (doc.kind == ModelKind::hoop ? "unit " : "top ") << doc.names[doc.top] << "\n";
  const std::array<const char*, 3> required = table_names(doc.kind);
  const int n = doc.size();
  for (int t = 0; t < 3; ++t) {
    out << "table " << required[t] << "\n";
    for (int row = 0; row < n; ++row) {
      for (int col = 0; col < n; ++col) {
        if (col) out << ' ';
        out << doc.names[doc.tables[t](row, col)];
      }
      out << "\n";
    }
  }
  return out.str();
}

// Document <-> typed model conversions.  Structural validation happens
// on the way in; converting out never fails.
inline FiniteAlgebra to_algebra(const ModelDocument& doc) {
  if (doc.kind != ModelKind::pea)
    throw input_error(std::string("expected a pea document, found kind ") +
                      kind_name(doc.kind));
  FiniteAlgebra alg{doc.size(), doc.names, doc.top, doc.tables[0], doc.tables[1],
                    doc.tables[2]};
  validate(alg);
  return alg;
}

inline BckAlgebra to_bck(const ModelDocument& doc) {
  if (doc.kind != ModelKind::pbck)
    throw input_error(std::string("expected a pbck document, found kind ") +
                      kind_name(doc.kind));
  BckAlgebra alg{doc.size(), doc.names, doc.top, doc.tables[0], doc.tables[1], doc.tables[2]};
  validate(alg);
  return alg;
}

inline PseudoHoop to_hoop(const ModelDocument& doc) {
  if (doc.kind != ModelKind::hoop)
    throw input_error(std::string("expected a hoop document, found kind ") +
                      kind_name(doc.kind));
  PseudoHoop hoop{doc.size(), doc.names, doc.top, doc.tables[0], doc.tables[1], doc.tables[2]};
  validate(hoop);
  return hoop;
}

inline ModelDocument to_document(const FiniteAlgebra& alg) {
  ModelDocument doc;
  doc.kind = ModelKind::pea;
  doc.names = alg.names.empty() ? default_names(alg.size) : alg.names;
  doc.top = alg.top;
  doc.tables = {alg.meet, alg.sim, alg.bsim};
  return doc;
}

inline ModelDocument to_document(const BckAlgebra& alg) {
  ModelDocument doc;
  doc.kind = ModelKind::pbck;
  doc.names = alg.names.empty() ? default_names(alg.size) : alg.names;
  doc.top = alg.top;
  doc.tables = {alg.meet, alg.imp, alg.simp};
  return doc;
}

inline ModelDocument to_document(const PseudoHoop& hoop) {
  ModelDocument doc;
  doc.kind = ModelKind::hoop;
  doc.names = hoop.names.empty() ? default_names(hoop.size) : hoop.names;
  doc.top = hoop.unit;
  doc.tables = {hoop.prod, hoop.imp, hoop.simp};
  return doc;
}

}  // namespace pealab

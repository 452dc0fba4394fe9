#include "sepcode/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sepcode {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos) lines.push_back(line.substr(first));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_uint(std::string_view tok, const char* what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

template <typename F>
auto rethrow_as_parse(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::string code_to_text(const Code& code) {
  std::ostringstream out;
  out << code.length() << ' ' << code.alphabet_size() << ' ' << code.size()
      << '\n';
  for (std::size_t r = 0; r < code.length(); ++r) {
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (j) out << ' ';
      out << code.at(j, r);
    }
    out << '\n';
  }
  return out.str();
}

Code code_from_text(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty code text");
  const auto header = tokens(lines[0]);
  if (header.size() != 3) throw ParseError("code text header must be 'n q M'");
  const std::uint64_t n = parse_uint(header[0], "length");
  const std::uint64_t q = parse_uint(header[1], "alphabet size");
  const std::uint64_t m = parse_uint(header[2], "code size");
  if (q > 0xffffffffull) throw ParseError("alphabet size too large");
  if (lines.size() != n + 1) {
    throw ParseError("expected " + std::to_string(n) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Word> cols(m, Word(n));
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = tokens(lines[r + 1]);
    if (row.size() != m) {
      throw ParseError("row " + std::to_string(r) + " has " +
                       std::to_string(row.size()) + " entries, expected " +
                       std::to_string(m));
    }
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t v = parse_uint(row[j], "symbol");
      if (v > 0xffffffffull) throw ParseError("symbol out of range");
      cols[j][r] = static_cast<Symbol>(v);
    }
  }
  return Code(n, static_cast<std::uint32_t>(q), cols);
}

}  // namespace

CodeFormat parse_code_format(std::string_view name) {
  if (name == "json") return CodeFormat::kJson;
  if (name == "text") return CodeFormat::kText;
  if (name == "pls") return CodeFormat::kPls;
  throw InvalidArgument("unknown code format '" + std::string(name) + "'");
}

std::string serialize(const Code& code, CodeFormat format) {
  switch (format) {
    case CodeFormat::kJson: return to_json(code).dump() + "\n";
    case CodeFormat::kText: return code_to_text(code);
    case CodeFormat::kPls: return pls_to_text(to_pls(code));
  }
  throw InvalidArgument("unknown code format");
}

Code deserialize(std::string_view data, CodeFormat format) {
  return rethrow_as_parse([&] {
    switch (format) {
      case CodeFormat::kJson: return code_from_json(Json::parse(data));
      case CodeFormat::kText: return code_from_text(data);
      case CodeFormat::kPls: return from_pls(pls_from_text(data));
    }
    throw ParseError("unknown code format");
  });
}

Code deserialize_auto(std::string_view data) {
  const auto first = data.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input");
  if (data[first] == '{') return deserialize(data, CodeFormat::kJson);
  const auto head = tokens(split_lines(data).front());
  const bool numeric_header =
      head.size() == 3 &&
      std::all_of(head.begin(), head.end(), [](std::string_view t) {
        return t.find_first_not_of("0123456789") == std::string_view::npos;
      });
  if (numeric_header) {
    // A 3x3 square can also open with three integers.
    try {
      return deserialize(data, CodeFormat::kText);
    } catch (const ParseError&) {
    }
  }
  return deserialize(data, CodeFormat::kPls);
}

std::string pls_to_text(const PartialLatinSquare& pls) {
  std::ostringstream out;
  for (std::uint32_t i = 0; i < pls.order(); ++i) {
    for (std::uint32_t j = 0; j < pls.order(); ++j) {
      if (j) out << ' ';
      if (auto v = pls.at(i, j)) {
        out << *v;
      } else {
        out << 'x';
      }
    }
    out << '\n';
  }
  return out.str();
}

PartialLatinSquare pls_from_text(std::string_view text) {
  return rethrow_as_parse([&] {
    const auto lines = split_lines(text);
    const std::size_t q = lines.size();
    if (q == 0) throw ParseError("empty square");
    std::vector<std::optional<Symbol>> cells;
    cells.reserve(q * q);
    for (std::size_t i = 0; i < q; ++i) {
      const auto row = tokens(lines[i]);
      if (row.size() != q) {
        throw ParseError("square row " + std::to_string(i) + " has " +
                         std::to_string(row.size()) + " entries, expected " +
                         std::to_string(q));
      }
      for (auto tok : row) {
        if (tok == "x" || tok == "X") {
          cells.emplace_back();
        } else {
          cells.emplace_back(static_cast<Symbol>(parse_uint(tok, "symbol")));
        }
      }
    }
    return PartialLatinSquare(static_cast<std::uint32_t>(q), std::move(cells));
  });
}

Json to_json(const Code& code) {
  Json cols = Json::array();
  for (std::size_t j = 0; j < code.size(); ++j) {
    const auto c = code.column(j);
    cols.push_back(std::vector<Symbol>(c.begin(), c.end()));
  }
  return {{"n", code.length()},
          {"q", code.alphabet_size()},
          {"m", code.size()},
          {"columns", std::move(cols)}};
}

Code code_from_json(const Json& j) {
  return rethrow_as_parse([&] {
    if (!j.is_object()) throw ParseError("code JSON must be an object");
    const auto n = j.at("n").get<std::size_t>();
    const auto q = j.at("q").get<std::uint32_t>();
    const auto& cols_json = j.at("columns");
    if (!cols_json.is_array()) throw ParseError("'columns' must be an array");
    std::vector<Word> cols;
    cols.reserve(cols_json.size());
    for (const auto& c : cols_json) cols.push_back(c.get<Word>());
    if (j.contains("m") && j.at("m").get<std::size_t>() != cols.size()) {
      throw ParseError("'m' is " + j.at("m").dump() + " but " +
                       std::to_string(cols.size()) + " columns were given");
    }
    return Code(n, q, cols);
  });
}

Json to_json(const FieldDescriptor& field) {
  return {{"p", field.p},
          {"m", field.m},
          {"modulus", field.modulus},
          {"eps", field.eps}};
}

FieldDescriptor field_from_json(const Json& j) {
  return rethrow_as_parse([&] {
    FieldDescriptor d;
    d.p = j.at("p").get<std::uint32_t>();
    d.m = j.at("m").get<std::uint32_t>();
    d.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    d.eps = j.at("eps").get<Element>();
    return d;
  });
}

Json to_json(const Witness& w) {
  Json j = {{"kind", to_string(w.kind)}, {"columns", w.columns}};
  if (w.kind == WitnessKind::kScPair) j["second"] = w.second;
  if (w.axis) j["axis"] = *w.axis;
  if (!w.values.empty()) j["values"] = w.values;
  return j;
}

Json to_json(const VerifyReport& r) {
  Json j = {{"property", r.property}};
  j["t"] = r.strength ? Json(*r.strength) : Json(nullptr);
  j["holds"] = r.holds;
  j["method"] = to_string(r.method);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  j["examined"] = r.examined;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const BoundResult& b) {
  return {{"value", b.value},         {"kind", to_string(b.kind)},
          {"source", b.source},       {"notes", b.notes},
          {"conditional", b.conditional}, {"optimal", b.optimal}};
}

Json to_json(const Certification& c) {
  return {{"m", c.size},
          {"bound", to_json(c.bound)},
          {"optimal", c.optimal},
          {"gap", c.gap}};
}

Json to_json(const ExponentSet& s) {
  return {{"t", s.t}, {"pattern", to_string(s.pattern)}, {"S", s.s}};
}

Json to_json(const DfSolution& s) {
  return {{"system", to_string(s.system)}, {"exponents", s.exponents}};
}

Json to_json(const DfSearchRecord& r) {
  const std::uint64_t q = r.size / std::max<std::size_t>(1, r.s.s.size());
  Json j = {{"q", q},
            {"field", to_json(r.field)},
            {"eps_rank", r.eps_rank},
            {"pattern", to_string(r.s.pattern)},
            {"S", r.s.s},
            {"admissible", r.admissible},
            {"m", r.size}};
  if (auto nominal = r.s.nominal_size(q)) {
    j["nominal_m"] = *nominal;
    j["nominal_matches"] = *nominal == r.size;
  }
  j["violation"] = r.violation ? to_json(*r.violation) : Json(nullptr);
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << data;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace sepcode

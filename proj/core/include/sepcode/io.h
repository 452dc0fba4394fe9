#ifndef SEPCODE_IO_H_
#define SEPCODE_IO_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sepcode/bounds.h"
#include "sepcode/code.h"
#include "sepcode/construct.h"
#include "sepcode/field.h"
#include "sepcode/verify.h"

namespace sepcode {

using Json = nlohmann::json;

// Code formats on disk.
//   kJson  {"n": 3, "q": 4, "m": 12, "columns": [[0,0,0], ...]}
//   kText  "n q M" header, then n rows of M symbols
//   kPls   q rows of q tokens, a symbol or "x" for an empty cell
enum class CodeFormat { kJson, kText, kPls };

CodeFormat parse_code_format(std::string_view name);

std::string serialize(const Code& code, CodeFormat format);
// Throws ParseError for malformed input, including out-of-range symbols and
// duplicate columns.
Code deserialize(std::string_view data, CodeFormat format);
// Picks the format from the content: '{' starts JSON, a first line of three
// integers is text, anything else is tried as a square.
Code deserialize_auto(std::string_view data);

std::string pls_to_text(const PartialLatinSquare& pls);
PartialLatinSquare pls_from_text(std::string_view text);

Json to_json(const Code& code);
Code code_from_json(const Json& j);

Json to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const Json& j);

Json to_json(const Witness& witness);
Json to_json(const VerifyReport& report);
Json to_json(const BoundResult& bound);
Json to_json(const Certification& cert);
Json to_json(const ExponentSet& s);
Json to_json(const DfSolution& solution);
Json to_json(const DfSearchRecord& record);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view data);

}  // namespace sepcode

#endif  // SEPCODE_IO_H_

#include "cackit/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace cackit {

using nlohmann::json;

std::string to_json(const Cac& code, int indent) {
  json doc;
  doc["length"] = code.length();
  doc["weight"] = code.weight();
  json words = json::array();
  json gens = json::array();
  bool any_tag = false;
  for (const auto& c : code.codewords()) {
    words.push_back(std::vector<Residue>(c.elements().begin(), c.elements().end()));
    if (c.generator()) {
      gens.push_back(*c.generator());
      any_tag = true;
    } else {
      gens.push_back(nullptr);
    }
  }
  doc["codewords"] = std::move(words);
  if (any_tag) doc["generators"] = std::move(gens);
  return doc.dump(indent);
}

Cac cac_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CodeFormatError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw CodeFormatError("code file must hold a JSON object");
    for (const char* key : {"length", "weight", "codewords"}) {
      if (!doc.contains(key)) throw CodeFormatError(std::string("missing key \"") + key + "\"");
    }
    const auto length = doc.at("length").get<std::uint64_t>();
    const auto weight = doc.at("weight").get<std::size_t>();
    const json& words = doc.at("codewords");
    if (!words.is_array()) throw CodeFormatError("\"codewords\" must be an array");
    const json* gens = doc.contains("generators") && !doc.at("generators").is_null() ? &doc.at("generators") : nullptr;
    if (gens && (!gens->is_array() || gens->size() != words.size())) {
      throw CodeFormatError("\"generators\" must be an array parallel to \"codewords\"");
    }
    std::vector<Codeword> codewords;
    codewords.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto elems = words[i].get<std::vector<Residue>>();
      std::optional<Residue> g;
      if (gens && !(*gens)[i].is_null()) g = (*gens)[i].get<Residue>();
      ResidueSet set(length, std::move(elems));
      codewords.emplace_back(std::move(set), g);
    }
    return Cac(length, weight, std::move(codewords));
  } catch (const CodeFormatError&) {
    throw;
  } catch (const json::exception& e) {
    throw CodeFormatError(std::string("malformed code file: ") + e.what());
  } catch (const std::exception& e) {
    throw CodeFormatError(std::string("invalid code: ") + e.what());
  }
}

Cac read_cac_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CodeFormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return cac_from_json(buf.str());
}

void write_cac_file(const Cac& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(code) << '\n';
}

}  // namespace cackit

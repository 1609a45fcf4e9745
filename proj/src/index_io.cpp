#include "warp_lis/index_io.hpp"

#include <istream>
#include <iterator>
#include <ostream>

#include <json.hpp>

namespace warp_lis {
namespace {

using nlohmann::json;

constexpr const char* kFormatName = "warp-lis-index";

std::vector<int> int_array(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_array()) {
    throw Error(Errc::io_error, std::string("index file lacks array \"") + key + "\"");
  }
  std::vector<int> out;
  out.reserve(it->size());
  for (const auto& v : *it) {
    if (!v.is_number_integer()) throw Error(Errc::io_error, std::string("non-integer entry in \"") + key + "\"");
    out.push_back(v.get<int>());
  }
  return out;
}

void check_permutation(const std::vector<int>& v, const char* what) {
  std::vector<char> seen(v.size() + 1, 0);
  for (const int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)]) {
      throw Error(Errc::invariant_violation, std::string(what) + " is not a permutation");
    }
    seen[static_cast<std::size_t>(x)] = 1;
  }
}

}  // namespace

std::string index_to_json(const SemiLocalDtwIndex& index) {
  const DtwSequence& s = index.sequence();
  json doc;
  doc["format"] = kFormatName;
  doc["version"] = kIndexFormatVersion;
  doc["m"] = s.rows;
  doc["n"] = s.cols;
  doc["c"] = s.cap;
  doc["W"] = s.size();
  doc["S"] = s.seq;
  doc["Gl"] = s.row_first_pos;
  doc["Gr"] = s.row_last_pos;
  doc["Hl"] = s.col_low_value;
  doc["Hr"] = s.col_high_value;
  doc["pi"] = index.permutation().pi;
  return doc.dump();
}

void save_index(const SemiLocalDtwIndex& index, std::ostream& out) {
  out << index_to_json(index) << '\n';
  if (!out) throw Error(Errc::io_error, "failed to write index");
}

SemiLocalDtwIndex index_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::io_error, std::string("index file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", std::string()) != kFormatName) {
    throw Error(Errc::io_error, "not a warp-lis index file");
  }
  if (doc.value("version", -1) != kIndexFormatVersion) {
    throw Error(Errc::io_error, "unsupported index format version");
  }
  DtwSequence s;
  int w = 0;
  try {
    s.rows = doc.at("m").get<int>();
    s.cols = doc.at("n").get<int>();
    s.cap = doc.at("c").get<std::int64_t>();
    w = doc.at("W").get<int>();
  } catch (const json::exception& e) {
    throw Error(Errc::io_error, std::string("bad index header: ") + e.what());
  }
  s.seq = int_array(doc, "S");
  s.row_first_pos = int_array(doc, "Gl");
  s.row_last_pos = int_array(doc, "Gr");
  s.col_low_value = int_array(doc, "Hl");
  s.col_high_value = int_array(doc, "Hr");
  SeaweedPermutation sw;
  sw.n = w;
  sw.pi = int_array(doc, "pi");
  if (static_cast<int>(s.seq.size()) != w || static_cast<int>(sw.pi.size()) != 2 * w) {
    throw Error(Errc::invariant_violation, "array lengths disagree with W");
  }
  check_permutation(s.seq, "S");
  check_permutation(sw.pi, "pi");
  return SemiLocalDtwIndex(std::move(s), std::move(sw));
}

SemiLocalDtwIndex load_index(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(Errc::io_error, "failed to read index");
  return index_from_json(text);
}

}  // namespace warp_lis

#include "smib/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace smib {
namespace {

using nlohmann::json;

std::vector<Point> read_points(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc.at(key).is_array()) {
    throw Error(ErrorCode::ParseError, std::string("dataset is missing array '") + key + "'");
  }
  std::vector<Point> out;
  for (const auto& row : doc.at(key)) {
    if (!row.is_array()) {
      throw Error(ErrorCode::ParseError, std::string("'") + key + "' entries must be arrays");
    }
    Point p;
    for (const auto& v : row) {
      if (!v.is_number()) {
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' holds a non-number");
      }
      p.coords.push_back(v.get<double>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

json write_points(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back(p.coords);
  return arr;
}

}  // namespace

LabeledDataset parse_dataset_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("dataset JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "dataset JSON must be an object");
  LabeledDataset d;
  d.targeted = read_points(doc, "targeted");
  d.untargeted = read_points(doc, "untargeted");
  d.query = read_points(doc, "query");
  validate_dataset(d);
  return d;
}

LabeledDataset load_dataset(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dataset_json(ss.str());
}

std::string dataset_to_json(const LabeledDataset& d) {
  json doc;
  doc["targeted"] = write_points(d.targeted);
  doc["untargeted"] = write_points(d.untargeted);
  doc["query"] = write_points(d.query);
  return doc.dump(2) + "\n";
}

void save_dataset(const LabeledDataset& d, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << dataset_to_json(d);
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

}  // namespace smib
